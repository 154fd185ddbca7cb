#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tqm {

/// Worker count for sweeps: TQM_DISP_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency(), at least 1.
std::size_t sweep_threads();

/// Runs task(i) for i in [0, n) on up to `threads` workers. Each index is
/// evaluated exactly once; tasks must not share mutable state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task,
                  std::size_t threads = sweep_threads());

/// Maps fn over inputs; output order follows input order regardless of which
/// worker finished first.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn, std::size_t threads = sweep_threads()) {
  using Out = decltype(fn(inputs.front()));
  std::vector<Out> out(inputs.size());
  parallel_for(
      inputs.size(), [&](std::size_t i) { out[i] = fn(inputs[i]); }, threads);
  return out;
}

}  // namespace tqm
