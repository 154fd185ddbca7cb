#include <cmath>

#include "doctest.h"
#include "tqm/constants.hpp"
#include "tqm/error.hpp"

using namespace tqm;

TEST_CASE("derived constants match their defining formulas") {
  const auto& k = constants();
  // a0 = 1/(alpha m) in natural units; as a length, hbar c / (alpha m c^2).
  const double a0_pm = k.hbar_c_eV_pm() / (k.alpha * k.m_e);
  CHECK(a0_pm == doctest::Approx(k.a0_pm).epsilon(1e-6));
  CHECK(bohr_time() == doctest::Approx(k.a0_as()).epsilon(1e-6));
  // Published rounded values.
  CHECK(std::abs(bohr_time() / 0.177 - 1.0) < 5e-3);
  CHECK(std::abs(k.hbar_eV_as / 658.2 - 1.0) < 5e-3);
  CHECK(std::abs(k.a0_pm / 52.9 - 1.0) < 5e-3);
}

TEST_CASE("heisenberg_time") {
  CHECK(heisenberg_time(27.211386) == doctest::Approx(12.0944).epsilon(1e-4));
  CHECK(heisenberg_time(constants().hbar_eV_as / 2.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(heisenberg_time(0.0), Error);
}

TEST_CASE("proton radius conversions") {
  // 0.841e-15 m / 2.99792458e8 m/s in ys.
  const double t_ys = 0.841e-15 / 2.99792458e8 * 1e24;
  CHECK(convert(0.841, Unit::fm, Unit::ys) == doctest::Approx(t_ys).epsilon(1e-12));
  CHECK(t_ys == doctest::Approx(2.805).epsilon(1e-3));
  // The published 28.0 ys is ten times r/c.
  CHECK(std::abs(10.0 * t_ys / 28.0 - 1.0) < 5e-3);
  // hbar c = 197.3269804 MeV fm.
  CHECK(convert(0.841, Unit::fm, Unit::MeV) == doctest::Approx(197.3269804 / 0.841).epsilon(1e-8));
}

TEST_CASE("conversions are bijective on supported pairs") {
  const std::pair<Unit, Unit> pairs[] = {
      {Unit::eV, Unit::as}, {Unit::pm, Unit::as},  {Unit::eV, Unit::pm},
      {Unit::fm, Unit::ys}, {Unit::MeV, Unit::fm}, {Unit::MeV, Unit::ys},
      {Unit::eV, Unit::MeV}, {Unit::as, Unit::ys}, {Unit::pm, Unit::fm}};
  for (auto [a, b] : pairs) {
    for (double x : {1e-3, 0.841, 52.917721, 1e6}) {
      CHECK(convert(convert(x, a, b), b, a) == doctest::Approx(x).epsilon(1e-13));
      CHECK(convert(convert(x, b, a), a, b) == doctest::Approx(x).epsilon(1e-13));
    }
  }
  CHECK(convert(1.0, Unit::eV, Unit::as) == doctest::Approx(constants().hbar_eV_as));
  CHECK(convert(1.0, Unit::as, Unit::ys) == doctest::Approx(1e6));
  CHECK(convert(299.792458, Unit::pm, Unit::as) == doctest::Approx(1.0));
}

TEST_CASE("conversion errors") {
  try {
    convert(1.0, Unit::pm, Unit::ys);
    FAIL("expected unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
  try {
    convert(0.0, Unit::eV, Unit::as);
    FAIL("expected singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular);
  }
  CHECK(parse_unit("MeV") == Unit::MeV);
  CHECK(unit_name(Unit::ys) == "ys");
  CHECK_THROWS_AS(parse_unit("furlong"), Error);
}

TEST_CASE("constant table carries units") {
  bool found = false;
  for (const auto& row : constant_table()) {
    CHECK_FALSE(row.unit.empty());
    if (row.name == "hbar_eV_as") {
      found = true;
      CHECK(row.value == doctest::Approx(658.2).epsilon(1e-4));
      CHECK(row.unit == "eV*as");
    }
  }
  CHECK(found);
}

TEST_CASE("proton-scale energy spread maps to yoctoseconds") {
  // hbar / (2 * 117.5 MeV) in ys.
  const double ys = convert(heisenberg_time(117.5e6), Unit::as, Unit::ys);
  CHECK(ys == doctest::Approx(658.2119569 / 235e6 * 1e6).epsilon(1e-12));
  CHECK(ys == doctest::Approx(2.8).epsilon(5e-3));
}
