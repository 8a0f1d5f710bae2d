#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iclaws/initial_data.hpp"

using namespace iclaws;

TEST_CASE("piecewise constant evaluation and bounds") {
  const InitialData d =
      InitialData::piecewise_constant({-1.0, 0.0, 1.0}, {2.0, -1.0, 0.5, 2.0});
  CHECK(d(-2.0) == 2.0);
  CHECK(d(-0.5) == -1.0);
  CHECK(d(0.5) == 0.5);
  CHECK(d(3.0) == 2.0);
  CHECK(d.sup_bound() == doctest::Approx(2.0));
  CHECK(d.support_hint() == doctest::Approx(1.0));
}

TEST_CASE("potential closed forms") {
  // u0 == 0 -> V0 == 0.
  const Potential v0(InitialData::constant(0.0));
  CHECK(v0(-3.0) == doctest::Approx(0.0));
  CHECK(v0(2.0) == doctest::Approx(0.0));

  // u0 == 2 -> V0(z) = 2z.
  const Potential v2(InitialData::constant(2.0));
  CHECK(v2(1.5) == doctest::Approx(3.0));
  CHECK(v2(-2.0) == doctest::Approx(-4.0));
  CHECK(v2(0.0) == doctest::Approx(0.0));

  // Indicator of [0, 1]: V0(2) = 1.
  const Potential vi(
      InitialData::piecewise_constant({0.0, 1.0}, {0.0, 1.0, 0.0}));
  CHECK(vi(2.0) == doctest::Approx(1.0));
  CHECK(vi(0.5) == doctest::Approx(0.5));
  CHECK(vi(-1.0) == doctest::Approx(0.0));
}

TEST_CASE("potential is Lipschitz with constant sup_bound") {
  const InitialData d = InitialData::piecewise_constant(
      {-0.5, 0.25, 0.75}, {1.0, -2.0, 3.0, -1.0});
  const Potential v(d);
  double prev_z = -3.0, prev_v = v(-3.0);
  for (int i = 1; i <= 600; ++i) {
    const double z = -3.0 + 6.0 * i / 600;
    const double val = v(z);
    CHECK(std::abs(val - prev_v) <= d.sup_bound() * (z - prev_z) + 1e-12);
    prev_z = z;
    prev_v = val;
  }
}

TEST_CASE("piecewise linear and analytic sampling agree") {
  const auto fn = [](double x) { return std::sin(x); };
  const InitialData d = InitialData::analytic(fn, 3.0, 2049);
  for (double x : {-2.5, -1.0, 0.0, 0.7, 2.9})
    CHECK(d(x) == doctest::Approx(fn(x)).epsilon(1e-5));
  CHECK(d(5.0) == doctest::Approx(fn(3.0)));

  const Potential v(d);
  // Integral of sin from 0 to z is 1 - cos z.
  for (double z : {-2.0, -0.5, 1.0, 2.5})
    CHECK(v(z) == doctest::Approx(1.0 - std::cos(z)).epsilon(1e-5));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(InitialData::piecewise_constant({1.0, 0.0}, {1, 2, 3}),
                  ConfigError);
  CHECK_THROWS_AS(InitialData::piecewise_constant({0.0}, {1.0}), ConfigError);
  CHECK_THROWS_AS(InitialData::piecewise_linear({0.0, 0.0}, {1.0, 2.0}),
                  ConfigError);
}
