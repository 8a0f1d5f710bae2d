#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "iclaws/flux.hpp"

using namespace iclaws;

namespace {

// Central finite difference, the independent oracle for derivative values.
double fd_deriv(const ConvexFlux& f, double u, double h = 1e-6) {
  return (f.eval(u + h) - f.eval(u - h)) / (2.0 * h);
}

// Dense-grid supremum of xi*u - f(u), the oracle for the conjugate.
double conj_scan(const ConvexFlux& f, double xi, double lo, double hi,
                 int n = 200001) {
  double best = -1e300;
  for (int i = 0; i < n; ++i) {
    const double u = lo + (hi - lo) * i / (n - 1);
    best = std::max(best, xi * u - f.eval(u));
  }
  return best;
}

ConvexFlux tab_from(const ConvexFlux& src, double lo, double hi, int n) {
  std::vector<double> us(n), ws(n);
  for (int i = 0; i < n; ++i) {
    us[i] = lo + (hi - lo) * i / (n - 1);
    ws[i] = src.deriv(us[i]);
  }
  return ConvexFlux::tabulated(us, ws, src.min_value());
}

}  // namespace

TEST_CASE("eval basics") {
  CHECK(ConvexFlux::quadratic(0.0).eval(2.0) == doctest::Approx(2.0));
  CHECK(ConvexFlux::power_law(1.0, 2.0).eval(1.0) == doctest::Approx(0.0));
  CHECK(ConvexFlux::power_law(0.0, 4.0).eval(2.0) == doctest::Approx(4.0));
  CHECK(ConvexFlux::quadratic(0.5, 0.25).min_value() == doctest::Approx(0.25));
}

TEST_CASE("deriv values and the finite-difference oracle") {
  CHECK(ConvexFlux::quadratic(0.0).deriv(1.5) == doctest::Approx(1.5));
  CHECK(ConvexFlux::power_law(0.0, 4.0).deriv(2.0) == doctest::Approx(8.0));

  // |u-1|^3/3 at u=0: the slope is -1 (the flux decreases toward theta).
  const ConvexFlux f = ConvexFlux::power_law(1.0, 3.0);
  CHECK(f.deriv(0.0) == doctest::Approx(-1.0));
  CHECK(f.deriv(0.0) == doctest::Approx(fd_deriv(f, 0.0)).epsilon(1e-5));

  for (const ConvexFlux& fl :
       {ConvexFlux::quadratic(0.7, 0.1), ConvexFlux::power_law(-0.3, 4.0)}) {
    for (double u : {-2.0, -0.5, 0.4, 1.3, 2.5})
      CHECK(fl.deriv(u) == doctest::Approx(fd_deriv(fl, u)).epsilon(1e-5));
  }
}

TEST_CASE("deriv is strictly increasing on sampled grids") {
  for (const ConvexFlux& fl :
       {ConvexFlux::quadratic(0.3), ConvexFlux::power_law(0.0, 4.0),
        tab_from(ConvexFlux::power_law(0.0, 4.0), -3.0, 3.0, 129)}) {
    double prev = fl.deriv(-3.0);
    for (int i = 1; i <= 120; ++i) {
      const double u = -3.0 + 6.0 * i / 120;
      const double w = fl.deriv(u);
      CHECK(w > prev);
      prev = w;
    }
    CHECK(fl.deriv(fl.theta()) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fl.eval(fl.theta()) == doctest::Approx(fl.min_value()));
  }
}

TEST_CASE("deriv_inverse") {
  CHECK(ConvexFlux::quadratic(0.0).deriv_inverse(1.5) == doctest::Approx(1.5));
  CHECK(ConvexFlux::power_law(0.0, 4.0).deriv_inverse(8.0) ==
        doctest::Approx(2.0));
  // Hoelder-1/3 flattening near the critical point.
  CHECK(ConvexFlux::power_law(0.0, 4.0).deriv_inverse(1e-6) ==
        doctest::Approx(0.01));

  // Round trip on [-U, U] for every family.
  for (const ConvexFlux& fl :
       {ConvexFlux::quadratic(0.4, 0.2), ConvexFlux::power_law(1.0, 3.0),
        ConvexFlux::power_law(0.0, 4.0),
        tab_from(ConvexFlux::quadratic(0.4, 0.2), -4.0, 4.0, 257)}) {
    for (int i = 0; i <= 100; ++i) {
      const double u = -2.0 + 4.0 * i / 100;
      CHECK(fl.deriv_inverse(fl.deriv(u)) ==
            doctest::Approx(u).epsilon(1e-9));
    }
  }

  CHECK_THROWS_AS(tab_from(ConvexFlux::quadratic(0.0), -1.0, 1.0, 33)
                      .deriv_inverse(5.0),
                  OutOfRange);
}

TEST_CASE("one-sided flux inverses") {
  const ConvexFlux q = ConvexFlux::quadratic(0.0);
  CHECK(q.inverse_plus(0.5) == doctest::Approx(1.0));
  CHECK(q.inverse_minus(0.5) == doctest::Approx(-1.0));
  CHECK(ConvexFlux::power_law(1.0, 2.0).inverse_plus(0.5) ==
        doctest::Approx(2.0));
  CHECK(ConvexFlux::power_law(1.0, 2.0).inverse_minus(2.0) ==
        doctest::Approx(-1.0));

  for (const ConvexFlux& fl :
       {ConvexFlux::quadratic(0.5, 0.3), ConvexFlux::power_law(-1.0, 4.0, 0.1),
        tab_from(ConvexFlux::power_law(0.0, 4.0), -3.0, 3.0, 513)}) {
    CHECK(fl.inverse_plus(fl.min_value()) == doctest::Approx(fl.theta()));
    CHECK(fl.inverse_minus(fl.min_value()) == doctest::Approx(fl.theta()));
    for (int i = 1; i <= 40; ++i) {
      const double y = fl.min_value() + 0.05 * i;
      const double up = fl.inverse_plus(y);
      const double um = fl.inverse_minus(y);
      CHECK(up >= fl.theta());
      CHECK(um <= fl.theta());
      CHECK(fl.eval(up) == doctest::Approx(y).epsilon(1e-8));
      CHECK(fl.eval(um) == doctest::Approx(y).epsilon(1e-8));
    }
    CHECK_THROWS_AS(fl.inverse_plus(fl.min_value() - 1.0), BelowMinimum);
  }
}

TEST_CASE("legendre conjugate") {
  CHECK(ConvexFlux::quadratic(0.0).legendre(1.0) == doctest::Approx(0.5));
  // 8*2 - 2^4/4 = 12, against the dense grid supremum.
  const ConvexFlux p4 = ConvexFlux::power_law(0.0, 4.0);
  CHECK(p4.legendre(8.0) == doctest::Approx(12.0));
  CHECK(p4.legendre(8.0) ==
        doctest::Approx(conj_scan(p4, 8.0, -4.0, 4.0)).epsilon(1e-7));

  for (const ConvexFlux& fl :
       {ConvexFlux::quadratic(1.0, 0.2), ConvexFlux::power_law(0.5, 3.0, -0.4)}) {
    CHECK(fl.legendre(0.0) == doctest::Approx(-fl.min_value()));
    for (double xi : {-2.0, -0.7, 0.3, 1.9})
      CHECK(fl.legendre(xi) ==
            doctest::Approx(conj_scan(fl, xi, -8.0, 8.0)).epsilon(1e-6));
  }
}

TEST_CASE("legendre is convex and Young's inequality holds") {
  for (const ConvexFlux& fl :
       {ConvexFlux::quadratic(0.0), ConvexFlux::power_law(1.0, 4.0, 0.3)}) {
    for (int i = 0; i < 40; ++i) {
      const double x1 = -3.0 + 6.0 * i / 40;
      const double x3 = x1 + 0.5;
      const double x2 = 0.5 * (x1 + x3);
      CHECK(fl.legendre(x2) <=
            0.5 * (fl.legendre(x1) + fl.legendre(x3)) + 1e-10);
    }
    for (double u : {-2.0, -0.3, 0.9, 2.2}) {
      for (double xi : {-3.0, -0.4, 0.0, 1.7}) {
        CHECK(fl.eval(u) + fl.legendre(xi) >= u * xi - 1e-10);
      }
      const double xi_eq = fl.deriv(u);
      CHECK(fl.eval(u) + fl.legendre(xi_eq) ==
            doctest::Approx(u * xi_eq).epsilon(1e-9));
    }
  }
}

TEST_CASE("singular maps on the compatible quadratic pair") {
  InterfacePair pair(ConvexFlux::quadratic(1.0), ConvexFlux::quadratic(0.0));
  CHECK(pair.compatible);
  // Closed form |u - 1|, cross-checked against inverse_plus(g(u)).
  CHECK(singular_map_lr(pair, 2.0) == doctest::Approx(1.0));
  CHECK(singular_map_lr(pair, -1.0) == doctest::Approx(2.0));
  CHECK(singular_map_lr(pair, 1.0) == doctest::Approx(0.0));  // theta_g -> theta_f
  CHECK(singular_map_rl(pair, 0.0) == doctest::Approx(1.0));  // theta_f -> theta_g
  CHECK(singular_map_rl(pair, 1.0) == doctest::Approx(0.0));
  CHECK(singular_map_rl(pair, -2.0) == doctest::Approx(-1.0));

  // RH consistency on a grid: f(lr(u)) = g(u), g(rl(u)) = f(u).
  for (int i = 0; i <= 80; ++i) {
    const double u = -2.0 + 4.0 * i / 80;
    CHECK(pair.right.eval(singular_map_lr(pair, u)) ==
          doctest::Approx(pair.left.eval(u)).epsilon(1e-10));
    CHECK(pair.left.eval(singular_map_rl(pair, u)) ==
          doctest::Approx(pair.right.eval(u)).epsilon(1e-10));
    CHECK(singular_map_lr(pair, u) >= pair.right.theta());
    CHECK(singular_map_rl(pair, u) <= pair.left.theta());
  }
}

TEST_CASE("incompatible pair raises BelowMinimum in the blocked band") {
  // g = (u-1)^2/2 + 0.3, f = u^2/2: f(u) < 0.3 for |u| < sqrt(0.6).
  InterfacePair pair(ConvexFlux::quadratic(1.0, 0.3),
                     ConvexFlux::quadratic(0.0));
  CHECK(!pair.compatible);
  CHECK_THROWS_AS(singular_map_rl(pair, 0.0), BelowMinimum);
  CHECK(singular_map_lr(pair, 1.0) == doctest::Approx(std::sqrt(0.6)));
}

TEST_CASE("verify_nondegeneracy") {
  CHECK(verify_nondegeneracy(ConvexFlux::quadratic(0.0), -1.0, 1.0, 1.0, 50) ==
        doctest::Approx(1.0));
  // |u^3 - v^3| / |u-v|^3 attains 1/4 at antisymmetric pairs.
  const double c3 =
      verify_nondegeneracy(ConvexFlux::power_law(0.0, 4.0), -1.0, 1.0, 3.0, 50);
  CHECK(c3 > 0.0);
  CHECK(c3 <= 1.0);
  CHECK(c3 == doctest::Approx(0.25).epsilon(1e-6));
  // With too small an exponent the grid minimum degenerates near theta.
  const double w50 =
      verify_nondegeneracy(ConvexFlux::power_law(0.0, 4.0), -1.0, 1.0, 1.0, 50);
  const double w200 =
      verify_nondegeneracy(ConvexFlux::power_law(0.0, 4.0), -1.0, 1.0, 1.0, 200);
  CHECK(w200 < w50);
  CHECK(w200 < 0.01);
}

TEST_CASE("antiderivative flatness exponent q+1 above theta") {
  // For the derivative exponent q, |f(u)-f(v)| / |u-v|^{q+1} stays positive
  // on (theta, theta + U].
  const ConvexFlux f = ConvexFlux::power_law(0.0, 4.0);  // q = 3
  double lo = 1e300;
  const int n = 80;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double u = 2.0 * i / n, v = 2.0 * j / n;
      lo = std::min(lo, std::abs(f.eval(u) - f.eval(v)) /
                            std::pow(std::abs(u - v), 4.0));
    }
  }
  CHECK(lo > 0.2);
}

TEST_CASE("holder_exponent_probe") {
  std::vector<double> radii = {0.1, 0.05, 0.025, 0.0125, 0.00625};
  const ConvexFlux p4 = ConvexFlux::power_law(0.0, 4.0);
  const double slope_inv = holder_exponent_probe(
      [&](double x) { return p4.deriv_inverse(x); }, 0.0, radii);
  CHECK(slope_inv == doctest::Approx(1.0 / 3.0).epsilon(0.15));

  const double slope_id =
      holder_exponent_probe([](double x) { return x; }, 0.3, radii);
  CHECK(slope_id == doctest::Approx(1.0).epsilon(1e-6));

  InterfacePair pair(ConvexFlux::quadratic(1.0), ConvexFlux::quadratic(0.0));
  const double slope_map = holder_exponent_probe(
      [&](double u) { return singular_map_lr(pair, u); }, 2.0, radii);
  CHECK(slope_map == doctest::Approx(1.0).epsilon(0.1));
  // Lipschitz away from theta_g for compatible pairs.
  for (double center : {-1.5, 0.2, 1.7, 2.5}) {
    if (std::abs(center - 1.0) < 0.3) continue;
    const double sl = holder_exponent_probe(
        [&](double u) { return singular_map_lr(pair, u); }, center, radii);
    CHECK(sl >= 0.9);
  }
}

TEST_CASE("tabulated flux reproduces its quadratic source") {
  const ConvexFlux src = ConvexFlux::quadratic(0.5, 0.2);
  const ConvexFlux tab = tab_from(src, -4.0, 4.0, 161);
  CHECK(tab.theta() == doctest::Approx(0.5));
  for (double u : {-3.0, -1.0, 0.2, 0.5, 1.7, 3.5}) {
    CHECK(tab.eval(u) == doctest::Approx(src.eval(u)).epsilon(1e-12));
    CHECK(tab.deriv(u) == doctest::Approx(src.deriv(u)).epsilon(1e-12));
  }
}
