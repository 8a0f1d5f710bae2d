#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "iclaws/errors.hpp"

namespace iclaws {

// Root-finding tolerance for all bisected inverses, with a hard iteration cap.
inline constexpr double kTolRoot = 1e-12;
inline constexpr int kMaxBisectIter = 200;
// Tolerance on |min f - min g| for flux compatibility.
inline constexpr double kTolCompat = 1e-10;

enum class FluxFamily { Quadratic, PowerLaw, Tabulated };

// A C^1 strictly convex flux with critical point theta. PowerLaw is
// u -> |u - theta|^alpha / alpha + c (Quadratic is alpha = 2); Tabulated is
// built from strictly increasing derivative samples and integrates them
// exactly, so eval is the piecewise-quadratic antiderivative.
class ConvexFlux {
 public:
  static ConvexFlux quadratic(double theta, double c = 0.0);
  static ConvexFlux power_law(double theta, double alpha, double c = 0.0);
  static ConvexFlux tabulated(std::vector<double> u_samples,
                              std::vector<double> deriv_samples,
                              double min_value = 0.0);

  FluxFamily family() const { return family_; }
  double theta() const { return theta_; }
  double min_value() const { return min_value_; }
  double nondeg_exponent() const { return nondeg_exponent_; }
  double alpha() const { return alpha_; }

  double eval(double u) const;
  double deriv(double u) const;

  // Inverse of the derivative; monotone. Throws OutOfRange when xi falls
  // outside the derivative's range (Tabulated only; PowerLaw covers all of R).
  double deriv_inverse(double xi) const;

  // One-sided inverses of the flux itself: inverse_plus returns u >= theta,
  // inverse_minus returns u <= theta. Throw BelowMinimum for y < min.
  double inverse_plus(double y) const;
  double inverse_minus(double y) const;

  // Legendre conjugate f*(xi) = xi u* - f(u*), u* = deriv_inverse(xi).
  double legendre(double xi) const;

  // Closure of the derivative's range; +-inf for PowerLaw/Quadratic.
  std::pair<double, double> deriv_range() const;

  std::string family_name() const;

 private:
  ConvexFlux() = default;

  FluxFamily family_ = FluxFamily::Quadratic;
  double theta_ = 0.0;
  double min_value_ = 0.0;
  double alpha_ = 2.0;            // PowerLaw exponent
  double nondeg_exponent_ = 1.0;  // p in assumption (A3)

  // Tabulated: derivative samples (strictly increasing) and the exact
  // antiderivative accumulated from theta.
  std::vector<double> tab_u_;
  std::vector<double> tab_w_;
  std::vector<double> tab_val_;  // flux value at tab_u_[i]
};

// Left flux g governs x < 0, right flux f governs x > 0.
struct InterfacePair {
  ConvexFlux left;   // g
  ConvexFlux right;  // f
  bool compatible;

  InterfacePair(ConvexFlux g, ConvexFlux f);
};

// f_+^{-1}(g(u)): transfers a left state across the interface. Throws
// BelowMinimum when g(u) < min f (possible only for incompatible pairs).
double singular_map_lr(const InterfacePair& pair, double u);

// g_-^{-1}(f(u)): mirror map, output <= theta_g.
double singular_map_rl(const InterfacePair& pair, double u);

// Grid estimate of the non-degeneracy constant: min over an n x n grid of
// |f'(u) - f'(v)| / |u - v|^p for u != v. Positive result certifies (A3) at
// grid scale.
double verify_nondegeneracy(const ConvexFlux& flux, double lo, double hi,
                            double p, int n);

// Least-squares slope of log(modulus of continuity at radius r) vs log r,
// estimating the local Hoelder exponent of `map` near `center`. Radii must be
// positive and decreasing.
double holder_exponent_probe(const std::function<double(double)>& map,
                             double center, std::span<const double> radii);

}  // namespace iclaws
