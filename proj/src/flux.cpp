#include "iclaws/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace iclaws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sign(double x) { return x < 0 ? -1.0 : (x > 0 ? 1.0 : 0.0); }

// Index of the sample segment [v[i], v[i+1]] containing x, clamped to the
// table.
std::size_t segment_index(const std::vector<double>& v, double x) {
  const auto it = std::upper_bound(v.begin(), v.end(), x);
  const std::ptrdiff_t raw = (it - v.begin()) - 1;
  return static_cast<std::size_t>(
      std::clamp<std::ptrdiff_t>(raw, 0, v.size() - 2));
}

// Bisection for a monotone increasing function on [lo, hi].
double bisect_increasing(const std::function<double(double)>& fn, double lo,
                         double hi, double target) {
  double flo = fn(lo) - target;
  double fhi = fn(hi) - target;
  if (flo > 0 && fhi > 0) return lo;
  if (flo < 0 && fhi < 0) return hi;
  for (int it = 0; it < kMaxBisectIter && hi - lo > kTolRoot; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (fn(mid) - target <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ConvexFlux ConvexFlux::quadratic(double theta, double c) {
  ConvexFlux f;
  f.family_ = FluxFamily::Quadratic;
  f.theta_ = theta;
  f.min_value_ = c;
  f.alpha_ = 2.0;
  f.nondeg_exponent_ = 1.0;
  return f;
}

ConvexFlux ConvexFlux::power_law(double theta, double alpha, double c) {
  if (!(alpha > 1.0)) throw InvalidExponent("power_law requires alpha > 1");
  ConvexFlux f;
  f.family_ = FluxFamily::PowerLaw;
  f.theta_ = theta;
  f.min_value_ = c;
  f.alpha_ = alpha;
  f.nondeg_exponent_ = std::max(1.0, alpha - 1.0);
  return f;
}

ConvexFlux ConvexFlux::tabulated(std::vector<double> u_samples,
                                 std::vector<double> deriv_samples,
                                 double min_value) {
  if (u_samples.size() != deriv_samples.size() || u_samples.size() < 2)
    throw ConfigError("tabulated flux needs matching sample vectors, n >= 2");
  for (std::size_t i = 1; i < u_samples.size(); ++i) {
    if (!(u_samples[i] > u_samples[i - 1]) ||
        !(deriv_samples[i] > deriv_samples[i - 1]))
      throw ConfigError("tabulated flux samples must be strictly increasing");
  }
  if (!(deriv_samples.front() < 0.0) || !(deriv_samples.back() > 0.0))
    throw ConfigError("tabulated derivative must change sign (flux minimum)");

  ConvexFlux f;
  f.family_ = FluxFamily::Tabulated;
  f.tab_u_ = std::move(u_samples);
  f.tab_w_ = std::move(deriv_samples);
  f.min_value_ = min_value;

  // theta: zero crossing of the piecewise-linear derivative.
  std::size_t k = 0;
  while (f.tab_w_[k + 1] < 0.0) ++k;
  const double w0 = f.tab_w_[k], w1 = f.tab_w_[k + 1];
  const double u0 = f.tab_u_[k], u1 = f.tab_u_[k + 1];
  f.theta_ = u0 + (0.0 - w0) / (w1 - w0) * (u1 - u0);
  f.nondeg_exponent_ = 1.0;

  // Exact antiderivative of the piecewise-linear derivative, anchored so that
  // eval(theta) = min_value.
  const std::size_t n = f.tab_u_.size();
  f.tab_val_.assign(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double du = f.tab_u_[i] - f.tab_u_[i - 1];
    f.tab_val_[i] =
        f.tab_val_[i - 1] + 0.5 * (f.tab_w_[i] + f.tab_w_[i - 1]) * du;
  }
  // Value at theta under the same trapezoid rule piece.
  const double dth = f.theta_ - u0;
  const double wth = 0.0;  // derivative at theta by construction
  const double val_theta = f.tab_val_[k] + 0.5 * (w0 + wth) * dth;
  for (auto& v : f.tab_val_) v += min_value - val_theta;
  return f;
}

double ConvexFlux::eval(double u) const {
  switch (family_) {
    case FluxFamily::Quadratic: {
      const double d = u - theta_;
      return 0.5 * d * d + min_value_;
    }
    case FluxFamily::PowerLaw:
      return std::pow(std::abs(u - theta_), alpha_) / alpha_ + min_value_;
    case FluxFamily::Tabulated: {
      const double uc = std::clamp(u, tab_u_.front(), tab_u_.back());
      const std::size_t i = segment_index(tab_u_, uc);
      const double du = uc - tab_u_[i];
      const double slope =
          (tab_w_[i + 1] - tab_w_[i]) / (tab_u_[i + 1] - tab_u_[i]);
      return tab_val_[i] + tab_w_[i] * du + 0.5 * slope * du * du;
    }
  }
  return 0.0;
}

double ConvexFlux::deriv(double u) const {
  switch (family_) {
    case FluxFamily::Quadratic:
      return u - theta_;
    case FluxFamily::PowerLaw: {
      const double d = u - theta_;
      return sign(d) * std::pow(std::abs(d), alpha_ - 1.0);
    }
    case FluxFamily::Tabulated: {
      const double uc = std::clamp(u, tab_u_.front(), tab_u_.back());
      const std::size_t i = segment_index(tab_u_, uc);
      const double frac = (uc - tab_u_[i]) / (tab_u_[i + 1] - tab_u_[i]);
      return tab_w_[i] + frac * (tab_w_[i + 1] - tab_w_[i]);
    }
  }
  return 0.0;
}

double ConvexFlux::deriv_inverse(double xi) const {
  switch (family_) {
    case FluxFamily::Quadratic:
      return theta_ + xi;
    case FluxFamily::PowerLaw:
      return theta_ + sign(xi) * std::pow(std::abs(xi), 1.0 / (alpha_ - 1.0));
    case FluxFamily::Tabulated: {
      if (xi < tab_w_.front() - kTolRoot || xi > tab_w_.back() + kTolRoot)
        throw OutOfRange("deriv_inverse: xi outside tabulated range");
      const double xic = std::clamp(xi, tab_w_.front(), tab_w_.back());
      const std::size_t i = segment_index(tab_w_, xic);
      const double frac = (xic - tab_w_[i]) / (tab_w_[i + 1] - tab_w_[i]);
      return tab_u_[i] + frac * (tab_u_[i + 1] - tab_u_[i]);
    }
  }
  return 0.0;
}

double ConvexFlux::inverse_plus(double y) const {
  if (y < min_value_ - kTolRoot)
    throw BelowMinimum("inverse_plus: y below flux minimum");
  const double yc = std::max(y, min_value_);
  switch (family_) {
    case FluxFamily::Quadratic:
      return theta_ + std::sqrt(2.0 * (yc - min_value_));
    case FluxFamily::PowerLaw:
      return theta_ + std::pow(alpha_ * (yc - min_value_), 1.0 / alpha_);
    case FluxFamily::Tabulated: {
      double hi = tab_u_.back();
      if (eval(hi) < yc)
        throw OutOfRange("inverse_plus: y above tabulated range");
      return bisect_increasing([this](double u) { return eval(u); }, theta_,
                               hi, yc);
    }
  }
  return 0.0;
}

double ConvexFlux::inverse_minus(double y) const {
  if (y < min_value_ - kTolRoot)
    throw BelowMinimum("inverse_minus: y below flux minimum");
  const double yc = std::max(y, min_value_);
  switch (family_) {
    case FluxFamily::Quadratic:
      return theta_ - std::sqrt(2.0 * (yc - min_value_));
    case FluxFamily::PowerLaw:
      return theta_ - std::pow(alpha_ * (yc - min_value_), 1.0 / alpha_);
    case FluxFamily::Tabulated: {
      double lo = tab_u_.front();
      if (eval(lo) < yc)
        throw OutOfRange("inverse_minus: y above tabulated range");
      // eval decreases on [lo, theta]; bisect on the negated branch.
      return bisect_increasing([this](double u) { return -eval(u); }, lo,
                               theta_, -yc);
    }
  }
  return 0.0;
}

double ConvexFlux::legendre(double xi) const {
  const double ustar = deriv_inverse(xi);
  return xi * ustar - eval(ustar);
}

std::pair<double, double> ConvexFlux::deriv_range() const {
  if (family_ == FluxFamily::Tabulated) return {tab_w_.front(), tab_w_.back()};
  return {-kInf, kInf};
}

std::string ConvexFlux::family_name() const {
  switch (family_) {
    case FluxFamily::Quadratic:
      return "quadratic";
    case FluxFamily::PowerLaw:
      return "powerlaw";
    case FluxFamily::Tabulated:
      return "tabulated";
  }
  return "?";
}

InterfacePair::InterfacePair(ConvexFlux g, ConvexFlux f)
    : left(std::move(g)), right(std::move(f)) {
  compatible = std::abs(right.min_value() - left.min_value()) <= kTolCompat;
}

double singular_map_lr(const InterfacePair& pair, double u) {
  return pair.right.inverse_plus(pair.left.eval(u));
}

double singular_map_rl(const InterfacePair& pair, double u) {
  return pair.left.inverse_minus(pair.right.eval(u));
}

double verify_nondegeneracy(const ConvexFlux& flux, double lo, double hi,
                            double p, int n) {
  if (!(lo < hi) || n < 2)
    throw ConfigError("verify_nondegeneracy: need lo < hi and n >= 2");
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    const double u = lo + (hi - lo) * i / (n - 1);
    w[i] = flux.deriv(u);
  }
  double best = kInf;
  for (int i = 0; i < n; ++i) {
    const double ui = lo + (hi - lo) * i / (n - 1);
    for (int j = i + 1; j < n; ++j) {
      const double uj = lo + (hi - lo) * j / (n - 1);
      const double ratio = std::abs(w[j] - w[i]) / std::pow(uj - ui, p);
      best = std::min(best, ratio);
    }
  }
  return best;
}

double holder_exponent_probe(const std::function<double(double)>& map,
                             double center, std::span<const double> radii) {
  if (radii.size() < 2)
    throw ConfigError("holder_exponent_probe: need >= 2 radii");
  // Modulus of continuity at radius r, estimated by dense symmetric sampling.
  constexpr int kSamples = 64;
  const double f0 = map(center);
  std::vector<double> lx, ly;
  for (double r : radii) {
    if (!(r > 0)) throw ConfigError("holder_exponent_probe: radii must be > 0");
    double omega = 0.0;
    for (int i = 1; i <= kSamples; ++i) {
      const double h = r * i / kSamples;
      omega = std::max(omega, std::abs(map(center + h) - f0));
      omega = std::max(omega, std::abs(map(center - h) - f0));
    }
    if (omega > 0) {
      lx.push_back(std::log(r));
      ly.push_back(std::log(omega));
    }
  }
  if (lx.size() < 2)
    throw DegenerateFit("holder_exponent_probe: map constant near center");
  const std::size_t m = lx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-30)
    throw DegenerateFit("holder_exponent_probe: radii do not span scales");
  return (m * sxy - sx * sy) / denom;
}

}  // namespace iclaws
