#include "iclaws/initial_data.hpp"

#include <algorithm>
#include <cmath>

namespace iclaws {

InitialData InitialData::constant(double value) {
  InitialData d;
  d.rep_ = DataRepresentation::PiecewiseConstant;
  d.nodes_ = {0.0};
  d.pc_values_ = {value, value};
  d.finalize();
  return d;
}

InitialData InitialData::riemann(double left, double right) {
  InitialData d;
  d.rep_ = DataRepresentation::PiecewiseConstant;
  d.nodes_ = {0.0};
  d.pc_values_ = {left, right};
  d.finalize();
  return d;
}

InitialData InitialData::piecewise_constant(std::vector<double> breakpoints,
                                            std::vector<double> values) {
  if (breakpoints.empty() || values.size() != breakpoints.size() + 1)
    throw ConfigError("piecewise_constant: need values.size() == breaks + 1");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw ConfigError("piecewise_constant: breakpoints must increase");
  InitialData d;
  d.rep_ = DataRepresentation::PiecewiseConstant;
  d.nodes_ = std::move(breakpoints);
  d.pc_values_ = std::move(values);
  d.finalize();
  return d;
}

InitialData InitialData::piecewise_linear(std::vector<double> xs,
                                          std::vector<double> us) {
  if (xs.size() != us.size() || xs.size() < 2)
    throw ConfigError("piecewise_linear: need matching vectors, n >= 2");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1]))
      throw ConfigError("piecewise_linear: xs must increase");
  InitialData d;
  d.rep_ = DataRepresentation::PiecewiseLinear;
  d.nodes_ = std::move(xs);
  d.pl_values_ = std::move(us);
  d.finalize();
  return d;
}

InitialData InitialData::analytic(const std::function<double(double)>& fn,
                                  double extent, int samples) {
  if (!(extent > 0) || samples < 2)
    throw ConfigError("analytic: need extent > 0 and samples >= 2");
  std::vector<double> xs(samples), us(samples);
  for (int i = 0; i < samples; ++i) {
    xs[i] = -extent + 2.0 * extent * i / (samples - 1);
    us[i] = fn(xs[i]);
  }
  return piecewise_linear(std::move(xs), std::move(us));
}

void InitialData::finalize() {
  double m = 0.0;
  if (rep_ == DataRepresentation::PiecewiseConstant) {
    for (double v : pc_values_) m = std::max(m, std::abs(v));
  } else {
    for (double v : pl_values_) m = std::max(m, std::abs(v));
  }
  sup_bound_ = m;
  support_hint_ =
      std::max(std::abs(nodes_.front()), std::abs(nodes_.back()));
}

double InitialData::operator()(double x) const {
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const std::size_t i = it - nodes_.begin();  // piece index
  if (rep_ == DataRepresentation::PiecewiseConstant) return pc_values_[i];
  if (i == 0) return pl_values_.front();
  if (i == nodes_.size()) return pl_values_.back();
  const double frac = (x - nodes_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
  return pl_values_[i - 1] + frac * (pl_values_[i] - pl_values_[i - 1]);
}

void InitialData::piece_coeffs(std::size_t i, double& a, double& b) const {
  if (rep_ == DataRepresentation::PiecewiseConstant) {
    a = 0.0;
    b = pc_values_[i];
    return;
  }
  if (i == 0) {
    a = 0.0;
    b = pl_values_.front();
    return;
  }
  if (i == nodes_.size()) {
    a = 0.0;
    b = pl_values_.back();
    return;
  }
  a = (pl_values_[i] - pl_values_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
  b = pl_values_[i - 1] - a * nodes_[i - 1];
}

InitialData& InitialData::with_sup_bound(double bound) {
  sup_bound_ = std::max(sup_bound_, bound);
  return *this;
}

Potential::Potential(const InitialData& data) : data_(data) {
  const auto& xs = data_.nodes();
  const std::size_t n = xs.size();
  node_values_.assign(n, 0.0);
  // Accumulate exact piece integrals from the first node, then shift so
  // V0(0) = 0.
  for (std::size_t i = 1; i < n; ++i) {
    double a, b;
    data_.piece_coeffs(i, a, b);
    const double lo = xs[i - 1], hi = xs[i];
    node_values_[i] = node_values_[i - 1] + 0.5 * a * (hi * hi - lo * lo) +
                      b * (hi - lo);
  }
  // Evaluate the raw antiderivative at 0 and subtract.
  const double at_zero = [&] {
    const auto it = std::upper_bound(xs.begin(), xs.end(), 0.0);
    const std::size_t i = it - xs.begin();
    double a, b;
    data_.piece_coeffs(i, a, b);
    const double anchor = (i == 0) ? xs.front() : xs[i - 1];
    const double base = (i == 0) ? node_values_.front() : node_values_[i - 1];
    return base + 0.5 * a * (0.0 - anchor * anchor) + b * (0.0 - anchor);
  }();
  for (auto& v : node_values_) v -= at_zero;
}

double Potential::operator()(double z) const {
  const auto& xs = data_.nodes();
  const auto it = std::upper_bound(xs.begin(), xs.end(), z);
  const std::size_t i = it - xs.begin();
  double a, b;
  data_.piece_coeffs(i, a, b);
  const double anchor = (i == 0) ? xs.front() : xs[i - 1];
  const double base = (i == 0) ? node_values_.front() : node_values_[i - 1];
  return base + 0.5 * a * (z * z - anchor * anchor) + b * (z - anchor);
}

}  // namespace iclaws
