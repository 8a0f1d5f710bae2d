#pragma once

#include <functional>
#include <vector>

#include "iclaws/errors.hpp"

namespace iclaws {

enum class DataRepresentation { PiecewiseConstant, PiecewiseLinear };

// Bounded initial datum, constant outside a finite radius. Analytic inputs
// are densely sampled into a piecewise-linear representation at construction,
// which keeps the potential exactly integrable.
class InitialData {
 public:
  static InitialData constant(double value);
  static InitialData riemann(double left, double right);
  // values has breakpoints.size() + 1 entries; values[i] rules
  // (breakpoints[i-1], breakpoints[i]), with constant tails.
  static InitialData piecewise_constant(std::vector<double> breakpoints,
                                        std::vector<double> values);
  static InitialData piecewise_linear(std::vector<double> xs,
                                      std::vector<double> us);
  static InitialData analytic(const std::function<double(double)>& fn,
                              double extent, int samples = 4096);

  double operator()(double x) const;
  double sup_bound() const { return sup_bound_; }
  double support_hint() const { return support_hint_; }
  DataRepresentation representation() const { return rep_; }

  const std::vector<double>& nodes() const { return nodes_; }
  // Piece i covers (node[i-1], node[i]) with tails at i = 0 and
  // i = nodes.size(); u0(x) = a x + b on it.
  std::size_t piece_count() const { return nodes_.size() + 1; }
  void piece_coeffs(std::size_t i, double& a, double& b) const;

  // Raises the stored L-infinity bound (never lowers it).
  InitialData& with_sup_bound(double bound);

 private:
  InitialData() = default;
  void finalize();

  DataRepresentation rep_ = DataRepresentation::PiecewiseConstant;
  std::vector<double> nodes_;
  std::vector<double> pc_values_;  // PiecewiseConstant: nodes_.size() + 1
  std::vector<double> pl_values_;  // PiecewiseLinear: u at each node
  double sup_bound_ = 0.0;
  double support_hint_ = 0.0;
};

// Exact antiderivative V0(z) = integral of u0 from 0 to z; V0(0) = 0 and V0
// is Lipschitz with constant sup_bound. Immutable after construction.
class Potential {
 public:
  explicit Potential(const InitialData& data);

  double operator()(double z) const;
  const InitialData& data() const { return data_; }

  // V0 at node i (kept for exact per-piece minimization).
  double value_at_node(std::size_t i) const { return node_values_[i]; }

 private:
  InitialData data_;
  std::vector<double> node_values_;
};

}  // namespace iclaws
