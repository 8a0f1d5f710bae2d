#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iclaws/flux.hpp"
#include "iclaws/initial_data.hpp"

namespace iclaws {

// Costs within kTieTol classify as Direct, so the crossing region is open.
inline constexpr double kTieTol = 1e-12;
inline constexpr double kTMin = 1e-9;
inline constexpr double kTolRh = 1e-6;

enum class CaseTag { DirectRight, DirectLeft, CrossLR, CrossRL };

std::string to_string(CaseTag tag);

struct SolutionPoint {
  double u = 0.0;
  CaseTag tag = CaseTag::DirectRight;
  double z = 0.0;                // characteristic foot
  std::optional<double> tau;     // interface crossing time (crossing classes)
  double cost = 0.0;             // minimal variational value attained
};

struct SolutionField {
  std::vector<double> xs;
  std::vector<SolutionPoint> points;

  std::vector<double> values() const;
};

struct TraceResult {
  double u_minus = 0.0;  // limit from x < 0
  double u_plus = 0.0;   // limit from x > 0
  double rh_residual = 0.0;
  bool entropy_violated = false;
  double eps_used = 0.0;
};

// Max-principle bound: max(m, sup |f+^{-1}(g(v))|, sup |g-^{-1}(f(v))|) over
// |v| <= m, by grid scan. For incompatible pairs the part of [-m, m] where a
// singular map is undefined is skipped and *skipped_undefined set.
double max_bound(const InterfacePair& pair, double m,
                 bool* skipped_undefined = nullptr);

// Pointwise variational evaluator at a fixed time. Construction precomputes
// the potential, the max-principle bound and the crossing-cost tables, after
// which at() is pure and safe to call from many threads.
class PointwiseSolver {
 public:
  PointwiseSolver(const InterfacePair& pair, const InitialData& u0, double t);

  SolutionPoint at(double x) const;

  double t() const { return t_; }
  double bound() const { return bound_; }
  double wave_speed() const { return vmax_; }

 private:
  struct LegMin {
    double z = 0.0;
    double cost = 0.0;
  };

  // min over z in [z_lo, z_hi] of V(z) + T * flux*( (x_t - z)/T ), evaluated
  // exactly piece by piece.
  LegMin leg_min(bool left_side, double x_t, double T, double z_lo,
                 double z_hi) const;

  double cross_w(bool from_left, double tau) const;
  SolutionPoint direct_point(double x) const;
  SolutionPoint crossing_point(double x) const;

  InterfacePair pair_;
  InitialData u0_;
  Potential V_;
  double t_;
  double bound_;
  double vmax_;

  // Per-piece derivative/dual tables for both fluxes (piecewise-constant
  // pieces only; linear pieces solve on the fly).
  struct PieceTables {
    std::vector<double> speed;  // flux'(value)
    std::vector<double> dual;   // value * speed - flux(value)
    std::vector<double> fval;   // flux(value)
  };
  PieceTables tab_left_, tab_right_;

  // Crossing-cost tables on the tau grid.
  std::vector<double> w_left_, w_right_;

  const PieceTables& tables(bool left_side) const {
    return left_side ? tab_left_ : tab_right_;
  }
  const ConvexFlux& flux(bool left_side) const {
    return left_side ? pair_.left : pair_.right;
  }
};

// One-shot evaluation (builds a PointwiseSolver internally).
SolutionPoint evaluate(const InterfacePair& pair, const InitialData& u0,
                       double x, double t);

SolutionField sample_profile(const InterfacePair& pair, const InitialData& u0,
                             double t, std::span<const double> grid);

// One-sided traces at the interface by stabilized evaluation at x = -+eps.
TraceResult interface_trace(const InterfacePair& pair, const InitialData& u0,
                            double t, double eps0 = 1e-3);

// R1(t): supremum of x > 0 classified CrossLR (0 when the crossing region is
// empty); L1(t) mirrored (infimum of x < 0 classified CrossRL, 0 if none).
double locate_R1(const InterfacePair& pair, const InitialData& u0, double t);
double locate_L1(const InterfacePair& pair, const InitialData& u0, double t);

struct InterfaceCurves {
  std::vector<double> times;
  std::vector<double> R1;
  std::vector<double> L1;
};

InterfaceCurves interface_curves(const InterfacePair& pair,
                                 const InitialData& u0,
                                 std::span<const double> times);

}  // namespace iclaws
