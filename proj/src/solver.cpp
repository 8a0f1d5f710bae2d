#include "iclaws/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "iclaws/godunov.hpp"
#include "iclaws/parallel.hpp"

namespace iclaws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kNTau = 256;
constexpr int kPlSubdiv = 8;

// Golden-section minimum of fn on [a, b]; assumes the bracket came from a
// scan so the local landscape is unimodal enough.
std::pair<double, double> golden_min(const std::function<double(double)>& fn,
                                     double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = fn(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, fn(xm)};
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::DirectRight:
      return "direct_right";
    case CaseTag::DirectLeft:
      return "direct_left";
    case CaseTag::CrossLR:
      return "cross_lr";
    case CaseTag::CrossRL:
      return "cross_rl";
  }
  return "?";
}

std::vector<double> SolutionField::values() const {
  std::vector<double> v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) v[i] = points[i].u;
  return v;
}

double max_bound(const InterfacePair& pair, double m, bool* skipped_undefined) {
  if (m < 0) throw ConfigError("max_bound: m must be >= 0");
  bool skipped = false;
  double S = m;
  const int n = 4097;
  for (int i = 0; i < n; ++i) {
    const double v = (m == 0.0) ? 0.0 : -m + 2.0 * m * i / (n - 1);
    try {
      S = std::max(S, std::abs(singular_map_lr(pair, v)));
    } catch (const BelowMinimum&) {
      skipped = true;
    }
    try {
      S = std::max(S, std::abs(singular_map_rl(pair, v)));
    } catch (const BelowMinimum&) {
      skipped = true;
    }
    if (m == 0.0) break;
  }
  if (skipped_undefined) *skipped_undefined = skipped;
  return S;
}

PointwiseSolver::PointwiseSolver(const InterfacePair& pair,
                                 const InitialData& u0, double t)
    : pair_(pair), u0_(u0), V_(u0), t_(t) {
  if (!(t > kTMin)) throw InvalidTime("PointwiseSolver: t must exceed 1e-9");
  bound_ = max_bound(pair_, u0_.sup_bound());
  vmax_ = std::max(max_wave_speed(pair_, bound_), 1e-12);

  const std::size_t np = u0_.piece_count();
  for (PieceTables* tabs : {&tab_left_, &tab_right_}) {
    const ConvexFlux& fl = (tabs == &tab_left_) ? pair_.left : pair_.right;
    tabs->speed.resize(np);
    tabs->dual.resize(np);
    tabs->fval.resize(np);
    for (std::size_t i = 0; i < np; ++i) {
      double a, b;
      u0_.piece_coeffs(i, a, b);
      if (a == 0.0) {
        const double w = fl.deriv(b);
        (*tabs).speed[i] = w;
        (*tabs).fval[i] = fl.eval(b);
        (*tabs).dual[i] = b * w - (*tabs).fval[i];
      } else {
        (*tabs).speed[i] = std::numeric_limits<double>::quiet_NaN();
        (*tabs).fval[i] = std::numeric_limits<double>::quiet_NaN();
        (*tabs).dual[i] = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }

  w_left_.resize(kNTau);
  w_right_.resize(kNTau);
  for (int k = 0; k < kNTau; ++k) {
    const double tau = t_ * (k + 0.5) / kNTau;
    w_left_[k] = cross_w(true, tau);
    w_right_[k] = cross_w(false, tau);
  }
}

PointwiseSolver::LegMin PointwiseSolver::leg_min(bool left_side, double x_t,
                                                 double T, double z_lo,
                                                 double z_hi) const {
  const ConvexFlux& fl = flux(left_side);
  const auto& tabs = tables(left_side);
  const auto& nodes = u0_.nodes();
  const auto [rng_lo, rng_hi] = fl.deriv_range();

  LegMin best{z_lo, kInf};
  auto consider = [&](double z, double cost) {
    if (cost < best.cost || (cost == best.cost && z < best.z)) {
      best.z = z;
      best.cost = cost;
    }
  };
  auto conj_cost = [&](double z) -> double {
    const double xi = (x_t - z) / T;
    if (xi < rng_lo || xi > rng_hi) return kInf;
    return V_(z) + T * fl.legendre(xi);
  };
  // V on piece i evaluated from the node anchor in O(1).
  auto v_on_piece = [&](std::size_t i, double z, double a, double b) {
    const std::size_t anchor_idx = (i == 0) ? 0 : i - 1;
    const double anchor = nodes[anchor_idx];
    const double base = V_.value_at_node(anchor_idx);
    return base + 0.5 * a * (z * z - anchor * anchor) + b * (z - anchor);
  };

  consider(z_lo, conj_cost(z_lo));
  consider(z_hi, conj_cost(z_hi));

  const std::size_t i_lo =
      std::upper_bound(nodes.begin(), nodes.end(), z_lo) - nodes.begin();
  const std::size_t i_hi =
      std::upper_bound(nodes.begin(), nodes.end(), z_hi) - nodes.begin();

  for (std::size_t i = i_lo; i <= i_hi; ++i) {
    const double seg_lo = (i == 0) ? z_lo : std::max(z_lo, nodes[i - 1]);
    const double seg_hi =
        (i == nodes.size()) ? z_hi : std::min(z_hi, nodes[i]);
    double a, b;
    u0_.piece_coeffs(i, a, b);

    if (seg_hi > seg_lo) {
      if (a == 0.0) {
        // Constant piece: the interior stationary point is the foot of the
        // characteristic with speed flux'(b); its cost needs no conjugate.
        const double zc = x_t - T * tabs.speed[i];
        if (zc > seg_lo && zc < seg_hi)
          consider(zc, v_on_piece(i, zc, a, b) + T * tabs.dual[i]);
      } else {
        // Linear piece: locate sign changes of u0(z) - (flux')^{-1}(xi(z)).
        auto dfun = [&](double z) {
          const double xi = std::clamp((x_t - z) / T, rng_lo, rng_hi);
          return a * z + b - fl.deriv_inverse(xi);
        };
        double zprev = seg_lo, dprev = dfun(zprev);
        for (int k = 1; k <= kPlSubdiv; ++k) {
          const double zk = seg_lo + (seg_hi - seg_lo) * k / kPlSubdiv;
          const double dk = dfun(zk);
          if ((dprev < 0 && dk > 0) || (dprev > 0 && dk < 0)) {
            double lo = zprev, hi = zk, dlo = dprev;
            for (int it = 0; it < 80 && hi - lo > kTolRoot; ++it) {
              const double mid = 0.5 * (lo + hi);
              const double dm = dfun(mid);
              if ((dm <= 0) == (dlo <= 0)) {
                lo = mid;
                dlo = dm;
              } else {
                hi = mid;
              }
            }
            const double zs = 0.5 * (lo + hi);
            consider(zs, conj_cost(zs));
          }
          zprev = zk;
          dprev = dk;
        }
      }
    }

    // Breakpoint at the right end of piece i: a local minimum iff the data
    // jumps upward across the characteristic slope there.
    if (i < nodes.size()) {
      const double bj = nodes[i];
      if (bj > z_lo && bj < z_hi) {
        const double xi_j = (x_t - bj) / T;
        if (xi_j < rng_lo || xi_j > rng_hi) continue;
        double al, bl, ar, br;
        u0_.piece_coeffs(i, al, bl);
        u0_.piece_coeffs(i + 1, ar, br);
        bool is_cand;
        if (al == 0.0 && ar == 0.0) {
          is_cand = tabs.speed[i] <= xi_j && tabs.speed[i + 1] >= xi_j;
        } else {
          const double psi = fl.deriv_inverse(xi_j);
          is_cand = (al * bj + bl) <= psi && (ar * bj + br) >= psi;
        }
        if (!is_cand) continue;
        const double vb = V_.value_at_node(i);
        if (al == 0.0 && ar == 0.0) {
          // Tangent lower bound on the conjugate skips most pow calls.
          const double lb =
              vb + T * std::max(xi_j * bl - tabs.fval[i],
                                xi_j * br - tabs.fval[i + 1]);
          if (lb >= best.cost) continue;
        }
        consider(bj, vb + T * fl.legendre(xi_j));
      }
    }
  }
  return best;
}

double PointwiseSolver::cross_w(bool from_left, double tau) const {
  // Cost of reaching the interface at time tau from a foot on that side.
  if (from_left) return leg_min(true, 0.0, tau, -vmax_ * tau, 0.0).cost;
  return leg_min(false, 0.0, tau, 0.0, vmax_ * tau).cost;
}

SolutionPoint PointwiseSolver::direct_point(double x) const {
  const bool right = x >= 0.0;
  const double R = vmax_ * t_;
  const double z_lo = right ? std::max(0.0, x - R) : x - R;
  const double z_hi = right ? x + R : std::min(0.0, x + R);
  const LegMin m = leg_min(!right, x, t_, z_lo, z_hi);
  SolutionPoint p;
  p.tag = right ? CaseTag::DirectRight : CaseTag::DirectLeft;
  p.z = m.z;
  p.cost = m.cost;
  p.tau = std::nullopt;
  p.u = flux(!right).deriv_inverse((x - m.z) / t_);
  return p;
}

SolutionPoint PointwiseSolver::crossing_point(double x) const {
  const bool right = x >= 0.0;
  const auto& w_grid = right ? w_left_ : w_right_;
  // Outgoing leg runs on the side of x; feet live on the other side.
  const ConvexFlux& leg2 = right ? pair_.right : pair_.left;
  const auto [rng_lo, rng_hi] = leg2.deriv_range();

  auto leg2_cost = [&](double tau) -> double {
    const double dt = t_ - tau;
    if (dt < 1e-14) return kInf;
    const double xi = x / dt;
    if (xi < rng_lo || xi > rng_hi) return kInf;
    return dt * leg2.legendre(xi);
  };
  auto j_exact = [&](double tau) -> double {
    const double w = cross_w(right, tau);
    const double c2 = leg2_cost(tau);
    return (w >= kInf || c2 >= kInf) ? kInf : w + c2;
  };

  int best_k = -1;
  double best_j = kInf;
  for (int k = 0; k < kNTau; ++k) {
    const double tau = t_ * (k + 0.5) / kNTau;
    const double c2 = leg2_cost(tau);
    if (w_grid[k] >= kInf || c2 >= kInf) continue;
    const double j = w_grid[k] + c2;
    if (j < best_j) {
      best_j = j;
      best_k = k;
    }
  }

  SolutionPoint p;
  p.tag = right ? CaseTag::CrossLR : CaseTag::CrossRL;
  if (best_k < 0) {
    p.cost = kInf;
    return p;
  }
  const double tau_lo =
      std::max(t_ * 1e-12, t_ * (best_k - 0.5) / kNTau);
  const double tau_hi =
      std::min(t_ * (1.0 - 1e-12), t_ * (best_k + 1.5) / kNTau);
  auto [tau_star, j_star] =
      golden_min(j_exact, tau_lo, tau_hi, std::max(1e-10 * t_, 1e-13));
  if (best_j < j_star) {
    tau_star = t_ * (best_k + 0.5) / kNTau;
    j_star = best_j;
  }
  const LegMin inner = right
                           ? leg_min(true, 0.0, tau_star, -vmax_ * tau_star, 0.0)
                           : leg_min(false, 0.0, tau_star, 0.0,
                                     vmax_ * tau_star);
  p.z = inner.z;
  p.tau = tau_star;
  p.cost = j_star;
  // At an interior optimum the crossing satisfies flux continuity, so the
  // outgoing state is the singular-map image of the arriving one. That form
  // stays well conditioned as tau -> t (x near the interface), where the
  // direct (f')^{-1}(x/(t - tau)) branch amplifies the tau tolerance.
  const ConvexFlux& leg1 = right ? pair_.left : pair_.right;
  const double v_arrive = leg1.deriv_inverse(-inner.z / tau_star);
  const double flux_level = leg1.eval(v_arrive);
  const ConvexFlux& out = leg2;
  if (flux_level >= out.min_value()) {
    p.u = right ? out.inverse_plus(flux_level) : out.inverse_minus(flux_level);
  } else {
    p.u = out.deriv_inverse(x / (t_ - tau_star));
  }
  return p;
}

SolutionPoint PointwiseSolver::at(double x) const {
  const SolutionPoint direct = direct_point(x);
  const SolutionPoint cross = crossing_point(x);
  if (cross.cost < direct.cost - kTieTol) return cross;
  return direct;
}

SolutionPoint evaluate(const InterfacePair& pair, const InitialData& u0,
                       double x, double t) {
  return PointwiseSolver(pair, u0, t).at(x);
}

SolutionField sample_profile(const InterfacePair& pair, const InitialData& u0,
                             double t, std::span<const double> grid) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] >= grid[i - 1]))
      throw ConfigError("sample_profile: grid must be sorted");
  const PointwiseSolver solver(pair, u0, t);
  SolutionField field;
  field.xs.assign(grid.begin(), grid.end());
  field.points.resize(grid.size());
  parallel_for(grid.size(),
               [&](std::size_t i) { field.points[i] = solver.at(grid[i]); });
  return field;
}

namespace {

// Aitken acceleration of u(eps_k) under eps halving. Exact for geometric
// tails u_k = L + c q^k, which covers both linear fans (q = 1/2) and the
// Hoelder cusps u ~ theta + (eps/t)^{1/p} of degenerate fluxes (q = 2^{-1/p}).
double aitken_limit(double u0, double u1, double u2) {
  const double denom = u2 - 2.0 * u1 + u0;
  const double d2 = u2 - u1;
  if (std::abs(denom) < 1e-12 * std::max(1.0, std::abs(u2)))
    return u2;  // already flat
  return u2 - d2 * d2 / denom;
}

}  // namespace

TraceResult interface_trace(const InterfacePair& pair, const InitialData& u0,
                            double t, double eps0) {
  if (!(t > 0)) throw InvalidTime("interface_trace: t must be > 0");
  if (!(eps0 > 0)) throw ConfigError("interface_trace: eps0 must be > 0");
  const PointwiseSolver solver(pair, u0, t);
  constexpr int kMaxHalvings = 18;
  constexpr double kStabTol = 1e-6;

  std::vector<double> ums{solver.at(-eps0).u};
  std::vector<double> ups{solver.at(+eps0).u};
  double am_prev = 0.0, ap_prev = 0.0;
  bool have_prev = false;
  double eps = eps0;
  for (int k = 1; k <= kMaxHalvings; ++k) {
    eps *= 0.5;
    ums.push_back(solver.at(-eps).u);
    ups.push_back(solver.at(+eps).u);
    if (ums.size() < 3) continue;
    const std::size_t n = ums.size();
    const double am = aitken_limit(ums[n - 3], ums[n - 2], ums[n - 1]);
    const double ap = aitken_limit(ups[n - 3], ups[n - 2], ups[n - 1]);
    if (have_prev && std::abs(am - am_prev) < kStabTol &&
        std::abs(ap - ap_prev) < kStabTol) {
      TraceResult r;
      r.u_minus = am;
      r.u_plus = ap;
      r.eps_used = eps;
      r.rh_residual =
          std::abs(pair.right.eval(r.u_plus) - pair.left.eval(r.u_minus));
      // Strict sign pattern; extrapolation residue stays far below this.
      constexpr double kSignTol = 1e-7;
      r.entropy_violated = pair.right.deriv(r.u_plus) > kSignTol &&
                           pair.left.deriv(r.u_minus) < -kSignTol;
      return r;
    }
    am_prev = am;
    ap_prev = ap;
    have_prev = true;
  }
  throw NoConvergence("interface_trace: traces did not stabilize");
}

namespace {

double locate_crossing_frontier(const InterfacePair& pair,
                                const InitialData& u0, double t, bool right) {
  const PointwiseSolver solver(pair, u0, t);
  const double x_max = solver.wave_speed() * t;
  const CaseTag want = right ? CaseTag::CrossLR : CaseTag::CrossRL;
  auto tag_at = [&](double xm) {
    return solver.at(right ? xm : -xm).tag == want;
  };

  // Coarse scan plus near-interface probes to bracket the frontier.
  constexpr int kCoarse = 128;
  double lo = -1.0;  // largest magnitude known crossing
  double hi = x_max;  // smallest magnitude known direct above lo
  bool found_direct = false;
  for (int k = kCoarse; k >= 1; --k) {
    const double xm = x_max * k / kCoarse;
    if (tag_at(xm)) {
      lo = xm;
      hi = found_direct ? hi : x_max;
      break;
    }
    hi = xm;
    found_direct = true;
  }
  if (lo < 0) {
    for (double probe : {x_max * 1e-4, x_max * 1e-6}) {
      if (probe > 0 && tag_at(probe)) {
        lo = probe;
        break;
      }
      hi = probe;
    }
  }
  if (lo < 0) return 0.0;

  for (int it = 0; it < 60 && hi - lo > 1e-13 * std::max(1.0, x_max); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tag_at(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double r = 0.5 * (lo + hi);
  return right ? r : -r;
}

}  // namespace

double locate_R1(const InterfacePair& pair, const InitialData& u0, double t) {
  return locate_crossing_frontier(pair, u0, t, true);
}

double locate_L1(const InterfacePair& pair, const InitialData& u0, double t) {
  return locate_crossing_frontier(pair, u0, t, false);
}

InterfaceCurves interface_curves(const InterfacePair& pair,
                                 const InitialData& u0,
                                 std::span<const double> times) {
  InterfaceCurves c;
  c.times.assign(times.begin(), times.end());
  c.R1.resize(times.size());
  c.L1.resize(times.size());
  parallel_for(times.size(), [&](std::size_t i) {
    c.R1[i] = locate_R1(pair, u0, times[i]);
    c.L1[i] = locate_L1(pair, u0, times[i]);
  });
  return c;
}

}  // namespace iclaws
