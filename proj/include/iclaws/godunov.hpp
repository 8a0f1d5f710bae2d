#pragma once

#include <vector>

#include "iclaws/flux.hpp"
#include "iclaws/initial_data.hpp"

namespace iclaws {

inline constexpr double kCfl = 0.45;

// Uniform 1D grid; x = 0 must coincide with a cell edge.
struct Grid1D {
  double x_min;
  double x_max;
  int n_cells;
  double dx;
  int interface_edge;  // edge index at x = 0

  Grid1D(double x_min, double x_max, int n_cells);
  double center(int i) const { return x_min + (i + 0.5) * dx; }
  double edge(int j) const { return x_min + j * dx; }
};

struct FvState {
  std::vector<double> cells;
  double time = 0.0;
};

// Classical Godunov flux for one convex flux.
double godunov_flux(const ConvexFlux& flux, double a, double b);

// Interface Godunov flux: max(g(max(a, theta_g)), f(min(b, theta_f))).
double interface_flux(const InterfacePair& pair, double a, double b);

// One conservative update. Throws CflViolation when dt exceeds
// kCfl * dx / max wave speed of the current state.
FvState step(const InterfacePair& pair, const Grid1D& grid,
             const FvState& state, double dt);

// Exact cell averages of u0 via potential differences.
FvState initial_state(const InitialData& u0, const Grid1D& grid);

// Advance to time T with CFL-limited steps (last step clipped).
FvState run(const InterfacePair& pair, const InitialData& u0,
            const Grid1D& grid, double T);

// Midpoint-rule L1 distance between two fields sampled at the same cell
// centers, restricted to centers inside [window_lo, window_hi].
double l1_error(const std::vector<double>& a, const std::vector<double>& b,
                const Grid1D& grid, double window_lo, double window_hi);
double l1_error(const FvState& a, const FvState& b, const Grid1D& grid,
                double window_lo, double window_hi);

// Largest stable wave speed for states bounded by m (endpoint derivatives of
// both fluxes at the max-principle bound).
double max_wave_speed(const InterfacePair& pair, double m);

}  // namespace iclaws
