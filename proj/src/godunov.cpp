#include "iclaws/godunov.hpp"

#include <algorithm>
#include <cmath>

#include "iclaws/solver.hpp"

namespace iclaws {

Grid1D::Grid1D(double x_min_, double x_max_, int n_cells_)
    : x_min(x_min_), x_max(x_max_), n_cells(n_cells_) {
  if (!(x_min < x_max) || n_cells < 2)
    throw ConfigError("Grid1D: need x_min < x_max and n_cells >= 2");
  dx = (x_max - x_min) / n_cells;
  const double j = -x_min / dx;
  interface_edge = static_cast<int>(std::lround(j));
  if (interface_edge < 0 || interface_edge > n_cells ||
      std::abs(x_min + interface_edge * dx) > 1e-12 * std::max(1.0, x_max))
    throw ConfigError("Grid1D: x = 0 must coincide with a cell edge");
}

double godunov_flux(const ConvexFlux& flux, double a, double b) {
  if (a <= b) return flux.eval(std::clamp(flux.theta(), a, b));
  return std::max(flux.eval(a), flux.eval(b));
}

double interface_flux(const InterfacePair& pair, double a, double b) {
  return std::max(pair.left.eval(std::max(a, pair.left.theta())),
                  pair.right.eval(std::min(b, pair.right.theta())));
}

double max_wave_speed(const InterfacePair& pair, double m) {
  return std::max(
      std::max(std::abs(pair.left.deriv(-m)), std::abs(pair.left.deriv(m))),
      std::max(std::abs(pair.right.deriv(-m)),
               std::abs(pair.right.deriv(m))));
}

FvState step(const InterfacePair& pair, const Grid1D& grid,
             const FvState& state, double dt) {
  const int n = grid.n_cells;
  const auto& u = state.cells;

  double speed = 0.0;
  for (int i = 0; i < n; ++i) {
    const ConvexFlux& side =
        (i < grid.interface_edge) ? pair.left : pair.right;
    speed = std::max(speed, std::abs(side.deriv(u[i])));
  }
  if (dt > kCfl * grid.dx / std::max(speed, 1e-300) * (1.0 + 1e-12))
    throw CflViolation("step: dt exceeds CFL limit");

  std::vector<double> flux(n + 1);
  for (int j = 0; j <= n; ++j) {
    if (j == 0) {
      const ConvexFlux& side =
          (0 < grid.interface_edge) ? pair.left : pair.right;
      flux[j] = side.eval(u[0]);  // outflow: ghost copies the edge cell
    } else if (j == n) {
      const ConvexFlux& side =
          (n <= grid.interface_edge) ? pair.left : pair.right;
      flux[j] = side.eval(u[n - 1]);
    } else if (j == grid.interface_edge) {
      flux[j] = interface_flux(pair, u[j - 1], u[j]);
    } else if (j < grid.interface_edge) {
      flux[j] = godunov_flux(pair.left, u[j - 1], u[j]);
    } else {
      flux[j] = godunov_flux(pair.right, u[j - 1], u[j]);
    }
  }

  FvState out;
  out.time = state.time + dt;
  out.cells.resize(n);
  const double lam = dt / grid.dx;
  for (int i = 0; i < n; ++i)
    out.cells[i] = u[i] - lam * (flux[i + 1] - flux[i]);
  return out;
}

FvState initial_state(const InitialData& u0, const Grid1D& grid) {
  const Potential V(u0);
  FvState s;
  s.time = 0.0;
  s.cells.resize(grid.n_cells);
  double prev = V(grid.edge(0));
  for (int i = 0; i < grid.n_cells; ++i) {
    const double next = V(grid.edge(i + 1));
    s.cells[i] = (next - prev) / grid.dx;
    prev = next;
  }
  return s;
}

FvState run(const InterfacePair& pair, const InitialData& u0,
            const Grid1D& grid, double T) {
  if (!(T > 0)) throw InvalidTime("run: T must be > 0");
  const double S = max_bound(pair, u0.sup_bound());
  const double v = std::max(max_wave_speed(pair, S), 1e-12);
  const double dt_max = kCfl * grid.dx / v;
  FvState s = initial_state(u0, grid);
  while (s.time < T - 1e-14) {
    const double dt = std::min(dt_max, T - s.time);
    s = step(pair, grid, s, dt);
  }
  s.time = T;
  return s;
}

double l1_error(const FvState& a, const FvState& b, const Grid1D& grid,
                double window_lo, double window_hi) {
  return l1_error(a.cells, b.cells, grid, window_lo, window_hi);
}

double l1_error(const std::vector<double>& a, const std::vector<double>& b,
                const Grid1D& grid, double window_lo, double window_hi) {
  if (a.size() != b.size() ||
      a.size() != static_cast<std::size_t>(grid.n_cells))
    throw ConfigError("l1_error: size mismatch");
  double sum = 0.0;
  for (int i = 0; i < grid.n_cells; ++i) {
    const double x = grid.center(i);
    if (x >= window_lo && x <= window_hi) sum += std::abs(a[i] - b[i]);
  }
  return sum * grid.dx;
}

}  // namespace iclaws
