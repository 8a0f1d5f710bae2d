// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance <configs-dir> [--out <dir>]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "iclaws/experiments.hpp"

using namespace iclaws;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void verdict(int idx, const std::string& name, bool pass, double seconds,
             double budget_s, const std::string& detail = "") {
  const bool ok = pass && seconds < budget_s;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)%s%s\n",
              ok ? "PASS" : "FAIL", idx, name.c_str(), seconds, budget_s,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

bool rows_pass(const ExperimentReport& r, std::string* why = nullptr) {
  for (const auto& row : r.rows) {
    if (row.gated && !row.pass) {
      if (why) *why = r.id + "/" + row.cell;
      return false;
    }
  }
  return true;
}

// --- criterion 1: variation oracle ---------------------------------------
void criterion_variation_oracle() {
  Timer timer;
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<int> len(2, 12);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  std::uniform_real_distribution<double> logscale(-2.0, 2.0);
  std::uniform_real_distribution<double> s_dist(0.15, 1.0);
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const int n = len(rng);
    const double scale = std::pow(10.0, logscale(rng));
    SampledFunction f;
    f.xs.resize(n);
    f.us.resize(n);
    for (int i = 0; i < n; ++i) {
      f.xs[i] = i;
      f.us[i] = val(rng) * scale;
    }
    const double s = s_dist(rng);
    const auto dp = tvs_dp(f, s);
    const auto bf = tvs_bruteforce(f, s);
    const double tol = 1e-12 * std::max(1.0, bf.value);
    if (std::abs(dp.value - bf.value) > tol) ok = false;
    // Reported subdivision reproduces the value.
    double sum = 0.0;
    for (std::size_t k = 1; k < dp.subdivision.size(); ++k)
      sum += std::pow(
          std::abs(f.us[dp.subdivision[k]] - f.us[dp.subdivision[k - 1]]),
          1.0 / s);
    if (std::abs(sum - dp.value) > tol) ok = false;
  }
  verdict(1, "variation oracle, dp == bruteforce on 1000 instances", ok,
          timer.seconds(), 10.0);
}

// --- criterion 2: inverse/conjugate suite ---------------------------------
void criterion_inverse_conjugate() {
  Timer timer;
  bool ok = true;
  std::vector<ConvexFlux> fluxes = {
      ConvexFlux::quadratic(0.0), ConvexFlux::quadratic(1.0, 0.3),
      ConvexFlux::power_law(0.0, 4.0), ConvexFlux::power_law(1.0, 3.0, -0.2),
      ConvexFlux::power_law(-1.5, 2.0)};
  {
    std::vector<double> us(257), ws(257);
    for (int i = 0; i < 257; ++i) {
      us[i] = -4.0 + 8.0 * i / 256;
      ws[i] = ConvexFlux::power_law(0.0, 4.0).deriv(us[i]);
    }
    fluxes.push_back(ConvexFlux::tabulated(us, ws, 0.0));
  }
  for (const auto& fl : fluxes) {
    for (int i = 0; i <= 400 && ok; ++i) {
      const double u = -2.0 + 4.0 * i / 400;
      // deriv_inverse o deriv = identity within 10 * tol_root.
      if (std::abs(fl.deriv_inverse(fl.deriv(u)) - u) > 1e-11) ok = false;
      // eval o inverse_plus = identity above the minimum.
      const double y = fl.min_value() + 0.01 + 2.0 * i / 400;
      if (std::abs(fl.eval(fl.inverse_plus(y)) - y) > 1e-11) ok = false;
      if (std::abs(fl.eval(fl.inverse_minus(y)) - y) > 1e-11) ok = false;
    }
    const auto [rlo, rhi] = fl.deriv_range();
    const double xlo = std::max(rlo, -3.0), xhi = std::min(rhi, 3.0);
    for (int i = 0; i <= 200 && ok; ++i) {
      const double xi1 = xlo + (xhi - xlo) * i / 200;
      // Young's inequality with equality at xi = deriv(u).
      for (double u : {-1.5, -0.3, 0.4, 1.8}) {
        if (fl.eval(u) + fl.legendre(xi1) < u * xi1 - 1e-9) ok = false;
      }
      // Midpoint convexity of the conjugate.
      if (i + 2 <= 200) {
        const double xi3 = xlo + (xhi - xlo) * (i + 2) / 200;
        const double xi2 = 0.5 * (xi1 + xi3);
        if (fl.legendre(xi2) >
            0.5 * (fl.legendre(xi1) + fl.legendre(xi3)) + 1e-9)
          ok = false;
      }
    }
    for (double u : {-1.2, 0.7, 2.0}) {
      const double xi = fl.deriv(u);
      if (std::abs(fl.eval(u) + fl.legendre(xi) - u * xi) > 1e-8) ok = false;
    }
  }
  verdict(2, "inverse/conjugate round trips, Young, convexity", ok,
          timer.seconds(), 5.0);
}

// --- criterion 3: RH + entropy traces -------------------------------------
void criterion_traces(const std::string& configs) {
  Timer timer;
  bool ok = true;
  std::string why;
  const ConvexFlux q0 = ConvexFlux::quadratic(0.0);
  const ConvexFlux q1 = ConvexFlux::quadratic(1.0);

  struct Problem {
    std::string name;
    InterfacePair pair;
    InitialData data;
  };
  std::vector<Problem> problems;
  problems.push_back(
      {"const2", InterfacePair(q1, q0), InitialData::constant(2.0)});
  problems.push_back(
      {"const-minus1", InterfacePair(q1, q0), InitialData::constant(-1.0)});
  problems.push_back({"critical-riemann", InterfacePair(q1, q0),
                      InitialData::riemann(1.0, 0.0)});
  problems.push_back({"burgers-shock", InterfacePair(q0, q0),
                      InitialData::riemann(1.0, 0.0)});
  for (const char* name :
       {"check.cfg", "e1_p1q1.cfg", "e1_p3q1.cfg", "e1_p3q3.cfg", "e2.cfg",
        "e3_p1q1.cfg", "e3_p3q3.cfg"}) {
    const Config cfg = Config::load(configs + "/" + name);
    const ProblemSetup s = setup_from_config(cfg);
    problems.push_back({name, s.pair, s.data});
  }

  for (const auto& p : problems) {
    for (double t : {0.3, 1.0}) {
      try {
        const TraceResult tr = interface_trace(p.pair, p.data, t);
        if (tr.rh_residual > kTolRh || tr.entropy_violated) {
          ok = false;
          why = p.name + " at t=" + std::to_string(t);
        }
      } catch (const std::exception& e) {
        ok = false;
        why = p.name + ": " + e.what();
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  verdict(3, "Rankine-Hugoniot and entropy traces", ok, timer.seconds(), 30.0,
          why);
}

// --- criterion 4: oracle equivalence --------------------------------------
void criterion_oracle(const std::string& configs, const std::string& out) {
  Timer timer;
  std::string why;
  const ExperimentReport r =
      run_convergence(Config::load(configs + "/e5.cfg"), out);
  verdict(4, "explicit vs godunov L1 convergence (riemann suite)",
          rows_pass(r, &why), timer.seconds(), 300.0, why);
}

// --- criterion 5: smoothing rate -------------------------------------------
void criterion_smoothing(const std::string& configs, const std::string& out) {
  Timer timer;
  bool ok = true;
  std::string why;
  for (const char* name : {"e1_p1q1.cfg", "e1_p3q1.cfg", "e1_p3q3.cfg"}) {
    const ExperimentReport r =
        run_smoothing(Config::load(configs + "/" + name), out);
    std::string sub;
    if (!rows_pass(r, &sub)) {
      ok = false;
      why = std::string(name) + ": " + sub;
      break;
    }
  }
  verdict(5, "BV^s smoothing scans at s* and 0.8 s*", ok, timer.seconds(),
          600.0, why);
}

// --- criterion 6: decay rate ------------------------------------------------
void criterion_decay(const std::string& configs, const std::string& out) {
  Timer timer;
  std::string why;
  const ExperimentReport r = run_decay(Config::load(configs + "/e2.cfg"), out);
  const double slope = r.fitted_constants.at("slope");
  bool ok = rows_pass(r, &why);
  if (!(slope >= -1.2 && slope <= -0.8)) {
    ok = false;
    why = "slope " + std::to_string(slope) + " outside -1 +- 0.2";
  }
  verdict(6, "TV decay slope -1.0 +- 0.2 (p = q = 1)", ok, timer.seconds(),
          300.0, why);
}

// --- criterion 7: propagation ----------------------------------------------
void criterion_propagation(const std::string& configs,
                           const std::string& out) {
  Timer timer;
  bool ok = true;
  std::string why;
  for (const char* name : {"e3_p1q1.cfg", "e3_p3q3.cfg"}) {
    const ExperimentReport r =
        run_propagation(Config::load(configs + "/" + name), out);
    std::string sub;
    if (!rows_pass(r, &sub)) {
      ok = false;
      why = std::string(name) + ": " + sub;
      break;
    }
  }
  verdict(7, "BV^{1/2} propagation bound with one fitted constant", ok,
          timer.seconds(), 300.0, why);
}

// --- criterion 8: monotonicity diagnostics ---------------------------------
void criterion_monotonicity(const std::string& configs) {
  Timer timer;
  bool ok = true;
  std::string why;
  for (const char* name : {"check.cfg", "e1_p1q1.cfg", "e3_p1q1.cfg"}) {
    const ExperimentReport r = run_check(Config::load(configs + "/" + name));
    std::string sub;
    if (!rows_pass(r, &sub)) {
      ok = false;
      why = std::string(name) + ": " + sub;
      break;
    }
  }
  verdict(8, "z+/t+ monotonicity and max principle", ok, timer.seconds(),
          60.0, why);
}

// --- criterion 9: compatibility necessity ----------------------------------
void criterion_incompatible(const std::string& configs,
                            const std::string& out) {
  Timer timer;
  std::string why;
  const ExperimentReport r =
      run_incompatible(Config::load(configs + "/e4.cfg"), out);
  verdict(9, "incompatible plateau sqrt(0.6) and growth separation",
          rows_pass(r, &why), timer.seconds(), 300.0, why);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string configs = (argc > 1) ? argv[1] : "configs";
  std::string out;
  for (int i = 2; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--out") out = argv[i + 1];

  try {
    criterion_variation_oracle();
    criterion_inverse_conjugate();
    criterion_traces(configs);
    criterion_oracle(configs, out);
    criterion_smoothing(configs, out);
    criterion_decay(configs, out);
    criterion_propagation(configs, out);
    criterion_monotonicity(configs);
    criterion_incompatible(configs, out);
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 99;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
