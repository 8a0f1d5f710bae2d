#pragma once

#include <string>

#include "iclaws/config.hpp"
#include "iclaws/fractional_bv.hpp"
#include "iclaws/godunov.hpp"
#include "iclaws/report.hpp"
#include "iclaws/solver.hpp"

namespace iclaws {

// Experiment drivers. Each returns the report and, when out_dir is not
// empty, writes the CSV tables and a JSON summary there.
ExperimentReport run_smoothing(const Config& cfg,
                               const std::string& out_dir = "");   // e1
ExperimentReport run_decay(const Config& cfg,
                           const std::string& out_dir = "");       // e2
ExperimentReport run_propagation(const Config& cfg,
                                 const std::string& out_dir = ""); // e3
ExperimentReport run_incompatible(const Config& cfg,
                                  const std::string& out_dir = "");// e4
ExperimentReport run_convergence(const Config& cfg,
                                 const std::string& out_dir = ""); // e5

// Invariant suite on one configured problem: RH traces, interface entropy,
// max principle, minimizer monotonicity, curve dichotomy.
ExperimentReport run_check(const Config& cfg,
                           const std::string& out_dir = "");

ExperimentReport run_experiment(const std::string& which, const Config& cfg,
                                const std::string& out_dir = "");

void write_profile_csv(const SolutionField& field, const std::string& path);

// Essential supremum of the datum over the open interval (lo, hi).
double ess_sup(const InitialData& data, double lo, double hi);

// TV^s of a solver profile sampled on `resolution` uniform intervals of
// [lo, hi].
double profile_tvs(const PointwiseSolver& solver, double lo, double hi,
                   double s, int resolution);

}  // namespace iclaws
