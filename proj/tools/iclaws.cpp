#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iclaws/experiments.hpp"

namespace {

int report_outcome(const iclaws::ExperimentReport& report) {
  for (const auto& row : report.rows) {
    std::cout << (row.pass ? "[PASS] " : (row.gated ? "[FAIL] " : "[INFO] "))
              << report.id << "/" << row.cell;
    if (!row.params.empty()) std::cout << " (" << row.params << ")";
    std::cout << " measured=" << row.measured << " ref=" << row.fitted
              << "\n";
  }
  for (const auto& [k, v] : report.fitted_constants)
    std::cout << "  fitted " << k << " = " << v << "\n";
  std::cout << (report.pass() ? "PASS" : "FAIL") << ": " << report.id << "\n";
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iclaws: conservation laws with a two-flux interface"};
  app.require_subcommand(1);

  std::string config_path, out_path, which, input_path;
  double t = 1.0, s_exp = 1.0;
  int grid_n = 1024;

  auto* solve = app.add_subcommand("solve", "evaluate a solution profile");
  solve->add_option("--config", config_path, "problem config")->required();
  solve->add_option("--t", t, "time > 0")->required();
  solve->add_option("--grid", grid_n, "number of grid intervals");
  solve->add_option("--out", out_path, "output CSV path")->required();

  auto* tvs = app.add_subcommand("tvs", "fractional variation of a CSV");
  tvs->add_option("--input", input_path, "CSV with x,u columns")->required();
  tvs->add_option("--s", s_exp, "exponent in (0, 1]")->required();

  auto* experiment = app.add_subcommand("experiment", "run an experiment");
  experiment->add_option("--config", config_path, "config path")->required();
  experiment->add_option("--which", which, "e1|e2|e3|e4|e5")->required();
  experiment->add_option("--out", out_path, "output directory");

  auto* check = app.add_subcommand("check", "run the invariant suite");
  check->add_option("--config", config_path, "config path")->required();
  check->add_option("--out", out_path, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(solve)) {
      const iclaws::Config cfg = iclaws::Config::load(config_path);
      const iclaws::ProblemSetup setup = iclaws::setup_from_config(cfg);
      std::vector<double> xs(grid_n + 1);
      for (int i = 0; i <= grid_n; ++i)
        xs[i] = -setup.window + 2.0 * setup.window * i / grid_n;
      const iclaws::SolutionField field =
          iclaws::sample_profile(setup.pair, setup.data, t, xs);
      iclaws::write_profile_csv(field, out_path);
      std::cout << "wrote " << out_path << " (" << xs.size() << " points)\n";
      return 0;
    }
    if (app.got_subcommand(tvs)) {
      std::ifstream in(input_path);
      if (!in) throw iclaws::ConfigError("cannot open " + input_path);
      iclaws::SampledFunction f;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string sx, su;
        if (!std::getline(row, sx, ',') || !std::getline(row, su, ','))
          continue;
        try {
          const double x = std::stod(sx);
          const double u = std::stod(su);
          f.xs.push_back(x);
          f.us.push_back(u);
        } catch (...) {
          continue;  // header line
        }
      }
      const iclaws::VariationResult r = iclaws::tvs_dp(f, s_exp);
      std::cout << "tvs = " << iclaws::format_double(r.value)
                << " (s = " << s_exp << ", n = " << r.resolution
                << ", subdivision size = " << r.subdivision.size() << ")\n";
      return 0;
    }
    if (app.got_subcommand(experiment)) {
      const iclaws::Config cfg = iclaws::Config::load(config_path);
      return report_outcome(iclaws::run_experiment(which, cfg, out_path));
    }
    if (app.got_subcommand(check)) {
      const iclaws::Config cfg = iclaws::Config::load(config_path);
      return report_outcome(iclaws::run_check(cfg, out_path));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
