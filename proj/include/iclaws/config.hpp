#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iclaws/flux.hpp"
#include "iclaws/initial_data.hpp"

namespace iclaws {

// Flat key/value configuration with [dotted.section] tables. Values are kept
// as trimmed strings; typed accessors parse on demand. parse(serialize(c))
// reproduces c exactly.
class Config {
 public:
  static Config parse(const std::string& text);
  static Config load(const std::string& path);
  std::string serialize() const;

  bool has(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section,
                         const std::string& key) const;
  double get_double(const std::string& section, const std::string& key) const;
  int get_int(const std::string& section, const std::string& key) const;
  bool get_bool(const std::string& section, const std::string& key) const;
  std::vector<double> get_list(const std::string& section,
                               const std::string& key) const;

  std::string get_string_or(const std::string& section, const std::string& key,
                            const std::string& fallback) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  int get_int_or(const std::string& section, const std::string& key,
                 int fallback) const;

  void set(const std::string& section, const std::string& key,
           const std::string& value);

  bool operator==(const Config& other) const { return data_ == other.data_; }

 private:
  std::map<std::string, std::map<std::string, std::string>> data_;
};

// Materialized problem: fluxes, data and experiment parameters.
struct ProblemSetup {
  InterfacePair pair;
  bool expect_compatible = true;
  double window = 2.0;     // M
  double sup_bound = 3.0;
  InitialData data;

  std::vector<double> s_list;
  std::vector<double> t_list;
  std::vector<int> resolutions;
  double delta = 1.0;
  double r = 1.0;
  int godunov_cells = 4096;
  double domain_radius = 8.0;
  double horizon = 1.0;  // T
  std::uint64_t seed = 0;
};

ConvexFlux flux_from_config(const Config& cfg, const std::string& section);
InitialData data_from_config(const Config& cfg, const InterfacePair& pair,
                             double window, double sup_bound);
ProblemSetup setup_from_config(const Config& cfg);

// The default random piecewise-constant datum: 64 uniform steps over
// [-M, M], values uniform in [theta_g - 2, theta_f + 2] clipped to sup_bound
// and forced to straddle both critical points. Deterministic in the seed.
// A nonzero overlay adds a fine alternating layer of height overlay_amp on
// overlay_steps sub-steps, giving the datum structure below any fixed grid
// while leaving the macroscopic variation to the base layer.
InitialData random_piecewise_data(const InterfacePair& pair, double window,
                                  double sup_bound, std::uint64_t seed,
                                  int steps = 64, int overlay_steps = 0,
                                  double overlay_amp = 0.0);

}  // namespace iclaws
