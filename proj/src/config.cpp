#include "iclaws/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace iclaws {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": empty section name");
      cfg.data_[section];  // sections may be empty
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    cfg.data_[section][key] = value;
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Config::serialize() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [section, kv] : data_) {
    if (!first) out << "\n";
    first = false;
    if (!section.empty()) out << "[" << section << "]\n";
    for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
  }
  return out.str();
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto it = data_.find(section);
  return it != data_.end() && it->second.count(key) > 0;
}

std::string Config::get_string(const std::string& section,
                               const std::string& key) const {
  const auto it = data_.find(section);
  if (it == data_.end() || !it->second.count(key))
    throw ConfigError("missing config key: [" + section + "] " + key);
  return it->second.at(key);
}

double Config::get_double(const std::string& section,
                          const std::string& key) const {
  const std::string v = get_string(section, key);
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (trim(v.substr(pos)) != "") throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config key [" + section + "] " + key +
                      " is not a number: " + v);
  }
}

int Config::get_int(const std::string& section, const std::string& key) const {
  const double d = get_double(section, key);
  const int i = static_cast<int>(std::llround(d));
  if (std::abs(d - i) > 1e-9)
    throw ConfigError("config key [" + section + "] " + key +
                      " is not an integer");
  return i;
}

bool Config::get_bool(const std::string& section,
                      const std::string& key) const {
  const std::string v = get_string(section, key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key [" + section + "] " + key +
                    " is not a boolean: " + v);
}

std::vector<double> Config::get_list(const std::string& section,
                                     const std::string& key) const {
  const std::string v = get_string(section, key);
  std::vector<double> out;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("config key [" + section + "] " + key +
                        " has a non-numeric list item: " + item);
    }
  }
  if (out.empty())
    throw ConfigError("config key [" + section + "] " + key +
                      " is an empty list");
  return out;
}

std::string Config::get_string_or(const std::string& section,
                                  const std::string& key,
                                  const std::string& fallback) const {
  return has(section, key) ? get_string(section, key) : fallback;
}

double Config::get_double_or(const std::string& section,
                             const std::string& key, double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

int Config::get_int_or(const std::string& section, const std::string& key,
                       int fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
  data_[section][key] = value;
}

ConvexFlux flux_from_config(const Config& cfg, const std::string& section) {
  const std::string family = cfg.get_string(section, "family");
  const double offset = cfg.get_double_or(section, "offset", 0.0);
  if (family == "quadratic")
    return ConvexFlux::quadratic(cfg.get_double(section, "theta"), offset);
  if (family == "powerlaw")
    return ConvexFlux::power_law(cfg.get_double(section, "theta"),
                                 cfg.get_double(section, "alpha"), offset);
  if (family == "tabulated") {
    auto us = cfg.get_list(section, "u_samples");
    auto ws = cfg.get_list(section, "w_samples");
    return ConvexFlux::tabulated(std::move(us), std::move(ws), offset);
  }
  throw ConfigError("unknown flux family: " + family);
}

InitialData random_piecewise_data(const InterfacePair& pair, double window,
                                  double sup_bound, std::uint64_t seed,
                                  int steps, int overlay_steps,
                                  double overlay_amp) {
  if (steps < 2) throw ConfigError("random_piecewise_data: steps >= 2");
  if (overlay_steps != 0 && overlay_steps < steps)
    throw ConfigError("random_piecewise_data: overlay must be finer");
  std::mt19937_64 rng(seed);
  const double lo_val = pair.left.theta() - 2.0;
  const double hi_val = pair.right.theta() + 2.0;
  std::uniform_real_distribution<double> dist(std::min(lo_val, hi_val),
                                              std::max(lo_val, hi_val));
  std::vector<double> base(steps);
  for (auto& v : base) v = std::clamp(dist(rng), -sup_bound, sup_bound);

  // Force straddling of both critical points.
  const double th_lo = std::min(pair.left.theta(), pair.right.theta());
  const double th_hi = std::max(pair.left.theta(), pair.right.theta());
  if (*std::min_element(base.begin(), base.end()) >= th_lo)
    base[steps / 3] = std::max(-sup_bound, th_lo - 1.0);
  if (*std::max_element(base.begin(), base.end()) <= th_hi)
    base[2 * steps / 3] = std::min(sup_bound, th_hi + 1.0);

  const int n = (overlay_steps > 0) ? overlay_steps : steps;
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) {
    const double v = base[static_cast<std::size_t>(i) * steps / n];
    // Random signs, not strict alternation: uniform grids stride the fine
    // steps with even factors and would never see an alternating layer.
    const double bump =
        (overlay_steps > 0) ? ((rng() & 1) ? overlay_amp : -overlay_amp)
                            : 0.0;
    vals[i] = std::clamp(v + bump, -sup_bound, sup_bound);
  }

  // Constant tails continue the edge steps.
  std::vector<double> values;
  values.reserve(n + 1);
  values.push_back(vals.front());
  for (double v : vals) values.push_back(v);
  std::vector<double> bps;
  bps.reserve(n);
  bps.push_back(-window);
  for (int i = 1; i < n; ++i)
    bps.push_back(-window + 2.0 * window * i / n);
  // values[i] rules (bps[i-1], bps[i]); the final value continues past the
  // last breakpoint.
  return InitialData::piecewise_constant(std::move(bps), std::move(values));
}

InitialData data_from_config(const Config& cfg, const InterfacePair& pair,
                             double window, double sup_bound) {
  const std::string kind = cfg.get_string("initial", "kind");
  if (kind == "riemann")
    return InitialData::riemann(cfg.get_double("initial", "left"),
                                cfg.get_double("initial", "right"));
  if (kind == "piecewise") {
    auto bps = cfg.get_list("initial", "breakpoints");
    auto vals = cfg.get_list("initial", "values");
    return InitialData::piecewise_constant(std::move(bps), std::move(vals));
  }
  if (kind == "sine-pack") {
    const double mid = cfg.get_double_or("initial", "mid", 0.0);
    const double amp = cfg.get_double("initial", "amp");
    const double wavelength = cfg.get_double("initial", "wavelength");
    const double extent = cfg.get_double_or("initial", "extent", window);
    const int samples = cfg.get_int_or("initial", "samples", 4096);
    const double pi = 3.14159265358979323846;
    return InitialData::analytic(
        [=](double x) {
          if (std::abs(x) >= extent) return mid;
          return mid + amp * std::sin(2.0 * pi * x / wavelength);
        },
        extent, samples);
  }
  if (kind == "random-piecewise") {
    const auto seed =
        static_cast<std::uint64_t>(cfg.get_int_or("initial", "seed", 42));
    const int steps = cfg.get_int_or("initial", "steps", 64);
    const int overlay_steps = cfg.get_int_or("initial", "overlay_steps", 0);
    const double overlay_amp =
        cfg.get_double_or("initial", "overlay_amp", 0.0);
    return random_piecewise_data(pair, window, sup_bound, seed, steps,
                                 overlay_steps, overlay_amp);
  }
  throw ConfigError("unknown initial data kind: " + kind);
}

ProblemSetup setup_from_config(const Config& cfg) {
  InterfacePair pair(flux_from_config(cfg, "flux.left"),
                     flux_from_config(cfg, "flux.right"));
  const double window = cfg.get_double_or("problem", "window", 2.0);
  const double sup_bound = cfg.get_double_or("problem", "sup_bound", 3.0);

  InitialData data = data_from_config(cfg, pair, window, sup_bound);
  ProblemSetup s{std::move(pair), true, window, sup_bound, std::move(data),
                 {}, {}, {}};
  s.expect_compatible = cfg.has("problem", "compatible")
                            ? cfg.get_bool("problem", "compatible")
                            : true;
  if (s.expect_compatible != s.pair.compatible)
    throw ConfigError("flux pair compatibility does not match expectation");
  s.data.with_sup_bound(0.0);

  if (cfg.has("experiment", "s_list"))
    s.s_list = cfg.get_list("experiment", "s_list");
  if (cfg.has("experiment", "t_list"))
    s.t_list = cfg.get_list("experiment", "t_list");
  if (cfg.has("experiment", "resolutions")) {
    for (double r : cfg.get_list("experiment", "resolutions"))
      s.resolutions.push_back(static_cast<int>(std::llround(r)));
  }
  s.delta = cfg.get_double_or("experiment", "delta", 1.0);
  s.r = cfg.get_double_or("experiment", "r", 1.0);
  s.godunov_cells = cfg.get_int_or("experiment", "godunov_cells", 4096);
  s.domain_radius = cfg.get_double_or("experiment", "domain", 8.0);
  s.horizon = cfg.get_double_or("experiment", "T", 1.0);
  s.seed = static_cast<std::uint64_t>(cfg.get_int_or("initial", "seed", 42));
  return s;
}

}  // namespace iclaws
