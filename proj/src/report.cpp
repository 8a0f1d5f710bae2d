#include "iclaws/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace iclaws {

bool ExperimentReport::pass() const {
  for (const auto& row : rows)
    if (row.gated && !row.pass) return false;
  return true;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_report_csv(const ExperimentReport& report,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << "experiment,cell,params,measured,fitted,pass,seed,resolution\n";
  for (const auto& r : report.rows) {
    out << report.id << ',' << r.cell << ',' << r.params << ','
        << format_double(r.measured) << ',' << format_double(r.fitted) << ','
        << (r.pass ? "1" : "0") << ',' << r.seed << ',' << r.resolution
        << "\n";
  }
}

void write_report_json(const ExperimentReport& report,
                       const std::string& path) {
  nlohmann::json j;
  j["experiment"] = report.id;
  j["pass"] = report.pass();
  j["fitted_constants"] = report.fitted_constants;
  auto& rows = j["rows"];
  rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"cell", r.cell},
                    {"params", r.params},
                    {"measured", r.measured},
                    {"fitted", r.fitted},
                    {"pass", r.pass},
                    {"gated", r.gated},
                    {"seed", r.seed},
                    {"resolution", r.resolution}});
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "");
    out << "\n";
  }
}

FitResult fit_rate(const std::vector<std::pair<double, double>>& points,
                   double floor) {
  std::vector<double> lx, ly;
  for (const auto& [t, y] : points) {
    if (!(t > 0)) throw DegenerateFit("fit_rate: t must be positive");
    if (!(y > floor))
      throw DegenerateFit("fit_rate: y must stay above the floor");
    lx.push_back(std::log(t));
    ly.push_back(std::log(y - floor));
  }
  const std::size_t n = lx.size();
  if (n < 3) throw DegenerateFit("fit_rate: need at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-14)
    throw DegenerateFit("fit_rate: degenerate abscissae");
  FitResult f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double rss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (f.intercept + f.slope * lx[i]);
    rss += r * r;
  }
  f.residual = std::sqrt(rss / n);
  return f;
}

}  // namespace iclaws
