#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iclaws/errors.hpp"

namespace iclaws {

struct ReportRow {
  std::string cell;     // e.g. "p3q1/sstar"
  std::string params;   // semicolon-separated key=value pairs
  double measured = 0.0;
  double fitted = 0.0;
  bool pass = true;
  bool gated = true;    // informative rows set gated = false
  std::uint64_t seed = 0;
  int resolution = 0;
};

struct ExperimentReport {
  std::string id;
  std::vector<ReportRow> rows;
  std::map<std::string, double> fitted_constants;

  bool pass() const;
  void add(ReportRow row) { rows.push_back(std::move(row)); }
};

// Deterministic shortest round-trip formatting for doubles.
std::string format_double(double v);

void write_report_csv(const ExperimentReport& report, const std::string& path);
void write_report_json(const ExperimentReport& report,
                       const std::string& path);

// Generic CSV table writer: header plus rows of formatted doubles/strings.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS residual in log space
};

// Least squares of log(y - floor) against log(t). Requires >= 3 points with
// y > floor and non-degenerate spread in t.
FitResult fit_rate(const std::vector<std::pair<double, double>>& points,
                   double floor);

}  // namespace iclaws
