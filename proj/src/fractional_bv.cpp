#include "iclaws/fractional_bv.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace iclaws {

namespace {

void check_input(const SampledFunction& f, double s) {
  if (!(s > 0.0) || s > 1.0)
    throw InvalidExponent("TV^s requires 0 < s <= 1");
  if (f.us.size() < 2)
    throw ConfigError("TV^s needs at least 2 samples");
  if (!f.xs.empty() && f.xs.size() != f.us.size())
    throw ConfigError("SampledFunction: xs/us size mismatch");
}

}  // namespace

VariationResult tvs_dp(const SampledFunction& f, double s) {
  check_input(f, s);
  const std::size_t n = f.us.size();
  if (n > 200000) throw TooLarge("tvs_dp: n exceeds 2e5 cap");
  const double p = 1.0 / s;
  const auto& u = f.us;

  // best[j]: supremum over subdivisions ending at j; parent[j] rebuilds one.
  std::vector<double> best(n, 0.0);
  std::vector<std::ptrdiff_t> parent(n, -1);
  // Prefix records for exact pruning: every k <= i satisfies
  // best[k] + |u_j - u_k|^p <= pref_m[i] + max(|u_j-pref_lo[i]|,
  // |u_j-pref_hi[i]|)^p, so once that bound cannot beat the running candidate
  // the remaining predecessors are skipped. Discarded terms cannot improve
  // best[j], so the DP stays exact.
  std::vector<double> pref_m(n, 0.0), pref_lo(n, 0.0), pref_hi(n, 0.0);
  pref_lo[0] = pref_hi[0] = u[0];

  for (std::size_t j = 1; j < n; ++j) {
    double cur = -1.0;
    std::ptrdiff_t arg = -1;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(j) - 1; i >= 0; --i) {
      const double reach =
          std::max(std::abs(u[j] - pref_lo[i]), std::abs(u[j] - pref_hi[i]));
      if (pref_m[i] + std::pow(reach, p) < cur) break;
      const double cand = best[i] + std::pow(std::abs(u[j] - u[i]), p);
      // >= so that, scanning downward, exact ties settle on the smallest i.
      if (cand >= cur) {
        cur = cand;
        arg = i;
      }
    }
    best[j] = cur;
    parent[j] = arg;
    pref_m[j] = std::max(pref_m[j - 1], best[j]);
    pref_lo[j] = std::min(pref_lo[j - 1], u[j]);
    pref_hi[j] = std::max(pref_hi[j - 1], u[j]);
  }

  std::size_t end = 1;
  for (std::size_t j = 2; j < n; ++j)
    if (best[j] > best[end]) end = j;

  VariationResult r;
  r.s = s;
  r.value = std::max(0.0, best[end]);
  r.resolution = n;
  for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(end); j >= 0;) {
    r.subdivision.push_back(static_cast<std::size_t>(j));
    j = parent[j];
  }
  std::reverse(r.subdivision.begin(), r.subdivision.end());
  if (r.subdivision.size() < 2) r.subdivision = {0, 1};
  return r;
}

VariationResult tvs_bruteforce(const SampledFunction& f, double s) {
  check_input(f, s);
  const std::size_t n = f.us.size();
  if (n > 16) throw TooLarge("tvs_bruteforce: n > 16");
  const double p = 1.0 / s;
  const auto& u = f.us;

  VariationResult r;
  r.s = s;
  r.value = -1.0;
  r.resolution = n;
  const std::uint32_t full = 1u << n;
  std::vector<std::size_t> idx;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    double sum = 0.0;
    for (std::size_t k = 1; k < idx.size(); ++k)
      sum += std::pow(std::abs(u[idx[k]] - u[idx[k - 1]]), p);
    if (sum > r.value) {
      r.value = sum;
      r.subdivision = idx;
    }
  }
  return r;
}

std::vector<std::pair<int, double>> refine_scan(
    const std::function<double(double)>& sampler, double a, double b, double s,
    const std::vector<int>& resolutions) {
  if (!(a < b)) throw ConfigError("refine_scan: need a < b");
  for (std::size_t i = 1; i < resolutions.size(); ++i)
    if (resolutions[i] <= resolutions[i - 1])
      throw ConfigError("refine_scan: resolutions must increase");

  std::vector<std::pair<int, double>> out;
  double prev = -std::numeric_limits<double>::infinity();
  for (int n : resolutions) {
    if (n < 1) throw ConfigError("refine_scan: resolution must be >= 1");
    SampledFunction f;
    f.xs.resize(n + 1);
    f.us.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      f.xs[k] = a + (b - a) * k / n;
      f.us[k] = sampler(f.xs[k]);
    }
    const double v = tvs_dp(f, s).value;
    if (v < prev - 1e-9 * std::max(1.0, prev))
      throw ConditionViolated(
          "refine_scan: value decreased under refinement (non-nested grid?)");
    prev = std::max(prev, v);
    out.emplace_back(n, v);
  }
  return out;
}

}  // namespace iclaws
