#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "iclaws/errors.hpp"

namespace iclaws {

struct SampledFunction {
  std::vector<double> xs;  // strictly increasing
  std::vector<double> us;
};

struct VariationResult {
  double s = 1.0;
  double value = 0.0;
  std::vector<std::size_t> subdivision;  // indices achieving the supremum
  std::size_t resolution = 0;            // sample count it was computed at
};

// Exact supremum of sum |u_j - u_i|^{1/s} over all subdivisions drawn from
// the sample points, by O(n^2) dynamic programming. Ties resolve to the
// lexicographically smallest subdivision. n is capped at 2e5 per call.
VariationResult tvs_dp(const SampledFunction& f, double s);

// Exhaustive enumeration over every index subset of size >= 2; oracle for
// tvs_dp. Requires n <= 16.
VariationResult tvs_bruteforce(const SampledFunction& f, double s);

// TV^s of `sampler` on uniform grids over [a, b] with `resolution` intervals
// each (resolution + 1 points). Resolutions must increase; with a nested
// ladder (doubling) the sequence of values is non-decreasing, which is
// asserted up to rounding.
std::vector<std::pair<int, double>> refine_scan(
    const std::function<double(double)>& sampler, double a, double b, double s,
    const std::vector<int>& resolutions);

}  // namespace iclaws
