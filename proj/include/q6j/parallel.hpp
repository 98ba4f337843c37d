#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace q6j {

// log(sum exp(v)); -inf for an empty input.
inline double log_sum_exp(const std::vector<double>& v) {
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// OpenMP variant of the same reduction, kept separate so the serial path
// stays available as a reference. Falls back to it without OpenMP.
inline double log_sum_exp_parallel(const std::vector<double>& v) {
#ifdef _OPENMP
  if (v.size() > 512) {
    double m = -std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(max : m)
    for (long i = 0; i < static_cast<long>(v.size()); ++i) m = std::max(m, v[i]);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
#pragma omp parallel for reduction(+ : s)
    for (long i = 0; i < static_cast<long>(v.size()); ++i) s += std::exp(v[i] - m);
    return m + std::log(s);
  }
#endif
  return log_sum_exp(v);
}

// Runs f(i) for i in [0, count); parallel when requested and available.
template <typename F>
void for_each_index(std::size_t count, bool parallel, F&& f) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(count); ++i) f(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)parallel;
  for (std::size_t i = 0; i < count; ++i) f(i);
}

}  // namespace q6j
