#ifndef FOCUSPLAN_TESTS_SUPPORT_HPP
#define FOCUSPLAN_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>

#include "focusplan/optics.hpp"

namespace focusplan::testing {

inline bool rel_close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) {
    return a == b;
  }
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

/// Random valid module parameters. The near limit is kept above H/2000 so
/// plans stay at desk-test size.
inline LensSpec random_spec(std::mt19937_64& rng) {
  LensSpec spec{};
  spec.focal_length = log_uniform(rng, 2.0, 100.0);
  spec.f_number = std::uniform_real_distribution<double>(1.0, 16.0)(rng);
  spec.coc = log_uniform(rng, 0.001, 0.05);
  const double h =
      spec.focal_length * spec.focal_length / (spec.f_number * spec.coc) + spec.focal_length;
  const double lo = std::max(1.5 * spec.focal_length, h / 2000.0);
  spec.near_focus_limit = log_uniform(rng, lo, 0.9 * h);
  return spec;
}

/// Oracle: smallest distance whose blur stays within coc when focused at d_o,
/// found by bisecting the blur curve (strictly decreasing below d_o).
inline double scan_near_limit(double d_o, const LensSpec& spec) {
  double lo = d_o * 1e-6;
  double hi = d_o;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (blur_diameter(mid, d_o, spec) > spec.coc) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

/// Oracle: largest distance whose blur stays within coc; infinity when even
/// the asymptotic blur f^2/(N (d_o - f)) stays within coc.
inline double scan_far_limit(double d_o, const LensSpec& spec) {
  const double asymptote =
      spec.focal_length * spec.focal_length / (spec.f_number * (d_o - spec.focal_length));
  if (asymptote <= spec.coc) {
    return kInfinity;
  }
  double lo = d_o;
  double hi = d_o;
  while (blur_diameter(hi, d_o, spec) <= spec.coc) {
    hi *= 2.0;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (blur_diameter(mid, d_o, spec) <= spec.coc) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace focusplan::testing

#endif
