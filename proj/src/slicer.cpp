#include "focusplan/slicer.hpp"

#include <algorithm>
#include <cmath>

namespace focusplan {

namespace {

constexpr int kMaxIterations = 10000;
constexpr Millimeters kFarSampleCap = 1e12;  // stand-in for infinity when sampling

FocusSlice make_slice(int step, Millimeters d_o, Millimeters near, Millimeters far,
                      const LensSpec& spec) {
  return FocusSlice{step, d_o, near, far, object_to_image(d_o, spec.focal_length)};
}

}  // namespace

int FocusPlan::iterated_count() const {
  return static_cast<int>(
      std::count_if(slices.begin(), slices.end(), [](const FocusSlice& s) { return s.step >= 0; }));
}

FocusPlan slice_forward(const LensSpec& spec) {
  spec.validate();
  FocusPlan plan{spec, derive(spec), Direction::kNearToFar, {}};
  const Millimeters h = plan.derived.hyperfocal;

  // Focus distance of the last slice: hyperfocal, or the nearest focus
  // distance whose far limit reaches a finite far_target.
  const Millimeters d_end =
      std::isinf(spec.far_target) ? h : object_from_far_limit(spec.far_target, spec);

  if (spec.near_focus_limit >= d_end) {
    plan.slices.push_back(
        make_slice(0, d_end, near_limit(d_end, spec), far_limit(d_end, spec), spec));
    return plan;
  }

  plan.slices.push_back(make_slice(-1, spec.near_focus_limit,
                                   near_limit(spec.near_focus_limit, spec),
                                   far_limit(spec.near_focus_limit, spec), spec));

  const Millimeters end_near = near_limit(d_end, spec);
  int step = 0;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const Millimeters covered_to = plan.slices.back().far;
    if (covered_to >= spec.far_target) {
      return plan;
    }
    if (!(covered_to < end_near)) {
      // The next iterate would overshoot the end of the range: clamp the
      // final slice to d_end, leaving the overlap at the far end.
      plan.slices.push_back(
          make_slice(step, d_end, near_limit(d_end, spec), far_limit(d_end, spec), spec));
      return plan;
    }
    const Millimeters d_o = object_from_near_limit(covered_to, spec);
    plan.slices.push_back(make_slice(step++, d_o, covered_to, far_limit(d_o, spec), spec));
  }
  throw std::logic_error("slice_forward exceeded the iteration bound");
}

FocusPlan slice_backward(const LensSpec& spec) {
  spec.validate();
  FocusPlan plan{spec, derive(spec), Direction::kFarToNear, {}};

  Millimeters far = spec.far_target;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const Millimeters d_o = object_from_far_limit(far, spec);
    const Millimeters near = near_limit(d_o, spec);
    plan.slices.push_back(make_slice(0, d_o, near, far, spec));
    if (near <= spec.near_focus_limit) {
      std::reverse(plan.slices.begin(), plan.slices.end());
      for (std::size_t i = 0; i < plan.slices.size(); ++i) {
        plan.slices[i].step = static_cast<int>(i);
      }
      return plan;
    }
    far = near;
  }
  throw std::logic_error("slice_backward exceeded the iteration bound");
}

std::vector<std::string> validate_plan(const FocusPlan& plan) {
  std::vector<std::string> violations;
  try {
    plan.spec.validate();
  } catch (const std::exception& e) {
    violations.emplace_back(std::string("spec: ") + e.what());
    return violations;
  }
  if (plan.slices.empty()) {
    violations.emplace_back("plan has no slices");
    return violations;
  }
  const auto& slices = plan.slices;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const FocusSlice& s = slices[i];
    const std::string tag = "slice " + std::to_string(s.step);
    if (!(s.near < s.focus_distance && s.focus_distance < s.far)) {
      violations.push_back(tag + ": near/focus/far out of order");
    }
    const Millimeters lens = object_to_image(s.focus_distance, plan.spec.focal_length);
    if (std::abs(s.lens_distance - lens) > 1e-9 * lens) {
      violations.push_back(tag + ": lens distance inconsistent with focus distance");
    }
    if (i > 0) {
      if (!(slices[i - 1].focus_distance < s.focus_distance)) {
        violations.push_back(tag + ": focus distances not strictly increasing");
      }
      if (!(slices[i - 1].lens_distance > s.lens_distance)) {
        violations.push_back(tag + ": lens distances not strictly decreasing");
      }
    }
  }
  if (!(slices.back().far >= plan.spec.far_target)) {
    violations.emplace_back("plan does not reach far_target");
  }
  return violations;
}

CoverageReport verify_coverage(const FocusPlan& plan, int samples_per_slice) {
  CoverageReport report;
  report.violations = validate_plan(plan);
  if (!report.violations.empty()) {
    return report;
  }
  if (samples_per_slice < 1) {
    report.violations.emplace_back("samples_per_slice must be positive");
    return report;
  }

  const auto& slices = plan.slices;
  // blur(d, d_o) is unimodal in d_o, so over sorted focus distances the
  // best-covering slice neighbors d's insertion point.
  auto min_blur = [&](Millimeters d) {
    auto it = std::lower_bound(
        slices.begin(), slices.end(), d,
        [](const FocusSlice& s, Millimeters v) { return s.focus_distance < v; });
    std::size_t idx = static_cast<std::size_t>(it - slices.begin());
    Millimeters best = kInfinity;
    const std::size_t lo = idx >= 2 ? idx - 2 : 0;
    const std::size_t hi = std::min(slices.size(), idx + 2);
    for (std::size_t i = lo; i < hi; ++i) {
      best = std::min(best, blur_diameter(d, slices[i].focus_distance, plan.spec));
    }
    return best;
  };

  auto record = [&](Millimeters d) {
    const Millimeters b = min_blur(d);
    ++report.samples;
    if (b > report.max_blur) {
      report.max_blur = b;
      report.worst_distance = d;
    }
  };

  auto sweep_span = [&](Millimeters lo, Millimeters hi) {
    record(lo);
    record(hi);
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (int k = 1; k <= samples_per_slice; ++k) {
      const double t = static_cast<double>(k) / (samples_per_slice + 1);
      record(std::exp(log_lo + t * (log_hi - log_lo)));
    }
  };

  for (std::size_t i = 0; i < slices.size(); ++i) {
    const FocusSlice& s = slices[i];
    sweep_span(s.near, std::isinf(s.far) ? kFarSampleCap : s.far);
    // Coverage gaps between consecutive slices carry no slice span of their
    // own, so sweep them explicitly; a gap shows up as blur above coc.
    if (i + 1 < slices.size() && slices[i + 1].near > s.far) {
      sweep_span(s.far, slices[i + 1].near);
    }
  }

  report.pass = report.max_blur <= plan.spec.coc * (1.0 + 1e-9);
  return report;
}

}  // namespace focusplan
