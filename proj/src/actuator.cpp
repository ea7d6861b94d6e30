#include "focusplan/actuator.hpp"

#include <algorithm>
#include <cmath>

namespace focusplan {

namespace {

// Object distances far beyond the hyperfocal slice are probed at this stand-in
// when a slice's far limit is infinite.
constexpr Millimeters kFarProbe = 1e12;

}  // namespace

void ActuatorCalibration::validate() const {
  if (!(lens_at_code_min > 0.0) || !(lens_at_code_max > lens_at_code_min)) {
    throw std::invalid_argument("calibration requires lens_at_code_max > lens_at_code_min > 0");
  }
  if (code_max < 1) {
    throw std::invalid_argument("code_max must be at least 1");
  }
}

CodeResult to_code(Millimeters d_i, const ActuatorCalibration& cal) {
  cal.validate();
  if (std::isinf(d_i) || std::isnan(d_i)) {
    throw std::invalid_argument("image-plane distance must be finite");
  }
  const bool clamped = d_i < cal.lens_at_code_min || d_i > cal.lens_at_code_max;
  const Millimeters d = std::clamp(d_i, cal.lens_at_code_min, cal.lens_at_code_max);
  const double scaled =
      cal.code_max * (d - cal.lens_at_code_min) / (cal.lens_at_code_max - cal.lens_at_code_min);
  // Half-up rounding with a small tolerance so exact ties survive the
  // floating-point subtraction above; codes are non-negative, so half-up
  // equals half-away-from-zero.
  const int code = std::min(cal.code_max, static_cast<int>(std::floor(scaled + 0.5 + 1e-9)));
  return CodeResult{code, clamped};
}

Millimeters from_code(int code, const ActuatorCalibration& cal) {
  cal.validate();
  if (code < 0 || code > cal.code_max) {
    throw std::invalid_argument("code out of range");
  }
  const double t = static_cast<double>(code) / cal.code_max;
  return cal.lens_at_code_min + t * (cal.lens_at_code_max - cal.lens_at_code_min);
}

QuantizationReport quantization_report(const FocusPlan& plan, const ActuatorCalibration& cal) {
  cal.validate();
  QuantizationReport report;
  const LensSpec& spec = plan.spec;
  // Slice boundaries sit exactly at blur == coc, so quantization always pushes
  // one side slightly over. Half a code step shifts the image plane by at most
  // step/2, adding at most aperture_diameter * (step/2) / d_i of blur; only an
  // excess beyond that unavoidable increment is flagged.
  const Millimeters quant_slack = (spec.focal_length / spec.f_number) * (0.5 * cal.code_step()) /
                                  cal.lens_at_code_min;
  const Millimeters blur_allowance = spec.coc + quant_slack * (1.0 + 1e-9);
  int prev_code = -1;
  for (const FocusSlice& s : plan.slices) {
    QuantizationEntry entry{};
    entry.step = s.step;
    const CodeResult cr = to_code(s.lens_distance, cal);
    entry.code = cr.code;
    entry.clamped = cr.clamped;
    entry.lens_quantized = from_code(cr.code, cal);
    if (entry.lens_quantized > spec.focal_length) {
      entry.object_quantized = image_to_object(entry.lens_quantized, spec.focal_length);
      entry.blur_at_focus = blur_diameter(s.focus_distance, entry.object_quantized, spec);
      const Millimeters far = std::isinf(s.far) ? kFarProbe : s.far;
      entry.boundary_blur_ok =
          blur_diameter(s.near, entry.object_quantized, spec) <= blur_allowance &&
          blur_diameter(far, entry.object_quantized, spec) <= blur_allowance;
    } else {
      // Quantized position at or beyond the infinity stop; no real focus.
      entry.object_quantized = kInfinity;
      entry.blur_at_focus = kInfinity;
      entry.boundary_blur_ok = false;
    }
    entry.collides_with_prev = !report.entries.empty() && entry.code == prev_code;
    if (entry.collides_with_prev) {
      ++report.collisions;
    }
    if (!entry.boundary_blur_ok) {
      ++report.blur_violations;
    }
    prev_code = entry.code;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace focusplan
