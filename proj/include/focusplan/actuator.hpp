#ifndef FOCUSPLAN_ACTUATOR_HPP
#define FOCUSPLAN_ACTUATOR_HPP

#include <vector>

#include "focusplan/slicer.hpp"

namespace focusplan {

/// Two-point linear calibration between image-plane distance and integer
/// actuator codes. Code 0 sits at the infinity end, code_max at the macro end.
struct ActuatorCalibration {
  Millimeters lens_at_code_max;  // image-plane distance at code_max
  Millimeters lens_at_code_min;  // image-plane distance at code 0
  int code_max;                  // e.g. 1023 for a 10-bit driver

  void validate() const;
  Millimeters code_step() const { return (lens_at_code_max - lens_at_code_min) / code_max; }
};

struct CodeResult {
  int code;
  bool clamped;  // input was outside the calibrated span
};

/// Nearest code for an image-plane distance; ties round away from zero.
/// Out-of-range distances clamp to the nearest endpoint and set `clamped`.
CodeResult to_code(Millimeters d_i, const ActuatorCalibration& cal);

/// Image-plane distance commanded by a code in [0, code_max].
Millimeters from_code(int code, const ActuatorCalibration& cal);

struct QuantizationEntry {
  int step;
  int code;
  bool clamped;
  Millimeters lens_quantized;    // from_code(to_code(slice lens distance))
  Millimeters object_quantized;  // object distance actually in focus at that code
  Millimeters blur_at_focus;     // blur of the slice's intended focus distance
  bool boundary_blur_ok;         // quantized lens still keeps both slice limits within coc
  bool collides_with_prev;       // same code as the previous slice
};

struct QuantizationReport {
  std::vector<QuantizationEntry> entries;
  int collisions = 0;
  int blur_violations = 0;
  bool ok() const { return collisions == 0 && blur_violations == 0; }
};

/// Evaluates how actuator quantization affects each slice of a plan.
QuantizationReport quantization_report(const FocusPlan& plan, const ActuatorCalibration& cal);

}  // namespace focusplan

#endif
