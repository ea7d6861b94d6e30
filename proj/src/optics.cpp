#include "focusplan/optics.hpp"

#include <cmath>

namespace focusplan {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || std::isinf(value)) {
    throw std::invalid_argument(std::string(field) + " must be finite and positive");
  }
}

}  // namespace

void LensSpec::validate() const {
  require_positive(focal_length, "focal_length");
  require_positive(f_number, "f_number");
  require_positive(coc, "coc");
  if (!(near_focus_limit > focal_length) || std::isinf(near_focus_limit)) {
    throw std::invalid_argument("near_focus_limit must be finite and exceed the focal length");
  }
  if (!(far_target > near_focus_limit)) {
    throw std::invalid_argument("far_target must exceed near_focus_limit");
  }
}

Millimeters hyperfocal(const LensSpec& spec) {
  spec.validate();
  const double f = spec.focal_length;
  return f * f / (spec.f_number * spec.coc) + f;
}

DerivedOptics derive(const LensSpec& spec) {
  const Millimeters h = hyperfocal(spec);
  return DerivedOptics{
      h,
      object_to_image(spec.near_focus_limit, spec.focal_length),
      object_to_image(h, spec.focal_length),
  };
}

Millimeters coc_from_sensor(Millimeters sensor_diagonal, double k) {
  require_positive(sensor_diagonal, "sensor_diagonal");
  require_positive(k, "k");
  return sensor_diagonal / k;
}

Millimeters near_limit(Millimeters d_o, const LensSpec& spec) {
  const double f = spec.focal_length;
  if (!(d_o > f)) {
    throw std::domain_error("focus distance must exceed the focal length");
  }
  if (std::isinf(d_o)) {
    throw std::domain_error("focus distance must be finite");
  }
  const Millimeters h = hyperfocal(spec);
  return d_o * (h - f) / (h + d_o - 2.0 * f);
}

Millimeters far_limit(Millimeters d_o, const LensSpec& spec) {
  const double f = spec.focal_length;
  if (!(d_o > f)) {
    throw std::domain_error("focus distance must exceed the focal length");
  }
  if (std::isinf(d_o)) {
    throw std::domain_error("focus distance must be finite");
  }
  const Millimeters h = hyperfocal(spec);
  if (d_o >= h) {
    return kInfinity;
  }
  return d_o * (h - f) / (h - d_o);
}

Millimeters depth_of_field(Millimeters d_o, const LensSpec& spec) {
  return far_limit(d_o, spec) - near_limit(d_o, spec);
}

Millimeters object_from_near_limit(Millimeters near, const LensSpec& spec) {
  const double f = spec.focal_length;
  const Millimeters h = hyperfocal(spec);
  if (!(near > 0.0)) {
    throw std::invalid_argument("near limit must be positive");
  }
  if (!(near < h - f)) {
    throw std::domain_error(
        "near limit is only reachable in the limit of infinite focus distance");
  }
  return near * (h - 2.0 * f) / (h - f - near);
}

Millimeters object_from_far_limit(Millimeters far, const LensSpec& spec) {
  const double f = spec.focal_length;
  const Millimeters h = hyperfocal(spec);
  if (!(far > 0.0)) {
    throw std::invalid_argument("far limit must be positive");
  }
  if (std::isinf(far)) {
    return h;
  }
  return far * h / (h - f + far);
}

Millimeters object_to_image(Millimeters d_o, Millimeters focal_length) {
  if (std::isinf(d_o)) {
    return focal_length;
  }
  if (!(d_o > focal_length)) {
    throw std::domain_error("object distance must exceed the focal length");
  }
  return d_o * focal_length / (d_o - focal_length);
}

Millimeters image_to_object(Millimeters d_i, Millimeters focal_length) {
  if (!(d_i > focal_length) || std::isinf(d_i)) {
    throw std::domain_error("image distance must be finite and exceed the focal length");
  }
  return d_i * focal_length / (d_i - focal_length);
}

Millimeters blur_diameter(Millimeters d, Millimeters d_o, const LensSpec& spec) {
  const double f = spec.focal_length;
  if (!(d > 0.0) || std::isinf(d)) {
    throw std::domain_error("object distance must be finite and positive");
  }
  if (!(d_o > f) || std::isinf(d_o)) {
    throw std::domain_error("focus distance must be finite and exceed the focal length");
  }
  return f * f * std::abs(d - d_o) / (spec.f_number * d * (d_o - f));
}

}  // namespace focusplan
