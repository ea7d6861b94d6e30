#ifndef FOCUSPLAN_OPTICS_HPP
#define FOCUSPLAN_OPTICS_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace focusplan {

/// All lengths are millimeters, double precision. Infinity is represented by
/// IEEE +inf and is a first-class value for object distances and far limits.
using Millimeters = double;

inline constexpr Millimeters kInfinity = std::numeric_limits<double>::infinity();

/// Physical parameters of one camera module.
///
/// The hyperfocal convention used throughout is H = f^2/(N*c) + f. With the
/// +f term the near/far limit formulas put the blur-circle diameter exactly
/// at `coc` on every depth-of-field boundary, and the derived quantities
/// match published two-decimal values for typical module parameters.
struct LensSpec {
  Millimeters focal_length;      // f
  double f_number;               // N
  Millimeters coc;               // acceptable blur-circle diameter c
  Millimeters near_focus_limit;  // nearest practically focusable distance
  Millimeters far_target = kInfinity;  // coverage not required beyond this

  void validate() const;
};

/// Snapshot of the quantities derived from a LensSpec.
struct DerivedOptics {
  Millimeters hyperfocal;
  Millimeters lens_at_near;        // image-plane distance at near_focus_limit
  Millimeters lens_at_hyperfocal;  // image-plane distance at hyperfocal
};

Millimeters hyperfocal(const LensSpec& spec);
DerivedOptics derive(const LensSpec& spec);

/// Blur-circle diameter divided by the viewing constant k (industry default 1730).
Millimeters coc_from_sensor(Millimeters sensor_diagonal, double k);

/// Near limit of acceptable sharpness when focused at d_o. Always finite.
Millimeters near_limit(Millimeters d_o, const LensSpec& spec);

/// Far limit of acceptable sharpness when focused at d_o; infinity once
/// d_o reaches the hyperfocal distance.
Millimeters far_limit(Millimeters d_o, const LensSpec& spec);

/// far_limit - near_limit; infinity at or beyond hyperfocal.
Millimeters depth_of_field(Millimeters d_o, const LensSpec& spec);

/// Focus distance whose near limit equals the given value. Inverse of
/// near_limit; requires D_n < H - f.
Millimeters object_from_near_limit(Millimeters near, const LensSpec& spec);

/// Focus distance whose far limit equals the given value. Inverse of
/// far_limit on (f, H); maps infinity to the hyperfocal distance.
Millimeters object_from_far_limit(Millimeters far, const LensSpec& spec);

/// Thin-lens conversion, object side to image side. Infinity maps to f.
Millimeters object_to_image(Millimeters d_o, Millimeters focal_length);

/// Thin-lens conversion, image side to object side.
Millimeters image_to_object(Millimeters d_i, Millimeters focal_length);

/// Diameter of the defocus blur disc on the image plane for an object at d
/// when the lens is focused at d_o:  b = f^2 |d - d_o| / (N d (d_o - f)).
///
/// This is the independent oracle for every limit in this module: b equals
/// `coc` exactly at d = near_limit(d_o) and d = far_limit(d_o).
Millimeters blur_diameter(Millimeters d, Millimeters d_o, const LensSpec& spec);

}  // namespace focusplan

#endif
