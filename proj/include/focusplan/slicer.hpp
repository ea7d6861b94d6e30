#ifndef FOCUSPLAN_SLICER_HPP
#define FOCUSPLAN_SLICER_HPP

#include <string>
#include <vector>

#include "focusplan/optics.hpp"

namespace focusplan {

/// One depth-of-field slice of a focus plan.
///
/// step is the table step number; -1 marks the seed entry at the practical
/// nearest focus distance, iterated entries count from 0.
struct FocusSlice {
  int step;
  Millimeters focus_distance;
  Millimeters near;
  Millimeters far;  // kInfinity for the hyperfocal slice
  Millimeters lens_distance;
};

enum class Direction { kNearToFar, kFarToNear };

/// Ordered, gap-free sequence of slices covering the focusable range.
/// Slices are in increasing focus-distance order; each slice's far limit is
/// the next slice's near limit by construction, except at the clamped end
/// where the leftover overlap lands.
struct FocusPlan {
  LensSpec spec;
  DerivedOptics derived;
  Direction direction = Direction::kNearToFar;
  std::vector<FocusSlice> slices;

  /// Number of iterated (step >= 0) slices, i.e. the table rows.
  int iterated_count() const;
};

/// Slices from the near focus limit toward far_target (default infinity).
/// The seed position itself is emitted as a step -1 entry; the iteration then
/// alternates far_limit and object_from_near_limit, reusing each far limit as
/// the next near limit. When the next focus distance would overshoot the end
/// of the range, the final slice is clamped to the hyperfocal distance (or to
/// the nearest focus distance whose far limit reaches a finite far_target),
/// so the coverage overlap lands at the far end.
FocusPlan slice_forward(const LensSpec& spec);

/// Slices from far_target toward the near end; the overlap lands at the near
/// end. The result is re-sorted into increasing focus-distance order so both
/// directions share one FocusPlan contract.
FocusPlan slice_backward(const LensSpec& spec);

struct CoverageReport {
  bool pass = false;
  Millimeters max_blur = 0.0;       // max over samples of min-over-slices blur
  Millimeters worst_distance = 0.0;
  int samples = 0;
  std::vector<std::string> violations;  // structural problems, empty if well formed
};

/// Sweeps log-spaced object distances across every slice span (plus the
/// boundary points) and checks that some slice keeps the blur within coc.
CoverageReport verify_coverage(const FocusPlan& plan, int samples_per_slice);

/// Structural invariant check; returns human-readable violations.
std::vector<std::string> validate_plan(const FocusPlan& plan);

}  // namespace focusplan

#endif
