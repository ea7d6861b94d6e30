#ifndef FOCUSPLAN_AF_HPP
#define FOCUSPLAN_AF_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "focusplan/actuator.hpp"

namespace focusplan {

/// Synthetic scene for the autofocus simulator: a single subject at a known
/// distance plus optional measurement noise on the sharpness score.
struct SimulatedScene {
  Millimeters true_distance;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

struct SearchTrace {
  std::vector<std::pair<int, double>> evaluations;  // (actuator code, sharpness)
  int coarse_winner = -1;                           // index into plan.slices
  Millimeters fine_result = 0.0;                    // final image-plane distance
  Millimeters final_blur = 0.0;                     // blur of the true subject
};

/// Deterministic sharpness stand-in: S = 1/(1 + (b/c)^2) with b the blur of
/// the subject at the commanded lens position, plus seeded Gaussian noise
/// truncated to keep the score in (0, 1]. Unimodal in the lens position with
/// its maximum where the subject is exactly in focus.
double sharpness(const SimulatedScene& scene, Millimeters d_i, const LensSpec& spec,
                 std::mt19937_64& rng);

/// Simulates a coarse-plus-fine contrast search over a focus plan. One
/// instance owns the noise stream, so a fixed scene seed reproduces the
/// whole trace.
class AfSimulator {
 public:
  AfSimulator(const FocusPlan& plan, const SimulatedScene& scene, const ActuatorCalibration& cal);

  /// Evaluates sharpness at every plan position (quantized through the
  /// calibration) and returns the argmax slice index; ties go to the nearer
  /// focus.
  int coarse(std::vector<std::pair<int, double>>* evaluations = nullptr);

  /// Golden-section refinement over the winning slice's lens-distance span,
  /// quantized to actuator codes; stops when the bracket shrinks below one
  /// code step or max_evals sharpness evaluations are spent.
  SearchTrace fine(int winner, int max_evals);

  /// Coarse then fine with a shared noise stream; the trace contains both
  /// stages' evaluations.
  SearchTrace run(int max_evals);

 private:
  double evaluate(Millimeters d_i, std::vector<std::pair<int, double>>& evals,
                  Millimeters* quantized = nullptr);

  const FocusPlan& plan_;
  SimulatedScene scene_;
  ActuatorCalibration cal_;
  std::mt19937_64 rng_;
};

int coarse_search(const FocusPlan& plan, const SimulatedScene& scene,
                  const ActuatorCalibration& cal);

SearchTrace fine_search(const FocusPlan& plan, int winner, const SimulatedScene& scene,
                        const ActuatorCalibration& cal, int max_evals);

}  // namespace focusplan

#endif
