#include "focusplan/af.hpp"

#include <algorithm>
#include <cmath>

namespace focusplan {

double sharpness(const SimulatedScene& scene, Millimeters d_i, const LensSpec& spec,
                 std::mt19937_64& rng) {
  if (!(scene.true_distance > spec.focal_length)) {
    throw std::invalid_argument("scene distance must exceed the focal length");
  }
  if (scene.noise_sigma < 0.0) {
    throw std::invalid_argument("noise_sigma must be non-negative");
  }
  const Millimeters focused_at = image_to_object(d_i, spec.focal_length);
  const Millimeters b = blur_diameter(scene.true_distance, focused_at, spec);
  const double rel = b / spec.coc;
  double score = 1.0 / (1.0 + rel * rel);
  if (scene.noise_sigma > 0.0) {
    score += std::normal_distribution<double>(0.0, scene.noise_sigma)(rng);
  }
  return std::clamp(score, 1e-12, 1.0);
}

AfSimulator::AfSimulator(const FocusPlan& plan, const SimulatedScene& scene,
                         const ActuatorCalibration& cal)
    : plan_(plan), scene_(scene), cal_(cal), rng_(scene.seed) {
  cal_.validate();
  if (plan_.slices.empty()) {
    throw std::invalid_argument("plan has no slices");
  }
}

double AfSimulator::evaluate(Millimeters d_i, std::vector<std::pair<int, double>>& evals,
                             Millimeters* quantized) {
  const CodeResult cr = to_code(d_i, cal_);
  const Millimeters dq = from_code(cr.code, cal_);
  const double score = sharpness(scene_, dq, plan_.spec, rng_);
  evals.emplace_back(cr.code, score);
  if (quantized != nullptr) {
    *quantized = dq;
  }
  return score;
}

int AfSimulator::coarse(std::vector<std::pair<int, double>>* evaluations) {
  std::vector<std::pair<int, double>> local;
  auto& evals = evaluations != nullptr ? *evaluations : local;
  int winner = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < plan_.slices.size(); ++i) {
    const double score = evaluate(plan_.slices[i].lens_distance, evals);
    if (score > best) {  // strict: ties keep the nearer focus
      best = score;
      winner = static_cast<int>(i);
    }
  }
  return winner;
}

SearchTrace AfSimulator::fine(int winner, int max_evals) {
  if (winner < 0 || winner >= static_cast<int>(plan_.slices.size())) {
    throw std::invalid_argument("winner index out of range");
  }
  if (max_evals < 3) {
    throw std::invalid_argument("max_evals must be at least 3");
  }
  const FocusSlice& slice = plan_.slices[static_cast<std::size_t>(winner)];
  const Millimeters f = plan_.spec.focal_length;

  SearchTrace trace;
  trace.coarse_winner = winner;

  // Nearer objects focus at larger image-plane distances, so the far limit
  // maps to the low end of the bracket.
  double a = object_to_image(slice.far, f);
  double b = object_to_image(slice.near, f);
  const double tol = cal_.code_step();
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

  Millimeters best_lens = 0.0;
  double best_score = -1.0;
  auto probe = [&](double x) {
    Millimeters dq = 0.0;
    const double s = this->evaluate(x, trace.evaluations, &dq);
    if (s > best_score) {
      best_score = s;
      best_lens = dq;
    }
    return s;
  };

  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = probe(c);
  double fd = probe(d);
  int evals = 2;
  while (b - a > tol && evals < max_evals) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = probe(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = probe(d);
    }
    ++evals;
  }

  trace.fine_result = best_lens;
  trace.final_blur =
      best_lens > f
          ? blur_diameter(scene_.true_distance, image_to_object(best_lens, f), plan_.spec)
          : kInfinity;
  return trace;
}

SearchTrace AfSimulator::run(int max_evals) {
  std::vector<std::pair<int, double>> coarse_evals;
  const int winner = coarse(&coarse_evals);
  SearchTrace trace = fine(winner, max_evals);
  trace.evaluations.insert(trace.evaluations.begin(), coarse_evals.begin(), coarse_evals.end());
  return trace;
}

int coarse_search(const FocusPlan& plan, const SimulatedScene& scene,
                  const ActuatorCalibration& cal) {
  return AfSimulator(plan, scene, cal).coarse();
}

SearchTrace fine_search(const FocusPlan& plan, int winner, const SimulatedScene& scene,
                        const ActuatorCalibration& cal, int max_evals) {
  return AfSimulator(plan, scene, cal).fine(winner, max_evals);
}

}  // namespace focusplan
