#include "focusplan/io.hpp"

#include <cmath>
#include <cstdio>

namespace focusplan {

namespace {

using nlohmann::json;

json mm_to_json(Millimeters value) {
  if (std::isinf(value)) {
    return "inf";
  }
  return value;
}

Millimeters mm_from_json(const json& j, const char* field) {
  const json& v = j.at(field);
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") {
      return kInfinity;
    }
    throw std::invalid_argument(std::string(field) + ": expected a number or \"inf\"");
  }
  return v.get<double>();
}

}  // namespace

std::string format_mm(Millimeters value) {
  if (std::isinf(value)) {
    return "inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

std::string plan_to_csv(const FocusPlan& plan) {
  std::string out = "step,focus_distance_mm,near_limit_mm,far_limit_mm,lens_distance_mm\n";
  for (const FocusSlice& s : plan.slices) {
    out += std::to_string(s.step);
    out += ',';
    out += format_mm(s.focus_distance);
    out += ',';
    out += format_mm(s.near);
    out += ',';
    out += format_mm(s.far);
    out += ',';
    out += format_mm(s.lens_distance);
    out += '\n';
  }
  return out;
}

nlohmann::json plan_to_json(const FocusPlan& plan) {
  json slices = json::array();
  for (const FocusSlice& s : plan.slices) {
    slices.push_back({{"step", s.step},
                      {"focus_distance_mm", mm_to_json(s.focus_distance)},
                      {"near_limit_mm", mm_to_json(s.near)},
                      {"far_limit_mm", mm_to_json(s.far)},
                      {"lens_distance_mm", mm_to_json(s.lens_distance)}});
  }
  return json{
      {"spec",
       {{"focal_length", plan.spec.focal_length},
        {"f_number", plan.spec.f_number},
        {"coc", plan.spec.coc},
        {"near_focus_limit", plan.spec.near_focus_limit},
        {"far_target", mm_to_json(plan.spec.far_target)}}},
      {"derived",
       {{"hyperfocal", plan.derived.hyperfocal},
        {"lens_at_near", plan.derived.lens_at_near},
        {"lens_at_hyperfocal", plan.derived.lens_at_hyperfocal}}},
      {"direction", plan.direction == Direction::kNearToFar ? "forward" : "backward"},
      {"slices", slices}};
}

FocusPlan plan_from_json(const nlohmann::json& j) {
  FocusPlan plan;
  const json& spec = j.at("spec");
  plan.spec.focal_length = spec.at("focal_length").get<double>();
  plan.spec.f_number = spec.at("f_number").get<double>();
  plan.spec.coc = spec.at("coc").get<double>();
  plan.spec.near_focus_limit = spec.at("near_focus_limit").get<double>();
  plan.spec.far_target = mm_from_json(spec, "far_target");
  const json& derived = j.at("derived");
  plan.derived.hyperfocal = derived.at("hyperfocal").get<double>();
  plan.derived.lens_at_near = derived.at("lens_at_near").get<double>();
  plan.derived.lens_at_hyperfocal = derived.at("lens_at_hyperfocal").get<double>();
  plan.direction = j.at("direction").get<std::string>() == "backward" ? Direction::kFarToNear
                                                                      : Direction::kNearToFar;
  for (const json& s : j.at("slices")) {
    plan.slices.push_back(FocusSlice{s.at("step").get<int>(),
                                     mm_from_json(s, "focus_distance_mm"),
                                     mm_from_json(s, "near_limit_mm"),
                                     mm_from_json(s, "far_limit_mm"),
                                     mm_from_json(s, "lens_distance_mm")});
  }
  return plan;
}

nlohmann::json trace_to_json(const SearchTrace& trace) {
  json evals = json::array();
  for (const auto& [code, score] : trace.evaluations) {
    evals.push_back({code, score});
  }
  return json{{"evaluations", evals},
              {"coarse_winner", trace.coarse_winner},
              {"fine_result_mm", trace.fine_result},
              {"final_blur_mm", trace.final_blur}};
}

nlohmann::json calibration_to_json(const ActuatorCalibration& cal) {
  return json{{"lens_at_code_max", cal.lens_at_code_max},
              {"lens_at_code_min", cal.lens_at_code_min},
              {"code_max", cal.code_max}};
}

ActuatorCalibration calibration_from_json(const nlohmann::json& j) {
  ActuatorCalibration cal{j.at("lens_at_code_max").get<double>(),
                          j.at("lens_at_code_min").get<double>(), j.at("code_max").get<int>()};
  cal.validate();
  return cal;
}

}  // namespace focusplan
