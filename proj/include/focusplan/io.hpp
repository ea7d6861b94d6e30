#ifndef FOCUSPLAN_IO_HPP
#define FOCUSPLAN_IO_HPP

#include <string>

#include <json.hpp>

#include "focusplan/actuator.hpp"
#include "focusplan/af.hpp"
#include "focusplan/slicer.hpp"

namespace focusplan {

/// Formats a length with 10 significant digits; infinity becomes "inf".
std::string format_mm(Millimeters value);

/// CSV table: header `step,focus_distance_mm,near_limit_mm,far_limit_mm,lens_distance_mm`,
/// the seed entry at step -1, iterated entries from 0.
std::string plan_to_csv(const FocusPlan& plan);

nlohmann::json plan_to_json(const FocusPlan& plan);
FocusPlan plan_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const SearchTrace& trace);

nlohmann::json calibration_to_json(const ActuatorCalibration& cal);
ActuatorCalibration calibration_from_json(const nlohmann::json& j);

}  // namespace focusplan

#endif
