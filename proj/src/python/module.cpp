#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "focusplan/af.hpp"
#include "focusplan/io.hpp"

namespace py = pybind11;
using namespace focusplan;

PYBIND11_MODULE(_focusplan, m) {
  m.doc() = "Focus-plan toolkit: DoF slicing, blur verification, AF simulation";
  m.attr("INFINITY_MM") = kInfinity;

  py::class_<LensSpec>(m, "LensSpec")
      .def(py::init([](double focal_length, double f_number, double coc, double near_focus_limit,
                       double far_target) {
             LensSpec spec{focal_length, f_number, coc, near_focus_limit, far_target};
             spec.validate();
             return spec;
           }),
           py::arg("focal_length"), py::arg("f_number"), py::arg("coc"),
           py::arg("near_focus_limit"), py::arg("far_target") = kInfinity)
      .def_readonly("focal_length", &LensSpec::focal_length)
      .def_readonly("f_number", &LensSpec::f_number)
      .def_readonly("coc", &LensSpec::coc)
      .def_readonly("near_focus_limit", &LensSpec::near_focus_limit)
      .def_readonly("far_target", &LensSpec::far_target);

  py::class_<DerivedOptics>(m, "DerivedOptics")
      .def_readonly("hyperfocal", &DerivedOptics::hyperfocal)
      .def_readonly("lens_at_near", &DerivedOptics::lens_at_near)
      .def_readonly("lens_at_hyperfocal", &DerivedOptics::lens_at_hyperfocal);

  py::class_<FocusSlice>(m, "FocusSlice")
      .def_readonly("step", &FocusSlice::step)
      .def_readonly("focus_distance", &FocusSlice::focus_distance)
      .def_readonly("near", &FocusSlice::near)
      .def_readonly("far", &FocusSlice::far)
      .def_readonly("lens_distance", &FocusSlice::lens_distance);

  py::enum_<Direction>(m, "Direction")
      .value("NEAR_TO_FAR", Direction::kNearToFar)
      .value("FAR_TO_NEAR", Direction::kFarToNear);

  py::class_<FocusPlan>(m, "FocusPlan")
      .def_readonly("spec", &FocusPlan::spec)
      .def_readonly("derived", &FocusPlan::derived)
      .def_readonly("direction", &FocusPlan::direction)
      .def_readonly("slices", &FocusPlan::slices)
      .def("iterated_count", &FocusPlan::iterated_count)
      .def("to_csv", &plan_to_csv)
      .def("to_json", [](const FocusPlan& p) { return plan_to_json(p).dump(2); });

  py::class_<CoverageReport>(m, "CoverageReport")
      .def_readonly("pass_", &CoverageReport::pass)
      .def_readonly("max_blur", &CoverageReport::max_blur)
      .def_readonly("worst_distance", &CoverageReport::worst_distance)
      .def_readonly("samples", &CoverageReport::samples)
      .def_readonly("violations", &CoverageReport::violations);

  py::class_<ActuatorCalibration>(m, "ActuatorCalibration")
      .def(py::init([](double lens_at_code_max, double lens_at_code_min, int code_max) {
             ActuatorCalibration cal{lens_at_code_max, lens_at_code_min, code_max};
             cal.validate();
             return cal;
           }),
           py::arg("lens_at_code_max"), py::arg("lens_at_code_min"), py::arg("code_max"))
      .def_readonly("lens_at_code_max", &ActuatorCalibration::lens_at_code_max)
      .def_readonly("lens_at_code_min", &ActuatorCalibration::lens_at_code_min)
      .def_readonly("code_max", &ActuatorCalibration::code_max)
      .def("code_step", &ActuatorCalibration::code_step);

  py::class_<CodeResult>(m, "CodeResult")
      .def_readonly("code", &CodeResult::code)
      .def_readonly("clamped", &CodeResult::clamped);

  py::class_<QuantizationEntry>(m, "QuantizationEntry")
      .def_readonly("step", &QuantizationEntry::step)
      .def_readonly("code", &QuantizationEntry::code)
      .def_readonly("clamped", &QuantizationEntry::clamped)
      .def_readonly("lens_quantized", &QuantizationEntry::lens_quantized)
      .def_readonly("object_quantized", &QuantizationEntry::object_quantized)
      .def_readonly("blur_at_focus", &QuantizationEntry::blur_at_focus)
      .def_readonly("boundary_blur_ok", &QuantizationEntry::boundary_blur_ok)
      .def_readonly("collides_with_prev", &QuantizationEntry::collides_with_prev);

  py::class_<QuantizationReport>(m, "QuantizationReport")
      .def_readonly("entries", &QuantizationReport::entries)
      .def_readonly("collisions", &QuantizationReport::collisions)
      .def_readonly("blur_violations", &QuantizationReport::blur_violations)
      .def("ok", &QuantizationReport::ok);

  py::class_<SimulatedScene>(m, "SimulatedScene")
      .def(py::init([](double true_distance, double noise_sigma, std::uint64_t seed) {
             return SimulatedScene{true_distance, noise_sigma, seed};
           }),
           py::arg("true_distance"), py::arg("noise_sigma") = 0.0, py::arg("seed") = 0)
      .def_readonly("true_distance", &SimulatedScene::true_distance)
      .def_readonly("noise_sigma", &SimulatedScene::noise_sigma)
      .def_readonly("seed", &SimulatedScene::seed);

  py::class_<SearchTrace>(m, "SearchTrace")
      .def_readonly("evaluations", &SearchTrace::evaluations)
      .def_readonly("coarse_winner", &SearchTrace::coarse_winner)
      .def_readonly("fine_result", &SearchTrace::fine_result)
      .def_readonly("final_blur", &SearchTrace::final_blur)
      .def("to_json", [](const SearchTrace& t) { return trace_to_json(t).dump(2); });

  m.def("hyperfocal", &hyperfocal, py::arg("spec"));
  m.def("derive", &derive, py::arg("spec"));
  m.def("coc_from_sensor", &coc_from_sensor, py::arg("sensor_diagonal"), py::arg("k"));
  m.def("near_limit", &near_limit, py::arg("d_o"), py::arg("spec"));
  m.def("far_limit", &far_limit, py::arg("d_o"), py::arg("spec"));
  m.def("depth_of_field", &depth_of_field, py::arg("d_o"), py::arg("spec"));
  m.def("object_from_near_limit", &object_from_near_limit, py::arg("near"), py::arg("spec"));
  m.def("object_from_far_limit", &object_from_far_limit, py::arg("far"), py::arg("spec"));
  m.def("object_to_image", &object_to_image, py::arg("d_o"), py::arg("focal_length"));
  m.def("image_to_object", &image_to_object, py::arg("d_i"), py::arg("focal_length"));
  m.def("blur_diameter", &blur_diameter, py::arg("d"), py::arg("d_o"), py::arg("spec"));
  m.def("slice_forward", &slice_forward, py::arg("spec"));
  m.def("slice_backward", &slice_backward, py::arg("spec"));
  m.def("verify_coverage", &verify_coverage, py::arg("plan"), py::arg("samples_per_slice"));
  m.def("to_code", &to_code, py::arg("d_i"), py::arg("cal"));
  m.def("from_code", &from_code, py::arg("code"), py::arg("cal"));
  m.def("quantization_report", &quantization_report, py::arg("plan"), py::arg("cal"));
  m.def("coarse_search", &coarse_search, py::arg("plan"), py::arg("scene"), py::arg("cal"));
  m.def("fine_search", &fine_search, py::arg("plan"), py::arg("winner"), py::arg("scene"),
        py::arg("cal"), py::arg("max_evals"));
  m.def(
      "run_autofocus",
      [](const FocusPlan& plan, const SimulatedScene& scene, const ActuatorCalibration& cal,
         int max_evals) { return AfSimulator(plan, scene, cal).run(max_evals); },
      py::arg("plan"), py::arg("scene"), py::arg("cal"), py::arg("max_evals") = 30);
}
