#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "focusplan/io.hpp"

namespace {

using focusplan::kInfinity;
using focusplan::Millimeters;
using nlohmann::json;

// Argument-shape problems (conflicts, missing inputs, unreadable files) exit
// with 2; optical-domain validation failures exit with 1.
struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecArgs {
  std::optional<double> focal, aperture, coc, sensor_diagonal, k, near, far;
  std::string config_path;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--focal-mm", focal, "Focal length in mm");
    cmd->add_option("--aperture", aperture, "f-number");
    cmd->add_option("--coc-mm", coc, "Acceptable circle of confusion in mm");
    cmd->add_option("--sensor-diagonal-mm", sensor_diagonal,
                    "Sensor diagonal in mm (used with --k instead of --coc-mm)");
    cmd->add_option("--k", k, "Viewing-condition divisor for the CoC (industry default 1730)");
    cmd->add_option("--near-mm", near, "Practical nearest focus distance in mm");
    cmd->add_option("--far-mm", far, "Far end of the range to cover in mm (default: infinity)");
    cmd->add_option("--config", config_path, "JSON config file; explicit flags win");
  }

  focusplan::LensSpec build() const {
    std::optional<double> cfg_focal, cfg_aperture, cfg_coc, cfg_diag, cfg_k, cfg_near, cfg_far;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        throw ArgError("cannot read config file: " + config_path);
      }
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw ArgError("bad config file: " + std::string(e.what()));
      }
      auto get = [&j](const char* key) -> std::optional<double> {
        if (!j.contains(key)) return std::nullopt;
        return j.at(key).get<double>();
      };
      cfg_focal = get("focal_length");
      cfg_aperture = get("f_number");
      cfg_coc = get("coc");
      cfg_diag = get("sensor_diagonal");
      cfg_k = get("k");
      cfg_near = get("near_focus_limit");
      cfg_far = get("far_target");
    }
    auto pick = [](const std::optional<double>& flag, const std::optional<double>& cfg,
                   const char* name) {
      if (flag) return *flag;
      if (cfg) return *cfg;
      throw ArgError(std::string("missing required parameter: ") + name);
    };

    focusplan::LensSpec spec{};
    spec.focal_length = pick(focal, cfg_focal, "--focal-mm");
    spec.f_number = pick(aperture, cfg_aperture, "--aperture");
    spec.near_focus_limit = pick(near, cfg_near, "--near-mm");
    spec.far_target = far ? *far : cfg_far.value_or(kInfinity);

    const bool have_coc = coc || cfg_coc;
    const bool have_sensor = sensor_diagonal || k || cfg_diag || cfg_k;
    if (have_coc && (coc ? (sensor_diagonal || k) : have_sensor)) {
      throw ArgError("give either --coc-mm or --sensor-diagonal-mm with --k, not both");
    }
    if (coc) {
      spec.coc = *coc;
    } else if (sensor_diagonal || k) {
      if (!(sensor_diagonal && (k || cfg_k))) {
        throw ArgError("--sensor-diagonal-mm and --k must be given together");
      }
      spec.coc = focusplan::coc_from_sensor(*sensor_diagonal, k ? *k : *cfg_k);
    } else if (cfg_coc) {
      spec.coc = *cfg_coc;
    } else if (cfg_diag && cfg_k) {
      spec.coc = focusplan::coc_from_sensor(*cfg_diag, *cfg_k);
    } else {
      throw ArgError("missing CoC: give --coc-mm or --sensor-diagonal-mm with --k");
    }
    spec.validate();
    return spec;
  }
};

focusplan::FocusPlan make_plan(const focusplan::LensSpec& spec, const std::string& direction) {
  return direction == "backward" ? focusplan::slice_backward(spec)
                                 : focusplan::slice_forward(spec);
}

void emit_plan(const focusplan::FocusPlan& plan, const std::string& format) {
  if (format == "json") {
    std::cout << focusplan::plan_to_json(plan).dump(2) << "\n";
  } else {
    std::cout << focusplan::plan_to_csv(plan);
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ArgError("cannot read file: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ArgError("bad JSON in " + path + ": " + e.what());
  }
}

focusplan::ActuatorCalibration default_calibration(const focusplan::FocusPlan& plan) {
  // 10-bit driver spanning exactly the plan's lens travel.
  return focusplan::ActuatorCalibration{plan.derived.lens_at_near, plan.derived.lens_at_hyperfocal,
                                        1023};
}

int run_verify(const std::string& plan_path, int samples_per_slice) {
  const focusplan::FocusPlan plan = focusplan::plan_from_json(load_json_file(plan_path));
  const focusplan::CoverageReport report = focusplan::verify_coverage(plan, samples_per_slice);
  for (const std::string& v : report.violations) {
    std::cerr << "violation: " << v << "\n";
  }
  std::cout << "coverage: " << (report.pass ? "pass" : "FAIL") << "\n"
            << "samples: " << report.samples << "\n"
            << "max_blur_mm: " << focusplan::format_mm(report.max_blur) << "\n"
            << "worst_distance_mm: " << focusplan::format_mm(report.worst_distance) << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Focus-plan toolkit: DoF slicing, coverage verification, AF simulation"};
  app.require_subcommand(1);

  SpecArgs plan_args, bracket_args, sim_args, plot_args;
  std::string direction = "forward", format = "csv";
  std::string bracket_format = "csv";
  std::string verify_path, calibration_path;
  int samples_per_slice = 100, plot_samples = 100;
  double distance = 0.0, noise_sigma = 0.0;
  std::uint64_t seed = 0;
  int max_evals = 30;

  CLI::App* plan_cmd = app.add_subcommand("plan", "Compute a focus plan");
  plan_args.add_options(plan_cmd);
  plan_cmd->add_option("--direction", direction, "forward|backward")
      ->check(CLI::IsMember({"forward", "backward"}));
  plan_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* bracket_cmd =
      app.add_subcommand("bracket", "Focus-bracketing plan over a finite range");
  bracket_args.add_options(bracket_cmd);
  bracket_cmd->add_option("--format", bracket_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a plan file for gap-free coverage");
  verify_cmd->add_option("--plan", verify_path, "Plan JSON file")->required();
  verify_cmd->add_option("--samples-per-slice", samples_per_slice, "Samples per slice");

  CLI::App* sim_cmd = app.add_subcommand("simulate", "Run the coarse+fine AF simulator");
  sim_args.add_options(sim_cmd);
  sim_cmd->add_option("--distance-mm", distance, "True subject distance in mm")->required();
  sim_cmd->add_option("--noise-sigma", noise_sigma, "Sharpness noise std deviation");
  sim_cmd->add_option("--seed", seed, "Noise seed");
  sim_cmd->add_option("--calibration", calibration_path,
                      "Actuator calibration JSON (default: 10-bit over the plan's travel)");
  sim_cmd->add_option("--max-evals", max_evals, "Fine-search evaluation budget");

  CLI::App* plot_cmd = app.add_subcommand("plotdata", "Emit distance-vs-blur curves per slice");
  plot_args.add_options(plot_cmd);
  plot_cmd->add_option("--samples-per-slice", plot_samples, "Samples per slice");

  try {
    app.parse(argc, argv);

    if (plan_cmd->parsed()) {
      emit_plan(make_plan(plan_args.build(), direction), format);
    } else if (bracket_cmd->parsed()) {
      if (!bracket_args.far || std::isinf(*bracket_args.far)) {
        throw ArgError("bracket requires a finite --far-mm");
      }
      emit_plan(focusplan::slice_forward(bracket_args.build()), bracket_format);
    } else if (verify_cmd->parsed()) {
      return run_verify(verify_path, samples_per_slice);
    } else if (sim_cmd->parsed()) {
      const focusplan::FocusPlan plan = focusplan::slice_forward(sim_args.build());
      const focusplan::ActuatorCalibration cal =
          calibration_path.empty() ? default_calibration(plan)
                                   : focusplan::calibration_from_json(load_json_file(calibration_path));
      focusplan::AfSimulator sim(plan, {distance, noise_sigma, seed}, cal);
      std::cout << focusplan::trace_to_json(sim.run(max_evals)).dump(2) << "\n";
    } else if (plot_cmd->parsed()) {
      const focusplan::FocusPlan plan = focusplan::slice_forward(plot_args.build());
      std::cout << "distance_mm,slice_index,blur_mm\n";
      for (const focusplan::FocusSlice& s : plan.slices) {
        const double lo = std::log(s.near);
        const double hi = std::log(std::isinf(s.far) ? 1e12 : s.far);
        for (int i = 0; i <= plot_samples; ++i) {
          const double d = std::exp(lo + (hi - lo) * i / plot_samples);
          std::cout << focusplan::format_mm(d) << ',' << s.step << ','
                    << focusplan::format_mm(focusplan::blur_diameter(d, s.focus_distance, plan.spec))
                    << "\n";
        }
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the diagnostic; 0 for --help
    return code == 0 ? 0 : 2;
  } catch (const ArgError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
