#include <doctest.h>

#include <array>

#include "focusplan/slicer.hpp"
#include "support.hpp"

using namespace focusplan;
using focusplan::testing::random_spec;
using focusplan::testing::rel_close;

namespace {

const LensSpec kExperiment{25.0, 4.6, 0.02, 250.0, kInfinity};

// Published sample lens positions for the experiment module (steps 0-13).
constexpr std::array<double, 14> kGoldenFocus = {267.8,  288.5,  312.9, 342.0,  377.3,
                                                 421.1,  476.9,  550.5, 651.6,  799.7,
                                                 1037.1, 1479.7, 2595.1, 6818.48};
constexpr std::array<double, 14> kGoldenLens = {27.5741, 27.3719, 27.1712, 26.9719, 26.7741,
                                                26.5778, 26.3829, 26.1894, 25.9974, 25.8067,
                                                25.6175, 25.4297, 25.2432, 25.0920};

}  // namespace

TEST_CASE("forward slicing reproduces the golden table") {
  const FocusPlan plan = slice_forward(kExperiment);
  REQUIRE(plan.slices.size() == 15);
  REQUIRE(plan.iterated_count() == 14);

  // Seed entry at the practical nearest focus distance.
  CHECK(plan.slices[0].step == -1);
  CHECK(plan.slices[0].focus_distance == doctest::Approx(250.0));
  CHECK(plan.slices[0].lens_distance == doctest::Approx(27.7778).epsilon(1e-5));

  for (int i = 0; i < 13; ++i) {
    const FocusSlice& s = plan.slices[static_cast<std::size_t>(i) + 1];
    CHECK(s.step == i);
    CHECK(std::abs(s.focus_distance - kGoldenFocus[static_cast<std::size_t>(i)]) < 0.1);
    CHECK(std::abs(s.lens_distance - kGoldenLens[static_cast<std::size_t>(i)]) < 0.001);
  }
  const FocusSlice& last = plan.slices.back();
  CHECK(last.step == 13);
  CHECK(std::abs(last.focus_distance - plan.derived.hyperfocal) < 2.0);
  CHECK(std::abs(last.lens_distance - 25.0920) < 0.0005);
  CHECK(last.far == kInfinity);
}

TEST_CASE("forward slicing adjacency is exact by construction") {
  const FocusPlan plan = slice_forward(kExperiment);
  // Every joint except the clamped final one reuses the far limit bit-for-bit;
  // the final slice overlaps backwards so the leftover lands at the far end.
  for (std::size_t i = 0; i + 2 < plan.slices.size(); ++i) {
    CHECK(plan.slices[i].far == plan.slices[i + 1].near);
  }
  const std::size_t n = plan.slices.size();
  CHECK(plan.slices[n - 1].near < plan.slices[n - 2].far);
  CHECK(validate_plan(plan).empty());
}

TEST_CASE("seed beyond the hyperfocal degenerates to the single hyperfocal slice") {
  LensSpec spec = kExperiment;
  spec.near_focus_limit = 7000.0;
  const FocusPlan plan = slice_forward(spec);
  REQUIRE(plan.slices.size() == 1);
  CHECK(plan.slices[0].focus_distance == doctest::Approx(plan.derived.hyperfocal));
  CHECK(plan.slices[0].far == kInfinity);
  CHECK(verify_coverage(plan, 50).pass);
}

TEST_CASE("doubling the coc yields fewer slices, still covering") {
  LensSpec loose = kExperiment;
  loose.coc = 0.04;
  const FocusPlan plan = slice_forward(loose);
  CHECK(plan.iterated_count() < slice_forward(kExperiment).iterated_count());
  CHECK(verify_coverage(plan, 100).pass);
}

TEST_CASE("slice count is non-increasing in coc") {
  int prev = std::numeric_limits<int>::max();
  for (double c : {0.005, 0.01, 0.02, 0.04, 0.08}) {
    LensSpec spec = kExperiment;
    spec.coc = c;
    const int count = slice_forward(spec).iterated_count();
    CHECK(count <= prev);
    prev = count;
  }
}

TEST_CASE("backward slicing") {
  const FocusPlan plan = slice_backward(kExperiment);
  CHECK(plan.direction == Direction::kFarToNear);

  // The first generated slice sits at the hyperfocal distance; after the
  // increasing-order sort it is the last one.
  CHECK(plan.slices.back().focus_distance ==
        doctest::Approx(plan.derived.hyperfocal).epsilon(1e-12));
  CHECK(plan.slices.back().far == kInfinity);

  // Overlap lands at the near end.
  CHECK(plan.slices.front().near <= kExperiment.near_focus_limit);

  // Exact adjacency everywhere: each near limit is reused as the next far.
  for (std::size_t i = 0; i + 1 < plan.slices.size(); ++i) {
    CHECK(plan.slices[i].far == plan.slices[i + 1].near);
    CHECK(plan.slices[i].step == static_cast<int>(i));
  }

  CHECK(verify_coverage(plan, 100).pass);
  const int forward = slice_forward(kExperiment).iterated_count();
  CHECK(std::abs(static_cast<int>(plan.slices.size()) - forward) <= 1);
}

TEST_CASE("finite far target clamps the last slice to the minimal covering focus") {
  LensSpec spec = kExperiment;
  spec.far_target = 2000.0;
  const FocusPlan plan = slice_forward(spec);
  CHECK(plan.slices.back().far >= 2000.0);
  // Minimal: focusing one ulp nearer would fall short of the target.
  CHECK(rel_close(plan.slices.back().far, 2000.0, 1e-9));
  CHECK(verify_coverage(plan, 100).pass);

  const FocusPlan backward = slice_backward(spec);
  CHECK(backward.slices.back().far == doctest::Approx(2000.0));
  CHECK(verify_coverage(backward, 100).pass);
}

TEST_CASE("verify_coverage flags a deleted interior slice") {
  FocusPlan plan = slice_forward(kExperiment);
  const FocusSlice removed = plan.slices[5];
  plan.slices.erase(plan.slices.begin() + 5);
  const CoverageReport report = verify_coverage(plan, 100);
  CHECK(!report.pass);
  CHECK(report.worst_distance > removed.near);
  CHECK(report.worst_distance < removed.far);
}

TEST_CASE("verify_coverage reports structural violations") {
  FocusPlan plan = slice_forward(kExperiment);
  plan.slices[3].lens_distance += 0.5;
  const CoverageReport report = verify_coverage(plan, 10);
  CHECK(!report.pass);
  REQUIRE(!report.violations.empty());
  CHECK(report.violations[0].find("slice 2") != std::string::npos);
}

TEST_CASE("property: random specs slice gap-free in both directions") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const LensSpec spec = random_spec(rng);
    CAPTURE(spec.focal_length);
    CAPTURE(spec.f_number);
    CAPTURE(spec.coc);
    CAPTURE(spec.near_focus_limit);
    const FocusPlan forward = slice_forward(spec);
    REQUIRE(validate_plan(forward).empty());
    REQUIRE(verify_coverage(forward, 20).pass);
    const FocusPlan backward = slice_backward(spec);
    REQUIRE(validate_plan(backward).empty());
    REQUIRE(verify_coverage(backward, 20).pass);
  }
}
