import json
import math

import pytest

import focusplan as fp


@pytest.fixture
def spec():
    return fp.LensSpec(focal_length=25.0, f_number=4.6, coc=0.02, near_focus_limit=250.0)


def test_hyperfocal(spec):
    assert fp.hyperfocal(spec) == pytest.approx(6818.48, abs=0.01)


def test_thin_lens_conversions(spec):
    assert fp.object_to_image(250.0, 25.0) == pytest.approx(27.78, abs=0.01)
    assert fp.image_to_object(fp.object_to_image(400.0, 25.0), 25.0) == pytest.approx(400.0)


def test_invalid_spec_raises():
    with pytest.raises(ValueError):
        fp.LensSpec(focal_length=-1.0, f_number=4.6, coc=0.02, near_focus_limit=250.0)


def test_plan_and_coverage(spec):
    plan = fp.slice_forward(spec)
    assert plan.iterated_count() == 14
    assert plan.slices[0].step == -1
    assert plan.slices[1].focus_distance == pytest.approx(267.8, abs=0.1)
    assert math.isinf(plan.slices[-1].far)
    report = fp.verify_coverage(plan, 50)
    assert report.pass_
    assert report.max_blur <= spec.coc * (1 + 1e-9)


def test_plan_serialization(spec):
    plan = fp.slice_forward(spec)
    data = json.loads(plan.to_json())
    assert len(data["slices"]) == len(plan.slices)
    assert data["slices"][-1]["far_limit_mm"] == "inf"
    assert plan.to_csv().startswith("step,focus_distance_mm")


def test_actuator_round_trip():
    cal = fp.ActuatorCalibration(lens_at_code_max=27.78, lens_at_code_min=25.09, code_max=1023)
    result = fp.to_code(26.435, cal)
    assert result.code == 512
    assert abs(fp.from_code(result.code, cal) - 26.435) <= cal.code_step() / 2 * (1 + 1e-9)


def test_autofocus_simulation(spec):
    plan = fp.slice_forward(spec)
    cal = fp.ActuatorCalibration(lens_at_code_max=27.78, lens_at_code_min=25.09, code_max=1023)
    scene = fp.SimulatedScene(true_distance=400.0, noise_sigma=0.0, seed=0)
    trace = fp.run_autofocus(plan, scene, cal, max_evals=30)
    winner = plan.slices[trace.coarse_winner]
    assert winner.near <= 400.0 <= winner.far
    assert trace.final_blur <= spec.coc
