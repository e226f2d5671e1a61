import json

import pytest
from hypothesis import given

from slkma.model import (
    EXAMPLE_1,
    Instance,
    InstanceSyntaxError,
    Schedule,
    ScheduleError,
    ValidationError,
    WindowParams,
    parse_instance,
    serialize_instance,
    validate_instance,
)

from conftest import instances

EXAMPLE_1_RECORD = {
    "a": [62, 81, 25, 82, 26, 19, 55, 9, 91],
    "b": 0.05,
    "alpha": 4,
    "beta": 15,
    "gamma": 5,
    "delta": 6,
    "mu": 10,
    "sigma": 0.1,
}


def test_example1_record_is_valid():
    inst = validate_instance(EXAMPLE_1_RECORD | {"n": 9})
    assert inst == EXAMPLE_1
    assert inst.n == 9


def test_minimal_instance_is_valid():
    inst = validate_instance({"a": [10], "b": 0, "alpha": 1, "beta": 1, "gamma": 1, "delta": 1, "mu": 1, "sigma": 0})
    assert inst.n == 1


def test_all_violations_reported_together():
    raw = {"n": 2, "a": [5], "b": 0, "alpha": 0, "beta": 1, "gamma": 1, "delta": 1, "mu": 1, "sigma": 0}
    with pytest.raises(ValidationError) as exc:
        validate_instance(raw)
    assert exc.value.codes == {"LengthMismatch", "NonPositiveCost"}


@pytest.mark.parametrize(
    "change, code",
    [
        ({"a": []}, "EmptyJobSet"),
        ({"a": [1, -2]}, "NegativeTime"),
        ({"b": -0.1}, "NegativeTime"),
        ({"sigma": -1}, "NegativeTime"),
        ({"mu": 0}, "NegativeTime"),
        ({"delta": -3}, "NonPositiveCost"),
    ],
)
def test_single_violation(change, code):
    with pytest.raises(ValidationError) as exc:
        validate_instance(EXAMPLE_1_RECORD | change)
    assert code in exc.value.codes


def test_zero_normal_time_allowed():
    assert validate_instance(EXAMPLE_1_RECORD | {"a": [0, 3]}).a == (0.0, 3.0)


def test_direct_construction_validates():
    with pytest.raises(ValidationError):
        Instance([1], 0, 1, 1, 1, 1, mu=-1, sigma=0)


def test_parse_example_file():
    text = json.dumps(EXAMPLE_1_RECORD, indent=2)
    assert parse_instance(text) == EXAMPLE_1


def test_parse_empty_stream():
    with pytest.raises(InstanceSyntaxError):
        parse_instance("")


def test_parse_negative_b():
    with pytest.raises(ValidationError) as exc:
        parse_instance(json.dumps(EXAMPLE_1_RECORD | {"b": -0.1}))
    assert "NegativeTime" in exc.value.codes


def test_parse_reports_line_of_bad_json():
    with pytest.raises(InstanceSyntaxError) as exc:
        parse_instance('{\n  "a": [1, 2],\n  "b": ,\n}')
    assert exc.value.line == 3


def test_parse_rejects_unknown_field_with_locus():
    text = serialize_instance(EXAMPLE_1).replace('"mu"', '"color": 3,\n  "mu"')
    with pytest.raises(InstanceSyntaxError) as exc:
        parse_instance(text)
    assert exc.value.field == "color"
    assert exc.value.line == text.splitlines().index('  "color": 3,') + 1


@pytest.mark.parametrize("text", ['{"a": [1], "b": "x"}', "[1, 2]", '{"a": [1, true], "b": 0}'])
def test_parse_rejects_malformed_values(text):
    with pytest.raises(InstanceSyntaxError):
        parse_instance(text)


def test_parse_rejects_explicit_n():
    with pytest.raises(InstanceSyntaxError) as exc:
        parse_instance(json.dumps(EXAMPLE_1_RECORD | {"n": 9}))
    assert exc.value.field == "n"


@given(instances())
def test_serialize_parse_roundtrip(inst):
    assert parse_instance(serialize_instance(inst)) == inst


def test_serialize_is_byte_stable():
    assert serialize_instance(EXAMPLE_1) == serialize_instance(parse_instance(serialize_instance(EXAMPLE_1)))


def test_schedule_rejects_bad_permutation():
    with pytest.raises(ScheduleError) as exc:
        Schedule((1, 1, 2), 1)
    assert exc.value.code == "InvalidPermutation"


@pytest.mark.parametrize("i", [0, 4])
def test_schedule_rejects_out_of_range_maintenance(i):
    with pytest.raises(ScheduleError):
        Schedule((1, 2, 3), i)


def test_window_params():
    w = WindowParams(2, 5, 79.5, 154.12)
    assert w.D == pytest.approx(74.62)
    with pytest.raises(ScheduleError):
        WindowParams(3, 2, 0, 1)
    with pytest.raises(ScheduleError):
        WindowParams(1, 2, 5, 1)
