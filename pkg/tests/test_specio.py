import json

import pytest
from hypothesis import given

from conftest import specs
from infstab.convexfn import NonConvexSlopes
from infstab.specio import ParseError, dump_spec, parse_spec, spec_to_json

ABS_JSON = """{
  "domain": {"lo": "-inf", "lo_closed": false, "hi": "+inf", "hi_closed": false},
  "body": {"kind": "proper",
           "breakpoints": [{"x": "-1", "v": "1"}, {"x": "0", "v": "0"}, {"x": "1", "v": "1"}],
           "left_tail": {"kind": "slope", "slope": "-1", "extent": "-inf"},
           "right_tail": {"kind": "slope", "slope": "1", "extent": "+inf"}}
}"""


def test_absval_parses():
    spec = parse_spec(ABS_JSON)
    assert len(spec.body.breakpoints) == 3


def test_bytes_accepted():
    assert parse_spec(ABS_JSON.encode()) == parse_spec(ABS_JSON)


def test_bad_rational():
    with pytest.raises(ParseError) as exc:
        parse_spec(ABS_JSON.replace('"x": "0"', '"x": "1/0"'))
    assert "breakpoints[1].x" in exc.value.field


def test_json_syntax_error_has_line():
    with pytest.raises(ParseError) as exc:
        parse_spec(ABS_JSON.replace('"kind": "proper",', '"kind": "proper"'))
    assert exc.value.line == 4


def test_non_convex_forwarded():
    tent = ABS_JSON.replace('"v": "0"', '"v": "2"')
    with pytest.raises(NonConvexSlopes):
        parse_spec(tent)


def test_missing_and_unknown_fields():
    raw = json.loads(ABS_JSON)
    del raw["domain"]["hi"]
    with pytest.raises(ParseError):
        parse_spec(json.dumps(raw))
    raw = json.loads(ABS_JSON)
    raw["body"]["kind"] = "smooth"
    with pytest.raises(ParseError):
        parse_spec(json.dumps(raw))
    raw = json.loads(ABS_JSON)
    raw["domain"]["lo_closed"] = "no"
    with pytest.raises(ParseError):
        parse_spec(json.dumps(raw))


def test_meta_round_trip():
    spec = parse_spec(ABS_JSON)
    out, meta = parse_spec(dump_spec(spec, {"variable": "t"}), with_meta=True)
    assert out == spec and meta == {"variable": "t"}


@given(specs())
def test_round_trip(spec):
    text = dump_spec(spec)
    again = parse_spec(text)
    assert again == spec
    assert dump_spec(again) == text
    assert spec_to_json(again) == json.loads(text)
