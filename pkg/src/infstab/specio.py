"""JSON reading and writing of convex function specs.

Format::

    {"domain": {"lo": "-inf", "lo_closed": false, "hi": "1", "hi_closed": true},
     "body": {"kind": "proper",
              "breakpoints": [{"x": "-1", "v": "1"}, {"x": "0", "v": "0"}],
              "left_tail": {"kind": "slope", "slope": "-1", "extent": "-inf"},
              "right_tail": {"kind": "cutoff"},
              "left_endpoint_override": null,
              "right_endpoint_override": "5"}}

Other bodies are ``{"kind": "empty"}`` and ``{"kind": "improper",
"minus_inf": <interval>, "left_edge_value": "+inf", "right_edge_value": "3"}``.
Rationals are strings ``"p/q"`` (integers may be bare); infinities are
``"+inf"``/``"-inf"``.  An optional top-level ``"meta"`` object is carried
through untouched.
"""

from __future__ import annotations

import json
from typing import Any, Optional, Tuple, Union

from .convexfn import (
    ConvexFnSpec,
    CutOff,
    EmptyDom,
    Improper,
    Interval,
    MalformedSpec,
    Proper,
    Slope,
    validate,
)
from .extreal import ExtReal, format_rational, parse_rational

__all__ = ["ParseError", "parse_spec", "load_spec", "spec_to_json", "dump_spec"]


class ParseError(ValueError):
    def __init__(self, message: str, field: str = "", line: Optional[int] = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.field = field
        self.line = line


def _ext(raw, path: str) -> ExtReal:
    try:
        return ExtReal.parse(raw)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), path) from None


def _rat(raw, path: str):
    try:
        return parse_rational(raw)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), path) from None


def _get(obj: dict, key: str, path: str):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path)
    if key not in obj:
        raise ParseError("missing field", f"{path}.{key}" if path else key)
    return obj[key]


def _bool(raw, path: str) -> bool:
    if not isinstance(raw, bool):
        raise ParseError("expected true or false", path)
    return raw


def _interval(raw, path: str) -> Interval:
    lo = _ext(_get(raw, "lo", path), f"{path}.lo")
    hi = _ext(_get(raw, "hi", path), f"{path}.hi")
    lo_closed = _bool(_get(raw, "lo_closed", path), f"{path}.lo_closed")
    hi_closed = _bool(_get(raw, "hi_closed", path), f"{path}.hi_closed")
    try:
        return Interval(lo, lo_closed, hi, hi_closed)
    except MalformedSpec as exc:
        raise ParseError(str(exc), path) from None


def _tail(raw, path: str):
    kind = _get(raw, "kind", path)
    if kind == "cutoff":
        return CutOff()
    if kind == "slope":
        return Slope(
            _rat(_get(raw, "slope", path), f"{path}.slope"),
            _ext(_get(raw, "extent", path), f"{path}.extent"),
        )
    raise ParseError(f"unknown tail kind {kind!r}", f"{path}.kind")


def _optional_ext(raw: dict, key: str, path: str) -> Optional[ExtReal]:
    val = raw.get(key)
    return None if val is None else _ext(val, f"{path}.{key}")


def _body(raw, path: str):
    kind = _get(raw, "kind", path)
    if kind == "empty":
        return EmptyDom()
    if kind == "improper":
        return Improper(
            _interval(_get(raw, "minus_inf", path), f"{path}.minus_inf"),
            _optional_ext(raw, "left_edge_value", path) or ExtReal.parse("+inf"),
            _optional_ext(raw, "right_edge_value", path) or ExtReal.parse("+inf"),
        )
    if kind == "proper":
        pts_raw = _get(raw, "breakpoints", path)
        if not isinstance(pts_raw, list):
            raise ParseError("expected a list", f"{path}.breakpoints")
        pts = []
        for i, pt in enumerate(pts_raw):
            p = f"{path}.breakpoints[{i}]"
            pts.append((_rat(_get(pt, "x", p), f"{p}.x"), _rat(_get(pt, "v", p), f"{p}.v")))
        return Proper(
            tuple(pts),
            _tail(raw.get("left_tail", {"kind": "cutoff"}), f"{path}.left_tail"),
            _tail(raw.get("right_tail", {"kind": "cutoff"}), f"{path}.right_tail"),
            _optional_ext(raw, "left_endpoint_override", path),
            _optional_ext(raw, "right_endpoint_override", path),
        )
    raise ParseError(f"unknown body kind {kind!r}", f"{path}.kind")


def parse_spec(text: Union[str, bytes], with_meta: bool = False):
    """Parse and validate a spec.

    Raises :class:`ParseError` for malformed JSON or fields and lets
    :class:`~infstab.convexfn.ValidationError` through for non-convex data.
    With ``with_meta`` the ``"meta"`` object is returned alongside.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    spec = ConvexFnSpec(
        _interval(_get(raw, "domain", ""), "domain"),
        _body(_get(raw, "body", ""), "body"),
    )
    validate(spec)
    if with_meta:
        return spec, raw.get("meta")
    return spec


def load_spec(path) -> ConvexFnSpec:
    with open(path, "rb") as fh:
        return parse_spec(fh.read())


def _interval_json(iv: Interval) -> dict:
    return {"lo": str(iv.lo), "lo_closed": iv.lo_closed, "hi": str(iv.hi), "hi_closed": iv.hi_closed}


def _tail_json(t) -> dict:
    if isinstance(t, CutOff):
        return {"kind": "cutoff"}
    return {"kind": "slope", "slope": format_rational(t.slope), "extent": str(t.extent)}


def spec_to_json(spec: ConvexFnSpec, meta: Optional[dict] = None) -> dict:
    body = spec.body
    if isinstance(body, EmptyDom):
        bj: dict[str, Any] = {"kind": "empty"}
    elif isinstance(body, Improper):
        bj = {
            "kind": "improper",
            "minus_inf": _interval_json(body.minus_inf),
            "left_edge_value": str(body.left_edge_value),
            "right_edge_value": str(body.right_edge_value),
        }
    else:
        over: Tuple = tuple(
            None if o is None else str(o)
            for o in (body.left_endpoint_override, body.right_endpoint_override)
        )
        bj = {
            "kind": "proper",
            "breakpoints": [
                {"x": format_rational(x), "v": format_rational(v)} for x, v in body.breakpoints
            ],
            "left_tail": _tail_json(body.left_tail),
            "right_tail": _tail_json(body.right_tail),
            "left_endpoint_override": over[0],
            "right_endpoint_override": over[1],
        }
    out = {"domain": _interval_json(spec.domain), "body": bj}
    if meta is not None:
        out["meta"] = meta
    return out


def dump_spec(spec: ConvexFnSpec, meta: Optional[dict] = None) -> str:
    return json.dumps(spec_to_json(spec, meta), indent=2) + "\n"
