"""JSON files for curves and frames.

Coefficients are written as strings ("3", "-1/2") so nothing is lost to
floating point.  Parsing accepts strings or JSON integers; floats are
rejected.

Curve file::

    {"ambient_dim": n, "degree": d, "coords": [[c_0, ..., c_d], ...]}

Frame file::

    {"ambient_dim": n, "level": k, "rows": [[[c_0, ...], ...], ...]}

where c_j is the coefficient of s^(D-j) t^j.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, List

from .algebra import BinaryForm, PolyVector
from .curves import ParamCurve
from .errors import InvalidCurve
from .grassmann import GrassFrame


class MalformedInput(InvalidCurve):
    """File contents do not match the expected layout."""


def parse_coefficient(x: Any):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise MalformedInput(f"coefficient must be an integer or a 'p/q' string, got {x!r}")
    try:
        value = Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise MalformedInput(f"bad rational {x!r}") from None
    if isinstance(x, str) and any(ch in x.lower() for ch in ".e"):
        raise MalformedInput(f"decimal notation not allowed: {x!r}")
    return value.numerator if value.denominator == 1 else value


def format_coefficient(c) -> str:
    return str(c)


def _int_field(data: dict, key: str) -> int:
    if key not in data:
        raise MalformedInput(f"missing field {key!r}")
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise MalformedInput(f"field {key!r} must be an integer")
    return v


def _vector(entries: Any, where: str) -> PolyVector:
    if not isinstance(entries, list) or not entries:
        raise MalformedInput(f"{where} must be a non-empty list")
    forms = []
    for e in entries:
        if not isinstance(e, list) or not e:
            raise MalformedInput(f"{where}: each form must be a non-empty coefficient list")
        forms.append(BinaryForm(parse_coefficient(c) for c in e))
    try:
        # zero entries may be written as ["0"] whatever the row degree
        return PolyVector(forms)
    except ValueError:
        raise MalformedInput(f"{where}: nonzero forms must have a common degree") from None


def vector_to_json(v: PolyVector) -> List[List[str]]:
    return [[format_coefficient(c) for c in e.coeffs] for e in v]


def curve_from_dict(data: Any) -> ParamCurve:
    if not isinstance(data, dict):
        raise MalformedInput("curve file must hold a JSON object")
    n = _int_field(data, "ambient_dim")
    d = _int_field(data, "degree")
    coords = _vector(data.get("coords"), "coords")
    if len(coords) != n + 1:
        raise MalformedInput(f"expected {n + 1} coordinates, got {len(coords)}")
    if coords.degree != d:
        raise MalformedInput(f"coordinates have degree {coords.degree}, header says {d}")
    return ParamCurve(coords)


def curve_to_dict(curve: ParamCurve) -> dict:
    return {
        "ambient_dim": curve.ambient_dim,
        "degree": curve.degree,
        "coords": vector_to_json(curve.coords),
    }


def frame_from_dict(data: Any) -> GrassFrame:
    if not isinstance(data, dict):
        raise MalformedInput("frame file must hold a JSON object")
    n = _int_field(data, "ambient_dim")
    k = _int_field(data, "level")
    rows = data.get("rows")
    if not isinstance(rows, list):
        raise MalformedInput("rows must be a list")
    return GrassFrame(n, k, tuple(_vector(r, f"rows[{i}]") for i, r in enumerate(rows)))


def frame_to_dict(frame: GrassFrame) -> dict:
    return {
        "ambient_dim": frame.ambient_dim,
        "level": frame.level,
        "rows": [vector_to_json(r) for r in frame.rows],
    }


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    except OSError as exc:
        raise MalformedInput(f"{path}: {exc.strerror}") from None


def load_curve(path: str) -> ParamCurve:
    return curve_from_dict(load_json(path))


def load_frame(path: str) -> GrassFrame:
    return frame_from_dict(load_json(path))


def dumps(obj: Any) -> str:
    """Canonical JSON text: fixed indentation, insertion key order."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
