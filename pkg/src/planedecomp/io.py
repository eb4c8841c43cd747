"""JSON documents for distributions and decompositions.

Exact-mode numbers travel as strings (``"3"``, ``"-7/4"``) so that nothing
passes through binary floating point.  Float-mode numbers are written as
``repr`` strings, which round-trip bit-exactly, and read from either JSON
numbers or strings.

Input::

    {"mode": "exact", "atoms": [{"x": "1", "y": "0", "mass": "1/3"}, ...]}
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, Optional

from .decompose import Decomposition
from .errors import DecompositionError
from .extremes import ExtremeComponent, Kind
from .geometry import Mode, Point
from .invariants import InvariantReport
from .measures import FiniteDistribution, build


class InputError(DecompositionError):
    """Malformed input document; the message names the offending field."""


def format_scalar(v) -> str:
    if isinstance(v, float):
        return repr(v)
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_point(z: Point):
    return [format_scalar(z.x), format_scalar(z.y)]


def parse_scalar(value: Any, mode: Mode, where: str):
    if isinstance(value, bool) or value is None:
        raise InputError(f"{where}: expected a number, got {json.dumps(value)}")
    if mode is Mode.EXACT:
        if isinstance(value, float):
            raise InputError(f"{where}: exact mode needs a string such as \"1/3\", got {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if not isinstance(value, str):
            raise InputError(f"{where}: expected a rational string, got {json.dumps(value)}")
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{where}: malformed rational {value!r}") from None
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise InputError(f"{where}: expected a decimal, got {json.dumps(value)}")
    try:
        return float(value)
    except ValueError:
        pass
    try:
        # lets an exact document be rerun with --mode float
        return float(Fraction(value.strip()))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{where}: malformed decimal {value!r}") from None


def parse_point(value: Any, mode: Mode, where: str) -> Point:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise InputError(f"{where}: expected a pair [x, y]")
    return Point(parse_scalar(value[0], mode, f"{where}[0]"), parse_scalar(value[1], mode, f"{where}[1]"))


def parse_mode(text: Any) -> Mode:
    try:
        return Mode(text)
    except ValueError:
        raise InputError(f"mode: expected \"exact\" or \"float\", got {json.dumps(text)}") from None


def loads_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"line {e.lineno} column {e.colno}: {e.msg}") from None


def distribution_from_document(doc: Any, mode: Optional[Mode] = None) -> FiniteDistribution:
    if not isinstance(doc, dict) or "atoms" not in doc:
        raise InputError("document must be an object with an \"atoms\" list")
    if mode is None:
        mode = parse_mode(doc.get("mode", "exact"))
    atoms = doc["atoms"]
    if not isinstance(atoms, list):
        raise InputError("atoms: expected a list")
    raw = []
    for i, a in enumerate(atoms):
        if not isinstance(a, dict):
            raise InputError(f"atoms[{i}]: expected an object with x, y, mass")
        for key in ("x", "y", "mass"):
            if key not in a:
                raise InputError(f"atoms[{i}]: missing {key!r}")
        z = Point(parse_scalar(a["x"], mode, f"atoms[{i}].x"), parse_scalar(a["y"], mode, f"atoms[{i}].y"))
        raw.append((z, parse_scalar(a["mass"], mode, f"atoms[{i}].mass")))
    return build(raw, mode)


def distribution_to_document(p: FiniteDistribution) -> Dict[str, Any]:
    return {
        "mode": p.mode.value,
        "atoms": [
            {"x": format_scalar(a.point.x), "y": format_scalar(a.point.y), "mass": format_scalar(a.mass)}
            for a in p.atoms
        ],
    }


def report_to_document(report: InvariantReport) -> Dict[str, Any]:
    return {
        "consistent": report.consistent,
        "probes": [
            {
                "direction": format_point(v.direction),
                "interior": format_scalar(v.interior),
                "boundary": format_scalar(v.boundary),
                "total": format_scalar(v.total),
            }
            for v in report.probes
        ],
    }


def component_to_document(c: ExtremeComponent, weight) -> Dict[str, Any]:
    return {
        "type": c.kind.value,
        "points": [format_point(z) for z in c.points],
        "masses": [format_scalar(m) for m in c.masses],
        "weight": format_scalar(weight),
    }


def decomposition_to_document(d: Decomposition, report: Optional[InvariantReport] = None):
    doc = {
        "mode": d.mode.value,
        "phi": format_scalar(d.phi),
        "offset": format_point(d.offset),
        "components": [component_to_document(c, w) for c, w in d.components],
    }
    if report is not None:
        doc["diagnostics"] = report_to_document(report)
    return doc


def decomposition_from_document(doc: Any) -> Decomposition:
    if not isinstance(doc, dict) or "components" not in doc:
        raise InputError("decomposition document needs a \"components\" list")
    mode = parse_mode(doc.get("mode", "exact"))
    items = []
    for i, c in enumerate(doc["components"]):
        where = f"components[{i}]"
        try:
            kind = Kind(c["type"])
            pts = tuple(parse_point(z, mode, f"{where}.points[{k}]") for k, z in enumerate(c["points"]))
            masses = tuple(parse_scalar(m, mode, f"{where}.masses[{k}]") for k, m in enumerate(c["masses"]))
            weight = parse_scalar(c["weight"], mode, f"{where}.weight")
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, InputError):
                raise
            raise InputError(f"{where}: {e}") from None
        items.append((ExtremeComponent(kind, pts, masses), weight))
    phi = parse_scalar(doc.get("phi", "0"), mode, "phi")
    offset = parse_point(doc.get("offset", ["0", "0"]), mode, "offset")
    return Decomposition(phi, tuple(items), offset, mode)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2)
