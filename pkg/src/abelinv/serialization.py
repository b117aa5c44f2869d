"""JSON documents for equations, maps, jets and sample points.

Rationals are strings ``"p"`` or ``"p/q"``; a jet is an array of such
strings, index = power of x. Documents::

    equation: {"order": N, "c0": [...], "c1": [...], "c2": [...], "c3": [...], "dvar": [...]?}
    map:      {"u": [...], "nu": [...], "mu": [...], "order": N?}
    jet:      {"order": N?, "coeffs": [...], "polynomial": false?}
    points:   {"points": [["x", "y", "u"], ...]}   (or {"x":..,"y":..,"u":..} objects)
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from .cartan import PointXYU
from .equation import AbelEquation, ChartedEquation, InvalidEquation, InvalidMap, PseudoGroupMap
from .series import Jet


class ParseError(ValueError):
    """Malformed or invariant-violating input document."""


_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: Any, where: str = "value") -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"{where}: expected a rational string, got {text!r}")
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"{where}: {text!r} is not of the form p or p/q")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"{where}: zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def rational_to_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def jet_to_json(j: Jet) -> list[str]:
    return [rational_to_str(c) for c in j.coeffs]


def jet_report(j: Jet) -> dict:
    return {"coeffs": jet_to_json(j), "valid_order": j.valid, "text": j.to_text()}


def parse_jet_array(arr: Any, order: int | None, where: str) -> Jet:
    if not isinstance(arr, list) or not arr:
        raise ParseError(f"{where}: expected a non-empty array of rational strings")
    cs = [parse_rational(v, f"{where}[{k}]") for k, v in enumerate(arr)]
    if order is not None and len(cs) != order + 1:
        raise ParseError(f"{where}: expected {order + 1} entries, got {len(cs)}")
    return Jet.from_coeffs(cs)


def load_document(source: Union[str, Path, dict]) -> dict:
    if isinstance(source, dict):
        return source
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    return doc


def _order(doc: dict) -> int | None:
    if "order" not in doc:
        return None
    order = doc["order"]
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ParseError("order: expected a non-negative integer")
    return order


def parse_cubic(source: Union[str, Path, dict]) -> tuple[Jet, Jet, Jet, Jet]:
    """Four coefficient jets with no condition on ``c3`` (second-kind numerators)."""
    doc = load_document(source)
    order = _order(doc)
    if order is None:
        raise ParseError("order: missing")
    jets = []
    for name in ("c0", "c1", "c2", "c3"):
        if name not in doc:
            raise ParseError(f"{name}: missing")
        jets.append(parse_jet_array(doc[name], order, name))
    return tuple(jets)  # type: ignore[return-value]


def parse_equation(source: Union[str, Path, dict]) -> ChartedEquation:
    doc = load_document(source)
    order = _order(doc)
    if order is None:
        raise ParseError("order: missing")
    jets = []
    for name in ("c0", "c1", "c2", "c3"):
        if name not in doc:
            raise ParseError(f"{name}: missing")
        jets.append(parse_jet_array(doc[name], order, name))
    if jets[3].coeffs[0] == 0:
        raise ParseError("c3: constant term must be nonzero")
    dvar = None
    if doc.get("dvar") is not None:
        dvar = parse_jet_array(doc["dvar"], order, "dvar")
        if dvar.coeffs[0] == 0:
            raise ParseError("dvar: constant term must be nonzero")
    try:
        return ChartedEquation(AbelEquation(*jets), dvar)
    except InvalidEquation as exc:
        raise ParseError(str(exc)) from exc


def equation_to_json(eq: Union[AbelEquation, ChartedEquation]) -> dict:
    ce = eq if isinstance(eq, ChartedEquation) else ChartedEquation(eq)
    doc: dict[str, Any] = {"order": ce.order}
    for name, c in zip(("c0", "c1", "c2", "c3"), ce.eq.coeffs):
        doc[name] = jet_to_json(c)
    if not ce.is_base_chart:
        doc["dvar"] = jet_to_json(ce.dvar)
    return doc


def parse_map(source: Union[str, Path, dict]) -> PseudoGroupMap:
    doc = load_document(source)
    order = _order(doc)
    jets = {}
    for name in ("u", "nu", "mu"):
        if name not in doc:
            raise ParseError(f"{name}: missing")
        jets[name] = parse_jet_array(doc[name], order, name)
    if len({j.order for j in jets.values()}) != 1:
        raise ParseError("u, nu, mu: arrays must have equal length")
    for name in ("u", "mu"):
        if jets[name].coeffs[0] == 0:
            raise ParseError(f"{name}: constant term must be nonzero")
    try:
        return PseudoGroupMap(jets["u"], jets["nu"], jets["mu"])
    except InvalidMap as exc:
        raise ParseError(str(exc)) from exc


def map_to_json(t: PseudoGroupMap) -> dict:
    return {"order": t.order, "u": jet_to_json(t.u), "nu": jet_to_json(t.nu), "mu": jet_to_json(t.mu)}


def parse_jet(source: Union[str, Path, dict]) -> Jet:
    doc = load_document(source)
    order = _order(doc)
    if "coeffs" not in doc:
        raise ParseError("coeffs: missing")
    j = parse_jet_array(doc["coeffs"], order, "coeffs")
    poly = doc.get("polynomial", False)
    if not isinstance(poly, bool):
        raise ParseError("polynomial: expected true or false")
    return Jet(j.coeffs, polynomial=poly)


def jet_document(j: Jet) -> dict:
    return {"order": j.order, "coeffs": jet_to_json(j), "polynomial": j.polynomial}


def parse_points(source: Union[str, Path, dict]) -> list[PointXYU]:
    doc = load_document(source)
    raw = doc.get("points")
    if not isinstance(raw, list) or not raw:
        raise ParseError("points: expected a non-empty array")
    out = []
    for k, item in enumerate(raw):
        where = f"points[{k}]"
        if isinstance(item, dict):
            vals = [item.get(n) for n in ("x", "y", "u")]
        elif isinstance(item, list) and len(item) == 3:
            vals = item
        else:
            raise ParseError(f"{where}: expected [x, y, u] or an object with x, y, u")
        x, y, u = (parse_rational(v, f"{where}.{n}") for v, n in zip(vals, "xyu"))
        if u == 0:
            raise ParseError(f"{where}.u: must be nonzero")
        out.append(PointXYU(x, y, u))
    return out
