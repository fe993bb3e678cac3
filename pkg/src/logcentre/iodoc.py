"""Versioned JSON documents describing orders, cone pairs and presentations.

A document is ``{"version": "1", "objects": {name: object, ...}}`` where each
object carries a ``type`` tag. Rational numbers are encoded as JSON integers
or as strings like ``"1/2"``; floating point literals are rejected outright
because every computation in this package is exact.

Object schemas:

* ``order``: ``ramification`` is a list of ``{"prime": str, "e": int,
  "blocks": [int, ...]}``; ``blocks`` defaults to ``e`` ones.
* ``cone_pair``: ``rays`` (integer lattice coordinates), ``boundary`` (one
  rational per ray), optional ``lattice`` (basis rows in ambient rational
  coordinates, default the standard lattice).
* ``presentation``: ``generators``, optional ``weights``, and ``rules`` given
  as ``{"lhs": "b*a", "rhs": "a*b - 2*c^3"}`` with expression syntax.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .ncpoly import NCPoly, RewriteSystem, parse_poly
from .orders import OrderSpec, RamificationDatum
from .toric import Cone, ConePair, Lattice, ToricDivisor

VERSION = "1"

_TYPES = ("order", "cone_pair", "presentation")


@dataclass
class InputDocument:
    version: str
    objects: dict


def _reject_float(text):
    raise InputError(f"floating point literal {text!r}; use integers or \"p/q\" strings")


def _rat_from_json(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{where}: bad rational {value!r}") from exc
    raise InputError(f"{where}: expected a rational, got {type(value).__name__}")


def rational_to_json(value: Fraction):
    value = Fraction(value)
    return int(value) if value.denominator == 1 else str(value)


def _int_from_json(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer")
    return value


def _check_keys(spec: dict, allowed, where: str) -> None:
    extra = set(spec) - set(allowed)
    if extra:
        raise InputError(f"{where}: unknown keys {sorted(extra)}")


def _parse_order(name: str, spec: dict) -> OrderSpec:
    _check_keys(spec, ("type", "ramification"), name)
    data = spec.get("ramification")
    if not isinstance(data, list) or not data:
        raise InputError(f"{name}: ramification must be a nonempty list")
    ramification = []
    for entry in data:
        if not isinstance(entry, dict):
            raise InputError(f"{name}: ramification entries must be objects")
        _check_keys(entry, ("prime", "e", "blocks"), name)
        prime = entry.get("prime")
        if not isinstance(prime, str) or not prime:
            raise InputError(f"{name}: ramification entry needs a prime name")
        e = _int_from_json(entry.get("e"), f"{name}.e")
        blocks = entry.get("blocks", [1] * e)
        if not isinstance(blocks, list):
            raise InputError(f"{name}: blocks must be a list")
        blocks = tuple(_int_from_json(b, f"{name}.blocks") for b in blocks)
        try:
            ramification.append(RamificationDatum(prime, e, blocks))
        except ValueError as exc:
            raise InputError(f"{name}: {exc}") from exc
    try:
        return OrderSpec(name, tuple(ramification))
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from exc


def _parse_cone_pair(name: str, spec: dict) -> ConePair:
    _check_keys(spec, ("type", "lattice", "rays", "boundary"), name)
    rays = spec.get("rays")
    if not isinstance(rays, list) or not rays:
        raise InputError(f"{name}: rays must be a nonempty list of vectors")
    parsed_rays = []
    for ray in rays:
        if not isinstance(ray, list):
            raise InputError(f"{name}: each ray must be a list")
        parsed_rays.append(tuple(_int_from_json(x, f"{name}.rays") for x in ray))
    basis_raw = spec.get("lattice")
    if basis_raw is None:
        lattice = Lattice.standard(len(parsed_rays[0]))
    else:
        if not isinstance(basis_raw, list):
            raise InputError(f"{name}: lattice must be a list of basis vectors")
        basis = []
        for row in basis_raw:
            if not isinstance(row, list):
                raise InputError(f"{name}: lattice basis vectors must be lists")
            basis.append(tuple(_rat_from_json(x, f"{name}.lattice") for x in row))
        try:
            lattice = Lattice(tuple(basis))
        except ValueError as exc:
            raise InputError(f"{name}: {exc}") from exc
    boundary = spec.get("boundary")
    if boundary is None:
        boundary = [0] * len(parsed_rays)
    if not isinstance(boundary, list):
        raise InputError(f"{name}: boundary must be a list of rationals")
    coeffs = tuple(_rat_from_json(x, f"{name}.boundary") for x in boundary)
    try:
        cone = Cone.from_rays(parsed_rays, lattice)
        return ConePair(cone, ToricDivisor(coeffs))
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from exc


def _parse_presentation(name: str, spec: dict) -> RewriteSystem:
    _check_keys(spec, ("type", "generators", "weights", "rules"), name)
    generators = spec.get("generators")
    if (
        not isinstance(generators, list)
        or not generators
        or any(not isinstance(g, str) for g in generators)
    ):
        raise InputError(f"{name}: generators must be a nonempty list of names")
    weights = spec.get("weights")
    if weights is not None:
        if not isinstance(weights, list):
            raise InputError(f"{name}: weights must be a list of integers")
        weights = tuple(_int_from_json(w, f"{name}.weights") for w in weights)
    rules_raw = spec.get("rules")
    if not isinstance(rules_raw, list):
        raise InputError(f"{name}: rules must be a list")
    rules = []
    for entry in rules_raw:
        if not isinstance(entry, dict):
            raise InputError(f"{name}: each rule must be an object")
        _check_keys(entry, ("lhs", "rhs"), name)
        lhs_text, rhs_text = entry.get("lhs"), entry.get("rhs")
        if not isinstance(lhs_text, str) or not isinstance(rhs_text, str):
            raise InputError(f"{name}: rule lhs and rhs must be strings")
        lhs_poly = parse_poly(lhs_text, generators)
        lhs_terms = lhs_poly.terms()
        if len(lhs_terms) != 1 or lhs_terms[0][1] != 1 or not lhs_terms[0][0]:
            raise InputError(f"{name}: rule lhs {lhs_text!r} must be a single plain word")
        rules.append((lhs_terms[0][0], parse_poly(rhs_text, generators)))
    try:
        return RewriteSystem(tuple(generators), tuple(rules), weights)
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from exc


def parse_document(data) -> InputDocument:
    """Validate a decoded JSON document and build the typed objects."""
    if not isinstance(data, dict):
        raise InputError("document must be a JSON object")
    _check_keys(data, ("version", "objects"), "document")
    version = data.get("version")
    if version != VERSION:
        raise InputError(f"unsupported document version {version!r}; expected {VERSION!r}")
    objects_raw = data.get("objects")
    if not isinstance(objects_raw, dict) or not objects_raw:
        raise InputError("document needs a nonempty objects map")
    objects = {}
    for name, spec in objects_raw.items():
        if not isinstance(spec, dict):
            raise InputError(f"{name}: object must be a JSON object")
        kind = spec.get("type")
        if kind == "order":
            objects[name] = _parse_order(name, spec)
        elif kind == "cone_pair":
            objects[name] = _parse_cone_pair(name, spec)
        elif kind == "presentation":
            objects[name] = _parse_presentation(name, spec)
        else:
            raise InputError(f"{name}: unknown type {kind!r}; expected one of {_TYPES}")
    return InputDocument(version, objects)


def loads(text: str) -> InputDocument:
    try:
        data = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return parse_document(data)


def load_path(path: str) -> InputDocument:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def _serialize_order(spec: OrderSpec) -> dict:
    return {
        "type": "order",
        "ramification": [
            {"prime": r.prime_id, "e": r.e, "blocks": list(r.blocks)}
            for r in spec.ramification
        ],
    }


def _serialize_cone_pair(pair: ConePair) -> dict:
    return {
        "type": "cone_pair",
        "lattice": [[rational_to_json(x) for x in row] for row in pair.cone.lattice.basis],
        "rays": [list(ray) for ray in pair.cone.rays],
        "boundary": [rational_to_json(c) for c in pair.boundary.coeffs],
    }


def _serialize_presentation(system: RewriteSystem) -> dict:
    return {
        "type": "presentation",
        "generators": list(system.generators),
        "weights": list(system.weights),
        "rules": [{"lhs": "*".join(lhs), "rhs": str(rhs)} for lhs, rhs in system.rules],
    }


def serialize_document(doc: InputDocument) -> str:
    """Canonical JSON text; parse(serialize(doc)) reproduces the objects."""
    objects = {}
    for name, obj in doc.objects.items():
        if isinstance(obj, OrderSpec):
            objects[name] = _serialize_order(obj)
        elif isinstance(obj, ConePair):
            objects[name] = _serialize_cone_pair(obj)
        elif isinstance(obj, RewriteSystem):
            objects[name] = _serialize_presentation(obj)
        else:
            raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps({"version": doc.version, "objects": objects}, indent=2) + "\n"


def select_object(doc: InputDocument, want: str, name=None):
    """Fetch the named object, or the unique object of the wanted type."""
    classes = {"order": OrderSpec, "cone_pair": ConePair, "presentation": RewriteSystem}
    if want not in classes:
        raise ValueError(f"unknown object type {want!r}")
    if name is not None:
        if name not in doc.objects:
            raise InputError(f"document has no object named {name!r}")
        obj = doc.objects[name]
        if not isinstance(obj, classes[want]):
            raise InputError(f"object {name!r} is not of type {want!r}")
        return obj
    matches = [n for n, obj in doc.objects.items() if isinstance(obj, classes[want])]
    if len(matches) == 1:
        return doc.objects[matches[0]]
    if not matches:
        raise InputError(f"document has no object of type {want!r}")
    raise InputError(
        f"document has several objects of type {want!r} ({', '.join(sorted(matches))}); "
        "pick one with FILE#name"
    )
