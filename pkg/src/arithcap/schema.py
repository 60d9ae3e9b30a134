"""JSON scenario schema and conversion of validated payloads to library objects.

Indices in scenario files (orbits, generators) are 1-based; the library is
0-based.
"""

from __future__ import annotations

import jsonschema

from .adelic import RadiusAssignment
from .errors import SchemaError
from .green import GreensMatrix

_number = {"type": "number"}
_rational = {"type": ["string", "number"], "description": "number, or exact rational as 'p/q'"}
_pos_int = {"type": "integer", "minimum": 1}
_matrix = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "minItems": 1, "items": _number},
}
_radii = {
    "type": "array",
    "description": "list of {place, value}; place is 'inf' or a prime; unlisted places have radius 1",
    "items": {
        "type": "object",
        "required": ["place", "value"],
        "additionalProperties": False,
        "properties": {
            "place": {"type": ["string", "integer"]},
            "value": _rational,
        },
    },
}
_tolerances = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        k: {"type": "number", "exclusiveMinimum": 0}
        for k in ("pivot", "minor_rel", "cond_max", "equal_components", "symmetry", "check", "archimedean")
    }
    | {"symmetry": {"type": "number", "minimum": 0}},
}
_candidate = {
    "type": "object",
    "required": ["degree", "multiplicity", "radii"],
    "additionalProperties": False,
    "properties": {
        "d": _pos_int,
        "degree": _pos_int,
        "multiplicity": _pos_int,
        "radii": _radii,
        "contained": {"type": "boolean", "description": "caller's certificate that the pullback lies in the set"},
    },
}


def _kind(name: str, required: list[str], properties: dict) -> dict:
    props = {"kind": {"const": name}, "id": {"type": ["string", "integer"]}, "tolerances": _tolerances}
    props.update(properties)
    return {
        "type": "object",
        "required": ["kind", *required],
        "additionalProperties": False,
        "properties": props,
    }


KINDS = {
    "green": _kind("green", ["entries"], {
        "entries": _matrix,
        "orbits": {"type": "array", "items": {"type": "array", "minItems": 1, "items": _pos_int}},
        "generators": {"type": "array", "items": {"type": "array", "items": _pos_int}},
        "s": {"type": "array", "items": {"type": "number", "minimum": 0}},
        "equilibrium": {"enum": ["auto", "always", "never"]},
    }),
    "game": _kind("game", ["entries"], {"entries": _matrix, "shift": _number}),
    "polydisk": _kind("polydisk", ["d", "radii"], {"d": _pos_int, "radii": _radii}),
    "pullback": _kind("pullback", ["d", "degree", "multiplicity", "radii"], {
        "d": _pos_int,
        "degree": _pos_int,
        "multiplicity": _pos_int,
        "radii": _radii,
        "divisor_degree": {"type": "number", "exclusiveMinimum": 0},
    }),
    "fm_bound": _kind("fm_bound", ["d", "candidates"], {
        "d": _pos_int,
        "candidates": {"type": "array", "items": _candidate},
    }),
    "compare": _kind("compare", ["d", "target", "candidates"], {
        "d": _pos_int,
        "target": _candidate,
        "candidates": {"type": "array", "items": _candidate},
    }),
    "witness": _kind("witness", ["d", "radii"], {
        "d": _pos_int,
        "radii": _radii,
        "count": {"type": "integer", "minimum": 0},
    }),
    "exponents": _kind("exponents", ["points"], {
        "points": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 0}},
        },
        "coefficients": {"type": "array", "items": _rational},
    }),
    "charpoly": _kind("charpoly", ["entries"], {
        "entries": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 1, "items": _rational},
        },
    }),
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "arithcap scenario",
    "description": "A scenario object, or an array of them.",
    "$defs": {name: spec for name, spec in KINDS.items()},
    "oneOf": [
        {"$ref": "#/$defs/scenario"},
        {"type": "array", "items": {"$ref": "#/$defs/scenario"}},
    ],
}
SCHEMA["$defs"]["scenario"] = {
    "type": "object",
    "required": ["kind"],
    "properties": {"kind": {"enum": sorted(KINDS)}},
}


def _field_path(err: jsonschema.ValidationError) -> str:
    path = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
    return path.lstrip(".") or "<root>"


def validate_scenario(obj) -> None:
    """Raise SchemaError naming the offending field."""
    if not isinstance(obj, dict):
        raise SchemaError("scenario must be an object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"field 'kind': expected one of {sorted(KINDS)}, got {kind!r}")
    validator = jsonschema.Draft202012Validator(KINDS[kind])
    errors = sorted(validator.iter_errors(obj), key=lambda e: (len(e.absolute_path), str(e.absolute_path)))
    if errors:
        err = errors[0]
        if err.validator == "required":
            missing = [f for f in err.validator_value if f not in (err.instance or {})]
            where = _field_path(err)
            prefix = "" if where == "<root>" else where + "."
            raise SchemaError(f"missing required field '{prefix}{missing[0]}'")
        raise SchemaError(f"field '{_field_path(err)}': {err.message}")
    entries = obj.get("entries")
    if entries is not None and len({len(row) for row in entries} | {len(entries)}) != 1:
        raise SchemaError("field 'entries': matrix must be square")


def radii_from_json(d: int, items) -> RadiusAssignment:
    return RadiusAssignment.from_mapping(d, [(it["place"], it["value"]) for it in items])


def greens_from_json(obj) -> GreensMatrix:
    n = len(obj["entries"])
    orbits = obj.get("orbits")
    if orbits is not None:
        orbits = [[i - 1 for i in block] for block in orbits]
    gens = [[i - 1 for i in g] for g in obj.get("generators", [])]
    if any(len(g) != n for g in gens):
        raise SchemaError(f"field 'generators': each permutation must list {n} images")
    return GreensMatrix(obj["entries"], orbits, tuple(gens))
