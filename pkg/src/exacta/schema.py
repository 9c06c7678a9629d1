"""JSON schema for query files, with field-path error messages."""
from __future__ import annotations

import jsonschema

from .errors import MalformedInput

_int_matrix = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
_ref = {"oneOf": [{"type": "string"}, {"type": "object"}]}

OBJECT = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["setpt", "cmon", "group", "ab"]},
        "size": {"type": "integer", "minimum": 1},
        "table": _int_matrix,
        "preset": {"type": "string"},
        "rank": {"type": "integer", "minimum": 0},
        "relations": _int_matrix,
    },
    "allOf": [
        {"if": {"properties": {"kind": {"const": "setpt"}}}, "then": {"required": ["size"]}},
        {"if": {"properties": {"kind": {"const": "cmon"}}}, "then": {"required": ["table"]}},
        {"if": {"properties": {"kind": {"const": "group"}}},
         "then": {"oneOf": [{"required": ["table"]}, {"required": ["preset"]}]}},
        {"if": {"properties": {"kind": {"const": "ab"}}}, "then": {"required": ["rank"]}},
    ],
}

MORPHISM = {
    "type": "object",
    "required": ["dom", "cod"],
    "properties": {
        "dom": _ref,
        "cod": _ref,
        "table": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "matrix": _int_matrix,
    },
    "oneOf": [{"required": ["table"]}, {"required": ["matrix"]}],
}

COMPLEX = {
    "type": "object",
    "required": ["complex"],
    "properties": {
        "complex": {
            "type": "object",
            "required": ["lo", "objects"],
            "properties": {
                "lo": {"type": "integer"},
                "hi": {"type": "integer"},
                "objects": {"type": "array", "items": _ref, "minItems": 1},
                "d": {"type": "array", "items": _ref},
            },
        }
    },
}

_pair = {"type": "array", "items": _ref, "minItems": 2, "maxItems": 2}
_slot = {"oneOf": [_ref, {"type": "null"}]}
_maybe_pair = {"type": "array", "items": _slot, "minItems": 2, "maxItems": 2}
_three = {"type": "array", "items": _maybe_pair, "minItems": 3, "maxItems": 3}

GRID = {
    "type": "object",
    "required": ["grid"],
    "properties": {
        "grid": {
            "type": "object",
            "required": ["rows", "cols", "h", "v"],
            "properties": {
                "rows": {"const": 3},
                "cols": {"const": 3},
                "objects": {"type": "array", "items": _slot, "minItems": 9, "maxItems": 9},
                "h": _three,
                "v": _three,
            },
        }
    },
}

OPS = ["kernel", "cokernel", "factorize", "classify-map", "snake", "les", "3x3", "homology",
       "lambda", "meet", "join", "ext", "probe"]

QUERY = {
    "type": "object",
    "required": ["op"],
    "properties": {
        "op": {"enum": OPS},
        "map": _ref,
        "a": _ref,
        "b": _ref,
        "top": _pair,
        "bottom": _pair,
        "verticals": {"type": "array", "items": _ref, "minItems": 3, "maxItems": 3},
        "complex": _ref,
        "degree": {"type": "integer"},
        "A": _ref, "B": _ref, "C": _ref,
        "f": {"type": "array", "items": _ref},
        "g": {"type": "array", "items": _ref},
        "grid": {"oneOf": [{"type": "string"}, GRID["properties"]["grid"]]},
        "mode": {"enum": ["verify", "border", "middle"]},
        "pair": _pair,
        "quotient": _ref,
        "kernel": _ref,
        "cap": {"type": "integer", "minimum": 1},
        "axiom": {"enum": ["ann", "dpn", "hsd", "aen", "ksg", "pne", "ANN", "DPN", "HSD", "AEN", "KSG", "PNE"]},
        "max_size": {"type": "integer", "minimum": 1},
        "max_checks": {"type": "integer", "minimum": 1},
    },
    "allOf": [
        {"if": {"properties": {"op": {"enum": ["kernel", "cokernel", "factorize", "classify-map"]}}},
         "then": {"required": ["map"]}},
        {"if": {"properties": {"op": {"const": "snake"}}}, "then": {"required": ["top", "bottom", "verticals"]}},
        {"if": {"properties": {"op": {"const": "les"}}}, "then": {"required": ["A", "B", "C", "f", "g"]}},
        {"if": {"properties": {"op": {"const": "3x3"}}}, "then": {"oneOf": [{"required": ["grid"]}, {"required": ["pair"]}]}},
        {"if": {"properties": {"op": {"enum": ["homology", "lambda"]}}}, "then": {"required": ["complex"]}},
        {"if": {"properties": {"op": {"const": "lambda"}}}, "then": {"required": ["degree"]}},
        {"if": {"properties": {"op": {"enum": ["meet", "join"]}}}, "then": {"required": ["a", "b"]}},
        {"if": {"properties": {"op": {"const": "ext"}}}, "then": {"required": ["quotient", "kernel"]}},
        {"if": {"properties": {"op": {"const": "probe"}}}, "then": {"required": ["axiom", "max_size"]}},
    ],
}

FILE = {
    "type": "object",
    "required": ["category", "query"],
    "additionalProperties": False,
    "properties": {
        "category": {
            "type": "object",
            "required": ["kind"],
            "properties": {"kind": {"enum": ["setpt", "cmon", "group", "ab"]}},
        },
        "named": {
            "type": "object",
            "additionalProperties": {"anyOf": [MORPHISM, COMPLEX, GRID, OBJECT]},
        },
        "query": QUERY,
    },
}


def _path(err):
    parts = ["$"]
    for p in err.absolute_path:
        parts.append(f"[{p}]" if isinstance(p, int) else f".{p}")
    return "".join(parts)


def validate(doc) -> None:
    """Raise MalformedInput naming the offending field path."""
    errs = list(jsonschema.Draft202012Validator(FILE).iter_errors(doc))
    if not errs:
        return
    # the deepest error usually names the most specific field
    err = max(errs, key=lambda e: (len(e.absolute_path), -len(e.message)))
    while err.context:  # anyOf/oneOf: report the branch that got furthest
        err = max(err.context, key=lambda e: (len(e.absolute_path), -len(e.message)))
    raise MalformedInput(f"{_path(err)}: {err.message}")
