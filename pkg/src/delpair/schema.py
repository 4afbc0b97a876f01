"""JSON schema for problem files (schema_version "1")."""

SCHEMA_VERSION = "1"

_int = {"type": "string", "pattern": r"^-?[0-9]+$"}
_field = {"type": "string", "pattern": r"^(QQ|GF\([0-9]+\))$"}

_divisor = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "horizontal": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["form"],
                "properties": {"form": {"type": "string"}, "mult": _int},
            },
        },
        "vertical": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["prime"],
                "properties": {"prime": {"type": "string"}, "mult": _int},
            },
        },
    },
}

_func = {
    "type": "object",
    "additionalProperties": False,
    "required": ["num", "den"],
    "properties": {"num": {"type": "string"}, "den": {"type": "string"}},
}

_bundle = {"type": "array", "items": _int, "minItems": 2, "maxItems": 2}

_common = {
    "schema_version": {"const": SCHEMA_VERSION},
    "seed": _int,
}

INTERSECT = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "command", "field", "task"],
    "properties": {
        **_common,
        "command": {"const": "intersect"},
        "field": _field,
        "task": {"enum": ["intersection_number", "total_multiplicity", "local_multiplicity"]},
        "ambient": {
            "type": "object",
            "additionalProperties": False,
            "required": ["N"],
            "properties": {"N": _int, "ideal": {"type": "array", "items": {"type": "string"}}},
        },
        "degrees": {"type": "array", "items": _int},
        "curves": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        "point": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
    },
}

DELIGNE = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "command", "task", "m"],
    "properties": {
        **_common,
        "command": {"const": "deligne"},
        "field": _field,
        "task": {"enum": ["pairing", "pullback", "n1-expansion", "det-chi", "restriction"]},
        "m": _int,
        "base": {"enum": ["P1", "point"]},
        "bundles": {"type": "array", "items": _bundle},
        "beta": _int,
        "A": {"type": "string"},
        "B": {"type": "string"},
    },
}

ARITH = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "command", "base", "task"],
    "properties": {
        **_common,
        "command": {"const": "arith"},
        "base": {"type": "string"},
        "task": {
            "enum": [
                "pairing",
                "local_decomposition",
                "principal_divisor",
                "norm",
                "weil",
                "intwithrat",
                "shift",
                "verify",
            ]
        },
        "D": _divisor,
        "E": _divisor,
        "f": _func,
        "g": _func,
        "prime": {"type": "string"},
        "suite": {"type": "string"},
        "n": _int,
    },
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "delpair problem file",
    "oneOf": [INTERSECT, DELIGNE, ARITH],
}
