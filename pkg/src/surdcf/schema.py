"""JSON Schemas for the machine-readable output of every CLI command.

Exact numbers travel as ``"n"`` or ``"n/d"`` strings so no precision is
lost on the wire; continued-fraction digits are JSON integers.
"""

from __future__ import annotations

RATIONAL_STRING = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}

_DIGIT_LIST = {"type": "array", "items": {"type": "integer"}}
_BLOCK = {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}}

VALUE_OBJECT = {
    "type": "object",
    "additionalProperties": False,
    "required": ["rational_part", "radicand", "sign"],
    "properties": {
        "rational_part": RATIONAL_STRING,
        "radicand": RATIONAL_STRING,
        "sign": {"enum": [1, -1]},
    },
}

EVAL_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["input", "value", "two_a", "epsilon", "frac_two_a", "equation", "theorem2"],
    "properties": {
        "input": {"type": "string"},
        "value": VALUE_OBJECT,
        "two_a": RATIONAL_STRING,
        "epsilon": RATIONAL_STRING,
        "frac_two_a": RATIONAL_STRING,
        "equation": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["a2", "a1", "a0"],
                    "properties": {
                        "a2": RATIONAL_STRING,
                        "a1": RATIONAL_STRING,
                        "a0": RATIONAL_STRING,
                    },
                },
            ]
        },
        "theorem2": {
            "type": "object",
            "additionalProperties": False,
            "required": ["int_two_a", "neg_cn", "palindrome"],
            "properties": {
                "int_two_a": {"type": "boolean"},
                "neg_cn": {"type": "boolean"},
                "palindrome": {"type": "boolean"},
            },
        },
    },
}

EXPAND_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["input", "cf", "initial", "repeating"],
    "properties": {
        "input": {"type": "string"},
        "cf": {"type": "string"},
        "initial": {"type": "array", "minItems": 1, "items": {"type": "integer"}},
        "repeating": _BLOCK,
    },
}

EPSILON_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["input", "block", "epsilon"],
    "properties": {
        "input": {"type": "string"},
        "block": _BLOCK,
        "epsilon": RATIONAL_STRING,
    },
}

ENUMERATE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "max_len",
        "max_digit",
        "blocks_checked",
        "violations",
        "epsilon_zero_count",
        "palindromic_prefix_count",
        "smoke_ok",
    ],
    "properties": {
        "max_len": {"type": "integer", "minimum": 1},
        "max_digit": {"type": "integer", "minimum": 1},
        "blocks_checked": {"type": "integer", "minimum": 0},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["block", "property"],
                "properties": {
                    "block": _BLOCK,
                    "property": {"enum": [f"P{i}" for i in range(1, 12)]},
                },
            },
        },
        "epsilon_zero_count": {"type": "integer", "minimum": 0},
        "palindromic_prefix_count": {"type": "integer", "minimum": 0},
        "smoke_ok": {"type": "boolean"},
    },
}

ROUNDTRIP_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["input", "value", "canonical", "reexpansion", "digits_compared", "pass"],
    "properties": {
        "input": {"type": "string"},
        "value": {"type": "string"},
        "canonical": {"type": "string"},
        "reexpansion": {"type": "string"},
        "digits_compared": {"type": "integer", "minimum": 1},
        "pass": {"type": "boolean"},
    },
}

SCHEMAS = {
    "eval": EVAL_SCHEMA,
    "expand": EXPAND_SCHEMA,
    "epsilon": EPSILON_SCHEMA,
    "enumerate": ENUMERATE_SCHEMA,
    "roundtrip": ROUNDTRIP_SCHEMA,
}
