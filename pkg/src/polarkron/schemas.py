"""JSON schemas for command outputs."""

from __future__ import annotations

from typing import Any

from .etable import ETABLE_SCHEMA

_NUM_OR_NULL = {"type": ["number", "null"]}

KERNEL_REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["l", "nonsingular", "triangularizable", "polarizing", "reason"],
    "properties": {
        "l": {"type": "integer", "minimum": 1},
        "nonsingular": {"type": "boolean"},
        "triangularizable": {"type": "boolean"},
        "polarizing": {"type": "boolean"},
        "reason": {"enum": [None, "singular", "triangularizable"]},
    },
}

MU_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["mu", "iterations", "converged", "lambda"],
    "properties": {
        "mu": _NUM_OR_NULL,
        "iterations": {"type": "integer", "minimum": 1},
        "converged": {"type": "boolean"},
        "lambda": {"type": "number"},
        "config": {"type": "object"},
    },
}

PARTIAL_DISTANCE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["l", "partial_distances", "labels"],
    "properties": {
        "l": {"type": "integer"},
        "partial_distances": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "labels": {"type": "array", "items": {"type": "string"}},
    },
}

SELF_DUAL_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["l", "self_dual", "dims"],
    "properties": {
        "l": {"type": "integer"},
        "self_dual": {"type": "boolean"},
        "dims": {"type": "array", "items": {"type": "integer"}},
        "witness": {"type": "object"},
    },
}

COMPARISON_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["a", "b", "compared", "mismatches"],
    "properties": {
        "compared": {"type": "integer"},
        "mismatches": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "w", "a", "b"],
                "properties": {k: {"type": "integer"} for k in ("i", "w", "a", "b")},
            },
        },
    },
}

SEARCH_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["base", "row", "candidates", "best"],
    "properties": {
        "base": {"type": "array", "items": {"type": "string"}},
        "row": {"type": "integer"},
        "candidates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["col", "valid", "mu"],
                "properties": {
                    "col": {"type": "integer"},
                    "valid": {"type": "boolean"},
                    "mu": _NUM_OR_NULL,
                },
            },
        },
        "best": {"type": ["integer", "null"]},
    },
}

MONTE_CARLO_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["z", "samples", "seed", "rng", "estimates", "stderr"],
    "properties": {
        "estimates": {"type": "array", "items": {"type": "number", "minimum": 0, "maximum": 1}},
        "stderr": {"type": "array", "items": {"type": "number", "minimum": 0}},
    },
}

PRODUCT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["kernel", "polarizing", "tables", "mu", "comparisons"],
    "properties": {
        "tables": {"type": "object", "additionalProperties": ETABLE_SCHEMA},
        "mu": {"type": "object", "additionalProperties": MU_SCHEMA},
        "comparisons": {"type": "object", "additionalProperties": COMPARISON_SCHEMA},
    },
}

__all__ = [
    "COMPARISON_SCHEMA",
    "ETABLE_SCHEMA",
    "KERNEL_REPORT_SCHEMA",
    "MONTE_CARLO_SCHEMA",
    "MU_SCHEMA",
    "PARTIAL_DISTANCE_SCHEMA",
    "PRODUCT_SCHEMA",
    "SEARCH_SCHEMA",
    "SELF_DUAL_SCHEMA",
]
