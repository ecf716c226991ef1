"""JSON schemas for every CLI input type, served by `--schema <name>`.

These are draft-07 style documents, kept deliberately plain; the CLI
performs its own validation and uses these for documentation.
"""

from __future__ import annotations

_NAT = {"type": "integer", "minimum": 0}
_POS = {"type": "integer", "minimum": 1}
_NAT_VECTOR = {"type": "array", "items": _NAT}
_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    ]
}

SCHEMAS: dict[str, dict] = {
    "polynomial": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "polynomial",
        "type": "object",
        "required": ["nvars", "terms"],
        "properties": {
            "nvars": _NAT,
            "terms": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["exp", "coef"],
                    "properties": {
                        "exp": _NAT_VECTOR,
                        "coef": {"type": "string", "pattern": "^-?[0-9]+$"},
                    },
                },
            },
        },
    },
    "rank_function": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "rank_function",
        "type": "object",
        "required": ["p", "values"],
        "properties": {
            "p": _POS,
            "values": {
                "type": "array",
                "items": {"type": "integer"},
                "description": "2^p entries indexed by subset bitmask",
            },
        },
    },
    "support": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "support",
        "type": "object",
        "required": ["p", "points"],
        "properties": {
            "p": _POS,
            "points": {"type": "array", "items": _NAT_VECTOR},
        },
    },
    "subspace_family": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "subspace_family",
        "type": "object",
        "required": ["ambient", "subspaces"],
        "properties": {
            "ambient": _NAT,
            "field": {"type": "string", "pattern": "^(Q|Fp:[0-9]+)$", "default": "Q"},
            "subspaces": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
            },
        },
    },
    "permutation": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "permutation",
        "type": "object",
        "required": ["one_line"],
        "properties": {"p": _POS, "one_line": {"type": "array", "items": _POS}},
    },
    "diagram": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "diagram",
        "type": "object",
        "required": ["p", "cells"],
        "properties": {
            "p": _POS,
            "cells": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": _POS,
                    "minItems": 2,
                    "maxItems": 2,
                    "description": "[row, col], 1-indexed",
                },
            },
        },
    },
    "monomial_ideal": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "monomial_ideal",
        "type": "object",
        "required": ["nvars", "p", "degrees", "generators"],
        "properties": {
            "nvars": _POS,
            "p": _POS,
            "degrees": {"type": "array", "items": _NAT_VECTOR},
            "generators": {"type": "array", "items": _NAT_VECTOR},
        },
    },
    "simplicial_complex": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "simplicial_complex",
        "type": "object",
        "required": ["nverts", "facets"],
        "properties": {
            "nverts": _POS,
            "facets": {"type": "array", "items": {"type": "array", "items": _POS}},
        },
    },
    "polytope": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "polytope",
        "type": "object",
        "required": ["d", "vertices"],
        "properties": {
            "d": {"type": "integer", "minimum": 1, "maximum": 3},
            "vertices": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
        },
    },
    "polytope_tuple": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "polytope_tuple",
        "type": "object",
        "required": ["polytopes"],
        "properties": {
            "polytopes": {"type": "array", "items": {"$ref": "#/definitions/polytope"}},
            "n": _NAT_VECTOR,
        },
        "definitions": {
            "polytope": {
                "type": "object",
                "required": ["d", "vertices"],
                "properties": {
                    "d": {"type": "integer", "minimum": 1, "maximum": 3},
                    "vertices": {
                        "type": "array",
                        "items": {"type": "array", "items": _RATIONAL},
                    },
                },
            }
        },
    },
    "mixed_volume_table": {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "mixed_volume_table",
        "type": "object",
        "required": ["d", "p", "entries"],
        "properties": {
            "d": _POS,
            "p": _POS,
            "entries": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["n", "v"],
                    "properties": {"n": _NAT_VECTOR, "v": _RATIONAL},
                },
            },
        },
    },
}
