"""
Published JSON schemas for every document the commands emit.
"""

from typing import Any, Dict

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .exceptions import InvariantViolation

RAT = {'type': 'string', 'pattern': r'^-?\d+(/\d+)?$'}
DECIMAL = {'type': 'string', 'pattern': r'^-?\d+\.\d{12}$'}
INT_VEC = {'type': 'array', 'items': {'type': 'integer'}}
SQRT_SUM = {
    'type': 'array',
    'items': {
        'type': 'object',
        'required': ['q', 'n'],
        'properties': {'q': RAT, 'n': {'type': 'integer', 'minimum': 1}},
        'additionalProperties': False,
    },
}
POLYTOPE = {
    'type': 'object',
    'required': ['dim', 'generators'],
    'properties': {
        'dim': {'type': 'integer', 'minimum': 0},
        'generators': {'type': 'array', 'minItems': 1, 'items': INT_VEC},
    },
    'additionalProperties': False,
}
VERDICT = {'enum': ['holds', 'equality', 'violated', 'probe', 'counterexample-confirmed', 'not-applicable']}
BOUND_REPORT = {
    'type': 'object',
    'required': ['suite', 'polytope', 'id', 'kind', 'verdict', 'entries', 'notes'],
    'properties': {
        'suite': {'type': 'string'},
        'polytope': {'type': 'string'},
        'id': {'type': 'integer', 'minimum': 0},
        'kind': {'enum': ['theorem', 'probe']},
        'verdict': VERDICT,
        'entries': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['index', 'name', 'sense', 'bound', 'actual', 'slack', 'verdict'],
                'properties': {'index': {'type': 'integer'}, 'verdict': VERDICT},
            },
        },
        'notes': {'type': 'object'},
    },
}

SCHEMAS: Dict[str, Dict[str, Any]] = {
    'polytope': POLYTOPE,
    'hstar': {
        'type': 'object',
        'required': ['polytope', 'source', 'dim', 'g', 'a', 'degree', 'volume', 'lattice_points', 'interior_points'],
        'properties': {
            'polytope': POLYTOPE,
            'source': {'type': 'string'},
            'dim': {'type': 'integer', 'minimum': 1},
            'g': {'type': 'array', 'items': RAT},
            'a': {'type': 'array', 'items': {'type': 'integer', 'minimum': 0}},
            'degree': {'type': 'integer', 'minimum': 0},
            'volume': RAT,
            'lattice_points': {'type': 'integer', 'minimum': 1},
            'interior_points': {'type': 'integer', 'minimum': 0},
        },
        'additionalProperties': False,
    },
    'count': {
        'type': 'object',
        'required': ['source', 'dim', 'k', 'strict', 'count'],
        'properties': {
            'source': {'type': 'string'},
            'dim': {'type': 'integer', 'minimum': 1},
            'k': {'type': 'integer', 'minimum': 0},
            'strict': {'type': 'boolean'},
            'count': {'type': 'integer', 'minimum': 0},
        },
        'additionalProperties': False,
    },
    'surface': {
        'type': 'object',
        'required': ['source', 'dim', 'surface', 'surface_decimal', 'lattice_surface', 'facets'],
        'properties': {
            'source': {'type': 'string'},
            'dim': {'type': 'integer', 'minimum': 1},
            'surface': SQRT_SUM,
            'surface_decimal': DECIMAL,
            'lattice_surface': RAT,
            'facets': {
                'type': 'array',
                'items': {
                    'type': 'object',
                    'required': ['normal', 'offset', 'k', 'lattice_area', 'euclid_area'],
                    'properties': {
                        'normal': INT_VEC,
                        'offset': {'type': 'integer'},
                        'k': {'type': 'integer', 'minimum': 1},
                        'lattice_area': RAT,
                        'euclid_area': SQRT_SUM,
                    },
                },
            },
        },
        'additionalProperties': False,
    },
    'verify': {
        'type': 'object',
        'required': ['suite', 'reports', 'violated', 'clean'],
        'properties': {
            'suite': {'type': 'string'},
            'reports': {'type': 'array', 'items': BOUND_REPORT},
            'violated': {'type': 'integer', 'minimum': 0},
            'clean': {'type': 'boolean'},
        },
        'additionalProperties': False,
    },
    'witness': {
        'type': 'object',
        'required': ['a1', 'a2', 'polytope', 'hstar', 'verified'],
        'properties': {
            'a1': {'type': 'integer', 'minimum': 0},
            'a2': {'type': 'integer', 'minimum': 1},
            'polytope': POLYTOPE,
            'hstar': {'type': 'array', 'items': {'type': 'integer', 'minimum': 0}},
            'verified': {'const': True},
        },
        'additionalProperties': False,
    },
    'construct': {
        'type': 'object',
        'required': ['expression', 'polytope', 'vertices', 'facets', 'volume'],
        'properties': {
            'expression': {'type': 'string'},
            'polytope': POLYTOPE,
            'vertices': {'type': 'array', 'items': INT_VEC},
            'facets': {
                'type': 'array',
                'items': {
                    'type': 'object',
                    'required': ['normal', 'offset'],
                    'properties': {'normal': INT_VEC, 'offset': {'type': 'integer'}},
                    'additionalProperties': False,
                },
            },
            'volume': RAT,
        },
        'additionalProperties': False,
    },
}


def validate(kind: str, document: Dict[str, Any]) -> Dict[str, Any]:
    """Raise InvariantViolation on the first schema error; return the document otherwise."""
    error = best_match(Draft202012Validator(SCHEMAS[kind]).iter_errors(document))
    if error is not None:
        where = '.'.join(str(part) for part in error.path) or '<root>'
        raise InvariantViolation(f"{kind} document fails its schema at {where}: {error.message}")
    return document
