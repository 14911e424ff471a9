"""
Shared plumbing for the management commands: run configuration, polytope sources,
document builders with their pre-emission cross-checks, and exit codes.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from django.core.management.base import CommandError, OutputWrapper

from .ehrhart import count, ehrhart_poly, hstar_from_counts, hstar_from_values
from .exceptions import ExpressionError, InadmissiblePairError, InvariantViolation, LatticeError
from .dsl import parse
from .polytope import VPolytope, build, facets, vertices, volume_exact
from .reporting import csv_table, decimal_str, dumps, rat_str
from .results import BoundReport
from .schemas import validate
from .surface import facet_areas, euclid_surface, lattice_surface

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv')


@dataclass
class RunConfig:
    command: str
    expr: Optional[str] = None
    file: Optional[str] = None
    random: Optional[int] = None
    dim: Optional[int] = None
    box: int = 2
    points: Optional[int] = None
    seed: Optional[int] = None
    out: Optional[str] = None
    fmt: str = 'json'

    @classmethod
    def from_options(cls, command: str, options: Dict[str, Any]) -> 'RunConfig':
        return cls(
            command=command,
            expr=options.get('expr'),
            file=options.get('file'),
            random=options.get('random'),
            dim=options.get('dim'),
            box=options.get('box') or 2,
            points=options.get('points'),
            seed=options.get('seed'),
            out=options.get('out'),
            fmt=options.get('format') or 'json',
        )

    def validate(self, allow_random: bool = False) -> None:
        sources = [s for s in (self.expr, self.file, self.random) if s is not None]
        if len(sources) != 1:
            raise ExpressionError("give exactly one polytope source (--expr, --file"
                                  + (" or --random" if allow_random else "") + ")")
        if self.random is not None:
            if not allow_random:
                raise ExpressionError(f"{self.command} does not take a random corpus")
            if self.random < 1:
                raise ExpressionError(f"--random needs a positive corpus size, got {self.random}")
            if self.seed is None:
                raise ExpressionError("--seed is mandatory with --random")
            if self.dim is None:
                raise ExpressionError("--dim is mandatory with --random")
        if self.fmt not in FORMATS:
            raise ExpressionError(f"unknown format {self.fmt!r}")

    @property
    def corpus_points(self) -> int:
        return self.points if self.points is not None else (self.dim or 0) + 3


def load_polytope(config: RunConfig) -> Tuple[str, VPolytope]:
    """Label and polytope of a single (non-random) source."""
    if config.expr is not None:
        return config.expr, build(parse(config.expr))
    assert config.file is not None
    with open(config.file, encoding='utf-8') as handle:
        data = json.load(handle)
    try:
        validate('polytope', data)
    except InvariantViolation as exc:
        raise ExpressionError(f"{config.file}: {exc}") from exc
    return Path(config.file).name, VPolytope.from_json(data)


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, InadmissiblePairError):
        return 3
    if isinstance(exc, InvariantViolation):
        return 2
    return 1


def command_error(exc: BaseException) -> CommandError:
    logger.error(f"{type(exc).__name__}: {exc}")
    return CommandError(str(exc), returncode=exit_code(exc))


HANDLED = (LatticeError, OSError, json.JSONDecodeError)


def emit(stdout: OutputWrapper, text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding='utf-8')
        logger.info(f"Wrote {len(text)} bytes to {out}")
    else:
        stdout.write(text, ending='')


def hstar_document(label: str, polytope: VPolytope) -> Dict[str, Any]:
    d = polytope.dim
    poly = ehrhart_poly(polytope)
    h = hstar_from_counts(polytope)
    lattice_points = count(polytope, 1)
    interior = count(polytope, 1, strict=True)
    vol = poly.leading
    if h[1] != lattice_points - (d + 1):
        raise InvariantViolation(f"a_1 = {h[1]} but G(P) - (d+1) = {lattice_points - d - 1}")
    if h[d] != interior:
        raise InvariantViolation(f"a_d = {h[d]} but G(int P) = {interior}")
    if h.polynomial().coeffs != poly.coeffs:
        raise InvariantViolation("h*-expansion does not reproduce the interpolated Ehrhart polynomial")
    if sum(h.coeffs) != vol * factorial(d):
        raise InvariantViolation(f"sum a_i = {sum(h.coeffs)} but d! vol = {vol * factorial(d)}")
    return validate('hstar', {
        'polytope': polytope.to_json(),
        'source': label,
        'dim': d,
        'g': [rat_str(g) for g in poly.coeffs],
        'a': list(h.coeffs),
        'degree': h.degree,
        'volume': rat_str(vol),
        'lattice_points': lattice_points,
        'interior_points': interior,
    })


def count_document(label: str, polytope: VPolytope, k: int, strict: bool) -> Dict[str, Any]:
    return validate('count', {
        'source': label, 'dim': polytope.dim, 'k': k, 'strict': strict, 'count': count(polytope, k, strict),
    })


def surface_document(label: str, polytope: VPolytope, precision: int) -> Dict[str, Any]:
    surface = euclid_surface(polytope)
    lattice = lattice_surface(polytope)
    g = ehrhart_poly(polytope).g(polytope.dim - 1)
    if lattice != g:
        raise InvariantViolation(f"lattice surface {lattice} != g_(d-1) = {g}")
    return validate('surface', {
        'source': label,
        'dim': polytope.dim,
        'surface': surface.to_json(),
        'surface_decimal': decimal_str(surface.evaluate(precision)),
        'lattice_surface': rat_str(lattice),
        'facets': [f.to_json() for f in facet_areas(polytope)],
    })


def witness_document(a1: int, a2: int, polytope: VPolytope) -> Dict[str, Any]:
    h = hstar_from_counts(polytope)
    expected = (1, a1, a2) + (0,) * (polytope.dim - 2)
    if h.coeffs != expected:
        raise InvariantViolation(f"witness for ({a1}, {a2}) has h* {h.coeffs}")
    return validate('witness', {
        'a1': a1, 'a2': a2, 'polytope': polytope.to_json(), 'hstar': list(h.coeffs), 'verified': True,
    })


def construct_document(expression: str, polytope: VPolytope) -> Dict[str, Any]:
    vol = volume_exact(polytope)
    h = hstar_from_values(polytope.dim, [count(polytope, k) for k in range(polytope.dim + 1)])
    if sum(h.coeffs) != vol * factorial(polytope.dim):
        raise InvariantViolation(f"triangulated volume {vol} disagrees with the h*-vector {h.coeffs}")
    return validate('construct', {
        'expression': expression,
        'polytope': polytope.to_json(),
        'vertices': [list(v) for v in vertices(polytope)],
        'facets': [{'normal': list(f.normal), 'offset': f.offset} for f in facets(polytope).facets],
        'volume': rat_str(vol),
    })


def verify_document(suite: str, reports: Sequence[BoundReport]) -> Dict[str, Any]:
    ordered = sorted(reports, key=lambda r: r.polytope_id)
    violated = sum(1 for r in ordered if r.violated)
    return validate('verify', {
        'suite': suite, 'reports': [r.to_json() for r in ordered], 'violated': violated, 'clean': violated == 0,
    })


def render(kind: str, document: Dict[str, Any], fmt: str) -> str:
    if fmt == 'json':
        return dumps(document)
    header, rows = CSV_LAYOUTS[kind](document)
    return csv_table(header, rows)


def _hstar_rows(doc: Dict[str, Any]) -> Tuple[List[str], List[List[Any]]]:
    return (['i', 'g_exact', 'g_decimal', 'a'],
            [[i, g, decimal_str(Fraction(g)), a] for i, (g, a) in enumerate(zip(doc['g'], doc['a']))])


def _count_rows(doc: Dict[str, Any]) -> Tuple[List[str], List[List[Any]]]:
    return ['k', 'strict', 'count'], [[doc['k'], doc['strict'], doc['count']]]


def _surface_rows(doc: Dict[str, Any]) -> Tuple[List[str], List[List[Any]]]:
    rows = [[' '.join(map(str, f['normal'])), f['offset'], f['k'], f['lattice_area'],
             decimal_str(Fraction(f['lattice_area'])), _sqrt_text(f['euclid_area'])] for f in doc['facets']]
    return ['normal', 'offset', 'k', 'lattice_exact', 'lattice_decimal', 'euclid_exact'], rows


def _sqrt_text(terms: List[Dict[str, Any]]) -> str:
    return ' + '.join(t['q'] if t['n'] == 1 else f"{t['q']}*sqrt({t['n']})" for t in terms)


def _cell(value: Any) -> Tuple[str, str]:
    """Exact text and decimal text of a rendered report value."""
    if isinstance(value, str) and value:
        return (value, value) if '.' in value else (value, decimal_str(Fraction(value)))
    if isinstance(value, list) and value and isinstance(value[0], dict):
        return _sqrt_text(value), ''
    if isinstance(value, list):
        return ' '.join(map(str, value)), ''
    return ('' if value is None else str(value)), ''


def _verify_rows(doc: Dict[str, Any]) -> Tuple[List[str], List[List[Any]]]:
    rows = []
    for report in doc['reports']:
        for e in report['entries'] or [{'index': '', 'name': '', 'sense': '', 'bound': '', 'actual': '',
                                        'verdict': report['verdict']}]:
            rows.append([report['id'], report['polytope'], report['suite'], e['index'], e['name'], e['sense'],
                         *_cell(e['bound']), *_cell(e['actual']), e['verdict']])
    return (['id', 'polytope', 'suite', 'index', 'name', 'sense', 'bound_exact', 'bound_decimal',
             'actual_exact', 'actual_decimal', 'verdict'], rows)


def _generator_rows(doc: Dict[str, Any]) -> Tuple[List[str], List[List[Any]]]:
    gens = doc['polytope']['generators']
    return [f'x{j + 1}' for j in range(doc['polytope']['dim'])], [list(g) for g in gens]


CSV_LAYOUTS = {
    'hstar': _hstar_rows,
    'count': _count_rows,
    'surface': _surface_rows,
    'verify': _verify_rows,
    'witness': _generator_rows,
    'construct': _generator_rows,
}


def add_source_arguments(parser: Any, allow_random: bool = False) -> None:
    """Polytope source and output flags shared by every command."""
    parser.add_argument('--expr', help='Construction expression, e.g. "join(T(2,3),S(3,1))"')
    parser.add_argument('--file', help='Polytope JSON document {"dim": d, "generators": [...]}')
    if allow_random:
        parser.add_argument('--random', type=int, metavar='N', help='Verify a seeded corpus of N random polytopes')
        parser.add_argument('--dim', type=int, help='Dimension of the random corpus')
        parser.add_argument('--box', type=int, default=2, help='Coordinates are drawn from [-B, B] (default: 2)')
        parser.add_argument('--points', type=int, help='Points sampled per polytope (default: dim + 3)')
        parser.add_argument('--seed', type=int, help='Corpus seed, mandatory with --random')
    parser.add_argument('--out', help='Write the document to PATH instead of stdout')
    parser.add_argument('--format', choices=FORMATS, default='json', help='Output format (default: json)')
