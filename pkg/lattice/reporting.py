"""
Rendering helpers: exact rational strings, fixed-point decimals and the JSON/CSV
writers every command shares.
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, Sequence, Union

import mpmath

DECIMAL_PLACES = 12


def rat_str(value: Union[int, Fraction]) -> str:
    q = Fraction(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fixed(scaled: int, places: int) -> str:
    sign = '-' if scaled < 0 else ''
    whole, frac = divmod(abs(scaled), 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}"


def decimal_str(value: Union[int, Fraction, mpmath.mpf], places: int = DECIMAL_PLACES) -> str:
    """Round to ``places`` decimals; rationals round exactly, mpf values at their precision."""
    if isinstance(value, (int, Fraction)):
        return _fixed(round(Fraction(value) * 10 ** places), places)
    with mpmath.workprec(max(mpmath.mp.prec, 128)):
        return _fixed(int(mpmath.nint(value * mpmath.mpf(10) ** places)), places)


def dumps(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def csv_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()
