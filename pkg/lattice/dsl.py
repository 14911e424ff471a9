"""
Parser for construction expressions such as ``join(T(2,3),S(3,1))`` or ``pyr(pyr(T(3,4)))``.
"""

import re
from typing import Callable, Dict, List, Tuple, Union

from .exceptions import ExpressionError
from .polytope import (Box, ConstructionExpr, CrossOdd, CrossPolytope, Dilate, Join, Prism, Pyramid, S,
                       StdSimplex, SymCube, T, UnitCube)

_TOKEN = re.compile(r'\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[(),]))')

Arg = Union[int, ConstructionExpr]

# name -> (argument kinds, constructor); 'i' is an integer, 'e' a sub-expression
GRAMMAR: Dict[str, Tuple[str, Callable[..., ConstructionExpr]]] = {
    'S': ('ii', S),
    'T': ('ii', T),
    'simplex': ('i', StdSimplex),
    'unitcube': ('i', UnitCube),
    'symcube': ('i', SymCube),
    'cross': ('i', CrossPolytope),
    'crossodd': ('ii', CrossOdd),
    'box': ('ii', Box),
    'join': ('ee', Join),
    'prism': ('ei', Prism),
    'pyr': ('e', Pyramid),
    'dilate': ('ei', Dilate),
}


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match:
            raise ExpressionError(f"unexpected character {stripped[pos]!r} at position {pos}")
        kind = match.lastgroup or ''
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> Tuple[str, str, int]:
        if self.pos >= len(self.tokens):
            return ('end', '', len(self.text))
        return self.tokens[self.pos]

    def _expect(self, value: str) -> None:
        kind, got, at = self._peek()
        if got != value or kind != 'punct':
            raise ExpressionError(f"expected {value!r} at position {at}, found {got or 'end of input'!r}")
        self.pos += 1

    def _integer(self) -> int:
        kind, got, at = self._peek()
        if kind != 'int':
            raise ExpressionError(f"expected an integer at position {at}, found {got or 'end of input'!r}")
        self.pos += 1
        return int(got)

    def expression(self) -> ConstructionExpr:
        kind, name, at = self._peek()
        if kind != 'name':
            raise ExpressionError(f"expected a construction name at position {at}, found {name or 'end of input'!r}")
        if name not in GRAMMAR:
            raise ExpressionError(f"unknown construction {name!r} at position {at}")
        self.pos += 1
        signature, constructor = GRAMMAR[name]
        self._expect('(')
        args: List[Arg] = []
        for n, slot in enumerate(signature):
            if n:
                self._expect(',')
            args.append(self._integer() if slot == 'i' else self.expression())
        self._expect(')')
        return constructor(*args)

    def parse(self) -> ConstructionExpr:
        expr = self.expression()
        kind, got, at = self._peek()
        if kind != 'end':
            raise ExpressionError(f"trailing input {got!r} at position {at}")
        return expr


def parse(text: str) -> ConstructionExpr:
    """Parse a construction expression; parameter checks surface as ExpressionError."""
    if not text or not text.strip():
        raise ExpressionError("empty expression")
    return _Parser(text).parse()
