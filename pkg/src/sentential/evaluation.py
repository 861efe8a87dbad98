"""Truth assignments and the two evaluators.

`h_eval` reads the value off the last entry of the truth-value sequence
associated with a construction sequence. `recursive_eval` recurses over the
parse tree. They share nothing but `connective_table`, so agreement
between them is meaningful evidence.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Mapping
from enum import Enum
from typing import Iterable, Iterator, Optional

from .construction import BySymbol, ByNeg, ConstructionSequence, construct
from .core import Connective
from .errors import (
    ArityError,
    AssignmentFormatError,
    NotSBasedError,
    SymbolOutOfDomainError,
)
from .parser import Atom, Bin, Not, Wff, sentence_symbols

__all__ = [
    "TruthValue",
    "T",
    "F",
    "TruthAssignment",
    "TruthSequence",
    "connective_table",
    "truth_sequence",
    "h_eval",
    "recursive_eval",
    "all_assignments",
    "truth_table",
    "is_tautology",
    "parse_assignment_text",
]


class TruthValue(Enum):
    F = False
    T = True

    @classmethod
    def of(cls, flag: bool) -> TruthValue:
        return cls.T if flag else cls.F

    def __bool__(self) -> bool:
        return self.value

    def __lt__(self, other):
        if not isinstance(other, TruthValue):
            return NotImplemented
        return self.value < other.value

    def __str__(self) -> str:
        return self.name


T = TruthValue.T
F = TruthValue.F

TruthSequence = tuple[TruthValue, ...]


class TruthAssignment(Mapping):
    """A truth assignment ``v: S -> {T, F}``; its keys are the set ``S``.

    Lookups outside ``S`` raise `SymbolOutOfDomainError` rather than
    defaulting to anything.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[int, TruthValue] | Iterable = ()):
        table = dict(values)
        for n, tv in table.items():
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise ValueError(f"sentence symbol index must be >= 1, got {n!r}")
            if not isinstance(tv, TruthValue):
                raise TypeError(f"A{n} must map to a TruthValue, got {tv!r}")
        self._values = table

    def __getitem__(self, n: int) -> TruthValue:
        try:
            return self._values[n]
        except KeyError:
            raise SymbolOutOfDomainError(n) from None

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._values))

    def __len__(self) -> int:
        return len(self._values)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self._values)

    def __repr__(self) -> str:
        body = ", ".join(f"A{n}={self._values[n]}" for n in self)
        return f"TruthAssignment({body})"


def connective_table(
    c: Connective, a: TruthValue, b: Optional[TruthValue] = None
) -> TruthValue:
    """The truth function of a connective."""
    if (b is None) != (c.arity == 1):
        raise ArityError(f"{c.name} takes {c.arity} truth value(s)")
    if c is Connective.NEG:
        return F if a is T else T
    if c is Connective.AND:
        return T if a is T and b is T else F
    if c is Connective.OR:
        return F if a is F and b is F else T
    if c is Connective.IMPLIES:
        return F if a is T and b is F else T
    return T if a is b else F


def truth_sequence(cs: ConstructionSequence, v: Mapping[int, TruthValue]) -> TruthSequence:
    """The truth values associated with each step of ``cs`` under ``v``."""
    taus: list[TruthValue] = []
    for expr, just in cs.steps:
        if isinstance(just, BySymbol):
            n = expr[0].index
            try:
                taus.append(v[n])
            except KeyError:
                raise NotSBasedError(n) from None
        elif isinstance(just, ByNeg):
            taus.append(connective_table(Connective.NEG, taus[just.j - 1]))
        else:
            taus.append(connective_table(just.conn, taus[just.j - 1], taus[just.k - 1]))
    return tuple(taus)


def _check_domain(w: Wff, v: Mapping[int, TruthValue]) -> None:
    for n in sorted(sentence_symbols(w)):
        if n not in v:
            raise SymbolOutOfDomainError(n)


def h_eval(w: Wff, v: Mapping[int, TruthValue]) -> TruthValue:
    """Value of ``w`` read off the last entry of a truth-value sequence.

    Any construction sequence for ``w`` gives the same answer; the
    canonical one is used.
    """
    _check_domain(w, v)
    return truth_sequence(construct(w), v)[-1]


def recursive_eval(w: Wff, v: Mapping[int, TruthValue]) -> TruthValue:
    _check_domain(w, v)
    return _rec(w, v)


def _rec(w: Wff, v: Mapping[int, TruthValue]) -> TruthValue:
    match w:
        case Atom(index=n):
            return v[n]
        case Not(child=b):
            return connective_table(Connective.NEG, _rec(b, v))
        case Bin(conn=c, left=b, right=g):
            return connective_table(c, _rec(b, v), _rec(g, v))
    raise TypeError(f"not a wff: {w!r}")


def all_assignments(symbols: Iterable[int]) -> Iterator[TruthAssignment]:
    """Every assignment over ``symbols``: F before T, highest index fastest."""
    order = sorted(set(symbols))
    for values in itertools.product((F, T), repeat=len(order)):
        yield TruthAssignment(zip(order, values))


def truth_table(w: Wff) -> list[tuple[TruthAssignment, TruthValue]]:
    return [(v, recursive_eval(w, v)) for v in all_assignments(sentence_symbols(w))]


def is_tautology(w: Wff) -> bool:
    return all(value is T for _, value in truth_table(w))


_ASSIGNMENT_LINE = re.compile(r"A([1-9][0-9]*)\s*=\s*([TF])")


def parse_assignment_text(text: str) -> TruthAssignment:
    """Read ``A<n>=T`` / ``A<n>=F`` lines; the keys present form ``S``."""
    values: dict[int, TruthValue] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _ASSIGNMENT_LINE.fullmatch(line)
        if m is None:
            raise AssignmentFormatError(f"line {lineno}: expected A<n>=T or A<n>=F")
        n = int(m.group(1))
        if n in values:
            raise AssignmentFormatError(f"line {lineno}: A{n} assigned twice")
        values[n] = TruthValue[m.group(2)]
    return TruthAssignment(values)
