"""Tokenizing, parsing and rendering fully parenthesized formulas.

A `Wff` is a parse tree with three node shapes: `Atom`, `Not` and `Bin`.
`parse` and `render` are mutually inverse, which is the executable form of
unique readability: each wff has exactly one tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from random import Random
from typing import Iterator, Sequence, Union

from .core import (
    BINARY_CONNECTIVES,
    Connective,
    Expression,
    Paren,
    SentenceSymbol,
    build_binary,
    build_neg,
)
from .errors import ArityError, InvalidExpressionError, LexError, ParseError

__all__ = [
    "Wff",
    "Atom",
    "Not",
    "Bin",
    "AtomCase",
    "NegCase",
    "AndCase",
    "OrCase",
    "ImpliesCase",
    "IffCase",
    "Case",
    "tokenize",
    "as_expression",
    "parse",
    "decompose",
    "render",
    "sentence_symbols",
    "depth",
    "size",
    "format_tree",
    "all_wffs",
    "random_wff",
]


@dataclass(frozen=True, slots=True)
class Atom:
    index: int

    def __post_init__(self):
        if isinstance(self.index, bool) or not isinstance(self.index, int) or self.index < 1:
            raise InvalidExpressionError(f"atom index must be >= 1, got {self.index!r}")

    def __str__(self) -> str:
        return f"A{self.index}"


@dataclass(frozen=True, slots=True)
class Not:
    child: Wff

    def __str__(self) -> str:
        return str(render(self))


@dataclass(frozen=True, slots=True)
class Bin:
    conn: Connective
    left: Wff
    right: Wff

    def __post_init__(self):
        if self.conn.arity != 2:
            raise ArityError(f"{self.conn.name} is not a binary connective")

    def __str__(self) -> str:
        return str(render(self))


Wff = Union[Atom, Not, Bin]


# The six cases of unique readability.


@dataclass(frozen=True)
class AtomCase:
    index: int


@dataclass(frozen=True)
class NegCase:
    child: Wff


@dataclass(frozen=True)
class _BinaryCase:
    left: Wff
    right: Wff


class AndCase(_BinaryCase):
    pass


class OrCase(_BinaryCase):
    pass


class ImpliesCase(_BinaryCase):
    pass


class IffCase(_BinaryCase):
    pass


Case = Union[AtomCase, NegCase, AndCase, OrCase, ImpliesCase, IffCase]

_BINARY_CASES = {
    Connective.AND: AndCase,
    Connective.OR: OrCase,
    Connective.IMPLIES: ImpliesCase,
    Connective.IFF: IffCase,
}


# Lexing

_TOKEN = re.compile(r"\s+|<->|->|[()!&|¬∧∨→↔]|A([0-9]*)")

_FIXED = {
    "(": Paren.LEFT,
    ")": Paren.RIGHT,
    "!": Connective.NEG,
    "¬": Connective.NEG,
    "&": Connective.AND,
    "∧": Connective.AND,
    "|": Connective.OR,
    "∨": Connective.OR,
    "->": Connective.IMPLIES,
    "→": Connective.IMPLIES,
    "<->": Connective.IFF,
    "↔": Connective.IFF,
}


def tokenize(text: str) -> Expression:
    """Split text into symbols by maximal munch.

    ASCII (``! & | -> <->``) and Unicode (``¬ ∧ ∨ → ↔``) connectives are
    both accepted; whitespace between symbols is ignored.
    """
    symbols = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise LexError(pos, f"unknown character {text[pos]!r}")
        tok = m.group()
        if tok[0] == "A":
            digits = m.group(1)
            if not digits:
                raise LexError(pos, "sentence symbol 'A' needs an index")
            if digits[0] == "0":
                raise LexError(pos, f"bad sentence symbol index {digits!r}")
            symbols.append(SentenceSymbol(int(digits)))
        elif not tok.isspace():
            symbols.append(_FIXED[tok])
        pos = m.end()
    if not symbols:
        raise LexError(0, "empty input")
    return Expression(symbols)


def as_expression(e: Union[str, Sequence]) -> Expression:
    """Accept either formula text or a sequence of symbols."""
    if isinstance(e, str):
        return tokenize(e)
    if isinstance(e, Expression):
        return e
    return Expression.of(e)


# Parsing


def parse(e: Union[str, Sequence]) -> Wff:
    """Parse an expression (or formula text) into its unique `Wff`.

    Raises `ParseError` with the zero-based symbol index of the failure.
    """
    expr = as_expression(e)
    if not expr:
        raise InvalidExpressionError("expression must be nonempty")
    w, pos = _parse_at(expr, 0)
    if pos != len(expr):
        raise ParseError(pos, f"trailing symbols starting with {expr[pos]}")
    return w


def _describe(expr: Expression, pos: int) -> str:
    return "end of input" if pos == len(expr) else repr(str(expr[pos]))


def _parse_at(expr: Expression, pos: int) -> tuple[Wff, int]:
    if pos == len(expr):
        raise ParseError(pos, "unexpected end of input")
    sym = expr[pos]
    if isinstance(sym, SentenceSymbol):
        return Atom(sym.index), pos + 1
    if sym is not Paren.LEFT:
        raise ParseError(pos, f"expected a sentence symbol or '(', found {_describe(expr, pos)}")
    pos += 1
    if pos < len(expr) and expr[pos] is Connective.NEG:
        child, pos = _parse_at(expr, pos + 1)
        return Not(child), _expect_right(expr, pos)
    left, pos = _parse_at(expr, pos)
    conn = expr[pos] if pos < len(expr) else None
    if conn not in BINARY_CONNECTIVES:
        raise ParseError(pos, f"expected a binary connective, found {_describe(expr, pos)}")
    right, pos = _parse_at(expr, pos + 1)
    return Bin(conn, left, right), _expect_right(expr, pos)


def _expect_right(expr: Expression, pos: int) -> int:
    if pos < len(expr) and expr[pos] is Paren.RIGHT:
        return pos + 1
    if pos == len(expr):
        raise ParseError(pos, "unclosed '(' at end of input")
    raise ParseError(pos, f"expected ')', found {_describe(expr, pos)}")


def decompose(w: Wff) -> Case:
    """Return the one unique-readability case that ``w`` falls under."""
    match w:
        case Atom(index=n):
            return AtomCase(n)
        case Not(child=b):
            return NegCase(b)
        case Bin(conn=c, left=b, right=g):
            return _BINARY_CASES[c](b, g)
    raise TypeError(f"not a wff: {w!r}")


def render(w: Wff) -> Expression:
    """The expression a tree stands for, built with the core builders."""
    match w:
        case Atom(index=n):
            return Expression((SentenceSymbol(n),))
        case Not(child=b):
            return build_neg(render(b))
        case Bin(conn=c, left=b, right=g):
            return build_binary(c, render(b), render(g))
    raise TypeError(f"not a wff: {w!r}")


def sentence_symbols(w: Wff) -> frozenset[int]:
    found = set()
    stack = [w]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            found.add(node.index)
        elif isinstance(node, Not):
            stack.append(node.child)
        else:
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


def depth(w: Wff) -> int:
    """Number of levels in the tree; a lone sentence symbol has depth 1."""
    if isinstance(w, Atom):
        return 1
    if isinstance(w, Not):
        return 1 + depth(w.child)
    return 1 + max(depth(w.left), depth(w.right))


def size(w: Wff) -> int:
    """Number of nodes in the tree."""
    if isinstance(w, Atom):
        return 1
    if isinstance(w, Not):
        return 1 + size(w.child)
    return 1 + size(w.left) + size(w.right)


def format_tree(w: Wff, indent: str = "  ") -> str:
    lines = []

    def walk(node: Wff, level: int) -> None:
        pad = indent * level
        if isinstance(node, Atom):
            lines.append(f"{pad}A{node.index}")
        elif isinstance(node, Not):
            lines.append(f"{pad}{Connective.NEG.value}")
            walk(node.child, level + 1)
        else:
            lines.append(f"{pad}{node.conn.value}")
            walk(node.left, level + 1)
            walk(node.right, level + 1)

    walk(w, 0)
    return "\n".join(lines)


# Enumeration and sampling


def _exact_depth_layers(symbols: Sequence[int], max_depth: int) -> Iterator[list[Wff]]:
    layer = [Atom(n) for n in sorted(set(symbols))]
    below: list[Wff] = []
    for d in range(1, max_depth + 1):
        yield layer
        if d == max_depth:
            return
        upto = below + layer
        nxt: list[Wff] = [Not(x) for x in layer]
        for c in BINARY_CONNECTIVES:
            # at least one operand comes from the newest layer
            nxt.extend(Bin(c, x, y) for x in layer for y in upto)
            nxt.extend(Bin(c, x, y) for x in below for y in layer)
        below, layer = upto, nxt


def all_wffs(symbols: Sequence[int], max_depth: int) -> list[Wff]:
    """Every wff over ``symbols`` of depth at most ``max_depth``, shallow first."""
    out: list[Wff] = []
    for layer in _exact_depth_layers(symbols, max_depth):
        out.extend(layer)
    return out


_ALL_CONNECTIVES = (Connective.NEG,) + BINARY_CONNECTIVES


def random_wff(
    rng: Random,
    symbols: Sequence[int],
    max_depth: int,
    leaf_prob: float = 0.25,
) -> Wff:
    """Draw a wff of depth at most ``max_depth`` from ``rng``."""
    if max_depth <= 1 or rng.random() < leaf_prob:
        return Atom(rng.choice(symbols))
    c = rng.choice(_ALL_CONNECTIVES)
    if c is Connective.NEG:
        return Not(random_wff(rng, symbols, max_depth - 1, leaf_prob))
    return Bin(
        c,
        random_wff(rng, symbols, max_depth - 1, leaf_prob),
        random_wff(rng, symbols, max_depth - 1, leaf_prob),
    )
