"""Symbols, expressions and the five formula-building operations.

Every symbol is a ``str`` instance whose value is its canonical ASCII text,
so an expression renders with ``"".join(expr)`` and hashes at C speed.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Union

from .errors import ArityError, InvalidExpressionError

__all__ = [
    "SentenceSymbol",
    "Paren",
    "Connective",
    "BINARY_CONNECTIVES",
    "Symbol",
    "Expression",
    "build_neg",
    "build_binary",
    "build",
    "is_balanced",
    "paren_depth",
]


class SentenceSymbol(str):
    """The sentence symbol ``A<index>``, index >= 1."""

    __slots__ = ()

    def __new__(cls, index: int) -> SentenceSymbol:
        if isinstance(index, bool) or not isinstance(index, int) or index < 1:
            raise InvalidExpressionError(
                f"sentence symbol index must be a positive integer, got {index!r}"
            )
        return super().__new__(cls, f"A{index}")

    @property
    def index(self) -> int:
        return int(self[1:])

    def __getnewargs__(self):
        return (self.index,)

    def __repr__(self) -> str:
        return f"SentenceSymbol({self.index})"


class Paren(str, Enum):
    LEFT = "("
    RIGHT = ")"

    def __str__(self) -> str:
        return self.value


class Connective(str, Enum):
    """A sentential connective; doubles as the symbol written for it."""

    NEG = "!"
    AND = "&"
    OR = "|"
    IMPLIES = "->"
    IFF = "<->"

    @property
    def arity(self) -> int:
        return 1 if self is Connective.NEG else 2

    def __str__(self) -> str:
        return self.value


BINARY_CONNECTIVES = (
    Connective.AND,
    Connective.OR,
    Connective.IMPLIES,
    Connective.IFF,
)

Symbol = Union[SentenceSymbol, Paren, Connective]

_LEFT = Paren.LEFT
_RIGHT = Paren.RIGHT
_NEG = Connective.NEG


class Expression(tuple):
    """A finite sequence of symbols.

    Compares equal to any tuple holding the same symbols; ``str()`` gives
    the canonical ASCII text.
    """

    __slots__ = ()

    def __str__(self) -> str:
        return "".join(self)

    def __repr__(self) -> str:
        return f"Expression({''.join(self)!r})"

    @classmethod
    def of(cls, symbols: Iterable[Symbol]) -> Expression:
        """Build an expression, checking every item is a symbol."""
        expr = cls(symbols)
        for sym in expr:
            if not isinstance(sym, (SentenceSymbol, Paren, Connective)):
                raise InvalidExpressionError(f"not a symbol: {sym!r}")
        return expr


def _require_nonempty(e: tuple) -> None:
    if not e:
        raise InvalidExpressionError("expression must be nonempty")


def build_neg(a: Expression) -> Expression:
    """Return ``(!a)``."""
    _require_nonempty(a)
    return Expression((_LEFT, _NEG, *a, _RIGHT))


def build_binary(c: Connective, a: Expression, b: Expression) -> Expression:
    """Return ``(a c b)`` for a binary connective ``c``."""
    if c.arity != 2:
        raise ArityError(f"{c.name} is not a binary connective")
    _require_nonempty(a)
    _require_nonempty(b)
    return Expression((_LEFT, *a, c, *b, _RIGHT))


def build(c: Connective, *operands: Expression) -> Expression:
    """Apply the formula-building operation for ``c`` to its operands."""
    if len(operands) != c.arity:
        raise ArityError(
            f"{c.name} takes {c.arity} operand(s), got {len(operands)}"
        )
    if c is Connective.NEG:
        return build_neg(operands[0])
    return build_binary(c, *operands)


def paren_depth(e: Iterable[Symbol]) -> int:
    """Maximum parenthesis nesting depth; -1 if ``e`` is unbalanced."""
    depth = deepest = 0
    for sym in e:
        if sym == _LEFT:
            depth += 1
            deepest = max(deepest, depth)
        elif sym == _RIGHT:
            depth -= 1
            if depth < 0:
                return -1
    return deepest if depth == 0 else -1


def is_balanced(e: Iterable[Symbol]) -> bool:
    return paren_depth(e) >= 0
