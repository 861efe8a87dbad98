"""Construction sequences and their justifications.

Steps are numbered from 1, as in the usual presentation
``<e_1, ..., e_n>``; a justification refers to earlier steps by number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from random import Random
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .core import (
    BINARY_CONNECTIVES,
    Connective,
    Expression,
    Paren,
    SentenceSymbol,
    build_binary,
    build_neg,
)
from .errors import InvalidExpressionError, InvalidSequenceError, ParseError
from .parser import Atom, Not, Wff, as_expression, parse, sentence_symbols

__all__ = [
    "BySymbol",
    "ByNeg",
    "ByBinary",
    "Justification",
    "Step",
    "ConstructionSequence",
    "validate",
    "construct",
    "construct_randomized",
    "combine",
    "negate",
    "is_s_based",
    "in_s_bar",
    "parse_sequence_text",
    "format_justification",
    "format_sequence",
]


@dataclass(frozen=True)
class BySymbol:
    pass


@dataclass(frozen=True)
class ByNeg:
    j: int


@dataclass(frozen=True)
class ByBinary:
    conn: Connective
    j: int
    k: int


Justification = Union[BySymbol, ByNeg, ByBinary]


class Step(NamedTuple):
    expr: Expression
    just: Justification


@dataclass(frozen=True)
class ConstructionSequence:
    """A nonempty, fully justified sequence of expressions.

    The constructor checks every justification, so an instance is always a
    valid construction sequence.
    """

    steps: tuple[Step, ...]

    def __post_init__(self):
        if not self.steps:
            raise InvalidSequenceError(1, "a construction sequence is nonempty")
        for i, (expr, just) in enumerate(self.steps, start=1):
            reason = self._check(i, expr, just)
            if reason:
                raise InvalidSequenceError(i, reason)

    def _check(self, i: int, expr: Expression, just: Justification) -> str | None:
        if isinstance(just, BySymbol):
            if len(expr) == 1 and isinstance(expr[0], SentenceSymbol):
                return None
            return f"{expr} is not a sentence symbol"
        refs = (just.j,) if isinstance(just, ByNeg) else (just.j, just.k)
        if any(not 1 <= r < i for r in refs):
            return f"justification {just} does not refer to earlier steps"
        if isinstance(just, ByNeg):
            expected = build_neg(self.steps[just.j - 1].expr)
        else:
            expected = build_binary(
                just.conn, self.steps[just.j - 1].expr, self.steps[just.k - 1].expr
            )
        return None if expected == expr else f"{expr} does not follow by {just}"

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def exprs(self) -> tuple[Expression, ...]:
        return tuple(s.expr for s in self.steps)

    @property
    def justifications(self) -> tuple[Justification, ...]:
        return tuple(s.just for s in self.steps)

    @property
    def last(self) -> Expression:
        return self.steps[-1].expr

    def prefix(self, i: int) -> ConstructionSequence:
        """The first ``i`` steps, itself a construction sequence."""
        return ConstructionSequence(self.steps[:i])


def validate(exprs: Iterable[Union[Expression, str]]) -> ConstructionSequence:
    """Justify each expression from earlier ones.

    When several earlier steps qualify the smallest numbers are recorded.
    Raises `InvalidSequenceError` naming the first unjustifiable step.
    """
    steps: list[Step] = []
    first_at: dict[Expression, int] = {}
    for i, raw in enumerate(exprs, start=1):
        expr = as_expression(raw)
        if not expr:
            raise InvalidExpressionError(f"step {i} is empty")
        just = _justify(expr, first_at, i)
        if just is None:
            raise InvalidSequenceError(
                i, f"{expr} is neither a sentence symbol nor built from earlier steps"
            )
        steps.append(Step(expr, just))
        first_at.setdefault(expr, i)
    if not steps:
        raise InvalidSequenceError(1, "a construction sequence is nonempty")
    return ConstructionSequence(tuple(steps))


def _justify(expr: Expression, first_at: dict, i: int) -> Justification | None:
    if len(expr) == 1:
        return BySymbol() if isinstance(expr[0], SentenceSymbol) else None
    if len(expr) < 4 or expr[0] is not Paren.LEFT or expr[-1] is not Paren.RIGHT:
        return None
    candidates = []
    if expr[1] is Connective.NEG:
        j = first_at.get(expr[2:-1])
        if j is not None:
            candidates.append(ByNeg(j))
    # Operands are earlier steps and every step is balanced, so a binary split
    # can only sit at a connective preceded by a balanced stretch.
    balance = 0
    for p in range(1, len(expr) - 1):
        sym = expr[p]
        if sym is Paren.LEFT:
            balance += 1
        elif sym is Paren.RIGHT:
            balance -= 1
            if balance < 0:
                break
        elif balance == 0 and p > 1 and sym in BINARY_CONNECTIVES:
            j = first_at.get(expr[1:p])
            k = first_at.get(expr[p + 1 : -1]) if j is not None else None
            if k is not None:
                candidates.append(ByBinary(sym, j, k))
    if not candidates:
        return None
    return min(candidates, key=lambda c: (c.j, getattr(c, "k", 0)))


def construct(w: Wff) -> ConstructionSequence:
    """Canonical construction sequence for ``w``.

    Sentence symbols come first in index order, then compound subformulas
    in post-order; each distinct subformula appears once.
    """
    steps: list[Step] = []
    index: dict[Wff, int] = {}
    for n in sorted(sentence_symbols(w)):
        steps.append(Step(Expression((SentenceSymbol(n),)), BySymbol()))
        index[Atom(n)] = len(steps)

    def emit(node: Wff) -> int:
        if node in index:
            return index[node]
        if isinstance(node, Not):
            j = emit(node.child)
            steps.append(Step(build_neg(steps[j - 1].expr), ByNeg(j)))
        else:
            j = emit(node.left)
            k = emit(node.right)
            expr = build_binary(node.conn, steps[j - 1].expr, steps[k - 1].expr)
            steps.append(Step(expr, ByBinary(node.conn, j, k)))
        index[node] = len(steps)
        return index[node]

    emit(w)
    return ConstructionSequence(tuple(steps))


_MAX_SEED = 2**64


def construct_randomized(w: Wff, seed: int) -> ConstructionSequence:
    """A seed-determined construction sequence ending in ``render(w)``.

    Subformulas are emitted in a random dependency-respecting order, with
    occasional repeated steps and unrelated wffs over the same symbols mixed
    in before the final step.
    """
    if not 0 <= seed < _MAX_SEED:
        raise ValueError("seed must be a 64-bit unsigned integer")
    rng = Random(seed)

    # distinct proper subformulas with their children
    children: dict[Wff, tuple[Wff, ...]] = {}

    def collect(node: Wff) -> None:
        if node in children:
            return
        if isinstance(node, Atom):
            children[node] = ()
        elif isinstance(node, Not):
            collect(node.child)
            children[node] = (node.child,)
        else:
            collect(node.left)
            collect(node.right)
            children[node] = (node.left, node.right)

    collect(w)
    pending = [n for n in children if n != w]
    symbols = sorted(sentence_symbols(w))
    extras_left = rng.randint(0, max(1, len(children) // 2))

    steps: list[Step] = []
    at: dict[Wff, int] = {}

    def append(node: Wff) -> None:
        steps.append(Step(_node_expr(node, steps, at), _node_just(node, at)))
        at.setdefault(node, len(steps))

    def ready(node: Wff) -> bool:
        return node not in at and all(c in at for c in children[node])

    while pending:
        roll = rng.random()
        if steps and roll < 0.15:
            src = rng.randrange(len(steps))
            steps.append(steps[src])
            continue
        if roll < 0.3 and extras_left:
            extras_left -= 1
            steps.append(_extra_step(rng, steps, sorted(at.values()), symbols))
            continue
        choices = [n for n in pending if ready(n)]
        node = rng.choice(choices)
        pending.remove(node)
        append(node)
    append(w)
    return ConstructionSequence(tuple(steps))


def _node_expr(node: Wff, steps: list[Step], at: dict[Wff, int]) -> Expression:
    if isinstance(node, Atom):
        return Expression((SentenceSymbol(node.index),))
    if isinstance(node, Not):
        return build_neg(steps[at[node.child] - 1].expr)
    return build_binary(
        node.conn, steps[at[node.left] - 1].expr, steps[at[node.right] - 1].expr
    )


def _node_just(node: Wff, at: dict[Wff, int]) -> Justification:
    if isinstance(node, Atom):
        return BySymbol()
    if isinstance(node, Not):
        return ByNeg(at[node.child])
    return ByBinary(node.conn, at[node.left], at[node.right])


def _extra_step(
    rng: Random, steps: list[Step], sources: Sequence[int], symbols: Sequence[int]
) -> Step:
    # operands are drawn from subformula steps only, so extras never nest
    if not sources or rng.random() < 0.3:
        return Step(Expression((SentenceSymbol(rng.choice(symbols)),)), BySymbol())
    j = rng.choice(sources)
    if rng.random() < 0.3:
        return Step(build_neg(steps[j - 1].expr), ByNeg(j))
    k = rng.choice(sources)
    c = rng.choice(BINARY_CONNECTIVES)
    return Step(build_binary(c, steps[j - 1].expr, steps[k - 1].expr), ByBinary(c, j, k))


def _shift(just: Justification, offset: int) -> Justification:
    if isinstance(just, ByNeg):
        return ByNeg(just.j + offset)
    if isinstance(just, ByBinary):
        return ByBinary(just.conn, just.j + offset, just.k + offset)
    return just


def combine(
    a: ConstructionSequence, b: ConstructionSequence, c: Connective
) -> ConstructionSequence:
    """``a`` then ``b`` then ``(last(a) c last(b))``; repeats are kept."""
    n = len(a)
    steps = list(a.steps)
    steps.extend(Step(s.expr, _shift(s.just, n)) for s in b.steps)
    steps.append(Step(build_binary(c, a.last, b.last), ByBinary(c, n, n + len(b))))
    return ConstructionSequence(tuple(steps))


def negate(a: ConstructionSequence) -> ConstructionSequence:
    """``a`` followed by ``(!last(a))``."""
    return ConstructionSequence(a.steps + (Step(build_neg(a.last), ByNeg(len(a))),))


def _symbols_in(cs: ConstructionSequence) -> set[int]:
    return {
        sym.index for expr in cs.exprs for sym in expr if isinstance(sym, SentenceSymbol)
    }


def is_s_based(cs: ConstructionSequence, S: Iterable[int]) -> bool:
    return _symbols_in(cs) <= set(S)


def in_s_bar(e: Union[Expression, str], S: Iterable[int]) -> bool:
    """Whether ``e`` is a wff all of whose sentence symbols lie in ``S``."""
    try:
        w = parse(e)
    except ParseError:
        return False
    return sentence_symbols(w) <= set(S)


_COMMENT = re.compile(r"#.*")


def parse_sequence_text(text: str) -> list[Expression]:
    """One expression per line; blank lines and ``#`` comments are skipped."""
    exprs = []
    for line in text.splitlines():
        line = _COMMENT.sub("", line).strip()
        if line:
            exprs.append(as_expression(line))
    return exprs


def format_justification(just: Justification) -> str:
    if isinstance(just, BySymbol):
        return "symbol"
    if isinstance(just, ByNeg):
        return f"neg {just.j}"
    return f"{just.conn.name.lower()} {just.j} {just.k}"


def format_sequence(cs: ConstructionSequence) -> str:
    num_width = len(str(len(cs)))
    expr_width = max(len(str(e)) for e in cs.exprs)
    return "\n".join(
        f"{i:>{num_width}}  {str(expr):<{expr_width}}  {format_justification(just)}"
        for i, (expr, just) in enumerate(cs.steps, start=1)
    )
