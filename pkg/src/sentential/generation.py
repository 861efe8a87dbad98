"""Sets generated from a base by operations, freeness audits, and folds.

The generated set is usually infinite, so everything here works on finite
stages: stage 0 is the base and stage d+1 adds every operation applied to
elements of stage d. Each element remembers the first derivation found,
which is what `fold` recurses on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Optional, Sequence

from .core import BINARY_CONNECTIVES, Connective, Expression, SentenceSymbol, build
from .errors import CapExceededError, MissingRuleError, NotInStageError
from .evaluation import connective_table

__all__ = [
    "GenOp",
    "GeneratorSystem",
    "BaseElem",
    "Built",
    "GeneratedStage",
    "Witness",
    "FreeReport",
    "generate",
    "check_closed",
    "check_free",
    "fold",
    "fold_stage",
    "lsl_system",
    "lsl_base_map",
    "lsl_truth_rules",
]

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class GenOp:
    """An ``arity``-ary operation on the universe; arity 0 is a constant."""

    name: str
    arity: int
    apply: Callable[..., Hashable] = field(compare=False)

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError("arity must be non-negative")


@dataclass(frozen=True)
class GeneratorSystem:
    base: tuple
    ops: tuple[GenOp, ...]
    show: Callable[[Any], str] = field(default=str, compare=False)

    def __post_init__(self):
        names = [op.name for op in self.ops]
        if len(set(names)) != len(names):
            raise ValueError(f"operation names must be distinct: {names}")
        object.__setattr__(self, "base", tuple(dict.fromkeys(self.base)))

    def op(self, name: str) -> GenOp:
        for op in self.ops:
            if op.name == name:
                return op
        raise KeyError(name)


@dataclass(frozen=True)
class BaseElem:
    pass


@dataclass(frozen=True)
class Built:
    op: str
    args: tuple


Provenance = BaseElem | Built


@dataclass(frozen=True)
class GeneratedStage:
    """Stage ``depth`` of the generated set.

    ``provenance`` is ordered by discovery, and ``layers[d]`` is the number
    of elements already present at stage ``d``.
    """

    depth: int
    provenance: Mapping[Any, Provenance]
    layers: tuple[int, ...]

    @property
    def elements(self) -> frozenset:
        return frozenset(self.provenance)

    def ordered(self) -> list:
        return list(self.provenance)

    def layer(self, d: int) -> list:
        """Elements first reached at stage ``d``."""
        start = self.layers[d - 1] if d else 0
        return list(itertools.islice(self.provenance, start, self.layers[d]))

    def upto(self, d: int) -> list:
        """Elements of stage ``d``, in discovery order."""
        return list(itertools.islice(self.provenance, self.layers[d]))

    def __contains__(self, x) -> bool:
        return x in self.provenance

    def __len__(self) -> int:
        return len(self.provenance)

    def __iter__(self) -> Iterator:
        return iter(self.provenance)


def _applications(ops: Sequence[GenOp], elems: Sequence) -> Iterator[tuple[GenOp, tuple, Any]]:
    for op in ops:
        for args in itertools.product(elems, repeat=op.arity):
            yield op, args, op.apply(*args)


def generate(
    sys: GeneratorSystem,
    depth: int,
    cap: int = DEFAULT_CAP,
    keep: Optional[Callable[[Any], bool]] = None,
) -> GeneratedStage:
    """Build stages 0..depth; `CapExceededError` once more than ``cap`` elements exist.

    With ``keep``, results it rejects are dropped, so the stages are those of
    the set generated inside the sub-universe ``keep`` describes. This makes
    a deep stage reachable when only a few of its elements matter.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if cap < 1:
        raise ValueError("cap must be positive")
    prov: dict[Any, Provenance] = {}
    for b in sys.base:
        prov[b] = BaseElem()
        if len(prov) > cap:
            raise CapExceededError(0, len(prov), cap)
    layers = [len(prov)]
    for d in range(1, depth + 1):
        previous = list(prov)
        for op, args, result in _applications(sys.ops, previous):
            if result not in prov and (keep is None or keep(result)):
                prov[result] = Built(op.name, args)
                if len(prov) > cap:
                    raise CapExceededError(d, len(prov), cap)
        layers.append(len(prov))
    return GeneratedStage(depth, prov, tuple(layers))


@dataclass(frozen=True)
class Witness:
    """An operation application that leaves a candidate set."""

    op: str
    args: tuple
    result: Any


def check_closed(
    candidate: Iterable,
    sys: GeneratorSystem,
    stage: GeneratedStage,
    within_stage: bool = True,
) -> Optional[Witness]:
    """Search for an application whose arguments lie in ``candidate`` but whose
    result does not.

    Only results inside the stage count unless ``within_stage`` is false.
    Returns None when no such application exists, otherwise the first one
    found (ops in declaration order, arguments in discovery order).
    """
    members = set(candidate)
    if not members <= stage.elements:
        raise ValueError("candidate must be a subset of the stage")
    ordered = [x for x in stage if x in members]
    for op, args, result in _applications(sys.ops, ordered):
        if result not in members and (result in stage or not within_stage):
            return Witness(op.name, args, result)
    return None


@dataclass(frozen=True)
class InjectivityViolation:
    """One operation sends two argument tuples to the same result."""

    op: str
    args: tuple
    other_args: tuple
    result: Any


@dataclass(frozen=True)
class BaseCollision:
    """An operation returns a base element."""

    op: str
    args: tuple
    result: Any


@dataclass(frozen=True)
class RangeOverlap:
    """Two operations share a result."""

    op: str
    args: tuple
    other_op: str
    other_args: tuple
    result: Any


@dataclass(frozen=True)
class FreeReport:
    injectivity: tuple[InjectivityViolation, ...] = ()
    base_collisions: tuple[BaseCollision, ...] = ()
    range_overlaps: tuple[RangeOverlap, ...] = ()

    @property
    def is_free(self) -> bool:
        return not (self.injectivity or self.base_collisions or self.range_overlaps)

    def counts(self) -> tuple[int, int, int]:
        return len(self.injectivity), len(self.base_collisions), len(self.range_overlaps)


def check_free(stage: GeneratedStage, sys: GeneratorSystem) -> FreeReport:
    """Audit the applications that built ``stage`` for the three freeness conditions.

    Arguments range over the previous stage, so auditing stage d+1 covers
    every argument tuple drawn from stage d. Stage 0 involves no
    applications and is trivially free.
    """
    if stage.depth == 0:
        return FreeReport()
    base = set(sys.base)
    # result -> {op name: first args}
    seen: dict[Any, dict[str, tuple]] = {}
    f1, f2, f3 = [], [], []
    for op, args, result in _applications(sys.ops, stage.upto(stage.depth - 1)):
        if result in base:
            f2.append(BaseCollision(op.name, args, result))
        by_op = seen.setdefault(result, {})
        if op.name in by_op:
            f1.append(InjectivityViolation(op.name, by_op[op.name], args, result))
            continue
        for other, other_args in by_op.items():
            f3.append(RangeOverlap(other, other_args, op.name, args, result))
        by_op[op.name] = args
    return FreeReport(tuple(f1), tuple(f2), tuple(f3))


def fold(
    x,
    stage: GeneratedStage,
    h: Mapping[Any, Any],
    rules: Mapping[str, Callable[..., Any]],
    memo: Optional[dict] = None,
):
    """Extend ``h`` from the base to ``x`` along recorded derivations.

    Base elements map through ``h``; an element built as ``f(x1..xn)`` maps
    to ``rules[f](fold(x1), .., fold(xn))``. Pass the same ``memo`` dict to
    share work between calls over one stage.
    """
    if x not in stage:
        raise NotInStageError(x)
    memo = {} if memo is None else memo
    # iterative post-order so deep elements cannot exhaust the call stack
    todo = [x]
    while todo:
        y = todo[-1]
        if y in memo:
            todo.pop()
            continue
        p = stage.provenance[y]
        if isinstance(p, BaseElem):
            memo[y] = h[y]
            todo.pop()
            continue
        missing = [a for a in p.args if a not in memo]
        if missing:
            todo.extend(missing)
            continue
        try:
            rule = rules[p.op]
        except KeyError:
            raise MissingRuleError(p.op) from None
        memo[y] = rule(*(memo[a] for a in p.args))
        todo.pop()
    return memo[x]


def fold_stage(stage: GeneratedStage, h: Mapping, rules: Mapping[str, Callable]) -> dict:
    """Fold every element of the stage; returns element -> value."""
    memo: dict = {}
    for x in stage:
        fold(x, stage, h, rules, memo)
    return memo


# The sentential-logic instance


def _lsl_op(c: Connective) -> GenOp:
    return GenOp(c.name.lower(), c.arity, lambda *args: build(c, *args))


def lsl_system(S: Iterable[int]) -> GeneratorSystem:
    """Base: the sentence symbols in ``S``; operations: the five builders."""
    indices = sorted(set(S))
    if not indices:
        raise ValueError("S must be nonempty")
    base = tuple(Expression((SentenceSymbol(n),)) for n in indices)
    ops = tuple(_lsl_op(c) for c in (Connective.NEG,) + BINARY_CONNECTIVES)
    return GeneratorSystem(base, ops)


def lsl_base_map(v: Mapping[int, Any]) -> dict[Expression, Any]:
    """Turn an assignment keyed by symbol index into a map on base elements."""
    return {Expression((SentenceSymbol(n),)): v[n] for n in v}


def lsl_truth_rules() -> dict[str, Callable]:
    """Rules giving each builder the truth function of its connective."""
    return {
        c.name.lower(): (lambda *vals, c=c: connective_table(c, *vals))
        for c in (Connective.NEG,) + BINARY_CONNECTIVES
    }
