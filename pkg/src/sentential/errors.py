"""Exception hierarchy shared by every module of the package."""


class SententialError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidExpressionError(SententialError, ValueError):
    """An expression is empty or contains something that is not a symbol."""


class ArityError(SententialError, ValueError):
    """A connective was used with the wrong number of operands."""


class LexError(SententialError, ValueError):
    """Raised by `tokenize` on text that is not a sequence of symbols.

    Attributes:
        position: zero-based character offset of the offending input.
    """

    def __init__(self, position: int, reason: str):
        super().__init__(f"position {position}: {reason}")
        self.position = position
        self.reason = reason


class ParseError(SententialError, ValueError):
    """Raised by `parse` on an expression that is not a wff.

    Attributes:
        position: zero-based symbol index where parsing failed; equal to the
            expression length when the input ended too early.
    """

    def __init__(self, position: int, reason: str):
        super().__init__(f"position {position}: {reason}")
        self.position = position
        self.reason = reason


class InvalidSequenceError(SententialError, ValueError):
    """A construction sequence has a step with no valid justification.

    Attributes:
        step: one-based number of the first failing step.
    """

    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


class SymbolOutOfDomainError(SententialError, KeyError):
    """A sentence symbol was looked up outside the domain of an assignment.

    Subclasses KeyError so `TruthAssignment` behaves as a `Mapping`.
    """

    def __init__(self, index: int):
        super().__init__(index)
        self.index = index

    def __str__(self) -> str:
        return f"A{self.index} is not in the domain of the truth assignment"


class NotSBasedError(SymbolOutOfDomainError):
    """A construction sequence uses a sentence symbol the assignment lacks."""

    def __str__(self) -> str:
        return f"sequence is not S-based: A{self.index} is not assigned"


class AssignmentFormatError(SententialError, ValueError):
    """Malformed assignment file text."""


class CapExceededError(SententialError):
    """Stage generation grew past its element cap.

    Attributes:
        stage: the stage being built when the cap was hit.
        count: element count at that moment.
    """

    def __init__(self, stage: int, count: int, cap: int):
        super().__init__(
            f"stage {stage} exceeded the cap of {cap} elements ({count} so far)"
        )
        self.stage = stage
        self.count = count
        self.cap = cap


class NotInStageError(SententialError, KeyError):
    """An element was folded over a stage that does not contain it."""

    def __str__(self) -> str:
        return f"{self.args[0]} is not an element of the stage"


class MissingRuleError(SententialError, KeyError):
    """A fold met an operation with no associated rule."""

    def __str__(self) -> str:
        return f"no rule for operation {self.args[0]!r}"
