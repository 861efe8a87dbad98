"""Sentential logic: wffs, construction sequences and truth evaluation."""

__version__ = "0.1.0"

from .core import (
    BINARY_CONNECTIVES,
    Connective,
    Expression,
    Paren,
    SentenceSymbol,
    build_binary,
    build_neg,
)
from .parser import (
    Atom,
    Bin,
    Not,
    Wff,
    decompose,
    parse,
    render,
    sentence_symbols,
    tokenize,
)
from .construction import (
    ConstructionSequence,
    combine,
    construct,
    construct_randomized,
    in_s_bar,
    is_s_based,
    validate,
)
from .evaluation import (
    F,
    T,
    TruthAssignment,
    TruthValue,
    connective_table,
    h_eval,
    is_tautology,
    recursive_eval,
    truth_sequence,
    truth_table,
)
from .generation import (
    GeneratorSystem,
    GenOp,
    check_closed,
    check_free,
    fold,
    generate,
    lsl_system,
)

__all__ = [
    "BINARY_CONNECTIVES",
    "Connective",
    "Expression",
    "Paren",
    "SentenceSymbol",
    "build_binary",
    "build_neg",
    "Atom",
    "Bin",
    "Not",
    "Wff",
    "decompose",
    "parse",
    "render",
    "sentence_symbols",
    "tokenize",
    "ConstructionSequence",
    "combine",
    "construct",
    "construct_randomized",
    "in_s_bar",
    "is_s_based",
    "validate",
    "F",
    "T",
    "TruthAssignment",
    "TruthValue",
    "connective_table",
    "h_eval",
    "is_tautology",
    "recursive_eval",
    "truth_sequence",
    "truth_table",
    "GeneratorSystem",
    "GenOp",
    "check_closed",
    "check_free",
    "fold",
    "generate",
    "lsl_system",
]
