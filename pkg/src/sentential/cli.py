"""Command-line front end.

Exit status 0 on success, 1 for bad arguments or unreadable files, 2 for
domain errors (bad formula, invalid sequence, unassigned symbol). Every
exit-2 path writes a single ``error: ...`` line to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import __version__
from .construction import (
    construct,
    construct_randomized,
    format_sequence,
    is_s_based,
    parse_sequence_text,
    validate,
)
from .errors import (
    AssignmentFormatError,
    CapExceededError,
    InvalidExpressionError,
    InvalidSequenceError,
    LexError,
    ParseError,
    SententialError,
    SymbolOutOfDomainError,
)
from .evaluation import is_tautology, parse_assignment_text, recursive_eval, truth_table
from .generation import DEFAULT_CAP, check_free, generate, lsl_system
from .parser import format_tree, parse, sentence_symbols, tokenize

SAMPLES_PER_STAGE = 10


class UsageError(Exception):
    """Bad command-line arguments or an unreadable file (exit 1)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _symbol_set(text: str) -> frozenset[int]:
    try:
        indices = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(n < 1 for n in indices):
        raise argparse.ArgumentTypeError("sentence symbol indices must be >= 1")
    return frozenset(indices)


def _seed(text: str) -> int:
    n = int(text)
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sentential", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def formula_command(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("formula", nargs="?", help="formula text (quote it for the shell)")
        p.add_argument("--stdin", action="store_true", help="read the formula from stdin")
        return p

    formula_command("parse", "print the parse tree of a formula")
    p = formula_command("eval", "evaluate a formula under a truth assignment")
    p.add_argument("assignment", help="file with one A<n>=T or A<n>=F per line")
    formula_command("table", "print the truth table of a formula")
    p = formula_command("seq", "print a construction sequence for a formula")
    p.add_argument("--seed", type=_seed, help="randomize the sequence with this seed")
    formula_command("taut", "decide whether a formula is a tautology")

    p = sub.add_parser("verify-seq", help="check a construction sequence file")
    p.add_argument("file", help="one expression per line")
    p.add_argument("-S", "--symbols", type=_symbol_set, help="comma-separated S, e.g. 1,2,3")

    p = sub.add_parser("gen-demo", help="generate stages of the formula set")
    p.add_argument("symbols", type=_symbol_set, help="comma-separated S, e.g. 1,2")
    p.add_argument("depth", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _formula_text(args, stdin: TextIO) -> str:
    if args.stdin == (args.formula is not None):
        raise UsageError("give a formula argument or --stdin, not both or neither")
    return stdin.read() if args.stdin else args.formula


def _cmd_parse(args, text, out):
    expr = tokenize(text)
    w = parse(expr)
    out.write(format_tree(w) + "\n")
    out.write(f"tokens: {len(expr)}\n")


def _cmd_eval(args, text, out):
    w = parse(text)
    v = parse_assignment_text(_read(args.assignment))
    out.write(f"{recursive_eval(w, v)}\n")


def _cmd_table(args, text, out):
    w = parse(text)
    rows = truth_table(w)
    header = [f"A{n}" for n in sorted(sentence_symbols(w))] + ["value"]
    out.write(" ".join(header) + "\n")
    for v, value in rows:
        out.write(" ".join([str(v[n]) for n in v] + [str(value)]) + "\n")


def _cmd_seq(args, text, out):
    w = parse(text)
    cs = construct(w) if args.seed is None else construct_randomized(w, args.seed)
    out.write(format_sequence(cs) + "\n")


def _cmd_taut(args, text, out):
    w = parse(text)
    out.write(f"TAUTOLOGY: {'yes' if is_tautology(w) else 'no'}\n")


def _cmd_verify_seq(args, out):
    exprs = parse_sequence_text(_read(args.file))
    if not exprs:
        raise InvalidSequenceError(1, "the file holds no expressions")
    cs = validate(exprs)
    out.write("VALID\n")
    out.write(format_sequence(cs) + "\n")
    if args.symbols is not None:
        out.write(f"S-BASED: {'yes' if is_s_based(cs, args.symbols) else 'no'}\n")


def _cmd_gen_demo(args, out):
    if args.depth < 0:
        raise UsageError("depth must be non-negative")
    if args.cap < 1:
        raise UsageError("cap must be positive")
    sys_ = lsl_system(args.symbols)
    stage = generate(sys_, args.depth, args.cap)
    for d in range(stage.depth + 1):
        new = stage.layer(d)
        out.write(f"stage {d}: {stage.layers[d]} elements ({len(new)} new)\n")
        for x in new[:SAMPLES_PER_STAGE]:
            out.write(f"  {sys_.show(x)}\n")
    f1, f2, f3 = check_free(stage, sys_).counts()
    out.write(f"free: F1={f1} F2={f2} F3={f3}\n")


_FORMULA_COMMANDS = {
    "parse": _cmd_parse,
    "eval": _cmd_eval,
    "table": _cmd_table,
    "seq": _cmd_seq,
    "taut": _cmd_taut,
}


def _error_line(exc: SententialError) -> str:
    kind = {
        LexError: "lex",
        ParseError: "parse",
        InvalidSequenceError: "sequence",
        AssignmentFormatError: "assignment",
        InvalidExpressionError: "expression",
        CapExceededError: "cap",
    }.get(type(exc))
    if kind is None and isinstance(exc, SymbolOutOfDomainError):
        kind = "domain"
    return f"error: {kind or 'domain'}: {exc}"


def run(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO = sys.stdin) -> int:
    """Execute one parsed command, writing to ``out`` and ``err``."""
    try:
        if args.command in _FORMULA_COMMANDS:
            _FORMULA_COMMANDS[args.command](args, _formula_text(args, stdin), out)
        elif args.command == "verify-seq":
            _cmd_verify_seq(args, out)
        else:
            _cmd_gen_demo(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    except SententialError as exc:
        err.write(_error_line(exc) + "\n")
        return 2
    return 0


def main(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    stdin = sys.stdin if stdin is None else stdin
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    return run(args, out, err, stdin)


if __name__ == "__main__":
    sys.exit(main())
