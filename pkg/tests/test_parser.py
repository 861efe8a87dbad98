from random import Random

import pytest
from hypothesis import given

from conftest import EXAMPLE_TEXT, wffs
from sentential.core import Connective, Expression, Paren, SentenceSymbol
from sentential.errors import ArityError, LexError, ParseError
from sentential.parser import (
    AndCase,
    Atom,
    AtomCase,
    Bin,
    IffCase,
    ImpliesCase,
    NegCase,
    Not,
    OrCase,
    all_wffs,
    decompose,
    depth,
    format_tree,
    parse,
    random_wff,
    render,
    sentence_symbols,
    size,
    tokenize,
)

AND, OR, IMPLIES, IFF = Connective.AND, Connective.OR, Connective.IMPLIES, Connective.IFF
EXAMPLE_WFF = Bin(IFF, Bin(OR, Atom(3), Not(Atom(2))), Atom(1))
CASES = (AtomCase, NegCase, AndCase, OrCase, ImpliesCase, IffCase)


def test_tokenize_example_count():
    by_hand = ["(", "(", "A3", "|", "(", "!", "A2", ")", ")", "<->", "A1", ")"]
    expr = tokenize(EXAMPLE_TEXT)
    assert list(expr) == by_hand
    assert len(expr) == len(by_hand) == 12


def test_tokenize_single_symbol():
    assert tokenize("A1") == Expression((SentenceSymbol(1),))


def test_tokenize_kinds():
    expr = tokenize("(A10 -> A2)")
    assert expr == (Paren.LEFT, SentenceSymbol(10), IMPLIES, SentenceSymbol(2), Paren.RIGHT)
    assert isinstance(expr[1], SentenceSymbol)


def test_tokenize_maximal_munch():
    assert list(tokenize("<->->")) == [IFF, IMPLIES]
    assert list(tokenize("A1A23")) == [SentenceSymbol(1), SentenceSymbol(23)]


def test_tokenize_unicode_aliases():
    assert tokenize("((A3∨(¬A2))↔A1)") == tokenize(EXAMPLE_TEXT)
    assert tokenize("(A1∧A2)") == tokenize("(A1&A2)")
    assert tokenize("(A1→A2)") == tokenize("(A1->A2)")


@pytest.mark.parametrize(
    "text, position",
    [("A01", 0), ("A0", 0), ("(A1 & A)", 6), ("(A1 % A2)", 4), ("(A1 <- A2)", 4), ("   ", 0)],
)
def test_tokenize_errors(text, position):
    with pytest.raises(LexError) as info:
        tokenize(text)
    assert info.value.position == position


def test_parse_example():
    assert parse(EXAMPLE_TEXT) == EXAMPLE_WFF
    assert parse(tokenize(EXAMPLE_TEXT)) == EXAMPLE_WFF


def test_parse_atom():
    assert parse("A7") == Atom(7)


@pytest.mark.parametrize(
    "text, position",
    [
        ("(A1&A2", 4),  # unclosed paren at end of input
        ("(A1A2)", 2),  # missing connective
        ("A1)", 1),  # trailing garbage
        ("(A1&A2))", 5),
        ("(!A1&A2)", 3),
        ("A1&A2", 1),
        (")", 0),
        ("(", 1),
        ("(A1&A2&A3)", 4),
        ("(!!A1)", 2),
        ("&", 0),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == position


def test_parse_accepts_whitespace():
    assert parse(" ( A1 &\tA2 ) ") == Bin(AND, Atom(1), Atom(2))


def test_bin_rejects_negation():
    with pytest.raises(ArityError):
        Bin(Connective.NEG, Atom(1), Atom(2))


def test_decompose_cases():
    x, y = Atom(1), Not(Atom(2))
    assert decompose(Bin(IFF, x, y)) == IffCase(x, y)
    assert decompose(parse("(¬A2)")) == NegCase(Atom(2))
    assert decompose(Atom(3)) == AtomCase(3)
    assert decompose(Bin(AND, x, y)) == AndCase(x, y)
    assert decompose(Bin(OR, x, y)) == OrCase(x, y)
    assert decompose(Bin(IMPLIES, x, y)) == ImpliesCase(x, y)
    assert AndCase(x, y) != OrCase(x, y)


def test_render_examples():
    assert str(render(EXAMPLE_WFF)) == EXAMPLE_TEXT
    assert str(render(Atom(1))) == "A1"
    assert str(render(Not(Not(Atom(1))))) == "(!(!A1))"


def test_sentence_symbols():
    assert sentence_symbols(EXAMPLE_WFF) == {1, 2, 3}
    assert sentence_symbols(Atom(5)) == {5}
    assert sentence_symbols(Bin(AND, Atom(1), Atom(1))) == {1}


def test_depth_and_size():
    assert depth(Atom(1)) == 1
    assert depth(EXAMPLE_WFF) == 4
    assert size(EXAMPLE_WFF) == 6


def test_format_tree():
    assert format_tree(EXAMPLE_WFF) == "<->\n  |\n    A3\n    !\n      A2\n  A1"


def _count_wffs(n_symbols, d):
    # depth-d count: symbols, plus one negation and four binary ways per level
    count = n_symbols
    for _ in range(d - 1):
        count = n_symbols + count + 4 * count * count
    return count


@pytest.mark.parametrize("d", [1, 2, 3])
def test_all_wffs_counts(d):
    ws = all_wffs([1, 2], d)
    assert len(ws) == _count_wffs(2, d)
    assert len(set(ws)) == len(ws)
    assert all(depth(w) <= d for w in ws)


def test_all_wffs_small_counts_by_hand():
    assert len(all_wffs([1], 2)) == 1 + 1 + 4
    assert len(all_wffs([1, 2], 2)) == 2 + 2 + 16


def test_random_wff_respects_bounds():
    rng = Random(0)
    for _ in range(200):
        w = random_wff(rng, [1, 2, 3], 5)
        assert depth(w) <= 5
        assert sentence_symbols(w) <= {1, 2, 3}


# Unique readability, as properties.


@given(wffs())
def test_round_trip(w):
    assert parse(render(w)) == w


@given(wffs())
def test_text_round_trip(w):
    assert parse(str(render(w))) == w


@given(wffs())
def test_decompose_exactly_one_case_and_rebuilds(w):
    case = decompose(w)
    assert sum(isinstance(case, k) for k in CASES) == 1
    if isinstance(case, NegCase):
        assert render(Not(case.child)) == render(w)


def test_render_injective_on_enumeration():
    ws = all_wffs([1, 2], 3)
    renders = {render(w) for w in ws}
    assert len(renders) == len(ws)


def test_composite_renders_never_bare_symbols_and_shapes_disjoint():
    by_render = {}
    for w in all_wffs([1, 2], 3):
        r = render(w)
        if not isinstance(w, Atom):
            assert len(r) > 1
        key = type(w) if not isinstance(w, Bin) else w.conn
        assert by_render.setdefault(r, key) == key


def test_inverse_round_trip_on_accepted_mutants():
    rng = Random(5)
    pool = list(tokenize("((A1&A2)|(!A3))")) + [Connective.NEG, Paren.LEFT, Paren.RIGHT]
    base = list(tokenize("((A1&(!A2))->((A3|A1)<->(!(!A2))))"))
    accepted = 0
    for _ in range(500):
        m = list(base)
        pos = rng.randrange(len(m))
        op = rng.randrange(3)
        if op == 0:
            del m[pos]
        elif op == 1:
            m.insert(pos, rng.choice(pool))
        else:
            m[pos] = rng.choice(pool)
        if not m:
            continue
        e = Expression(m)
        try:
            w = parse(e)
        except ParseError:
            continue
        accepted += 1
        assert render(w) == e
    assert accepted > 0
