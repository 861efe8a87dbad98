import pytest
from hypothesis import strategies as st

from sentential.core import BINARY_CONNECTIVES
from sentential.evaluation import F, T, TruthAssignment
from sentential.parser import Atom, Bin, Not

# The worked example: sequence, wff and assignment.
EXAMPLE_TEXT = "((A3|(!A2))<->A1)"
EXAMPLE_SEQUENCE = ["A1", "A2", "A3", "(!A2)", "(A3|(!A2))", "((A3|(!A2))<->A1)"]
EXAMPLE_VALUES = {1: F, 2: T, 3: F}


@pytest.fixture
def example_assignment():
    return TruthAssignment(EXAMPLE_VALUES)


def wffs(max_symbol: int = 4, max_leaves: int = 30):
    atoms = st.builds(Atom, st.integers(1, max_symbol))
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            st.builds(Not, kids),
            st.builds(Bin, st.sampled_from(BINARY_CONNECTIVES), kids, kids),
        ),
        max_leaves=max_leaves,
    )


def assignments(symbols=range(1, 5)):
    symbols = sorted(symbols)
    return st.lists(st.sampled_from([F, T]), min_size=len(symbols), max_size=len(symbols)).map(
        lambda vals: TruthAssignment(zip(symbols, vals))
    )


# Filled in by tests/test_acceptance.py, printed at the end of the run.
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed, detail = ACCEPTANCE_RESULTS[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} -- {detail}")
