import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ordercomplement import poset as ps  # noqa: E402


def two_plus_two():
    return ps.build(ps.PosetSpec(("a", "b", "c", "d"), (("a", "b"), ("c", "d")), "covers"))


def fan():
    return ps.build(ps.PosetSpec(("a", "b", "c"), (("a", "c"), ("b", "c")), "covers"))


def named_families():
    out = [("2+2", two_plus_two()), ("fan", fan())]
    out += [(f"chain:{n}", ps.chain(n)) for n in range(13)]
    out += [(f"antichain:{n}", ps.antichain(n)) for n in range(13)]
    out += [(f"boolean:{k}", ps.boolean_lattice(k)) for k in range(4)]
    out += [(f"divisor:{m}", ps.divisor_poset(m)) for m in (1, 2, 6, 12, 30, 36, 60)]
    return out


@st.composite
def posets(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    density = draw(st.sampled_from([0.0, 0.15, 0.3, 0.5, 0.8, 1.0]))
    seed = draw(st.integers(0, 2**32))
    return ps.random_poset(n, density, seed)


@pytest.fixture(scope="session")
def small_corpus():
    """Exhaustive labeled posets n <= 4 plus the named families."""
    out = []
    for n in range(5):
        out += [(f"labeled:{n}#{i}", p) for i, p in enumerate(ps.all_labeled_posets(n))]
    return out + named_families()


# acceptance reporting ------------------------------------------------------

ACCEPTANCE_LINES = {}


@pytest.fixture
def criterion(request):
    """Call ``criterion(k, text, ok)`` to record one acceptance line; returns ``ok``."""

    def record(k, text, ok):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {text}"
        ACCEPTANCE_LINES[k] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
