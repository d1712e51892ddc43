from fractions import Fraction

from hypothesis import strategies as st

from coxeter_lab.graph_core import bipartition, make_wood
from coxeter_lab.gvector import GVector


@st.composite
def trees(draw, min_size=1, max_size=9):
    """Random labelled trees, decoded from a parent list."""
    n = draw(st.integers(min_size, max_size))
    names = [f"v{i}" for i in range(n)]
    edges = [(names[i], names[draw(st.integers(0, i - 1))]) for i in range(1, n)]
    return make_wood(names, edges)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@st.composite
def tree_vectors(draw, max_size=9):
    ctx = bipartition(draw(trees(max_size=max_size)))
    vals = draw(st.lists(rationals, min_size=ctx.n, max_size=ctx.n))
    return GVector(ctx, tuple(Fraction(v) for v in vals))


def path(*names):
    return make_wood(names, list(zip(names, names[1:])))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s[7:9])):
            terminalreporter.write_line(line)
