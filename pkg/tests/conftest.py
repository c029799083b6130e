import numpy as np
import pytest
from hypothesis import strategies as st

from topofilter.adapters import GridImage, image_to_gwf
from topofilter.core import Graph, Signal


@st.composite
def graph_signals(draw, max_vertices=8, max_value=5):
    """Connected multigraph (random tree plus extra edges) with small integer values."""
    n = draw(st.integers(1, max_vertices))
    edges = [(i, draw(st.integers(0, i - 1))) for i in range(1, n)]
    if n > 1:
        pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
        edges += draw(st.lists(pair, max_size=n))
    edges = draw(st.permutations(edges)) if edges else []
    values = draw(st.lists(st.integers(0, max_value), min_size=n, max_size=n))
    return Signal(Graph(n, tuple(edges)), tuple(float(x) for x in values))


@st.composite
def grid_instances(draw, max_side=4, max_value=5):
    h = draw(st.integers(1, max_side))
    w = draw(st.integers(1, max_side))
    vals = draw(st.lists(st.integers(0, max_value), min_size=h * w, max_size=h * w))
    return image_to_gwf(GridImage(h, w, tuple(vals), max_value))


eps_values = st.sampled_from([0.5, 1.0, 1.5, 2.0, 3.0, 5.0])


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(".")[0].split()[-1])):
            terminalreporter.write_line(line)
