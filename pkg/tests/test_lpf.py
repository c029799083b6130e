import pytest
from hypothesis import given
from hypothesis import strategies as st

from topofilter.bht import build_bht
from topofilter.core import INF, Graph, Signal, ValidationError, canonical_ordering, diagram_equiv, diagram_threshold
from topofilter.instances import path_example, sharpness_path
from topofilter.lpf import basin_fill, check_bht_stability, lpf0, lpf0_shifted
from topofilter.oracle import oracle_pd0

from conftest import eps_values, graph_signals


def tree(s):
    return build_bht(s, canonical_ordering(s))


def test_path_example_filter():
    s = path_example()
    r = lpf0(s, tree(s), 3)
    assert r.filtered.values == (3, 1, 4, 4)
    assert r.basins_filled == ((3, 4.0),)
    assert lpf0(s, tree(s), 2).filtered == s


def test_shift_modes():
    s = path_example()
    b = tree(s)
    assert lpf0_shifted(s, b, 3, mode="half_eps").values == (1.5, -0.5, 2.5, 2.5)
    mid = lpf0_shifted(s, b, 3)
    assert mid.values == (2, 0, 3, 3)
    assert s.sup_distance(mid) == 1 < 1.5
    # the literal eps/2 shift reaches the bound at every unraised vertex
    assert s.sup_distance(lpf0_shifted(s, b, 3, mode="half_eps")) == 1.5


def test_constant_signal():
    s = Signal(Graph(3, ((0, 1), (1, 2))), (2, 2, 2))
    assert lpf0(s, tree(s), 1).filtered == s
    assert lpf0_shifted(s, tree(s), 1, mode="half_eps").values == (1.5, 1.5, 1.5)
    assert lpf0_shifted(s, tree(s), 1) == s


def test_sharpness_path():
    s = sharpness_path()
    g = lpf0(s, tree(s), 3).filtered
    assert g.values == (0, 9, 1, 9, 9)
    assert s.sup_distance(g) == 2


def test_bad_arguments():
    s = path_example()
    with pytest.raises(ValueError):
        lpf0(s, tree(s), 0)
    with pytest.raises(ValueError):
        basin_fill(s, tree(s), tree(s).root)
    inf = s.with_values((3, 1, INF, 2))
    with pytest.raises(ValidationError):
        lpf0_shifted(inf, tree(inf), 1)
    with pytest.raises(ValueError):
        lpf0_shifted(s, tree(s), 1, mode="nope")


def test_infinite_values_pass_through():
    s = Signal(Graph(3, ((0, 1), (1, 2))), (0, INF, 1))
    g = lpf0(s, tree(s), 5).filtered
    assert g.values == (0, INF, 1)


@given(graph_signals(), eps_values)
def test_filter_removes_exactly_short_intervals(s, eps):
    g = lpf0(s, tree(s), eps).filtered
    assert diagram_equiv(oracle_pd0(g), diagram_threshold(oracle_pd0(s), eps, ">="))


@given(graph_signals(), eps_values)
def test_filter_raises_by_less_than_eps(s, eps):
    b = tree(s)
    g = lpf0(s, b, eps).filtered
    assert all(0 <= y - x < eps for x, y in zip(s.values, g.values))
    h = lpf0_shifted(s, b, eps)
    assert s.sup_distance(h) < eps / 2
    assert s.sup_distance(lpf0_shifted(s, b, eps, mode="half_eps")) == eps / 2


@given(graph_signals(), eps_values)
def test_filter_is_idempotent(s, eps):
    g = lpf0(s, tree(s), eps).filtered
    assert lpf0(g, tree(g), eps).filtered == g


@given(graph_signals(), eps_values, eps_values)
def test_filter_monotone_in_eps(s, a, b):
    lo, hi = min(a, b), max(a, b)
    t = tree(s)
    g_lo, g_hi = lpf0(s, t, lo).filtered, lpf0(s, t, hi).filtered
    assert all(x <= y for x, y in zip(g_lo.values, g_hi.values))


@given(graph_signals(), eps_values)
def test_bht_survives_filtering(s, eps):
    assert check_bht_stability(s, tree(s), eps)


@given(graph_signals(), eps_values, st.randoms(use_true_random=False))
def test_basin_fills_commute(s, eps, rnd):
    b = tree(s)
    targets = [v for v in range(len(s)) if 0 < b.pers(v) < eps]
    results = []
    for _ in range(2):
        rnd.shuffle(targets)
        g = s
        for v in targets:
            g = basin_fill(g, b, v)
        results.append(g)
    expected = lpf0(s, b, eps).filtered
    assert results[0] == results[1] == expected
