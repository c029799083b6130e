import pytest
from hypothesis import given

from topofilter.core import INF, Diagram, Graph, Signal, canonical_ordering, diagram_equiv
from topofilter.instances import nesting_example, ring_image
from topofilter.adapters import image_to_gwf
from topofilter.oracle import FiltrationMatrix, filtration_matrix, oracle_pd, oracle_pd0, reduce_matrix

from conftest import graph_signals, grid_instances


def test_nesting_example():
    s = nesting_example()
    p0, p1 = oracle_pd(s)
    assert p0.nontrivial() == Diagram([(1, INF), (1, 2), (2, 3)])
    assert p1 == Diagram([(2, INF, 1), (3, INF, 1), (3, INF, 1)])


def test_ring_image():
    gwf, _, s = image_to_gwf(ring_image())
    p0, p1 = oracle_pd(s, gwf.faces)
    assert p0.nontrivial() == Diagram([(1, INF)])
    assert p1.nontrivial() == Diagram([(1, 3, 1)])


def test_repeated_face_edges_cancel():
    # a triangle face listing one edge three times is still the triangle
    s = Signal(Graph(3, ((0, 1), (1, 2), (2, 0))), (0, 1, 2))
    m = filtration_matrix(s, [(0, 1, 2, 0, 0)])
    assert len(m.columns[-1]) == 3


def test_bad_column_order_detected():
    m = FiltrationMatrix([(0, 0), (1, 0)], [0, 0], [frozenset(), frozenset({1})])
    with pytest.raises(ValueError):
        reduce_matrix(m)


@given(graph_signals())
def test_two_oracles_agree_on_pd0(s):
    assert diagram_equiv(oracle_pd0(s), oracle_pd(s)[0])
    assert diagram_equiv(oracle_pd0(s), oracle_pd0(s, canonical_ordering(s)))


@given(graph_signals())
def test_graph_interval_counts(s):
    p0, p1 = oracle_pd(s)
    n, m = len(s), s.graph.edge_count
    assert len(p0) == n
    assert sum(1 for iv in p0 if iv.death == INF) == 1
    # every non-merging edge starts a cycle that never dies
    assert len(p1) == m - n + 1 and all(iv.death == INF for iv in p1)


@given(grid_instances())
def test_grid_is_a_disc(inst):
    gwf, _, s = inst
    p0, p1 = oracle_pd(s, gwf.faces)
    assert sum(1 for iv in p0 if iv.death == INF) == 1
    assert all(iv.death < INF for iv in p1)
