"""Slow reference persistence: explicit component tracking and F2 column reduction.

Nothing here uses the BHT code; it exists to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import INF, Diagram, Interval, Signal, TotalOrder

VERTEX, EDGE, FACE = 0, 1, 2


def oracle_pd0(signal: Signal, order: Optional[TotalOrder] = None) -> Diagram:
    """Sweep the cells keeping components as explicit vertex sets (elder rule)."""
    f = signal.values
    edges = signal.graph.edges
    if order is None:
        cells = _sorted_cells(signal, ())
    else:
        cells = [(c.dim, c.index) for c in order.cells]
    pos = {c: i for i, c in enumerate(cells)}
    comp: dict[int, list[int]] = {}  # vertex -> member list of its component
    oldest: dict[int, int] = {}  # id(member list) -> earliest-born vertex
    intervals = []
    for dim, idx in cells:
        if dim == VERTEX:
            comp[idx] = [idx]
            oldest[id(comp[idx])] = idx
        elif dim == EDGE:
            u, v = edges[idx]
            a, b = comp[u], comp[v]
            if a is b:
                continue
            ma, mb = oldest.pop(id(a)), oldest.pop(id(b))
            elder, younger = (ma, mb) if pos[(VERTEX, ma)] < pos[(VERTEX, mb)] else (mb, ma)
            intervals.append(Interval(f[younger], max(f[u], f[v]), 0))
            if len(a) < len(b):
                a, b = b, a
            a.extend(b)
            for x in b:
                comp[x] = a
            oldest[id(a)] = elder
    for root in oldest.values():
        intervals.append(Interval(f[root], INF, 0))
    return Diagram(intervals)


@dataclass
class FiltrationMatrix:
    """Cells in filtration order with F2 boundary columns as sets of row positions."""

    cells: list[tuple[int, int]]  # (dim, index)
    values: list[float]
    columns: list[frozenset[int]]

    def validate(self) -> None:
        for j, col in enumerate(self.columns):
            if any(i >= j for i in col):
                raise ValueError(f"cell {self.cells[j]} appears before a face of it")


def _face_vertex_values(signal: Signal, face: Sequence[int]) -> float:
    f = signal.values
    vals = [f[v] for e in face for v in signal.graph.edges[e]]
    return max(vals) if vals else -INF


def _sorted_cells(signal: Signal, faces: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    f = signal.values
    keyed = [((f[i], VERTEX, i), (VERTEX, i)) for i in range(len(f))]
    keyed += [
        ((max(f[u], f[v]), EDGE, i), (EDGE, i)) for i, (u, v) in enumerate(signal.graph.edges)
    ]
    keyed += [((_face_vertex_values(signal, t), FACE, i), (FACE, i)) for i, t in enumerate(faces)]
    keyed.sort()
    return [c for _, c in keyed]


def filtration_matrix(
    signal: Signal,
    faces: Sequence[Sequence[int]] = (),
    order: Optional[TotalOrder] = None,
) -> FiltrationMatrix:
    if order is None:
        cells = _sorted_cells(signal, faces)
    else:
        cells = [(c.dim, c.index) for c in order.cells]
    pos = {c: i for i, c in enumerate(cells)}
    f = signal.values
    edges = signal.graph.edges
    values, columns = [], []
    for dim, idx in cells:
        if dim == VERTEX:
            values.append(f[idx])
            columns.append(frozenset())
        elif dim == EDGE:
            u, v = edges[idx]
            values.append(max(f[u], f[v]))
            columns.append(frozenset({pos[(VERTEX, u)], pos[(VERTEX, v)]}))
        else:
            face = faces[idx]
            values.append(_face_vertex_values(signal, face))
            col: set[int] = set()
            for e in face:
                col ^= {pos[(EDGE, e)]}  # repeated edges cancel mod 2
            columns.append(frozenset(col))
    return FiltrationMatrix(cells, values, columns)


def reduce_matrix(matrix: FiltrationMatrix) -> tuple[list[tuple[int, int]], list[int]]:
    """Left-to-right column reduction. Returns persistence pairs (birth pos, death pos)
    and the positions of unpaired (essential) cells."""
    matrix.validate()
    reduced = []
    pivot_owner: dict[int, int] = {}
    pairs = []
    for j, col in enumerate(matrix.columns):
        col = set(col)
        while col:
            low = max(col)
            k = pivot_owner.get(low)
            if k is None:
                break
            col ^= reduced[k]
        reduced.append(col)
        if col:
            low = max(col)
            pivot_owner[low] = j
            pairs.append((low, j))
    paired = {i for p in pairs for i in p}
    essential = [j for j in range(len(matrix.columns)) if j not in paired]
    return pairs, essential


def oracle_pd(
    signal: Signal,
    faces: Sequence[Sequence[int]] = (),
    order: Optional[TotalOrder] = None,
) -> tuple[Diagram, Diagram]:
    """PD0 and PD1 of the sublevel nesting of vertices, edges and ``faces``."""
    m = filtration_matrix(signal, faces, order)
    pairs, essential = reduce_matrix(m)
    by_dim: dict[int, list[Interval]] = {0: [], 1: [], 2: []}
    for b, d in pairs:
        dim = m.cells[b][0]
        by_dim[dim].append(Interval(m.values[b], m.values[d], dim))
    for j in essential:
        dim = m.cells[j][0]
        by_dim[dim].append(Interval(m.values[j], INF, dim))
    return Diagram(by_dim[0]), Diagram(by_dim[1])
