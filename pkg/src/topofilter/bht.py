"""Basin hierarchy trees: a rooted tree on the vertices whose linking vertices encode PD0."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .core import (
    EDGE,
    INF,
    Diagram,
    DisjointSet,
    Interval,
    Signal,
    TotalOrder,
    ValidationError,
    format_value,
    persistence,
)


@dataclass(frozen=True, eq=False)
class BHT:
    parent: tuple[int, ...]
    linking: tuple[Optional[int], ...]
    signal: Signal
    order: TotalOrder

    @property
    def root(self) -> int:
        return next(v for v, link in enumerate(self.linking) if link is None)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p != v:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        """Vertices sorted by position in the host ordering; parents come before children."""
        ranks = self.order.vertex_ranks()
        return tuple(sorted(range(len(self.parent)), key=ranks.__getitem__))

    def pers(self, v: int) -> float:
        link = self.linking[v]
        if link is None:
            return INF
        f = self.signal.values
        return persistence(f[v], f[link])

    def link_value(self, v: int) -> float:
        link = self.linking[v]
        return INF if link is None else self.signal.values[link]

    def descendants(self, v: int) -> list[int]:
        """``v`` and everything below it."""
        out, stack = [], [v]
        kids = self.children
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(kids[u])
        return out

    def ancestors(self, v: int) -> list[int]:
        """``v`` and its ancestors up to the root, nearest first."""
        chain = [v]
        while self.parent[chain[-1]] != chain[-1]:
            chain.append(self.parent[chain[-1]])
        return chain

    def same_tree(self, other: "BHT") -> bool:
        return self.parent == other.parent and self.linking == other.linking


def build_bht(signal: Signal, order: TotalOrder) -> BHT:
    """Union-find over edges in order; the losing basin root hangs under the winning one.

    The output ``parent`` array is written once per vertex. Root lookups go
    through a separate path-compressed structure whose representatives
    remember the order-minimal vertex of their component.
    """
    graph = signal.graph
    if order.graph != graph:
        raise ValidationError("ordering belongs to a different graph")
    n = graph.vertex_count
    rank = order.vertex_ranks()
    parent = list(range(n))
    linking: list[Optional[int]] = [None] * n
    ds = DisjointSet(n)
    basin_root = list(range(n))  # valid at DisjointSet representatives
    merges = 0
    for cell in order.cells:
        if cell.dim != EDGE:
            continue
        u, v = graph.edges[cell.index]
        ru, rv = ds.find(u), ds.find(v)
        if ru == rv:
            continue
        bu, bv = basin_root[ru], basin_root[rv]
        older, younger = (bu, bv) if rank[bu] < rank[bv] else (bv, bu)
        parent[younger] = older
        linking[younger] = u if rank[u] > rank[v] else v
        basin_root[ds.union(ru, rv)] = older
        merges += 1
    if merges != n - 1:
        raise ValidationError("graph is disconnected")
    return BHT(tuple(parent), tuple(linking), signal, order)


def pers(bht: BHT, v: int) -> float:
    return bht.pers(v)


def pd0_from_bht(bht: BHT) -> Diagram:
    f = bht.signal.values
    return Diagram(Interval(f[v], bht.link_value(v), 0) for v in range(len(f)))


def ancestors_below(bht: BHT, v: int, eps: float) -> set[int]:
    """Ancestors of ``v`` (``v`` included) whose persistence is below ``eps``."""
    if not eps > 0:
        raise ValueError("eps must be positive")
    return {u for u in bht.ancestors(v) if bht.pers(u) < eps}


def bht_to_json(bht: BHT) -> list[dict]:
    return [
        {
            "vertex": v,
            "parent": bht.parent[v],
            "linking": bht.linking[v],
            "pers": format_value(bht.pers(v)),
        }
        for v in range(len(bht.parent))
    ]
