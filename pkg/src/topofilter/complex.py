"""Signals over planar graphs with faces.

Persistence of a planar graph with faces is read off an ordinary graph: one
node is added per face and per hole (a complementary region that is not a
face), joined to the vertices on its boundary. Faces take the max of their
vertices, holes take +inf. PD0 of that graph is PD0 of the complex; PD0 of the
negated signal, minus its oldest permanent class and reflected through 0, is PD1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bht import BHT, build_bht
from .core import (
    EDGE,
    INF,
    Diagram,
    DisjointSet,
    Graph,
    Interval,
    Signal,
    ValidationError,
    canonical_ordering,
    diagram_threshold,
    face_vertices,
)
from .lpf import lpf0

Region = tuple[int, ...]  # multiset of edge indices


def _is_cycle(graph: Graph, region: Sequence[int]) -> bool:
    parity = [0] * graph.vertex_count
    for e in region:
        u, v = graph.edges[e]
        parity[u] ^= 1
        parity[v] ^= 1
    return not any(parity)


def _check_regions(graph: Graph, regions: Sequence[Sequence[int]], what: str) -> tuple[Region, ...]:
    out = []
    for i, region in enumerate(regions):
        region = tuple(int(e) for e in region)
        if any(not 0 <= e < graph.edge_count for e in region):
            raise ValidationError(f"{what} {i} references a missing edge")
        if not region and graph.vertex_count > 1:
            raise ValidationError(f"{what} {i} has an empty boundary")
        if not _is_cycle(graph, region):
            raise ValidationError(f"{what} {i} is not a 1-cycle")
        out.append(region)
    return tuple(out)


@dataclass(frozen=True)
class GraphWithFaces:
    graph: Graph
    faces: tuple[Region, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "faces", _check_regions(self.graph, self.faces, "face"))


@dataclass(frozen=True)
class Embedding:
    """Combinatorial stand-in for a planar embedding: the boundary cycles of the holes.

    With no faces and no holes the host is treated as a bare graph and the Euler
    count is not enforced.
    """

    host: GraphWithFaces
    holes: tuple[Region, ...] = ()

    def __post_init__(self):
        g = self.host.graph
        holes = _check_regions(g, self.holes, "hole")
        object.__setattr__(self, "holes", holes)
        if self.is_bare:
            return
        chi = g.vertex_count - g.edge_count + len(self.host.faces) + len(holes)
        if chi != 2:
            raise ValidationError(
                f"V - E + (F + H) = {chi}, expected 2 for a planar embedding"
            )

    @property
    def is_bare(self) -> bool:
        return not self.host.faces and not self.holes


def bare_embedding(graph: Graph) -> Embedding:
    return Embedding(GraphWithFaces(graph))


def _region_vertices(graph: Graph, region: Region) -> tuple[int, ...]:
    if not region:
        return (0,)  # single-vertex graph: the lone region is bounded by the vertex
    return face_vertices(graph, region)


@dataclass(frozen=True)
class InducedGraphSignal:
    """Graph with one extra node per face and hole, and the signal carried over to it.

    Node numbering: original vertices, then faces in order, then holes.
    """

    signal: Signal
    cells: tuple[tuple[str, int], ...]  # node -> ("vertex" | "face" | "hole", index)
    vertex_count: int

    @property
    def graph(self) -> Graph:
        return self.signal.graph

    def restrict(self, induced_values: Sequence[float]) -> tuple[float, ...]:
        return tuple(induced_values[: self.vertex_count])


def build_induced(gwf: GraphWithFaces, emb: Embedding, signal: Signal) -> InducedGraphSignal:
    if emb.host != gwf:
        raise ValidationError("embedding belongs to a different graph with faces")
    graph = gwf.graph
    if signal.graph != graph:
        raise ValidationError("signal lives on a different graph")
    n = graph.vertex_count
    f = signal.values
    edges = list(graph.edges)
    values = list(f)
    cells = [("vertex", v) for v in range(n)]
    for kind, regions in (("face", gwf.faces), ("hole", emb.holes)):
        for i, region in enumerate(regions):
            node = len(values)
            around = _region_vertices(graph, region)
            edges.extend((node, v) for v in around)
            values.append(max(f[v] for v in around) if kind == "face" else INF)
            cells.append((kind, i))
    induced = Signal(Graph(len(values), tuple(edges)), tuple(values))
    return InducedGraphSignal(induced, tuple(cells), n)


def _cycle_births(signal: Signal) -> Diagram:
    """Permanent PD1 of a bare graph: one class per edge that closes a cycle."""
    order = canonical_ordering(signal)
    ds = DisjointSet(signal.graph.vertex_count)
    births = []
    for c in order.cells:
        if c.dim != EDGE:
            continue
        u, v = signal.graph.edges[c.index]
        if ds.find(u) == ds.find(v):
            births.append(Interval(max(signal[u], signal[v]), INF, 1))
        else:
            ds.union(u, v)
    return Diagram(births)


def pd_gwf(gwf: GraphWithFaces, emb: Embedding, signal: Signal, dim: int) -> Diagram:
    """Persistence diagram of the sublevel nesting of ``signal`` over the complex."""
    if dim not in (0, 1):
        raise ValueError("dim must be 0 or 1")
    ind = build_induced(gwf, emb, signal)
    if dim == 0:
        bht = build_bht(ind.signal, canonical_ordering(ind.signal))
        return _vertex_pd0(bht, ind.vertex_count)
    if emb.is_bare:
        return _cycle_births(signal)
    neg = ind.signal.negated()
    bht = build_bht(neg, canonical_ordering(neg))
    root = bht.root
    g = neg.values
    out = []
    for v in range(len(g)):
        if v == root:
            continue  # the oldest permanent class
        out.append(Interval(-bht.link_value(v), -g[v], 1))
    return Diagram(out)


def _vertex_pd0(bht: BHT, n: int) -> Diagram:
    f = bht.signal.values
    out = []
    for v in range(len(f)):
        iv = Interval(f[v], bht.link_value(v), 0)
        # face and hole nodes always merge on arrival; keep them only if that ever fails
        if v < n or not iv.trivial:
            out.append(iv)
    return Diagram(out)


def lpf_gwf(gwf: GraphWithFaces, emb: Embedding, signal: Signal, eps: float, dim: int) -> Signal:
    """L0 (dim 0) or L1 (dim 1) on the induced graph, restricted back to the vertices."""
    if dim not in (0, 1):
        raise ValueError("dim must be 0 or 1")
    if dim == 1 and emb.is_bare:
        return signal  # a bare graph has no finite 1-dimensional classes
    ind = build_induced(gwf, emb, signal)
    s = ind.signal if dim == 0 else ind.signal.negated()
    g = lpf0(s, build_bht(s, canonical_ordering(s)), eps).filtered.values
    if dim == 1:
        g = tuple(-x for x in g)
    return signal.with_values(ind.restrict(g))


def lpf_star(
    gwf: GraphWithFaces, emb: Embedding, signal: Signal, eps: float
) -> tuple[Signal, int]:
    """Alternate L0 and L1 (L0 first) until a full round changes nothing.

    Returns the fixed point and the number of single-filter applications made.
    Each changing application removes at least one nontrivial interval, so more
    rounds than nontrivial intervals plus one means something is broken.
    """
    budget = sum(
        len(pd_gwf(gwf, emb, signal, d).nontrivial()) for d in (0, 1)
    ) + 1
    current = signal
    applications = 0
    for _ in range(budget):
        start = current
        for d in (0, 1):
            current = lpf_gwf(gwf, emb, current, eps, d)
            applications += 1
        if current == start:
            return current, applications
    raise RuntimeError(f"no fixed point after {budget} rounds")


def _persistences(d: Diagram) -> list[float]:
    return sorted((iv.persistence for iv in d.nontrivial()), reverse=True)


def _injects(smaller: Diagram, larger: Diagram) -> bool:
    # Interval a may map to b iff pers(b) >= pers(a): neighbourhoods are nested,
    # so a matching saturating ``smaller`` exists iff the sorted lists dominate.
    a, b = _persistences(smaller), _persistences(larger)
    return len(a) <= len(b) and all(x <= y for x, y in zip(a, b))


def dominates(
    g_diagrams: tuple[Diagram, Diagram], f_diagrams: tuple[Diagram, Diagram]
) -> bool:
    """Whether g's nontrivial intervals inject into f's without gaining persistence, per dimension."""
    return all(_injects(g, f) for g, f in zip(g_diagrams, f_diagrams))


def diagrams(gwf: GraphWithFaces, emb: Embedding, signal: Signal) -> tuple[Diagram, Diagram]:
    return pd_gwf(gwf, emb, signal, 0), pd_gwf(gwf, emb, signal, 1)


def low_persistence_part(d: Diagram, eps: float) -> Diagram:
    return diagram_threshold(d.nontrivial(), eps, "<")

