"""Graphs, vertex signals, cell orderings and persistence diagrams.

Signal values are plain Python floats; ``float('inf')`` and ``-float('inf')``
give the extended reals with their usual total order. Edge values are always
the max of the endpoint values, face values the max over the face's vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence, Union

INF = math.inf

VERTEX, EDGE, FACE = 0, 1, 2


class ValidationError(ValueError):
    """Input violates a structural requirement (connectivity, 1-cycle, Euler count)."""


# --------------------------------------------------------------------------
# extended reals


def ext_sub(a: float, b: float) -> float:
    """``a - b`` over the extended reals; same-signed infinities are rejected."""
    if math.isinf(a) and math.isinf(b) and (a > 0) == (b > 0):
        raise ArithmeticError(f"undefined difference {a} - {b}")
    return a - b


def persistence(birth: float, death: float) -> float:
    """Length of ``[birth, death)``. Intervals with equal ends are trivial (0),
    including ``[inf, inf)``, which arises for hole nodes."""
    if birth == death:
        return 0.0
    return ext_sub(death, birth)


def parse_value(x) -> float:
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "+inf", "infinity"):
            return INF
        if s in ("-inf", "-infinity"):
            return -INF
        try:
            x = float(s)
        except ValueError:
            raise ValueError(f"not a value: {x!r}") from None
    if isinstance(x, bool):
        raise ValueError(f"not a value: {x!r}")
    v = float(x)
    if math.isnan(v):
        raise ValueError("NaN is not a signal value")
    return v


def format_value(v: float):
    """JSON form of an extended real: numbers stay numbers, infinities become strings."""
    if v == INF:
        return "inf"
    if v == -INF:
        return "-inf"
    return v


# --------------------------------------------------------------------------
# graphs and signals


class DisjointSet:
    """Union-find with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        parent = self.parent
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> int:
        """Merge the sets of ``a`` and ``b``; return the surviving representative."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra


@dataclass(frozen=True)
class Graph:
    """Connected undirected graph; parallel edges allowed, self-loops not."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        n = self.vertex_count
        if n < 1:
            raise ValidationError("graph must have at least one vertex")
        ds = DisjointSet(n)
        components = n
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {i} = ({u}, {v}) out of range")
            if u == v:
                raise ValidationError(f"edge {i} is a self-loop at {u}")
            if ds.find(u) != ds.find(v):
                ds.union(u, v)
                components -= 1
        if components != 1:
            raise ValidationError(f"graph is disconnected ({components} components)")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Signal:
    """A value per vertex of ``graph``."""

    graph: Graph
    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(x) for x in self.values)
        if len(values) != self.graph.vertex_count:
            raise ValidationError(
                f"{len(values)} values for {self.graph.vertex_count} vertices"
            )
        if any(math.isnan(x) for x in values):
            raise ValidationError("signal contains NaN")
        object.__setattr__(self, "values", values)

    def __getitem__(self, v: int) -> float:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def with_values(self, values: Iterable[float]) -> "Signal":
        return Signal(self.graph, tuple(values))

    def negated(self) -> "Signal":
        return Signal(self.graph, tuple(-x for x in self.values))

    def sup_distance(self, other: "Signal") -> float:
        """``max |self - other|``; positions where both agree (including equal infinities) count as 0."""
        worst = 0.0
        for a, b in zip(self.values, other.values):
            if a != b:
                worst = max(worst, abs(ext_sub(a, b)))
        return worst


def edge_value(signal: Signal, e: int) -> float:
    u, v = signal.graph.edges[e]
    return max(signal.values[u], signal.values[v])


def check_input_signal(signal: Signal) -> Signal:
    """User-supplied signals may use +inf but not -inf (reserved for negated duals)."""
    if any(x == -INF for x in signal.values):
        raise ValidationError("-inf is not allowed in an input signal")
    return signal


# --------------------------------------------------------------------------
# cells and total orders


class Cell(NamedTuple):
    dim: int  # VERTEX, EDGE or FACE
    index: int

    def __repr__(self):
        return f"{'vef'[self.dim]}{self.index}"


def face_vertices(graph: Graph, face: Sequence[int]) -> tuple[int, ...]:
    """Sorted vertex set touched by the edges of ``face``."""
    vs = set()
    for e in face:
        vs.update(graph.edges[e])
    return tuple(sorted(vs))


def cell_values(
    signal: Signal, faces: Sequence[Sequence[int]] = ()
) -> dict[Cell, float]:
    """Max-extension of the vertex signal to every cell."""
    f = signal.values
    vals = {Cell(VERTEX, i): f[i] for i in range(len(f))}
    for i, (u, v) in enumerate(signal.graph.edges):
        vals[Cell(EDGE, i)] = max(f[u], f[v])
    for i, face in enumerate(faces):
        vals[Cell(FACE, i)] = max(
            (f[v] for v in face_vertices(signal.graph, face)), default=-INF
        )
    return vals


@dataclass(frozen=True)
class TotalOrder:
    """A sequence of all cells of ``graph`` (plus ``faces``) and its inverse rank map."""

    graph: Graph
    cells: tuple[Cell, ...]
    faces: tuple[tuple[int, ...], ...] = ()
    rank: dict[Cell, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rank = {c: i for i, c in enumerate(self.cells)}
        expected = self.graph.vertex_count + self.graph.edge_count + len(self.faces)
        if len(rank) != len(self.cells) or len(rank) != expected:
            raise ValidationError("ordering is not a permutation of the cells")
        object.__setattr__(self, "rank", rank)

    def __len__(self) -> int:
        return len(self.cells)

    def vertex_ranks(self) -> list[int]:
        rank = self.rank
        return [rank[Cell(VERTEX, v)] for v in range(self.graph.vertex_count)]


def canonical_ordering(
    signal: Signal, faces: Sequence[Sequence[int]] = ()
) -> TotalOrder:
    """Sort cells by ``(value, dimension, index)``."""
    vals = cell_values(signal, faces)
    cells = sorted(vals, key=lambda c: (vals[c], c.dim, c.index))
    return TotalOrder(signal.graph, tuple(cells), tuple(tuple(t) for t in faces))


def induced_ordering(base: TotalOrder, new_signal: Signal) -> TotalOrder:
    """Order for ``new_signal`` that breaks value ties by position in ``base``."""
    if new_signal.graph != base.graph:
        raise ValidationError("signal lives on a different graph than the ordering")
    vals = cell_values(new_signal, base.faces)
    cells = sorted(base.cells, key=vals.__getitem__)  # stable
    return TotalOrder(base.graph, tuple(cells), base.faces)


def ordering_violations(signal: Signal, order: TotalOrder) -> list[str]:
    """Every broken ordering constraint, as messages; empty for a valid ordering."""
    problems = []
    vals = cell_values(signal, order.faces)
    seq = [vals[c] for c in order.cells]
    for i in range(len(seq) - 1):
        if seq[i] > seq[i + 1]:
            problems.append(f"value drops at position {i}: {order.cells[i]} -> {order.cells[i + 1]}")
    rank = order.rank
    for i, (u, v) in enumerate(order.graph.edges):
        r = rank[Cell(EDGE, i)]
        if rank[Cell(VERTEX, u)] > r or rank[Cell(VERTEX, v)] > r:
            problems.append(f"edge {i} precedes one of its vertices")
    for j, face in enumerate(order.faces):
        r = rank[Cell(FACE, j)]
        if any(rank[Cell(EDGE, e)] > r for e in face):
            problems.append(f"face {j} precedes one of its edges")
    return problems


def is_valid_ordering(signal: Signal, order: TotalOrder) -> bool:
    return not ordering_violations(signal, order)


class Subcomplex(NamedTuple):
    """Cells of a sublevel set. Not a :class:`Graph`: it may be empty or disconnected."""

    vertices: frozenset[int]
    edges: frozenset[int]
    faces: frozenset[int] = frozenset()

    def cells(self) -> set[Cell]:
        return (
            {Cell(VERTEX, v) for v in self.vertices}
            | {Cell(EDGE, e) for e in self.edges}
            | {Cell(FACE, t) for t in self.faces}
        )


def _collect(cells: Iterable[Cell]) -> Subcomplex:
    parts: tuple[set, set, set] = (set(), set(), set())
    for c in cells:
        parts[c.dim].add(c.index)
    return Subcomplex(*(frozenset(p) for p in parts))


Cutoff = Union[int, Cell, float]


def sublevel_subgraph(
    signal: Signal, order: TotalOrder, cutoff: Cutoff, mode: str = "inclusive"
) -> Subcomplex:
    """Sublevel set of the nesting.

    ``mode="inclusive"`` keeps cells up to and including ``cutoff`` (a cell or a
    position; ``-1`` gives the empty set), ``"strict"`` keeps cells strictly
    before it, and ``"value"`` keeps every cell whose value is ``<= cutoff``.
    """
    if mode == "value":
        vals = cell_values(signal, order.faces)
        return _collect(c for c in order.cells if vals[c] <= cutoff)
    pos = order.rank[cutoff] if isinstance(cutoff, Cell) else int(cutoff)
    if mode == "inclusive":
        stop = pos + 1
    elif mode == "strict":
        stop = pos
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _collect(order.cells[: max(stop, 0)])


# --------------------------------------------------------------------------
# persistence diagrams


class Interval(NamedTuple):
    birth: float
    death: float
    dim: int = 0

    @property
    def persistence(self) -> float:
        return persistence(self.birth, self.death)

    @property
    def trivial(self) -> bool:
        return self.birth == self.death

    def to_json(self) -> dict:
        return {"dim": self.dim, "birth": format_value(self.birth), "death": format_value(self.death)}


def _interval_key(iv: Interval):
    return (iv.dim, iv.birth, iv.death)


class Diagram:
    """Multiset of intervals. Equality ignores order but not multiplicity or trivial intervals;
    use :func:`diagram_equiv` to compare up to trivial intervals."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Interval | tuple] = ()):
        ivs = []
        for iv in intervals:
            if not isinstance(iv, Interval):
                iv = Interval(*iv)
            if iv.birth > iv.death:
                raise ValueError(f"birth after death in {iv}")
            ivs.append(Interval(float(iv.birth), float(iv.death), int(iv.dim)))
        self.intervals = tuple(sorted(ivs, key=_interval_key))

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self) -> str:
        body = ", ".join(f"[{iv.birth:g},{iv.death:g})" for iv in self.intervals)
        return f"Diagram({{{body}}})"

    def nontrivial(self) -> "Diagram":
        return Diagram(iv for iv in self.intervals if not iv.trivial)

    def dimension(self, dim: int) -> "Diagram":
        return Diagram(iv for iv in self.intervals if iv.dim == dim)

    def to_json(self) -> list[dict]:
        return [iv.to_json() for iv in self.intervals]


def diagram_equiv(a: Diagram, b: Diagram) -> bool:
    """Equal as multisets once trivial intervals are dropped."""
    return a.nontrivial() == b.nontrivial()


def diagram_threshold(diagram: Diagram, eps: float, mode: str = ">=") -> Diagram:
    """Sub-multiset with persistence ``>= eps`` or ``< eps`` (also ``>``, ``<=``)."""
    if not eps > 0:
        raise ValueError("threshold must be positive")
    tests = {
        ">=": lambda p: p >= eps,
        "<": lambda p: p < eps,
        ">": lambda p: p > eps,
        "<=": lambda p: p <= eps,
    }
    try:
        keep = tests[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None
    return Diagram(iv for iv in diagram if keep(iv.persistence))
