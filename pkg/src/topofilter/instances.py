"""Small hand-built instances with known diagrams, shared by tests and scripts."""

from __future__ import annotations

from .adapters import GridImage, image_to_gwf, series_to_signal
from .complex import Embedding, GraphWithFaces
from .core import Graph, Signal


def path_example() -> Signal:
    """Path a-b-c-d with values 3, 1, 4, 2."""
    return series_to_signal([3, 1, 4, 2])


def nesting_example() -> Signal:
    """Path 1-2-1-3-2 with three doubled edges.

    PD0 ~ {[1,inf), [1,2), [2,3)}; the doubled edges close cycles at 2, 3 and 3.
    """
    edges = ((0, 1), (1, 2), (2, 3), (3, 4), (0, 1), (2, 3), (3, 4))
    return Signal(Graph(5, edges), (1, 2, 1, 3, 2))


def sharpness_path() -> Signal:
    """Path 0-9-1-9-7, PD0 ~ {[0,inf), [1,9), [7,9)}.

    Removing [7,9) while keeping [1,9) costs a sup-norm change of 2.
    """
    return series_to_signal([0, 9, 1, 9, 7])


def ring_image() -> GridImage:
    """3x3 image: a ring of 1s around a centre 3. PD1 = {[1,3)}."""
    return GridImage(3, 3, (1, 1, 1, 1, 3, 1, 1, 1, 1), maxval=3)


def pit_in_ring_image() -> GridImage:
    """5x5 image where a deep pit (1) sits inside a shallow bump (ring of 5s in a cycle born at 3).

    PD0 ~ {[0,inf), [1,5)}, PD1 ~ {[3,5)}. For 2 < eps < 4, L0 changes
    nothing, L1 flattens the ring to 3, and the pit becomes [1,3): one L1 L0
    pass leaves a short PD0 interval that a second round removes.
    """
    vals = (
        0, 0, 0, 0, 0,
        0, 5, 5, 5, 0,
        0, 5, 1, 5, 0,
        0, 5, 5, 5, 0,
        0, 0, 0, 0, 3,
    )  # fmt: skip
    return GridImage(5, 5, vals, maxval=5)


def pit_in_ring():
    return image_to_gwf(pit_in_ring_image())


def two_lens_complex() -> tuple[GraphWithFaces, Embedding, Signal]:
    """Planar graph with faces where PD0 and PD1 cannot both be cleaned exactly at eps = 2.

    Vertices w, x1, x2, x3, y, z = -3, 1, 1, 2, 6, 9. Doubled edges x1=x2 and
    x2=x3 form two lenses, with y inside the first and z inside the second;
    w hangs off x3. PD0 = {[-3,inf), [1,2)}, PD1 = {[1,6), [2,9)}.
    """
    edges = (
        (1, 2), (1, 2),  # lens around y
        (2, 3), (2, 3),  # lens around z
        (3, 0),
        (4, 1), (4, 2),
        (5, 2), (5, 3),
    )  # fmt: skip
    faces = ((0, 6, 5), (1, 6, 5), (2, 8, 7), (3, 8, 7))
    outer = ((0, 2, 4, 4, 3, 1),)
    graph = Graph(6, edges)
    gwf = GraphWithFaces(graph, faces)
    return gwf, Embedding(gwf, outer), Signal(graph, (-3, 1, 1, 2, 6, 9))


def octahedron(apex: float = 5.0) -> tuple[list, list, list]:
    """Vertices, triangles and a scalar for an octahedron with one raised apex."""
    verts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    tris = [
        (0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4),
        (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5),
    ]  # fmt: skip
    scalar = [1.0, 2.0, 1.5, 3.0, apex, 0.0]
    return verts, tris, scalar


def tetrahedron() -> tuple[list, list]:
    verts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    tris = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return verts, tris


def torus(n: int = 4, m: int = 4) -> tuple[list, list]:
    """n x m triangulated torus (Euler characteristic 0)."""
    verts = [(i, j, 0) for i in range(n) for j in range(m)]
    idx = lambda i, j: (i % n) * m + (j % m)  # noqa: E731
    tris = []
    for i in range(n):
        for j in range(m):
            a, b, c, d = idx(i, j), idx(i + 1, j), idx(i, j + 1), idx(i + 1, j + 1)
            tris += [(a, b, d), (a, d, c)]
    return verts, tris
