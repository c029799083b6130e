"""Turn series, grayscale images and triangle meshes into (graph with faces, embedding, signal)
triples, and write filtered values back out.

File formats: one-value-per-line CSV for series and mesh scalars, ASCII PGM (P2)
for images, ASCII OFF for meshes.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .complex import Embedding, GraphWithFaces
from .core import Graph, Signal, ValidationError, parse_value


class FormatError(ValueError):
    """Input file cannot be parsed."""


@dataclass(frozen=True)
class GridImage:
    height: int  # rows
    width: int  # columns
    values: tuple[float, ...]  # row-major
    maxval: int = 255

    def __post_init__(self):
        if self.height < 1 or self.width < 1:
            raise ValidationError("image must be at least 1x1")
        vals = tuple(float(x) for x in self.values)
        if len(vals) != self.height * self.width:
            raise ValidationError("pixel count does not match the image shape")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_array(cls, arr, maxval: int = 255) -> "GridImage":
        arr = np.asarray(arr, dtype=float)
        if arr.ndim != 2:
            raise ValidationError("expected a 2-D array")
        return cls(arr.shape[0], arr.shape[1], tuple(arr.ravel().tolist()), maxval)

    def to_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float).reshape(self.height, self.width)


def series_to_signal(values: Sequence[float]) -> Signal:
    """Path graph through the samples in order."""
    if len(values) == 0:
        raise ValidationError("empty series")
    n = len(values)
    return Signal(Graph(n, tuple((i, i + 1) for i in range(n - 1))), tuple(values))


def grid_edges(height: int, width: int) -> tuple[list[tuple[int, int]], dict]:
    """4-neighbour edges, horizontal ones first, plus a lookup from ("h"|"v", row, col) to edge index."""
    edges: list[tuple[int, int]] = []
    index = {}
    for r in range(height):
        for c in range(width - 1):
            index[("h", r, c)] = len(edges)
            edges.append((r * width + c, r * width + c + 1))
    for r in range(height - 1):
        for c in range(width):
            index[("v", r, c)] = len(edges)
            edges.append((r * width + c, (r + 1) * width + c))
    return edges, index


def image_to_gwf(img: GridImage) -> tuple[GraphWithFaces, Embedding, Signal]:
    """Pixels become vertices, unit squares faces, and the outside one hole."""
    m1, m2 = img.height, img.width
    edges, at = grid_edges(m1, m2)
    faces = [
        (at["h", r, c], at["v", r, c + 1], at["h", r + 1, c], at["v", r, c])
        for r in range(m1 - 1)
        for c in range(m2 - 1)
    ]
    if m1 > 1 and m2 > 1:
        outer = (
            [at["h", 0, c] for c in range(m2 - 1)]
            + [at["v", r, m2 - 1] for r in range(m1 - 1)]
            + [at["h", m1 - 1, c] for c in range(m2 - 1)]
            + [at["v", r, 0] for r in range(m1 - 1)]
        )
    else:
        # a path: the walk around it crosses every edge twice
        outer = [e for e in range(len(edges)) for _ in range(2)]
    graph = Graph(m1 * m2, tuple(edges))
    gwf = GraphWithFaces(graph, tuple(faces))
    return gwf, Embedding(gwf, (tuple(outer),)), Signal(graph, img.values)


def signal_to_image(signal: Signal, like: GridImage) -> GridImage:
    return GridImage(like.height, like.width, signal.values, like.maxval)


def mesh_to_gwf(
    vertices: Sequence, triangles: Sequence[Sequence[int]], scalar: Sequence[float]
) -> tuple[GraphWithFaces, Embedding, Signal]:
    """Closed triangulated sphere; every triangle is a face and there are no holes."""
    n = len(vertices)
    edge_index: dict[tuple[int, int], int] = {}
    faces = []
    for tri in triangles:
        a, b, c = (int(x) for x in tri)
        face = []
        for u, v in ((a, b), (b, c), (c, a)):
            key = (min(u, v), max(u, v))
            if key not in edge_index:
                edge_index[key] = len(edge_index)
            face.append(edge_index[key])
        faces.append(tuple(face))
    chi = n - len(edge_index) + len(faces)
    if chi != 2:
        raise ValidationError(f"mesh Euler characteristic is {chi}, need a sphere (2)")
    graph = Graph(n, tuple(edge_index))
    gwf = GraphWithFaces(graph, tuple(faces))
    return gwf, Embedding(gwf, ()), Signal(graph, tuple(scalar))


# --------------------------------------------------------------------------
# file formats


def _tokens_without_comments(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        out.extend(line.split("#", 1)[0].split())
    return out


def read_pgm(path: str | Path) -> GridImage:
    toks = _tokens_without_comments(Path(path).read_text())
    if not toks or toks[0] != "P2":
        raise FormatError("not an ASCII PGM (P2) file")
    try:
        width, height, maxval = int(toks[1]), int(toks[2]), int(toks[3])
        pixels = [int(t) for t in toks[4:]]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad PGM header or pixel data: {exc}") from None
    if len(pixels) != width * height:
        raise FormatError(f"expected {width * height} pixels, found {len(pixels)}")
    return GridImage(height, width, tuple(pixels), maxval)


def pgm_text(img: GridImage) -> str:
    """Values are rounded half-to-even and clipped into ``[0, maxval]``."""
    arr = np.clip(np.rint(img.to_array()), 0, img.maxval).astype(int)
    lines = ["P2", f"{img.width} {img.height}", str(img.maxval)]
    lines += [" ".join(str(x) for x in row) for row in arr]
    return "\n".join(lines) + "\n"


def write_pgm(img: GridImage, path: str | Path) -> None:
    Path(path).write_text(pgm_text(img))


def read_series(path: str | Path) -> list[float]:
    out = []
    for n, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_value(line.split(",")[0]))
        except ValueError as exc:
            raise FormatError(f"line {n}: {exc}") from None
    return out


def write_series(values: Sequence[float], path: str | Path) -> None:
    Path(path).write_text("".join(f"{v!r}\n" for v in values))


def read_off(path: str | Path) -> tuple[list[tuple[float, ...]], list[tuple[int, int, int]]]:
    toks = _tokens_without_comments(Path(path).read_text())
    if not toks or toks[0] != "OFF":
        raise FormatError("not an OFF file")
    try:
        nv, nf = int(toks[1]), int(toks[2])
        pos = 4
        verts = []
        for _ in range(nv):
            verts.append(tuple(float(t) for t in toks[pos : pos + 3]))
            pos += 3
        tris = []
        for _ in range(nf):
            k = int(toks[pos])
            if k != 3:
                raise FormatError("only triangle faces are supported")
            tris.append(tuple(int(t) for t in toks[pos + 1 : pos + 4]))
            pos += 4
    except (IndexError, ValueError) as exc:
        raise FormatError(f"truncated or malformed OFF: {exc}") from None
    return verts, tris
