"""Seeded random instances: connected graphs, small grid images, and a smooth noisy test image."""

from __future__ import annotations

import numpy as np

from .adapters import GridImage
from .core import Graph, Signal


def random_graph_signal(
    rng: np.random.Generator,
    min_vertices: int = 4,
    max_vertices: int = 12,
    max_value: int = 9,
) -> Signal:
    """Random spanning tree plus a few extra (possibly parallel) edges, integer values.

    Values are drawn from a small range so ties are common.
    """
    n = int(rng.integers(min_vertices, max_vertices + 1))
    perm = rng.permutation(n)
    edges = []
    for i in range(1, n):
        j = int(rng.integers(0, i))
        edges.append((int(perm[i]), int(perm[j])))
    for _ in range(int(rng.integers(0, n + 1))):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        edges.append((u, v))
    rng.shuffle(edges)
    values = rng.integers(0, max_value + 1, size=n)
    return Signal(Graph(n, tuple(edges)), tuple(float(x) for x in values))


def random_grid_image(
    rng: np.random.Generator, min_side: int = 2, max_side: int = 6, max_value: int = 9
) -> GridImage:
    h = int(rng.integers(min_side, max_side + 1))
    w = int(rng.integers(min_side, max_side + 1))
    return GridImage(h, w, tuple(float(x) for x in rng.integers(0, max_value + 1, size=h * w)), max_value)


def bumps_image(
    rng: np.random.Generator,
    size: int = 64,
    n_bumps: int = 6,
    noise: float = 8.0,
    maxval: int = 255,
) -> GridImage:
    """Sum of Gaussian bumps and pits plus pixel noise, quantised to integers."""
    yy, xx = np.mgrid[0:size, 0:size].astype(float)
    img = np.full((size, size), maxval / 2)
    for _ in range(n_bumps):
        cy, cx = rng.uniform(0, size, size=2)
        sigma = rng.uniform(size / 16, size / 5)
        amp = rng.uniform(-0.35, 0.35) * maxval
        img += amp * np.exp(-((yy - cy) ** 2 + (xx - cx) ** 2) / (2 * sigma**2))
    img += rng.normal(0, noise, size=img.shape)
    img = np.clip(np.rint(img), 0, maxval)
    return GridImage.from_array(img, maxval)
