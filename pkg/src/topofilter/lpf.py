"""Low-persistence filtering of graph signals by filling shallow basins of the BHT."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bht import BHT, build_bht
from .core import INF, Signal, ValidationError, induced_ordering


@dataclass(frozen=True)
class FilterResult:
    filtered: Signal
    eps: float
    basins_filled: tuple[tuple[int, float], ...]  # (basin root, value it was raised to)


def _check_eps(eps: float) -> None:
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")


def lpf0(signal: Signal, bht: BHT, eps: float) -> FilterResult:
    """Raise each vertex to the highest linking value among its ancestors of persistence < eps.

    Parents precede children in the host ordering, so one pass in that order
    carries the running max down the tree.
    """
    _check_eps(eps)
    f = signal.values
    parent = bht.parent
    ceiling = [-INF] * len(f)
    filled = []
    for v in bht.preorder:
        c = ceiling[parent[v]] if parent[v] != v else -INF
        if bht.pers(v) < eps:
            lv = f[bht.linking[v]]
            if lv > c:
                c = lv
            if lv != f[v]:
                filled.append((v, lv))
        ceiling[v] = c
    out = tuple(max(x, c) for x, c in zip(f, ceiling))
    return FilterResult(signal.with_values(out), eps, tuple(filled))


def lpf0_shifted(signal: Signal, bht: BHT, eps: float, mode: str = "midpoint") -> Signal:
    """Filtered signal moved down so it sits within ``eps/2`` of the input.

    ``mode="half_eps"`` subtracts exactly ``eps/2``. Vertices the filter does not
    raise (the root, at least) then sit exactly ``eps/2`` away, so that bound is
    not strict. ``mode="midpoint"`` subtracts half the largest raise instead,
    which keeps the distance strictly below ``eps/2``. Both are uniform shifts,
    so persistence is unchanged.
    """
    if any(math.isinf(x) for x in signal.values):
        raise ValidationError("shifted filter needs a finite signal")
    g = lpf0(signal, bht, eps).filtered
    if mode == "half_eps":
        shift = eps / 2
    elif mode == "midpoint":
        shift = max(a - b for a, b in zip(g.values, signal.values)) / 2
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return g.with_values(x - shift for x in g.values)


def basin_fill(signal: Signal, bht: BHT, v: int) -> Signal:
    """Set ``v`` and its BHT descendants to the current value at the linking vertex of ``v``."""
    link = bht.linking[v]
    if link is None:
        raise ValueError("the root has no basin to fill")
    level = signal.values[link]
    values = list(signal.values)
    for u in bht.descendants(v):
        values[u] = level
    return signal.with_values(values)


def check_bht_stability(signal: Signal, bht: BHT, eps: float) -> bool:
    """Whether the BHT rebuilt on the filtered signal (ties broken by the old order) is unchanged."""
    g = lpf0(signal, bht, eps).filtered
    rebuilt = build_bht(g, induced_ordering(bht.order, g))
    return rebuilt.same_tree(bht)
