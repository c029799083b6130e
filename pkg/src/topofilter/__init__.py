"""Persistent homology and low-persistence filtering of signals over graphs
and planar graphs with faces, via basin hierarchy trees."""

from .bht import BHT, ancestors_below, build_bht, pd0_from_bht, pers
from .complex import (
    Embedding,
    GraphWithFaces,
    InducedGraphSignal,
    bare_embedding,
    build_induced,
    dominates,
    lpf_gwf,
    lpf_star,
    pd_gwf,
)
from .core import (
    INF,
    Cell,
    Diagram,
    Graph,
    Interval,
    Signal,
    TotalOrder,
    ValidationError,
    canonical_ordering,
    diagram_equiv,
    diagram_threshold,
    edge_value,
    induced_ordering,
    sublevel_subgraph,
)
from .lpf import FilterResult, basin_fill, check_bht_stability, lpf0, lpf0_shifted
from .oracle import oracle_pd, oracle_pd0

__version__ = "0.1.0"
