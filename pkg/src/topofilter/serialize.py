"""JSON forms of signals (optionally with faces and holes) and of diagrams."""

from __future__ import annotations

import json
from pathlib import Path

from .complex import Embedding, GraphWithFaces
from .core import Diagram, Graph, Interval, Signal, check_input_signal, format_value, parse_value
from .adapters import FormatError


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, default separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, allow_nan=False) + "\n"


def signal_from_json(data) -> tuple[GraphWithFaces, Embedding, Signal]:
    if not isinstance(data, dict) or "vertices" not in data:
        raise FormatError('expected an object with a "vertices" list')
    try:
        values = [parse_value(x) for x in data["vertices"]]
        edges = [(int(u), int(v)) for u, v in data.get("edges", [])]
        faces = [[int(e) for e in t] for t in data.get("faces", [])]
        holes = [[int(e) for e in t] for t in data.get("holes", [])]
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed signal JSON: {exc}") from None
    graph = Graph(len(values), tuple(edges))
    signal = check_input_signal(Signal(graph, tuple(values)))
    gwf = GraphWithFaces(graph, tuple(tuple(t) for t in faces))
    return gwf, Embedding(gwf, tuple(tuple(t) for t in holes)), signal


def signal_to_json(gwf: GraphWithFaces, emb: Embedding, signal: Signal) -> dict:
    out = {
        "vertices": [format_value(v) for v in signal.values],
        "edges": [list(e) for e in gwf.graph.edges],
    }
    if gwf.faces:
        out["faces"] = [list(t) for t in gwf.faces]
    if emb.holes:
        out["holes"] = [list(t) for t in emb.holes]
    return out


def read_signal_json(path: str | Path):
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return signal_from_json(data)


def diagram_to_json(*diagrams: Diagram) -> list[dict]:
    return [iv.to_json() for d in diagrams for iv in d]


def diagram_from_json(items) -> Diagram:
    try:
        return Diagram(
            Interval(parse_value(it["birth"]), parse_value(it["death"]), int(it["dim"]))
            for it in items
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed diagram JSON: {exc}") from None
