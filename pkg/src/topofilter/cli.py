"""Command-line front end.

    topofilter pd INPUT [--dim 0|1|both] [--oracle] [--svg FILE] [-o FILE]
    topofilter filter INPUT --eps E [--dim 0|1|star] [--shift] [--json] [-o FILE]
    topofilter bht INPUT [-o FILE]
    topofilter plot INPUT -o FILE.svg
    topofilter generate --seed N [--kind graph|grid|bumps] [-o FILE]

Exit status: 0 ok, 1 malformed input, 2 validation failure, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from . import adapters, generators
from .bht import bht_to_json, build_bht
from .complex import Embedding, GraphWithFaces, bare_embedding, build_induced, lpf_gwf, lpf_star, pd_gwf
from .core import Signal, ValidationError, canonical_ordering, check_input_signal, diagram_equiv
from .oracle import oracle_pd
from .plot import diagram_svg
from .serialize import diagram_to_json, dumps, read_signal_json, signal_to_json

log = logging.getLogger("topofilter")

EXIT_OK, EXIT_MALFORMED, EXIT_INVALID, EXIT_ORACLE = 0, 1, 2, 3


class OracleMismatch(RuntimeError):
    pass


@dataclass
class RunConfig:
    command: str
    input: Optional[Path] = None
    format: Optional[str] = None  # json | pgm | csv | off; inferred from the suffix if unset
    scalar: Optional[Path] = None  # per-vertex values for OFF meshes
    dim: str = "both"
    eps: Optional[float] = None
    output: Optional[Path] = None
    svg: Optional[Path] = None
    shift: bool = False
    oracle: bool = False
    json_out: bool = False
    include_trivial: bool = False
    seed: int = 0
    kind: str = "graph"

    def __post_init__(self):
        if self.command == "filter":
            if self.eps is None or not self.eps > 0 or math.isinf(self.eps):
                raise ValidationError("filter needs a finite --eps > 0")
            if self.shift and self.dim != "0":
                raise ValidationError("--shift applies to --dim 0 only")


@dataclass
class Loaded:
    gwf: GraphWithFaces
    emb: Embedding
    signal: Signal
    write: Callable[[Signal, Optional[Path], bool], None]


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _infer_format(cfg: RunConfig) -> str:
    if cfg.format:
        return cfg.format
    suffix = cfg.input.suffix.lower().lstrip(".")
    if suffix in ("json", "pgm", "csv", "off"):
        return suffix
    if suffix in ("txt",):
        return "csv"
    raise adapters.FormatError(f"cannot tell the format of {cfg.input}; pass --format")


def load(cfg: RunConfig) -> Loaded:
    fmt = _infer_format(cfg)
    if fmt == "json":
        gwf, emb, signal = read_signal_json(cfg.input)

        def write(s, path, as_json):
            _emit(dumps(signal_to_json(gwf, emb, s)), path)

    elif fmt == "pgm":
        img = adapters.read_pgm(cfg.input)
        gwf, emb, signal = adapters.image_to_gwf(img)

        def write(s, path, as_json):
            if as_json:
                _emit(dumps(signal_to_json(gwf, emb, s)), path)
            else:
                _emit(adapters.pgm_text(adapters.signal_to_image(s, img)), path)

    elif fmt == "csv":
        signal = check_input_signal(adapters.series_to_signal(adapters.read_series(cfg.input)))
        gwf, emb = GraphWithFaces(signal.graph), bare_embedding(signal.graph)

        def write(s, path, as_json):
            if as_json:
                _emit(dumps(signal_to_json(gwf, emb, s)), path)
            else:
                _emit("".join(f"{v!r}\n" for v in s.values), path)

    elif fmt == "off":
        if cfg.scalar is None:
            raise adapters.FormatError("OFF input needs --scalar FILE")
        verts, tris = adapters.read_off(cfg.input)
        scalar = adapters.read_series(cfg.scalar)
        if len(scalar) != len(verts):
            raise adapters.FormatError("scalar file length does not match the mesh")
        gwf, emb, signal = adapters.mesh_to_gwf(verts, tris, scalar)
        check_input_signal(signal)

        def write(s, path, as_json):
            if as_json:
                _emit(dumps(signal_to_json(gwf, emb, s)), path)
            else:
                _emit("".join(f"{v!r}\n" for v in s.values), path)

    else:
        raise adapters.FormatError(f"unknown format {fmt!r}")
    return Loaded(gwf, emb, signal, write)


def _dims(dim: str) -> tuple[int, ...]:
    return {"0": (0,), "1": (1,), "both": (0, 1)}[dim]


def cmd_pd(cfg: RunConfig, data: Loaded) -> int:
    dims = _dims(cfg.dim)
    diagrams = {d: pd_gwf(data.gwf, data.emb, data.signal, d) for d in dims}
    if cfg.oracle:
        reference = oracle_pd(data.signal, data.gwf.faces)
        for d in dims:
            if not diagram_equiv(diagrams[d], reference[d]):
                raise OracleMismatch(
                    f"dim {d}: {diagrams[d].nontrivial()} != oracle {reference[d].nontrivial()}"
                )
        log.info("oracle agrees on dims %s", dims)
    shown = [diagrams[d] if cfg.include_trivial else diagrams[d].nontrivial() for d in dims]
    _emit(dumps(diagram_to_json(*shown)), cfg.output)
    if cfg.svg is not None:
        Path(cfg.svg).write_text(diagram_svg(*shown))
    return EXIT_OK


def cmd_filter(cfg: RunConfig, data: Loaded) -> int:
    gwf, emb, f, eps = data.gwf, data.emb, data.signal, cfg.eps
    if cfg.dim == "star":
        if emb.is_bare:
            raise ValidationError("--dim star needs a graph with faces")
        g, applications = lpf_star(gwf, emb, f, eps)
        log.info("fixed point after %d filter applications", applications)
    else:
        g = lpf_gwf(gwf, emb, f, eps, int(cfg.dim))
        if cfg.shift:
            if any(math.isinf(x) for x in g.values):
                raise ValidationError("--shift needs a finite signal")
            # half the largest raise: strictly within eps/2 of the input
            shift = max(a - b for a, b in zip(g.values, f.values)) / 2
            g = g.with_values(x - shift for x in g.values)
    data.write(g, cfg.output, cfg.json_out)
    return EXIT_OK


def cmd_bht(cfg: RunConfig, data: Loaded) -> int:
    """BHT of the signal, or of the induced graph when there are faces or holes."""
    if data.emb.is_bare:
        s = data.signal
    else:
        s = build_induced(data.gwf, data.emb, data.signal).signal
    _emit(dumps(bht_to_json(build_bht(s, canonical_ordering(s)))), cfg.output)
    return EXIT_OK


def cmd_plot(cfg: RunConfig, data: Loaded) -> int:
    shown = [pd_gwf(data.gwf, data.emb, data.signal, d).nontrivial() for d in _dims(cfg.dim)]
    title = cfg.input.name if cfg.input else ""
    _emit(diagram_svg(*shown, title=title), cfg.output)
    return EXIT_OK


def cmd_generate(cfg: RunConfig) -> int:
    rng = np.random.default_rng(cfg.seed)
    if cfg.kind == "graph":
        s = generators.random_graph_signal(rng)
        gwf = GraphWithFaces(s.graph)
        _emit(dumps(signal_to_json(gwf, bare_embedding(s.graph), s)), cfg.output)
    elif cfg.kind in ("grid", "bumps"):
        img = generators.random_grid_image(rng) if cfg.kind == "grid" else generators.bumps_image(rng)
        _emit(adapters.pgm_text(img), cfg.output)
    else:
        raise ValidationError(f"unknown generator kind {cfg.kind!r}")
    return EXIT_OK


COMMANDS = {"pd": cmd_pd, "filter": cmd_filter, "bht": cmd_bht, "plot": cmd_plot}


def run(cfg: RunConfig) -> int:
    try:
        if cfg.command == "generate":
            return cmd_generate(cfg)
        return COMMANDS[cfg.command](cfg, load(cfg))
    except (adapters.FormatError, json.JSONDecodeError, OSError, UnicodeDecodeError) as exc:
        log.error("malformed input: %s", exc)
        return EXIT_MALFORMED
    except ValidationError as exc:
        log.error("validation failed: %s", exc)
        return EXIT_INVALID
    except OracleMismatch as exc:
        log.error("oracle mismatch: %s", exc)
        return EXIT_ORACLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topofilter", description=__doc__.split("\n\n")[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, dims):
        sp.add_argument("input", type=Path)
        sp.add_argument("--format", choices=["json", "pgm", "csv", "off"])
        sp.add_argument("--scalar", type=Path, help="per-vertex values for OFF input")
        sp.add_argument("-o", "--output", type=Path)
        if dims:
            sp.add_argument("--dim", choices=dims, default=dims[-1] if "both" in dims else dims[0])

    sp = sub.add_parser("pd", help="persistence diagrams as JSON")
    common(sp, ["0", "1", "both"])
    sp.add_argument("--oracle", action="store_true", help="cross-check against matrix reduction")
    sp.add_argument("--svg", type=Path, help="also write a diagram plot")
    sp.add_argument("--all", dest="include_trivial", action="store_true", help="keep trivial intervals")

    sp = sub.add_parser("filter", help="low-persistence filter")
    common(sp, ["0", "1", "star"])
    sp.add_argument("--eps", type=float, required=True)
    sp.add_argument("--shift", action="store_true", help="shift down by half the largest raise, staying within eps/2 (dim 0)")
    sp.add_argument("--json", dest="json_out", action="store_true", help="write real-valued JSON")

    sp = sub.add_parser("bht", help="dump the basin hierarchy tree")
    common(sp, None)

    sp = sub.add_parser("plot", help="persistence diagram as SVG")
    common(sp, ["0", "1", "both"])

    sp = sub.add_parser("generate", help="write a seeded random instance")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--kind", choices=["graph", "grid", "bumps"], default="graph")
    sp.add_argument("-o", "--output", type=Path)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    try:
        cfg = RunConfig(**fields)
    except ValidationError as exc:
        log.error("validation failed: %s", exc)
        return EXIT_INVALID
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
