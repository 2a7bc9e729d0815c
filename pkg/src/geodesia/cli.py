"""Command-line front end.

Exit status: 0 success (or every audit verdict non-FAIL), 1 an audit FAIL,
2 bad input, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import audit
from .corona import Variant, copies_needed, product
from .errors import GeodesiaError, ParseError, ResourceCapError
from .formats import format_certificate, format_labeled, graph_from_spec, parse_any, to_dot
from .geodetic import TWO_GEODESIC, UNBOUNDED, SolverLimits, geodetic_basis, strong_geodetic_number
from .graph import Graph

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

ENV_SOLVE_CAP = "GEODESIA_SOLVE_CAP"
ENV_NODE_BUDGET = "GEODESIA_NODE_BUDGET"
ENV_GEODESIC_CAP = "GEODESIA_GEODESIC_CAP"


@dataclass(frozen=True)
class RunConfig:
    solve_cap_vertices: int = 20
    geodesic_cap: int = 10_000
    node_budget: int = 10**7
    output_format: str = "text"
    seed: int = 0

    def __post_init__(self) -> None:
        if min(self.solve_cap_vertices, self.geodesic_cap, self.node_budget) < 1:
            raise ValueError("caps must be positive")

    @property
    def limits(self) -> SolverLimits:
        return SolverLimits(self.solve_cap_vertices, self.node_budget, self.geodesic_cap)


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {raw!r}") from None


def run_config(args: argparse.Namespace) -> RunConfig:
    """Flags win over environment variables, which win over defaults."""
    def pick(flag: Optional[int], env: str, default: int) -> int:
        if flag is not None:
            return flag
        from_env = _env_int(env)
        return default if from_env is None else from_env

    base = RunConfig()
    return RunConfig(
        solve_cap_vertices=pick(args.solve_cap, ENV_SOLVE_CAP, base.solve_cap_vertices),
        geodesic_cap=pick(args.geodesic_cap, ENV_GEODESIC_CAP, base.geodesic_cap),
        node_budget=pick(args.node_budget, ENV_NODE_BUDGET, base.node_budget),
        output_format=getattr(args, "format", None) or base.output_format,
        seed=args.seed,
    )


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(source: str) -> Graph:
    """A graph file, or a compact spec such as ``C5`` / ``path:4``."""
    if Path(source).exists():
        loaded = parse_any(_read_text(source))
        return loaded if isinstance(loaded, Graph) else loaded.graph
    try:
        return graph_from_spec(source)
    except ParseError:
        raise ParseError(f"{source}: no such file and not a graph spec") from None


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_sg(args: argparse.Namespace, cfg: RunConfig) -> int:
    g = _load_graph(args.input)
    bound = TWO_GEODESIC if args.two_geodetic else UNBOUNDED
    result = strong_geodetic_number(g, bound, cfg.limits)
    name = "Sg'" if args.two_geodetic else "Sg"
    basis = ",".join(map(str, result.certificate.basis))
    print(f"{name} = {result.number}, basis {{{basis}}}")
    sys.stdout.write(format_certificate(result.certificate))
    return EXIT_OK


def cmd_geodetic(args: argparse.Namespace, cfg: RunConfig) -> int:
    basis = geodetic_basis(_load_graph(args.input), cfg.limits)
    print(f"g = {len(basis)}, basis {{{','.join(map(str, basis))}}}")
    return EXIT_OK


def cmd_product(args: argparse.Namespace, cfg: RunConfig) -> int:
    variant = Variant(args.variant)
    g = _load_graph(args.base)
    if args.uniform is not None:
        if args.copies:
            raise ParseError("give copy graphs or --uniform, not both")
        hs = [_load_graph(args.uniform)] * copies_needed(variant, g)
    else:
        hs = [_load_graph(c) for c in args.copies]
    _write(format_labeled(product(variant, g, hs)), args.output)
    return EXIT_OK


def cmd_audit(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.default:
        config = audit.default_suite()
    elif args.config:
        try:
            config = json.loads(_read_text(args.config))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{args.config}: {exc}") from None
    else:
        raise ParseError("audit needs a config file or --default")
    reports = audit.audit_suite(config, cfg.limits, seed=cfg.seed)
    _write(audit.render(reports, cfg.output_format), args.output)
    return EXIT_FAIL if audit.any_failed(reports) else EXIT_OK


def cmd_dot(args: argparse.Namespace, cfg: RunConfig) -> int:
    _write(to_dot(parse_any(_read_text(args.input))), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodesia",
        description="Exact strong geodetic numbers and corona-product audits.",
    )
    parser.add_argument("--solve-cap", type=int, help=f"max vertices for exact solving (env {ENV_SOLVE_CAP})")
    parser.add_argument("--node-budget", type=int, help=f"max search nodes (env {ENV_NODE_BUDGET})")
    parser.add_argument("--geodesic-cap", type=int, help=f"max geodesics per pair (env {ENV_GEODESIC_CAP})")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suite entries")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sg", help="strong geodetic number of a graph file")
    p.add_argument("input")
    p.add_argument("--two-geodetic", action="store_true", help="only fix 2-geodesics (Sg')")
    p.set_defaults(func=cmd_sg)

    p = sub.add_parser("geodetic", help="geodetic number of a graph file")
    p.add_argument("input")
    p.set_defaults(func=cmd_geodetic)

    p = sub.add_parser("product", help="build a corona-type product")
    p.add_argument("variant", choices=[v.value for v in Variant])
    p.add_argument("base")
    p.add_argument("copies", nargs="*")
    p.add_argument("--uniform", metavar="H", help="use H for every copy")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("audit", help="audit the product claims")
    p.add_argument("config", nargs="?", help="JSON suite config")
    p.add_argument("--default", action="store_true", help="run the curated default suite")
    p.add_argument("--format", choices=["text", "tsv", "csv"], default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("dot", help="export a graph or labeled graph file as DOT")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = run_config(args)
        return args.func(args, cfg)
    except ResourceCapError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GeodesiaError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
