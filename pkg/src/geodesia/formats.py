"""Text formats: edge lists, labeled product graphs, certificates, DOT.

Edge list::

    # comment
    n m
    u v        (m lines, 0-based)

A labeled graph is an edge list followed by a ``variant`` line, one
``v <index> base <i>`` / ``v <index> sat <copy> <p>`` line per vertex and one
``copy <c> owner <u> [<w>]`` line per satellite copy.
"""

from __future__ import annotations

import re
from typing import Union

from .corona import Base, CoronaLabeledGraph, Satellite, Variant
from .errors import GraphError, ParseError
from .geodetic import StrongGeodeticCertificate
from .graph import Graph, build_graph, generate

AnyGraph = Union[Graph, CoronaLabeledGraph]


def _content_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _ints(tokens: list[str], what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers in {what}: {' '.join(tokens)!r}") from None


def _parse_edges(lines: list[list[str]]) -> tuple[Graph, list[list[str]]]:
    if not lines:
        raise ParseError("empty graph file")
    header = _ints(lines[0], "header")
    if len(header) != 2:
        raise ParseError("header must be 'n m'")
    n, m = header
    if n < 0 or m < 0:
        raise ParseError("negative counts in header")
    if len(lines) < 1 + m:
        raise ParseError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for tokens in lines[1 : 1 + m]:
        pair = _ints(tokens, "edge line")
        if len(pair) != 2:
            raise ParseError(f"edge line must hold two vertices: {' '.join(tokens)!r}")
        edges.append(pair)
    try:
        g = build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return g, lines[1 + m :]


def parse_edge_list(text: str) -> Graph:
    g, rest = _parse_edges(_content_lines(text))
    if rest:
        raise ParseError(f"unexpected trailing content: {' '.join(rest[0])!r}")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_labeled(text: str) -> CoronaLabeledGraph:
    g, rest = _parse_edges(_content_lines(text))
    variant = None
    labels: dict[int, object] = {}
    owners: dict[int, tuple[int, ...]] = {}
    for tokens in rest:
        key = tokens[0]
        if key == "variant" and len(tokens) == 2:
            try:
                variant = Variant(tokens[1])
            except ValueError:
                raise ParseError(f"unknown variant {tokens[1]!r}") from None
        elif key == "v" and len(tokens) >= 3:
            idx = _ints(tokens[1:2], "label")[0]
            if tokens[2] == "base" and len(tokens) == 4:
                labels[idx] = Base(_ints(tokens[3:], "label")[0])
            elif tokens[2] == "sat" and len(tokens) == 5:
                labels[idx] = Satellite(*_ints(tokens[3:], "label"))
            else:
                raise ParseError(f"bad label line: {' '.join(tokens)!r}")
        elif key == "copy" and len(tokens) >= 4 and tokens[2] == "owner":
            owners[_ints(tokens[1:2], "copy")[0]] = tuple(_ints(tokens[3:], "copy owner"))
        else:
            raise ParseError(f"unrecognised line: {' '.join(tokens)!r}")
    if variant is None:
        raise ParseError("labeled graph lacks a variant line")
    if sorted(labels) != list(range(g.n)):
        raise ParseError("every vertex needs exactly one label")
    if sorted(owners) != list(range(len(owners))):
        raise ParseError("copy owners must be numbered 0..k-1")
    return CoronaLabeledGraph(
        g, tuple(labels[v] for v in range(g.n)), variant,
        tuple(owners[c] for c in range(len(owners))),
    )


def format_labeled(lg: CoronaLabeledGraph) -> str:
    lines = [format_edge_list(lg.graph).rstrip("\n"), f"variant {lg.variant.value}"]
    for v, lab in enumerate(lg.labels):
        if isinstance(lab, Base):
            lines.append(f"v {v} base {lab.i}")
        else:
            lines.append(f"v {v} sat {lab.copy} {lab.p}")
    for c, owner in enumerate(lg.owners):
        lines.append(f"copy {c} owner " + " ".join(map(str, owner)))
    return "\n".join(lines) + "\n"


def parse_any(text: str) -> AnyGraph:
    """Plain edge list, or a labeled graph when label lines follow the edges."""
    g, rest = _parse_edges(_content_lines(text))
    if not rest:
        return g
    return parse_labeled(text)


def to_dot(graph: AnyGraph, name: str = "G") -> str:
    if isinstance(graph, CoronaLabeledGraph):
        g, labels = graph.graph, graph.labels
    else:
        g, labels = graph, None
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is None:
            lines.append(f'  {v} [label="{v}"];')
            continue
        lab = labels[v]
        if isinstance(lab, Base):
            lines.append(f'  {v} [label="u{lab.i}", class="base", color="black"];')
        else:
            lines.append(
                f'  {v} [label="v{lab.copy}_{lab.p}", class="satellite", color="blue"];'
            )
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_certificate(cert: StrongGeodeticCertificate) -> str:
    lines = ["basis " + " ".join(map(str, cert.basis))]
    for (s, t), path in sorted(cert.assignment.items()):
        lines.append(f"{s} {t} : " + " ".join(map(str, path)))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> StrongGeodeticCertificate:
    lines = _content_lines(text)
    if not lines or lines[0][0] != "basis":
        raise ParseError("certificate must start with a 'basis' line")
    basis = tuple(_ints(lines[0][1:], "basis"))
    assignment = {}
    for tokens in lines[1:]:
        if len(tokens) < 4 or tokens[2] != ":":
            raise ParseError(f"bad assignment line: {' '.join(tokens)!r}")
        s, t = _ints(tokens[:2], "pair")
        assignment[(s, t)] = tuple(_ints(tokens[3:], "geodesic"))
    return StrongGeodeticCertificate(basis, assignment)


# -- compact graph specs used by audit configs --------------------------------

_FAMILY_SHORT = {"P": "path", "C": "cycle", "K": "complete", "S": "star"}

# path a-b-c-d with a pendant hanging off each inner vertex
H_TREE = build_graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])

_NAMED = {"h_tree": H_TREE}


def graph_from_spec(spec) -> Graph:
    """``"cycle:5"``, ``"C5"``, ``"h_tree"`` or ``{"n": .., "edges": [..]}``."""
    if isinstance(spec, dict):
        try:
            return build_graph(int(spec["n"]), spec.get("edges", []))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad graph spec {spec!r}") from exc
        except GraphError as exc:
            raise ParseError(str(exc)) from exc
    if not isinstance(spec, str):
        raise ParseError(f"bad graph spec {spec!r}")
    if spec in _NAMED:
        return _NAMED[spec]
    match = re.fullmatch(r"(path|cycle|complete|star):(\d+)", spec)
    if match is None:
        short = re.fullmatch(r"([PCKS])(\d+)", spec)
        if short is None:
            raise ParseError(f"bad graph spec {spec!r}")
        family, k = _FAMILY_SHORT[short.group(1)], int(short.group(2))
    else:
        family, k = match.group(1), int(match.group(2))
    try:
        return generate(family, k)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def describe(g: Graph) -> str:
    """Short deterministic name: ``C5``, ``K4``, ``S3`` ... or an edge list."""
    for name, named in _NAMED.items():
        if g == named:
            return name
    for short, family in _FAMILY_SHORT.items():
        k = g.n - 1 if family == "star" else g.n
        if (family == "cycle" and k < 3) or k < 1:
            continue
        if generate(family, k) == g:
            return f"{short}{k}"
    edges = ",".join(f"{u}-{v}" for u, v in g.edges)
    return f"graph({g.n};{edges})"
