"""Generalized corona, edge corona and neighborhood corona products.

Vertex layout is fixed: the base graph keeps labels ``0..n-1``; satellite
copies follow in copy order, each copy in its own vertex order. For the edge
corona, copy ``i`` belongs to the ``i``-th edge of the base graph in its
canonical (lexicographic) edge order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ArityMismatch, DisconnectedResult, SizeCapExceeded
from .graph import Edge, Graph, build_graph


class Variant(enum.Enum):
    CORONA = "corona"
    EDGE_CORONA = "edge"
    NEIGHBORHOOD_CORONA = "neighborhood"


@dataclass(frozen=True)
class Base:
    i: int


@dataclass(frozen=True)
class Satellite:
    copy: int
    p: int


CoronaLabel = Union[Base, Satellite]


@dataclass(frozen=True)
class CoronaLabeledGraph:
    graph: Graph
    labels: tuple[CoronaLabel, ...]
    variant: Variant
    # base vertex (as a 1-tuple) or base edge that each copy hangs off
    owners: tuple[tuple[int, ...], ...]

    @property
    def n_base(self) -> int:
        return sum(1 for lab in self.labels if isinstance(lab, Base))

    @property
    def n_copies(self) -> int:
        return len(self.owners)

    def base_vertices(self) -> range:
        return range(self.n_base)

    def copy_vertices(self, copy: int) -> list[int]:
        return [
            v for v, lab in enumerate(self.labels)
            if isinstance(lab, Satellite) and lab.copy == copy
        ]

    def copy_of(self, v: int) -> int | None:
        lab = self.labels[v]
        return lab.copy if isinstance(lab, Satellite) else None

    def vertex(self, copy: int, p: int) -> int:
        return self._offsets[copy] + p

    @property
    def _offsets(self) -> list[int]:
        out, seen = [], set()
        for v, lab in enumerate(self.labels):
            if isinstance(lab, Satellite) and lab.copy not in seen:
                seen.add(lab.copy)
                out.append(v - lab.p)
        return out


def _assemble(
    g: Graph,
    hs: Sequence[Graph],
    attach: Sequence[Sequence[int]],
    variant: Variant,
    owners: Sequence[tuple[int, ...]],
) -> CoronaLabeledGraph:
    labels: list[CoronaLabel] = [Base(i) for i in range(g.n)]
    edges: list[Edge] = list(g.edges)
    offset = g.n
    for c, (h, targets) in enumerate(zip(hs, attach)):
        edges.extend((offset + a, offset + b) for a, b in h.edges)
        for p in range(h.n):
            labels.append(Satellite(c, p))
            edges.extend((w, offset + p) for w in targets)
        offset += h.n
    return CoronaLabeledGraph(build_graph(offset, edges), tuple(labels), variant, tuple(owners))


def generalized_corona(g: Graph, hs: Sequence[Graph]) -> CoronaLabeledGraph:
    """Copy ``i`` is joined completely to base vertex ``i``."""
    if len(hs) != g.n:
        raise ArityMismatch(f"corona needs {g.n} copies, got {len(hs)}")
    return _assemble(g, hs, [(i,) for i in range(g.n)], Variant.CORONA,
                     [(i,) for i in range(g.n)])


def generalized_edge_corona(g: Graph, hs: Sequence[Graph]) -> CoronaLabeledGraph:
    """Copy ``i`` is joined completely to both ends of the ``i``-th edge."""
    if len(hs) != g.m:
        raise ArityMismatch(f"edge corona needs {g.m} copies (one per edge), got {len(hs)}")
    return _assemble(g, hs, g.edges, Variant.EDGE_CORONA, g.edges)


def generalized_neighborhood_corona(g: Graph, hs: Sequence[Graph]) -> CoronaLabeledGraph:
    """Copy ``i`` is joined completely to the neighbours of base vertex ``i``."""
    if len(hs) != g.n:
        raise ArityMismatch(f"neighborhood corona needs {g.n} copies, got {len(hs)}")
    isolated = [u for u in range(g.n) if g.degree(u) == 0]
    if isolated:
        raise DisconnectedResult(f"base vertices {isolated} have no neighbours")
    return _assemble(g, hs, g.adjacency, Variant.NEIGHBORHOOD_CORONA,
                     [(i,) for i in range(g.n)])


_CONSTRUCTORS = {
    Variant.CORONA: generalized_corona,
    Variant.EDGE_CORONA: generalized_edge_corona,
    Variant.NEIGHBORHOOD_CORONA: generalized_neighborhood_corona,
}


def product(variant: Variant | str, g: Graph, hs: Sequence[Graph]) -> CoronaLabeledGraph:
    return _CONSTRUCTORS[Variant(variant)](g, hs)


def copies_needed(variant: Variant | str, g: Graph) -> int:
    return g.m if Variant(variant) is Variant.EDGE_CORONA else g.n


def uniform(variant: Variant | str, g: Graph, h: Graph) -> CoronaLabeledGraph:
    variant = Variant(variant)
    return product(variant, g, [h] * copies_needed(variant, g))


def iterated_corona(g: Graph, m: int, max_vertices: int = 10_000) -> Graph:
    """``G^(0) = G`` and ``G^(k+1) = G^(k) o G``; order ``n (n+1)^m``."""
    if m < 0:
        raise ValueError("iteration count must be >= 0")
    order = g.n * (g.n + 1) ** m
    if order > max_vertices:
        raise SizeCapExceeded(f"G^({m}) would have {order} vertices (cap {max_vertices})")
    current = g
    for _ in range(m):
        current = uniform(Variant.CORONA, current, g).graph
    return current
