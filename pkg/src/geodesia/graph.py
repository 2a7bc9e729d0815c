"""Immutable simple graphs and their metric primitives."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BadSize, CapExceeded, Disconnected, OutOfRange, SelfLoop, Unreachable

UNREACHABLE = math.inf
DEFAULT_GEODESIC_CAP = 10_000

Edge = tuple[int, int]
Geodesic = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` in canonical form.

    Use :func:`build_graph` rather than the constructor; it sorts and
    deduplicates, which is what makes equality meaningful.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    @property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return _neighbor_sets(self)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d != UNREACHABLE for d in _bfs(self, 0))

    def induced_edges(self, vertices: Iterable[int]) -> set[Edge]:
        keep = set(vertices)
        return {(u, v) for u, v in self.edges if u in keep and v in keep}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@lru_cache(maxsize=1024)
def _neighbor_sets(g: Graph) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(nb) for nb in g.adjacency)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise BadSize(f"vertex count must be non-negative, got {n}")
    canon: set[Edge] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        canon.add((u, v) if u < v else (v, u))
    ordered = tuple(sorted(canon))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in ordered:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(nb)) for nb in adj), ordered)


def generate(family: str, k: int) -> Graph:
    """Standard families. ``star`` takes the number of leaves (centre is 0)."""
    if family == "path":
        if k < 1:
            raise BadSize("path needs k >= 1")
        return build_graph(k, [(i, i + 1) for i in range(k - 1)])
    if family == "cycle":
        if k < 3:
            raise BadSize("cycle needs k >= 3")
        return build_graph(k, [(i, (i + 1) % k) for i in range(k)])
    if family == "complete":
        if k < 1:
            raise BadSize("complete graph needs k >= 1")
        return build_graph(k, combinations(range(k), 2))
    if family == "star":
        if k < 1:
            raise BadSize("star needs k >= 1 leaves")
        return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])
    raise BadSize(f"unknown family {family!r}")


def _bfs(g: Graph, source: int) -> list[float]:
    dist: list[float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceTable:
    dist: tuple[tuple[float, ...], ...]
    ecc: tuple[float, ...]
    diam: float

    @property
    def connected(self) -> bool:
        return self.diam != UNREACHABLE

    def __call__(self, u: int, v: int) -> float:
        return self.dist[u][v]


@lru_cache(maxsize=256)
def distances(g: Graph) -> DistanceTable:
    rows = tuple(tuple(_bfs(g, u)) for u in range(g.n))
    ecc = tuple(max(row) for row in rows)
    diam = max(ecc) if ecc else 0
    return DistanceTable(rows, ecc, diam)


def count_geodesics(g: Graph, u: int, v: int) -> int:
    to_v = distances(g).dist[v]
    if to_v[u] == UNREACHABLE:
        raise Unreachable(f"{u} and {v} are not connected")
    # ways[w] = number of shortest w->v paths, filled by increasing distance to v
    order = sorted(range(g.n), key=lambda w: to_v[w])
    ways = [0] * g.n
    for w in order:
        if to_v[w] == UNREACHABLE:
            break
        if w == v:
            ways[w] = 1
            continue
        ways[w] = sum(ways[x] for x in g.adjacency[w] if to_v[x] == to_v[w] - 1)
    return ways[u]


def enumerate_geodesics(
    g: Graph, u: int, v: int, cap: int = DEFAULT_GEODESIC_CAP
) -> list[Geodesic]:
    """All shortest ``u``-``v`` paths, lexicographically ordered.

    Walks the shortest-path DAG towards ``v`` taking neighbours in ascending
    order, so output order is lexicographic and no dead branch is explored.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    total = count_geodesics(g, u, v)
    if total > cap:
        raise CapExceeded(f"{total} geodesics between {u} and {v} exceed cap {cap}")
    to_v = distances(g).dist[v]
    out: list[Geodesic] = []
    path = [u]

    def walk(w: int) -> None:
        if w == v:
            out.append(tuple(path))
            return
        step = to_v[w] - 1
        for x in g.adjacency[w]:
            if to_v[x] == step:
                path.append(x)
                walk(x)
                path.pop()

    walk(u)
    return out


def pendant_vertices(g: Graph) -> frozenset[int]:
    return frozenset(u for u in range(g.n) if g.degree(u) == 1)


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighbourhood is a clique.

    Such a vertex is never interior to a shortest path, so every (strong)
    geodetic set must contain it. Pendant vertices are the degree-1 case.
    """
    out = set()
    for u in range(g.n):
        nb = g.adjacency[u]
        if all(g.has_edge(a, b) for a, b in combinations(nb, 2)):
            out.add(u)
    return frozenset(out)


def antipodal_pairs(g: Graph) -> list[Edge]:
    table = distances(g)
    if not table.connected:
        raise Disconnected("antipodal pairs need a connected graph")
    return [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if table.dist[u][v] == table.diam
    ]
