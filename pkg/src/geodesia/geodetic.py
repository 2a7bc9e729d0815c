"""Exact geodetic, strong geodetic and strong 2-geodetic sets.

A strong geodetic set fixes one geodesic per pair of its vertices; the fixed
geodesics (with the set itself) must cover every vertex. Under a length
bound only pairs at distance <= k are eligible and they may only use their
own (short) geodesics; pairs further apart contribute nothing.

Vertex sets are handled internally as int bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Collection, Iterable, Mapping, Optional

from .errors import NotConnected, OracleBlowup, SolveCapExceeded, UndefinedInvariant
from .graph import (
    DEFAULT_GEODESIC_CAP,
    UNREACHABLE,
    Edge,
    Geodesic,
    Graph,
    distances,
    enumerate_geodesics,
    simplicial_vertices,
)

ORACLE_LIMIT = 10**6


@dataclass(frozen=True)
class LengthBound:
    """``max_len=None`` is the ordinary (unbounded) strong geodetic setting."""

    max_len: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_len is not None and self.max_len < 1:
            raise ValueError("length bound must be >= 1")

    @classmethod
    def at_most(cls, k: int) -> "LengthBound":
        return cls(k)

    @property
    def bounded(self) -> bool:
        return self.max_len is not None

    def admits(self, d: float) -> bool:
        return d != UNREACHABLE and (self.max_len is None or d <= self.max_len)

    def __str__(self) -> str:
        return "unbounded" if self.max_len is None else f"at-most-{self.max_len}"


UNBOUNDED = LengthBound()
TWO_GEODESIC = LengthBound(2)


@dataclass(frozen=True)
class SolverLimits:
    max_vertices: int = 20
    node_budget: int = 10**7
    geodesic_cap: int = DEFAULT_GEODESIC_CAP

    def __post_init__(self) -> None:
        if min(self.max_vertices, self.node_budget, self.geodesic_cap) < 1:
            raise ValueError("solver limits must be positive")


DEFAULT_LIMITS = SolverLimits()


@dataclass(frozen=True)
class StrongGeodeticCertificate:
    basis: tuple[int, ...]
    assignment: Mapping[Edge, Geodesic] = field(default_factory=dict)

    @property
    def covered(self) -> frozenset[int]:
        out = set(self.basis)
        for path in self.assignment.values():
            out.update(path)
        return frozenset(out)

    def covers(self, g: Graph) -> bool:
        return len(self.covered) == g.n

    def __hash__(self) -> int:
        return hash((self.basis, tuple(sorted(self.assignment.items()))))


@dataclass(frozen=True)
class SolveResult:
    number: int
    certificate: StrongGeodeticCertificate
    explored: int


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Workspace:
    """Per-(graph, bound) cache of geodesics and their vertex masks."""

    def __init__(self, g: Graph, bound: LengthBound, limits: SolverLimits):
        table = distances(g)
        if not table.connected:
            raise NotConnected("graph is not connected")
        self.g = g
        self.bound = bound
        self.limits = limits
        self.dist = table.dist
        self.full = (1 << g.n) - 1
        self.nodes = 0
        self._geodesics: dict[Edge, list[Geodesic]] = {}
        self._masks: dict[Edge, list[int]] = {}
        self._interval: dict[Edge, int] = {}

    def eligible(self, s: int, t: int) -> bool:
        return self.bound.admits(self.dist[s][t])

    def geodesics(self, pair: Edge) -> list[Geodesic]:
        found = self._geodesics.get(pair)
        if found is None:
            found = enumerate_geodesics(self.g, *pair, cap=self.limits.geodesic_cap)
            self._geodesics[pair] = found
            self._masks[pair] = [_mask(p) for p in found]
        return found

    def masks(self, pair: Edge) -> list[int]:
        if pair not in self._masks:
            self.geodesics(pair)
        return self._masks[pair]

    def interval(self, pair: Edge) -> int:
        found = self._interval.get(pair)
        if found is None:
            found = 0
            if self.eligible(*pair):
                for m in self.masks(pair):
                    found |= m
            self._interval[pair] = found
        return found

    def pairs(self, basis: tuple[int, ...]) -> list[Edge]:
        return [(s, t) for s, t in combinations(basis, 2) if self.eligible(s, t)]

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limits.node_budget:
            raise SolveCapExceeded(f"search exceeded {self.limits.node_budget} nodes")

    # -- feasibility -------------------------------------------------------

    def feasible(
        self,
        basis: tuple[int, ...],
        fixed: Mapping[Edge, int] = {},
        skip: Collection[Edge] = (),
        target: Optional[int] = None,
    ) -> bool:
        """Can the free pairs of ``basis`` be assigned so everything is covered?

        ``fixed`` maps pairs to an already chosen geodesic index; pairs in
        ``skip`` are left unused. ``target`` narrows what must be covered
        (default: every vertex).
        """
        goal = self.full if target is None else target
        need = goal & ~_mask(basis)
        free: list[Edge] = []
        for pair in self.pairs(basis):
            if pair in skip:
                continue
            if pair in fixed:
                need &= ~self.masks(pair)[fixed[pair]]
            else:
                free.append(pair)
        options = [self.masks(p) for p in free]
        return self._search(need, options)

    def _search(self, need: int, options: list[list[int]]) -> bool:
        self.tick()
        # reduce: restrict to still-needed vertices, drop dominated choices,
        # apply forced pairs, repeat until stable
        while True:
            if not need:
                return True
            reduced: list[list[int]] = []
            forced = 0
            for choices in options:
                eff = sorted({m & need for m in choices}, reverse=True)
                eff = [m for m in eff if m]
                keep = [m for m in eff if not any(o != m and o & m == m for o in eff)]
                if not keep:
                    continue
                if len(keep) == 1:
                    # one choice dominates the rest, take it
                    forced |= keep[0]
                    continue
                reduced.append(keep)
            if forced:
                need &= ~forced
                options = reduced
                continue
            options = reduced
            break
        reach = 0
        for choices in options:
            for m in choices:
                reach |= m
        if reach & need != need:
            return False
        # branch on the needed vertex with the fewest covering options
        best_v, best_count = -1, None
        for v in _bits(need):
            bit = 1 << v
            count = sum(1 for choices in options for m in choices if m & bit)
            if best_count is None or count < best_count:
                best_v, best_count = v, count
                if count == 1:
                    break
        bit = 1 << best_v
        for i, choices in enumerate(options):
            rest = options[:i] + options[i + 1 :]
            for m in choices:
                if m & bit and self._search(need & ~m, rest):
                    return True
        return False

    def certificate(self, basis: tuple[int, ...]) -> Optional[StrongGeodeticCertificate]:
        """Lexicographically least valid assignment, or None.

        Pairs are taken in ascending order and each one is pinned to the
        first geodesic that still leaves the rest completable.
        """
        if not self.feasible(basis):
            return None
        fixed: dict[Edge, int] = {}
        for pair in self.pairs(basis):
            for idx in range(len(self.masks(pair))):
                fixed[pair] = idx
                if self.feasible(basis, fixed):
                    break
            else:  # pragma: no cover - feasibility guarantees a choice
                raise AssertionError("lost feasibility while canonicalising")
        assignment = {pair: self.geodesics(pair)[idx] for pair, idx in fixed.items()}
        return StrongGeodeticCertificate(basis, assignment)

    def closure(self, basis: tuple[int, ...]) -> int:
        out = _mask(basis)
        for s, t in combinations(basis, 2):
            out |= self.interval((s, t))
        return out


def _normalise(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    basis = tuple(sorted(set(vertices)))
    if basis and not (0 <= basis[0] and basis[-1] < g.n):
        raise ValueError(f"basis {basis} not inside 0..{g.n - 1}")
    return basis


def check_strong_geodetic(
    g: Graph,
    vertices: Iterable[int],
    bound: LengthBound = UNBOUNDED,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> Optional[StrongGeodeticCertificate]:
    """Return the lexicographically least certificate for ``vertices``, or None."""
    work = Workspace(g, bound, limits)
    return work.certificate(_normalise(g, vertices))


def _check_solvable(g: Graph, limits: SolverLimits) -> None:
    if g.n < 2:
        raise UndefinedInvariant("strong geodetic numbers need at least two vertices")
    if g.n > limits.max_vertices:
        raise SolveCapExceeded(f"{g.n} vertices exceed solve cap {limits.max_vertices}")
    if not g.is_connected():
        raise NotConnected("graph is not connected")


def _candidates(g: Graph, mandatory: frozenset[int]):
    """Vertex sets by increasing size, lexicographic within a size."""
    forced = tuple(sorted(mandatory))
    free = [v for v in range(g.n) if v not in mandatory]
    for k in range(max(2, len(forced)), g.n + 1):
        for extra in combinations(free, k - len(forced)):
            yield tuple(sorted(forced + extra))


def strong_geodetic_number(
    g: Graph,
    bound: LengthBound = UNBOUNDED,
    limits: SolverLimits = DEFAULT_LIMITS,
    use_mandatory: bool = True,
) -> SolveResult:
    """Minimum strong (length-bounded) geodetic set, smallest basis first.

    With ``use_mandatory`` every candidate contains all simplicial vertices
    (pendant vertices included); they can never be covered from outside.
    """
    _check_solvable(g, limits)
    work = Workspace(g, bound, limits)
    mandatory = simplicial_vertices(g) if use_mandatory else frozenset()
    explored = 0
    for basis in _candidates(g, mandatory):
        explored += 1
        if work.closure(basis) != work.full:
            continue
        if work.feasible(basis):
            cert = work.certificate(basis)
            assert cert is not None
            return SolveResult(len(basis), cert, explored)
    raise AssertionError("the whole vertex set is always strong geodetic")  # pragma: no cover


def geodetic_basis(g: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> tuple[int, ...]:
    """Smallest (then lexicographically least) set whose geodesic intervals cover V."""
    _check_solvable(g, limits)
    work = Workspace(g, UNBOUNDED, limits)
    for basis in _candidates(g, simplicial_vertices(g)):
        if work.closure(basis) == work.full:
            return basis
    raise AssertionError("unreachable")  # pragma: no cover


def geodetic_number(g: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> int:
    return len(geodetic_basis(g, limits))


# -- independent oracle -------------------------------------------------------


def _floyd_warshall(g: Graph) -> list[list[float]]:
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        dk = d[k]
        for i in range(g.n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(g.n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def _walks_of_length(g: Graph, s: int, t: int, length: int) -> list[Geodesic]:
    # a walk of length d(s,t) from s to t is necessarily a shortest path
    out: list[Geodesic] = []
    path = [s]

    def extend(w: int, left: int) -> None:
        if left == 0:
            if w == t:
                out.append(tuple(path))
            return
        for x in g.adjacency[w]:
            path.append(x)
            extend(x, left - 1)
            path.pop()

    extend(s, length)
    return sorted(out)


def oracle_geodesics(g: Graph, s: int, t: int) -> list[Geodesic]:
    """Shortest paths via Floyd-Warshall and brute-force walks (no BFS DAG)."""
    d = _floyd_warshall(g)[s][t]
    if d == float("inf"):
        raise NotConnected(f"{s} and {t} are not connected")
    return _walks_of_length(g, s, t, int(d))


def naive_oracle(
    g: Graph,
    vertices: Iterable[int],
    bound: LengthBound = UNBOUNDED,
    limit: int = ORACLE_LIMIT,
    target: Optional[Iterable[int]] = None,
) -> Optional[StrongGeodeticCertificate]:
    """Flat enumeration of every assignment; for cross-checking only.

    Shares nothing with the solver path: distances come from Floyd-Warshall
    and geodesics from exhaustive fixed-length walks. ``target`` restricts
    the vertices that must be covered.
    """
    basis = _normalise(g, vertices)
    d = _floyd_warshall(g)
    if any(x == float("inf") for row in d for x in row):
        raise NotConnected("graph is not connected")
    pairs = [
        (s, t)
        for s, t in combinations(basis, 2)
        if bound.max_len is None or d[s][t] <= bound.max_len
    ]
    choices = [_walks_of_length(g, s, t, int(d[s][t])) for s, t in pairs]
    total = 1
    for c in choices:
        total *= len(c)
        if total > limit:
            raise OracleBlowup(f"more than {limit} assignments")
    everything = set(range(g.n)) if target is None else set(target)
    for combo in product(*choices):
        covered = set(basis)
        for path in combo:
            covered.update(path)
        if covered >= everything:
            return StrongGeodeticCertificate(basis, dict(zip(pairs, combo)))
    return None
