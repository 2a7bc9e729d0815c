"""Checkers that test the corona-product claims against exact computation.

Every checker returns an :class:`AuditReport`. Verdicts are computed, never
assumed: formula claims are compared with the brute-force strong geodetic
number of the product, structural claims are checked exhaustively on the
instance. Resource-cap errors turn into SKIPPED reports.
"""

from __future__ import annotations

import csv
import enum
import io
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable, Iterable, Optional, Sequence

from .corona import (
    CoronaLabeledGraph,
    Variant,
    generalized_corona,
    generalized_edge_corona,
    generalized_neighborhood_corona,
    iterated_corona,
    uniform,
)
from .errors import GeodesiaError, OracleBlowup, ResourceCapError, UndefinedInvariant
from .formats import describe, graph_from_spec
from .geodetic import (
    DEFAULT_LIMITS,
    TWO_GEODESIC,
    UNBOUNDED,
    LengthBound,
    SolveResult,
    SolverLimits,
    StrongGeodeticCertificate,
    Workspace,
    _floyd_warshall,
    check_strong_geodetic,
    naive_oracle,
    oracle_geodesics,
    strong_geodetic_number,
)
from .graph import Graph, build_graph, distances, enumerate_geodesics, pendant_vertices

METRIC_VERTEX_CAP = 30


class ClaimId(enum.Enum):
    LEMMA0 = "Lemma0"
    RESULT1 = "Result1"
    LEMMA1 = "Lemma1"
    LEMMA2 = "Lemma2"
    LEMMA3 = "Lemma3"
    THEOREM1 = "Theorem1"
    COROLLARY1 = "Corollary1"
    PROP1 = "Prop1"
    THEOREM1A = "Theorem1a"
    LEMMA4 = "Lemma4"
    LEMMA5 = "Lemma5"
    THEOREM2 = "Theorem2"
    COROLLARY2 = "Corollary2"
    LEMMA6 = "Lemma6"
    LEMMA7 = "Lemma7"
    THEOREM3 = "Theorem3"
    COROLLARY3 = "Corollary3"
    PROP3 = "Prop3"


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass
class AuditReport:
    claim: Optional[ClaimId]
    instance: str
    verdict: Verdict
    expected: Any = None
    actual: Any = None
    witness: str = ""
    reason: str = ""
    notes: str = ""
    # machine-checkable witnesses, see reverify()
    witnesses: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.verdict is Verdict.FAIL and not self.witness:
            raise ValueError("a FAIL report needs a witness")

    @property
    def verdict_text(self) -> str:
        if self.verdict is Verdict.SKIPPED:
            return f"SKIPPED({self.reason})"
        return self.verdict.value

    def fields(self) -> list[str]:
        return [
            self.claim.value if self.claim else "-",
            self.instance,
            self.verdict_text,
            "" if self.expected is None else str(self.expected),
            "" if self.actual is None else str(self.actual),
            self.witness,
        ]

    def tsv_line(self) -> str:
        return "\t".join(f.replace("\t", " ") for f in self.fields())

    def text_line(self) -> str:
        line = f"[{self.verdict_text}] {self.fields()[0]} {self.instance}"
        if self.expected is not None or self.actual is not None:
            line += f": expected={self.expected} actual={self.actual}"
        if self.witness:
            line += f" witness: {self.witness}"
        if self.notes:
            line += f" ({self.notes})"
        return line


def _skipped(claim: Optional[ClaimId], instance: str, reason: str, **kw) -> AuditReport:
    return AuditReport(claim, instance, Verdict.SKIPPED, reason=reason, **kw)


@lru_cache(maxsize=None)
def _solve(g: Graph, bound: LengthBound, limits: SolverLimits) -> SolveResult:
    return strong_geodetic_number(g, bound, limits)


def _two_bases(hs: Sequence[Graph], limits: SolverLimits) -> list[SolveResult]:
    out = []
    for h in hs:
        if h.n < 2:
            raise UndefinedInvariant("Sg' is undefined for a single-vertex copy")
        out.append(_solve(h, TWO_GEODESIC, limits))
    return out


def _instance(variant: Variant, g: Graph, hs: Sequence[Graph]) -> str:
    if hs and all(h == hs[0] for h in hs):
        return f"{variant.value} G={describe(g)} H={describe(hs[0])}"
    return f"{variant.value} G={describe(g)} Hs=[{','.join(describe(h) for h in hs)}]"


def _fmt(vertices: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(vertices))) + "}"


def _union_of_bases(lg: CoronaLabeledGraph, bases: Sequence[SolveResult]) -> tuple[int, ...]:
    return tuple(sorted(
        lg.vertex(c, b) for c, res in enumerate(bases) for b in res.certificate.basis
    ))


def _formula_report(
    claim: ClaimId,
    instance: str,
    product_graph: Graph,
    claimed: tuple[int, ...],
    expected: int,
    limits: SolverLimits,
    notes: str = "",
) -> AuditReport:
    """Compare a formula value and its claimed basis with the exact optimum."""
    upper = check_strong_geodetic(product_graph, claimed, UNBOUNDED, limits)
    details = {"claimed_basis": claimed, "upper_valid": upper is not None}
    try:
        best = _solve(product_graph, UNBOUNDED, limits)
    except ResourceCapError as exc:
        note = f"claimed basis {'valid' if upper else 'invalid'}; {notes}".rstrip("; ")
        return _skipped(claim, instance, type(exc).__name__, expected=expected,
                        notes=note, details=details)
    actual = best.number
    details["solver_basis"] = best.certificate.basis
    details["upper_bound_holds"] = upper is None or actual <= expected
    witnesses: list[dict] = []
    texts: list[str] = []
    if actual < expected:
        texts.append(f"smaller strong geodetic set {_fmt(best.certificate.basis)} of size {actual}")
        witnesses.append({"kind": "valid_set", "graph": product_graph,
                          "basis": best.certificate.basis})
    if upper is None:
        texts.append(f"claimed basis {_fmt(claimed)} admits no covering assignment")
        witnesses.append({"kind": "invalid_set", "graph": product_graph, "basis": claimed})
    verdict = Verdict.PASS if not texts and actual == expected else Verdict.FAIL
    return AuditReport(claim, instance, verdict, expected, actual, "; ".join(texts),
                       notes=notes, witnesses=witnesses, details=details)


def _guard(claim: ClaimId, instance: str, fn: Callable[[], AuditReport]) -> AuditReport:
    try:
        return fn()
    except UndefinedInvariant as exc:
        return _skipped(claim, instance, f"undefined: {exc}")
    except ResourceCapError as exc:
        return _skipped(claim, instance, type(exc).__name__)
    except GeodesiaError as exc:
        return _skipped(claim, instance, f"{type(exc).__name__}: {exc}")


# -- plain graphs -------------------------------------------------------------


def audit_lemma0(g: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> AuditReport:
    """Pendant vertices lie in every strong geodetic set.

    The minimum basis is searched *without* pendant seeding so the check is
    not circular; every ``V - {p}`` must also be rejected.
    """
    instance = f"graph {describe(g)}"

    def run() -> AuditReport:
        pend = pendant_vertices(g)
        best = strong_geodetic_number(g, UNBOUNDED, limits, use_mandatory=False)
        basis = best.certificate.basis
        texts, witnesses = [], []
        if not pend <= set(basis):
            texts.append(f"minimum basis {_fmt(basis)} misses pendant(s) "
                         f"{_fmt(pend - set(basis))}")
            witnesses.append({"kind": "valid_set", "graph": g, "basis": basis})
        for p in sorted(pend):
            rest = tuple(v for v in range(g.n) if v != p)
            if check_strong_geodetic(g, rest, UNBOUNDED, limits) is not None:
                texts.append(f"V-{{{p}}} is strong geodetic")
                witnesses.append({"kind": "valid_set", "graph": g, "basis": rest})
        verdict = Verdict.FAIL if texts else Verdict.PASS
        notes = "no pendant vertices" if not pend else ""
        return AuditReport(ClaimId.LEMMA0, instance, verdict, _fmt(pend), _fmt(basis),
                           "; ".join(texts), notes=notes, witnesses=witnesses)

    return _guard(ClaimId.LEMMA0, instance, run)


def audit_result1(g: Graph, limits: SolverLimits = DEFAULT_LIMITS) -> AuditReport:
    """Sg = Sg' when the diameter is at most 2."""
    instance = f"graph {describe(g)}"

    def run() -> AuditReport:
        diam = distances(g).diam
        sg = _solve(g, UNBOUNDED, limits)
        sg2 = _solve(g, TWO_GEODESIC, limits)
        details = {"diam": diam, "sg": sg.number, "sg2": sg2.number}
        if diam > 2:
            same = "equal" if sg.number == sg2.number else "differ"
            return _skipped(ClaimId.RESULT1, instance, f"precondition: diam={diam}",
                            expected=sg.number, actual=sg2.number,
                            notes=f"Sg={sg.number} Sg'={sg2.number} ({same})",
                            details=details)
        if sg.number == sg2.number:
            return AuditReport(ClaimId.RESULT1, instance, Verdict.PASS, sg.number,
                               sg2.number, details=details)
        small = sg if sg.number < sg2.number else sg2
        bound = TWO_GEODESIC if small is sg else UNBOUNDED
        return AuditReport(
            ClaimId.RESULT1, instance, Verdict.FAIL, sg.number, sg2.number,
            f"basis {_fmt(small.certificate.basis)} valid in both modes",
            witnesses=[{"kind": "valid_set", "graph": g, "basis": small.certificate.basis,
                        "bound": bound}],
            details=details,
        )

    return _guard(ClaimId.RESULT1, instance, run)


# -- structural (metric) claims ---------------------------------------------------


def _cross_copy_cover(
    claim: ClaimId,
    instance: str,
    lg: CoronaLabeledGraph,
    pairs: Iterable[tuple[int, int, int]],
    limits: SolverLimits,
) -> AuditReport:
    """Each ``(x, y, w)``: some geodesic between x and y must pass through w."""
    g = lg.graph
    checked = not_all = 0
    for x, y, w in pairs:
        checked += 1
        paths = enumerate_geodesics(g, min(x, y), max(x, y), limits.geodesic_cap)
        through = sum(1 for p in paths if w in p)
        if through == 0:
            return AuditReport(
                claim, instance, Verdict.FAIL, "covered", "not covered",
                f"no geodesic between {x} and {y} passes through base vertex {w}",
                witnesses=[{"kind": "avoids", "graph": g, "pair": (x, y), "vertex": w}],
            )
        if through < len(paths):
            not_all += 1
    notes = f"{checked} pairs"
    if not_all:
        notes += f"; {not_all} pairs also have geodesics avoiding the base vertex"
    return AuditReport(claim, instance, Verdict.PASS, "covered", "covered", notes=notes)


def _metric_guard(lg: CoronaLabeledGraph) -> Optional[str]:
    if lg.graph.n > METRIC_VERTEX_CAP:
        return f"product has {lg.graph.n} > {METRIC_VERTEX_CAP} vertices"
    return None


def audit_lemma1(g: Graph, hs: Sequence[Graph],
                 limits: SolverLimits = DEFAULT_LIMITS) -> AuditReport:
    """Corona: a geodesic between copies i and j covers u_i and u_j."""
    instance = _instance(Variant.CORONA, g, hs)

    def run() -> AuditReport:
        lg = generalized_corona(g, hs)
        if (why := _metric_guard(lg)) is not None:
            return _skipped(ClaimId.LEMMA1, instance, why)
        def pairs():
            for i, j in combinations(range(g.n), 2):
                for x in lg.copy_vertices(i):
                    for y in lg.copy_vertices(j):
                        yield x, y, i
                        yield x, y, j
        return _cross_copy_cover(ClaimId.LEMMA1, instance, lg, pairs(), limits)

    return _guard(ClaimId.LEMMA1, instance, run)


def audit_lemma2(g: Graph, hs: Sequence[Graph]) -> AuditReport:
    """Corona: non-adjacent vertices of one copy are at distance exactly 2."""
    instance = _instance(Variant.CORONA, g, hs)

    def run() -> AuditReport:
        lg = generalized_corona(g, hs)
        dist = distances(lg.graph).dist
        count = 0
        for c in range(lg.n_copies):
            hd = distances(hs[c]).dist
            for p, q in combinations(range(hs[c].n), 2):
                if hs[c].has_edge(p, q):
                    continue
                count += 1
                x, y = lg.vertex(c, p), lg.vertex(c, q)
                if dist[x][y] != 2 or dist[x][y] > hd[p][q]:
                    return AuditReport(
                        ClaimId.LEMMA2, instance, Verdict.FAIL, 2, dist[x][y],
                        f"d({x},{y})={dist[x][y]}",
                        witnesses=[{"kind": "distance", "graph": lg.graph,
                                    "pair": (x, y), "value": dist[x][y]}],
                    )
        return AuditReport(ClaimId.LEMMA2, instance, Verdict.PASS, 2, 2,
                           notes=f"{count} non-adjacent pairs")

    return _guard(ClaimId.LEMMA2, instance, run)


_NONCOVER_CLAIM = {
    Variant.CORONA: ClaimId.LEMMA3,
    Variant.EDGE_CORONA: ClaimId.LEMMA5,
    Variant.NEIGHBORHOOD_CORONA: ClaimId.LEMMA7,
}

_BUILD = {
    Variant.CORONA: generalized_corona,
    Variant.EDGE_CORONA: generalized_edge_corona,
    Variant.NEIGHBORHOOD_CORONA: generalized_neighborhood_corona,
}


def audit_noncoverage(variant: Variant | str, g: Graph, hs: Sequence[Graph],
                      limits: SolverLimits = DEFAULT_LIMITS) -> AuditReport:
    """A copy-basis vertex is never interior to a geodesic joining another
    basis vertex of the same copy to a vertex outside that copy."""
    variant = Variant(variant)
    claim = _NONCOVER_CLAIM[variant]
    instance = _instance(variant, g, hs)

    def run() -> AuditReport:
        lg = _BUILD[variant](g, hs)
        if (why := _metric_guard(lg)) is not None:
            return _skipped(claim, instance, why)
        bases = _two_bases(hs, limits)
        checked = 0
        for c, res in enumerate(bases):
            members = {lg.vertex(c, b) for b in res.certificate.basis}
            inside = set(lg.copy_vertices(c))
            for x in sorted(members):
                for y in range(lg.graph.n):
                    if y in inside:
                        continue
                    for path in enumerate_geodesics(lg.graph, x, y, limits.geodesic_cap):
                        checked += 1
                        hit = members.intersection(path[1:-1])
                        if hit:
                            return AuditReport(
                                claim, instance, Verdict.FAIL, "no cover", "covered",
                                f"geodesic {path} covers copy-basis vertex {min(hit)}",
                                witnesses=[{"kind": "geodesic", "graph": lg.graph,
                                            "path": path}],
                            )
        return AuditReport(claim, instance, Verdict.PASS, "no cover", "no cover",
                           notes=f"{checked} geodesics")

    return _guard(claim, instance, run)


# -- generalized corona ---------------------------------------------------------


def audit_theorem1(g: Graph, hs: Sequence[Graph],
                   limits: SolverLimits = DEFAULT_LIMITS,
                   claim: ClaimId = ClaimId.THEOREM1) -> AuditReport:
    """Sg(corona) = sum of Sg'(H_i), witnessed by the union of copy bases."""
    instance = _instance(Variant.CORONA, g, hs)

    def run() -> AuditReport:
        bases = _two_bases(hs, limits)
        lg = generalized_corona(g, hs)
        expected = sum(r.number for r in bases)
        return _formula_report(claim, instance, lg.graph, _union_of_bases(lg, bases),
                               expected, limits,
                               notes="s=" + "+".join(str(r.number) for r in bases))

    return _guard(claim, instance, run)


def audit_theorem1a(g: Graph, m: int, limits: SolverLimits = DEFAULT_LIMITS) -> AuditReport:
    """Sg(G^(m+1)) = Sg'(G) * n (n+1)^m."""
    instance = f"iterated G={describe(g)} m={m}"

    def run() -> AuditReport:
        s = _two_bases([g], limits)[0]
        copies = g.n * (g.n + 1) ** m
        expected = s.number * copies
        order = g.n * (g.n + 1) ** (m + 1)
        if order > limits.max_vertices:
            return _skipped(ClaimId.THEOREM1A, instance, "SizeCapExceeded",
                            expected=expected, notes=f"G^({m + 1}) has {order} vertices")
        lg = uniform(Variant.CORONA, iterated_corona(g, m), g)
        return _formula_report(ClaimId.THEOREM1A, instance, lg.graph,
                               _union_of_bases(lg, [s] * copies), expected, limits,
                               notes=f"s={s.number} copies={copies}")

    return _guard(ClaimId.THEOREM1A, instance, run)


# -- generalized edge corona -----------------------------------------------------


def _max_free_pairs(h: Graph, basis: tuple[int, ...], upto: int,
                    limits: SolverLimits) -> int:
    """Most non-adjacent basis pairs (capped at ``upto``) that can be left
    out of the 2-geodesic assignment while the copy stays covered."""
    work = Workspace(h, TWO_GEODESIC, limits)
    loose = [(s, t) for s, t in combinations(basis, 2) if not h.has_edge(s, t)]
    for f in range(min(upto, len(loose)), 0, -1):
        for spare in combinations(loose, f):
            if work.feasible(basis, skip=spare):
                return f
    return 0


def compute_A(
    g: Graph,
    hs: Sequence[Graph],
    bases: Sequence[StrongGeodeticCertificate | SolveResult],
    limits: SolverLimits = DEFAULT_LIMITS,
) -> frozenset[int]:
    """Pendant vertices of ``g`` that their edge's copy cannot cover.

    A pendant endpoint ``a`` of edge ``e`` is only reachable as the middle of
    a length-2 path between two non-adjacent vertices of copy ``e``. The copy
    can spare a basis pair for that exactly when some re-assignment of its
    2-geodesics still covers the copy without the pair. Each pendant needs
    its own spare pair; uncovered pendants (highest labels first) form A.
    """
    pend = pendant_vertices(g)
    out: set[int] = set()
    for e, (a, b) in enumerate(g.edges):
        ends = [x for x in (a, b) if x in pend]
        if not ends:
            continue
        cert = bases[e].certificate if isinstance(bases[e], SolveResult) else bases[e]
        free = _max_free_pairs(hs[e], tuple(cert.basis), len(ends), limits)
        out.update(ends[free:])
    return frozenset(out)


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def audit_lemma4(g: Graph, hs: Sequence[Graph],
                 limits: SolverLimits = DEFAULT_LIMITS) -> AuditReport:
    """Edge corona: base vertices of degree >= 2 are covered by pairs from two
    incident copies; pendant coverage agrees with the slack search.

    The second part recomputes, directly on the product graph, how many
    pendant endpoints the copy's basis can cover and compares that with
    :func:`compute_A` (which reasons inside the copy only).
    """
    instance = _instance(Variant.EDGE_CORONA, g, hs)

    def run() -> AuditReport:
        lg = generalized_edge_corona(g, hs)
        if (why := _metric_guard(lg)) is not None:
            return _skipped(ClaimId.LEMMA4, instance, why)
        bases = _two_bases(hs, limits)
        members = [[lg.vertex(c, b) for b in r.certificate.basis] for c, r in enumerate(bases)]
        incident = {u: [e for e, edge in enumerate(g.edges) if u in edge] for u in range(g.n)}
        for u in range(g.n):
            if g.degree(u) < 2:
                continue
            pairs = [(min(x, y), max(x, y))
                     for ea, eb in combinations(incident[u], 2)
                     for x in members[ea] for y in members[eb]]
            found = any(
                u in path
                for x, y in pairs
                for path in enumerate_geodesics(lg.graph, x, y, limits.geodesic_cap)
            )
            if not found:
                return AuditReport(
                    ClaimId.LEMMA4, instance, Verdict.FAIL, "covered", "not covered",
                    f"base vertex {u} (degree {g.degree(u)}) lies on no geodesic between "
                    "basis vertices of two incident copies",
                    witnesses=[{"kind": "avoids", "graph": lg.graph, "pair": pair,
                                "vertex": u} for pair in pairs],
                )
        pend = pendant_vertices(g)
        predicted = compute_A(g, hs, bases, limits)
        work = Workspace(lg.graph, UNBOUNDED, limits)
        for e, (a, b) in enumerate(g.edges):
            ends = [x for x in (a, b) if x in pend]
            if not ends:
                continue
            copy_mask = _mask(lg.copy_vertices(e))
            basis = tuple(members[e])
            coverable = 0
            for k in range(len(ends), 0, -1):
                if any(work.feasible(basis, target=copy_mask | _mask(t))
                       for t in combinations(ends, k)):
                    coverable = k
                    break
            expect = len([x for x in ends if x not in predicted])
            if coverable != expect:
                chosen = tuple(ends[: max(coverable, expect)])
                target = tuple(lg.copy_vertices(e)) + chosen
                return AuditReport(
                    ClaimId.LEMMA4, instance, Verdict.FAIL, expect, coverable,
                    f"copy {e} basis {_fmt(basis)} can cover {coverable} of pendant(s) "
                    f"{_fmt(ends)}; slack search predicted {expect}",
                    witnesses=[{"kind": "target", "graph": lg.graph, "basis": basis,
                                "target": target, "coverable": coverable > expect}],
                )
        return AuditReport(ClaimId.LEMMA4, instance, Verdict.PASS, "consistent",
                           "consistent", notes=f"A={_fmt(predicted)}; pendant cover via "
                           "exact slack search")

    return _guard(ClaimId.LEMMA4, instance, run)


def audit_theorem2(g: Graph, hs: Sequence[Graph],
                   limits: SolverLimits = DEFAULT_LIMITS,
                   claim: ClaimId = ClaimId.THEOREM2) -> AuditReport:
    """Sg(edge corona) = sum of Sg'(H_i) + |A| (A empty without pendants)."""
    instance = _instance(Variant.EDGE_CORONA, g, hs)

    def run() -> AuditReport:
        bases = _two_bases(hs, limits)
        lg = generalized_edge_corona(g, hs)
        big_a = compute_A(g, hs, bases, limits)
        expected = sum(r.number for r in bases) + len(big_a)
        claimed = tuple(sorted(set(_union_of_bases(lg, bases)) | big_a))
        pend = pendant_vertices(g)
        case = (f"pendants {_fmt(pend)} A={_fmt(big_a)}" if pend
                else "no pendant vertices A={}") + " (A by exact slack search)"
        report = _formula_report(claim, instance, lg.graph, claimed, expected, limits,
                                 notes=case)
        report.details["A"] = big_a
        return report

    return _guard(claim, instance, run)


# -- generalized neighborhood corona ---------------------------------------------


def audit_lemma6(g: Graph, hs: Sequence[Graph],
                 limits: SolverLimits = DEFAULT_LIMITS) -> AuditReport:
    """Neighborhood corona: for u_j adjacent to u_i, a geodesic between copies
    i and j passes through u_i."""
    instance = _instance(Variant.NEIGHBORHOOD_CORONA, g, hs)

    def run() -> AuditReport:
        lg = generalized_neighborhood_corona(g, hs)
        if (why := _metric_guard(lg)) is not None:
            return _skipped(ClaimId.LEMMA6, instance, why)
        def pairs():
            for i in range(g.n):
                for j in g.neighbors(i):
                    for x in lg.copy_vertices(i):
                        for y in lg.copy_vertices(j):
                            yield x, y, i
        return _cross_copy_cover(ClaimId.LEMMA6, instance, lg, pairs(), limits)

    return _guard(ClaimId.LEMMA6, instance, run)


def audit_theorem3(g: Graph, hs: Sequence[Graph],
                   limits: SolverLimits = DEFAULT_LIMITS,
                   claim: ClaimId = ClaimId.THEOREM3) -> AuditReport:
    """Sg(neighborhood corona) = sum of Sg'(H_i)."""
    instance = _instance(Variant.NEIGHBORHOOD_CORONA, g, hs)

    def run() -> AuditReport:
        bases = _two_bases(hs, limits)
        lg = generalized_neighborhood_corona(g, hs)
        expected = sum(r.number for r in bases)
        return _formula_report(claim, instance, lg.graph, _union_of_bases(lg, bases),
                               expected, limits,
                               notes="s=" + "+".join(str(r.number) for r in bases))

    return _guard(claim, instance, run)


_COROLLARY = {
    Variant.CORONA: (ClaimId.COROLLARY1, audit_theorem1),
    Variant.EDGE_CORONA: (ClaimId.COROLLARY2, audit_theorem2),
    Variant.NEIGHBORHOOD_CORONA: (ClaimId.COROLLARY3, audit_theorem3),
}


def audit_corollary(variant: Variant | str, g: Graph, h: Graph,
                    limits: SolverLimits = DEFAULT_LIMITS) -> AuditReport:
    """Uniform copies: k * Sg'(H) (+ |A| for the edge corona), where k is
    the number of copies (vertices, or edges for the edge corona)."""
    variant = Variant(variant)
    claim, theorem = _COROLLARY[variant]
    count = g.m if variant is Variant.EDGE_CORONA else g.n
    return theorem(g, [h] * count, limits, claim=claim)


# -- antipodality ----------------------------------------------------------------


def _antipodal_fail(claim, instance, lg, x, y, dist, diam, why) -> AuditReport:
    return AuditReport(
        claim, instance, Verdict.FAIL, f"d={diam}" if why == "missing" else "not antipodal",
        f"d={dist}",
        f"satellites ({x},{y}) at distance {dist}, product diameter {diam} ({why})",
        witnesses=[{"kind": "distance", "graph": lg.graph, "pair": (x, y), "value": dist}],
    )


def audit_props(variant: Variant | str, g: Graph, hs: Sequence[Graph]) -> AuditReport:
    """Antipodality claims: the corona iff, and the neighborhood-corona
    implications (with and without a common neighbour)."""
    variant = Variant(variant)
    instance = _instance(variant, g, hs)
    if variant is Variant.EDGE_CORONA:
        return _skipped(ClaimId.PROP1, instance, "no antipodality claim for the edge corona")
    claim = ClaimId.PROP1 if variant is Variant.CORONA else ClaimId.PROP3

    def run() -> AuditReport:
        lg = _BUILD[variant](g, hs)
        base = distances(g)
        table = distances(lg.graph)
        dist, diam = table.dist, table.diam
        checked = 0
        if variant is Variant.CORONA:
            if g.n >= 2 and diam != base.diam + 2:
                return AuditReport(claim, instance, Verdict.FAIL, base.diam + 2, diam,
                                   f"product diameter {diam}, base diameter {base.diam}",
                                   witnesses=[{"kind": "diameter", "graph": lg.graph,
                                               "value": diam}])
            for i, j in combinations(range(g.n), 2):
                base_anti = base.dist[i][j] == base.diam
                for x in lg.copy_vertices(i):
                    for y in lg.copy_vertices(j):
                        checked += 1
                        if (dist[x][y] == diam) != base_anti:
                            why = "missing" if base_anti else "spurious"
                            return _antipodal_fail(claim, instance, lg, x, y,
                                                   dist[x][y], diam, why)
            return AuditReport(claim, instance, Verdict.PASS, "iff holds", "iff holds",
                               notes=f"{checked} satellite pairs; diam {base.diam}+2")
        for i, j in combinations(range(g.n), 2):
            if base.dist[i][j] != base.diam:
                continue
            common = sorted(set(g.neighbors(i)) & set(g.neighbors(j)))
            if common:
                targets = [(a, k) for k in common for a in (i, j)]
            else:
                targets = [(i, j)]
            for a, b in targets:
                for x in lg.copy_vertices(a):
                    for y in lg.copy_vertices(b):
                        checked += 1
                        if dist[x][y] != diam:
                            return _antipodal_fail(claim, instance, lg, x, y, dist[x][y],
                                                   diam, "missing")
        return AuditReport(claim, instance, Verdict.PASS, "antipodal", "antipodal",
                           notes=f"{checked} satellite pairs")

    return _guard(claim, instance, run)


# -- witness re-verification ----------------------------------------------------


def reverify(report: AuditReport, limit: int = 10**6) -> Optional[bool]:
    """Re-check every machine witness of a FAIL with the independent oracle.

    Returns True when all witnesses reproduce, False when one does not and
    None when some witness is beyond the oracle's enumeration limit.
    """
    if report.verdict is Verdict.FAIL and not report.witnesses:
        return False
    unknown = False
    for w in report.witnesses:
        g = w["graph"]
        kind = w["kind"]
        try:
            if kind == "valid_set":
                ok = naive_oracle(g, w["basis"], w.get("bound", UNBOUNDED), limit) is not None
            elif kind == "invalid_set":
                ok = naive_oracle(g, w["basis"], UNBOUNDED, limit) is None
            elif kind == "target":
                found = naive_oracle(g, w["basis"], UNBOUNDED, limit, target=w["target"])
                ok = (found is not None) == w["coverable"]
            elif kind == "avoids":
                x, y = w["pair"]
                ok = all(w["vertex"] not in p for p in oracle_geodesics(g, x, y))
            elif kind == "geodesic":
                path = w["path"]
                ok = path in oracle_geodesics(g, path[0], path[-1])
            elif kind == "distance":
                x, y = w["pair"]
                ok = _floyd_warshall(g)[x][y] == w["value"]
            elif kind == "diameter":
                ok = max(max(row) for row in _floyd_warshall(g)) == w["value"]
            else:
                raise ValueError(f"unknown witness kind {kind!r}")
        except OracleBlowup:
            unknown = True
            continue
        if not ok:
            return False
    return None if unknown else True


# -- suites --------------------------------------------------------------------

_VARIANT_CLAIMS = {
    Variant.CORONA: ["Lemma1", "Lemma2", "Lemma3", "Theorem1", "Prop1"],
    Variant.EDGE_CORONA: ["Lemma4", "Lemma5", "Theorem2"],
    Variant.NEIGHBORHOOD_CORONA: ["Lemma6", "Lemma7", "Theorem3", "Prop3"],
}
_THEOREM_TO_COROLLARY = {"Theorem1": "Corollary1", "Theorem2": "Corollary2",
                         "Theorem3": "Corollary3"}


def _random_connected(rng: random.Random, n: int, extra: float) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    for u, v in combinations(range(n), 2):
        if rng.random() < extra:
            edges.append((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_graphs(seed: int, count: int, n_min: int = 3, n_max: int = 7,
                  extra: float = 0.3) -> list[Graph]:
    rng = random.Random(seed)
    return [_random_connected(rng, rng.randint(n_min, n_max), extra) for _ in range(count)]


def _product_reports(entry: dict, limits: SolverLimits, wanted) -> list[AuditReport]:
    variant = Variant(entry["variant"])
    g = graph_from_spec(entry["G"])
    if "H" in entry:
        h = graph_from_spec(entry["H"])
        hs = [h] * (g.m if variant is Variant.EDGE_CORONA else g.n)
        uniform_copies = True
    else:
        hs = [graph_from_spec(s) for s in entry["Hs"]]
        uniform_copies = False
    out = []
    for name in _VARIANT_CLAIMS[variant]:
        if uniform_copies and name in _THEOREM_TO_COROLLARY:
            name = _THEOREM_TO_COROLLARY[name]
        if not wanted(name):
            continue
        if name in ("Prop1", "Prop3"):
            out.append(audit_props(variant, g, hs))
        elif name == "Lemma1":
            out.append(audit_lemma1(g, hs, limits))
        elif name == "Lemma2":
            out.append(audit_lemma2(g, hs))
        elif name in ("Lemma3", "Lemma5", "Lemma7"):
            out.append(audit_noncoverage(variant, g, hs, limits))
        elif name == "Lemma4":
            out.append(audit_lemma4(g, hs, limits))
        elif name == "Lemma6":
            out.append(audit_lemma6(g, hs, limits))
        elif name.startswith("Corollary"):
            out.append(audit_corollary(variant, g, hs[0], limits))
        elif name == "Theorem1":
            out.append(audit_theorem1(g, hs, limits))
        elif name == "Theorem2":
            out.append(audit_theorem2(g, hs, limits))
        elif name == "Theorem3":
            out.append(audit_theorem3(g, hs, limits))
    return out


def _entry_reports(entry: dict, limits: SolverLimits, seed: int) -> list[AuditReport]:
    claims = entry.get("claims")
    if claims is not None:
        unknown = set(claims) - {c.value for c in ClaimId}
        if unknown:
            raise ValueError(f"unknown claims {sorted(unknown)}")
    def wanted(name: str) -> bool:
        return claims is None or name in claims

    if "graph" in entry or "random" in entry:
        if "graph" in entry:
            graphs = [graph_from_spec(entry["graph"])]
        else:
            spec = entry["random"]
            graphs = random_graphs(spec.get("seed", seed), spec["count"],
                                   spec.get("n_min", 3), spec.get("n_max", 7),
                                   spec.get("extra", 0.3))
        out = []
        for g in graphs:
            if wanted("Lemma0"):
                out.append(audit_lemma0(g, limits))
            if wanted("Result1"):
                out.append(audit_result1(g, limits))
        return out
    if "iterated" in entry:
        if not wanted("Theorem1a"):
            return []
        return [audit_theorem1a(graph_from_spec(entry["iterated"]), int(entry["m"]), limits)]
    if "variant" in entry:
        return _product_reports(entry, limits, wanted)
    raise ValueError(f"unrecognised suite entry {entry!r}")


def audit_suite(config: dict | list | None, limits: SolverLimits = DEFAULT_LIMITS,
                seed: int = 0) -> list[AuditReport]:
    """Run every applicable checker on every configured instance, in order.

    ``config`` is a list of entries or ``{"seed": .., "instances": [..]}``.
    Entries: ``{"graph": spec}``, ``{"random": {"count": k, ...}}``,
    ``{"iterated": spec, "m": m}`` or ``{"variant": v, "G": spec,
    "Hs": [specs]}`` (``"H": spec`` for uniform copies); any entry may carry
    a ``"claims"`` filter. A broken entry yields one SKIPPED report.
    """
    if not config:
        return []
    if isinstance(config, dict):
        seed = config.get("seed", seed)
        entries = config.get("instances", [])
    else:
        entries = config
    reports: list[AuditReport] = []
    for entry in entries:
        try:
            reports.extend(_entry_reports(entry, limits, seed))
        except (GeodesiaError, ValueError, KeyError, TypeError) as exc:
            reports.append(_skipped(None, repr(entry), f"bad entry: {exc}"))
    return reports


def default_suite() -> dict:
    """Curated instances: every product stays within 20 vertices."""
    plain = ["h_tree", "P2", "P3", "P4", "C4", "C5", "K3", "K4", "S3", "S4"]
    instances: list[dict] = [{"graph": g} for g in plain]
    instances += [
        {"iterated": "K2", "m": 0},
        {"iterated": "K2", "m": 1},
        {"iterated": "P3", "m": 0},
        {"iterated": "C3", "m": 0},
        # generalized corona
        {"variant": "corona", "G": "C3", "Hs": ["P2", "K4", "C5"]},
        {"variant": "corona", "G": "P2", "Hs": ["P2", "P2"]},
        {"variant": "corona", "G": "P3", "Hs": ["P2", "P2", "P2"]},
        {"variant": "corona", "G": "P2", "Hs": ["C4", "C5"]},
        {"variant": "corona", "G": "C4", "Hs": ["P2", "P3", "K3", "C4"]},
        {"variant": "corona", "G": "S3", "Hs": ["P2", "P3", "K3", "C5"]},
        {"variant": "corona", "G": "P3", "H": "C4"},
        {"variant": "corona", "G": "C4", "H": "P2"},
        {"variant": "corona", "G": "K3", "H": "K3"},
        {"variant": "corona", "G": "C4", "H": "C4"},
        {"variant": "corona", "G": "P3", "Hs": ["P1", "P1", "P1"],
         "claims": ["Lemma1", "Lemma2", "Prop1"]},
        {"variant": "corona", "G": "C4", "Hs": ["P1", "P1", "P1", "P1"],
         "claims": ["Lemma1", "Lemma2", "Prop1"]},
        {"variant": "corona", "G": "S3", "Hs": ["P1", "P1", "P1", "P1"],
         "claims": ["Lemma1", "Lemma2", "Prop1"]},
        # generalized edge corona
        {"variant": "edge", "G": "C3", "Hs": ["P2", "P2", "P2"]},
        {"variant": "edge", "G": "P2", "Hs": ["K3"]},
        {"variant": "edge", "G": "P3", "Hs": ["P2", "P2"]},
        {"variant": "edge", "G": "P2", "Hs": ["C4"]},
        {"variant": "edge", "G": "P3", "Hs": ["C4", "C5"]},
        {"variant": "edge", "G": "S3", "Hs": ["P2", "P3", "C4"]},
        {"variant": "edge", "G": "C4", "Hs": ["P2", "K3", "C4", "P3"]},
        {"variant": "edge", "G": "C4", "H": "K3"},
        {"variant": "edge", "G": "P3", "H": "C4"},
        {"variant": "edge", "G": "S3", "H": "P3"},
        {"variant": "edge", "G": "P2", "H": "S3"},
        {"variant": "edge", "G": "P3", "H": "S3"},
        # generalized neighborhood corona
        {"variant": "neighborhood", "G": "P2", "Hs": ["P2", "P2"]},
        {"variant": "neighborhood", "G": "P3", "Hs": ["P2", "P2", "P2"]},
        {"variant": "neighborhood", "G": "K3", "Hs": ["P2", "P2", "P2"]},
        {"variant": "neighborhood", "G": "C4", "Hs": ["P2", "P2", "P2", "P2"]},
        {"variant": "neighborhood", "G": "P2", "Hs": ["C4", "C5"]},
        {"variant": "neighborhood", "G": "S3", "Hs": ["P2", "P3", "K3", "C4"]},
        {"variant": "neighborhood", "G": "C4", "H": "P3"},
        {"variant": "neighborhood", "G": "K3", "H": "C4"},
        {"variant": "neighborhood", "G": "P3", "H": "K3"},
        {"variant": "neighborhood", "G": "C4", "Hs": ["P1", "P1", "P1", "P1"],
         "claims": ["Lemma6", "Prop3"]},
        {"variant": "neighborhood", "G": "P4", "Hs": ["P1", "P1", "P1", "P1"],
         "claims": ["Lemma6", "Prop3"]},
        {"variant": "neighborhood", "G": "S3", "Hs": ["P1", "P1", "P1", "P1"],
         "claims": ["Lemma6", "Prop3"]},
    ]
    return {"seed": 0, "instances": instances}


# -- output ---------------------------------------------------------------------

TSV_HEADER = "claim\tinstance\tverdict\texpected\tactual\twitness"


def render(reports: Sequence[AuditReport], fmt: str = "text") -> str:
    if fmt == "tsv":
        return "\n".join([TSV_HEADER] + [r.tsv_line() for r in reports]) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TSV_HEADER.split("\t"))
        for r in reports:
            writer.writerow(r.fields())
        return buf.getvalue()
    if fmt == "text":
        lines = [r.text_line() for r in reports]
        counts = {v: sum(1 for r in reports if r.verdict is v) for v in Verdict}
        lines.append(" ".join(f"{v.value}={counts[v]}" for v in Verdict))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def any_failed(reports: Iterable[AuditReport]) -> bool:
    return any(r.verdict is Verdict.FAIL for r in reports)
