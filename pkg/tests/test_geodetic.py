import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import C, K, P, brute_force_sg, random_connected
from geodesia.errors import (
    CapExceeded,
    NotConnected,
    OracleBlowup,
    SolveCapExceeded,
    UndefinedInvariant,
)
from geodesia.geodetic import (
    TWO_GEODESIC,
    UNBOUNDED,
    LengthBound,
    SolverLimits,
    StrongGeodeticCertificate,
    check_strong_geodetic,
    geodetic_basis,
    geodetic_number,
    naive_oracle,
    oracle_geodesics,
    strong_geodetic_number,
)
from geodesia.graph import build_graph, distances, enumerate_geodesics, generate, pendant_vertices


def assert_valid(g, cert, bound=UNBOUNDED):
    d = distances(g).dist
    eligible = {(s, t) for s, t in combinations(cert.basis, 2) if bound.admits(d[s][t])}
    assert set(cert.assignment) == eligible
    for (s, t), path in cert.assignment.items():
        assert path[0] == s and path[-1] == t
        assert path in enumerate_geodesics(g, s, t)
    assert cert.covers(g)


class TestLengthBound:
    def test_modes(self):
        assert not UNBOUNDED.bounded and TWO_GEODESIC.bounded
        assert LengthBound.at_most(2) == TWO_GEODESIC
        assert TWO_GEODESIC.admits(2) and not TWO_GEODESIC.admits(3)
        assert UNBOUNDED.admits(99)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            LengthBound(0)


class TestCheck:
    def test_h_tree_basis(self, h_tree):
        cert = check_strong_geodetic(h_tree, {0, 3, 4, 5})
        assert cert is not None
        assert_valid(h_tree, cert)
        assert len(cert.assignment) == 6

    def test_c4_opposite_pair_fails(self):
        assert check_strong_geodetic(C(4), {0, 2}) is None

    def test_c5_two_geodetic(self):
        cert = check_strong_geodetic(C(5), {0, 2, 3}, TWO_GEODESIC)
        assert cert is not None
        assert_valid(C(5), cert, TWO_GEODESIC)

    def test_distant_pairs_unused(self, h_tree):
        # (0,3) is at distance 3 and carries no geodesic in the 2-bounded mode
        cert = check_strong_geodetic(h_tree, {0, 3, 4, 5}, TWO_GEODESIC)
        assert cert is not None
        assert (0, 3) not in cert.assignment
        assert_valid(h_tree, cert, TWO_GEODESIC)

    def test_disconnected(self):
        with pytest.raises(NotConnected):
            check_strong_geodetic(build_graph(3, [(0, 1)]), {0, 1})

    def test_geodesic_cap(self):
        with pytest.raises(CapExceeded):
            check_strong_geodetic(C(4), {0, 2}, limits=SolverLimits(geodesic_cap=1))

    def test_vertex_outside_graph(self):
        with pytest.raises(ValueError):
            check_strong_geodetic(C(4), {0, 7})

    def test_certificate_hashable(self, h_tree):
        a = check_strong_geodetic(h_tree, [5, 4, 3, 0])
        b = check_strong_geodetic(h_tree, (0, 3, 4, 5))
        assert a == b and hash(a) == hash(b)


class TestOracle:
    def test_c4_three_vertices(self):
        cert = naive_oracle(C(4), {0, 1, 2})
        assert cert is not None and 3 in cert.assignment[(0, 2)]

    def test_c4_opposite_pair(self):
        assert naive_oracle(C(4), {0, 2}) is None

    def test_whole_vertex_set(self, h_tree):
        assert naive_oracle(h_tree, range(6)) is not None
        assert naive_oracle(K(5), range(5)) is not None

    def test_blowup(self):
        with pytest.raises(OracleBlowup):
            naive_oracle(C(4), range(4), limit=1)

    def test_target(self):
        assert naive_oracle(C(4), {0, 2}, target={0, 1, 2}) is not None

    def test_geodesics_match_bfs_enumeration(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_connected(rng, rng.randint(2, 7), 0.3)
            for s, t in combinations(range(g.n), 2):
                assert oracle_geodesics(g, s, t) == enumerate_geodesics(g, s, t)


class TestNumber:
    @pytest.mark.parametrize(
        "graph, expected",
        [(P(2), 2), (K(4), 4), (C(5), 3)],
        ids=["P2", "K4", "C5"],
    )
    def test_two_geodetic_examples(self, graph, expected):
        result = strong_geodetic_number(graph, TWO_GEODESIC)
        assert result.number == expected
        assert len(result.certificate.basis) == expected
        assert_valid(graph, result.certificate, TWO_GEODESIC)

    def test_c5_lex_basis(self):
        assert strong_geodetic_number(C(5), TWO_GEODESIC).certificate.basis == (0, 1, 3)

    def test_c4(self):
        # frozen from brute force with the naive oracle
        assert brute_force_sg(C(4))[0] == 3
        assert strong_geodetic_number(C(4)).number == 3

    @pytest.mark.parametrize("n", range(2, 7))
    def test_complete(self, n):
        assert brute_force_sg(K(n))[0] == n
        assert strong_geodetic_number(K(n)).number == n

    def test_h_tree(self, h_tree):
        for bound in (UNBOUNDED, TWO_GEODESIC):
            result = strong_geodetic_number(h_tree, bound)
            assert result.number == 4
            assert result.certificate.basis == (0, 3, 4, 5)

    def test_explored_counts_subsets(self):
        assert strong_geodetic_number(C(5)).explored >= 1

    def test_single_vertex_undefined(self):
        with pytest.raises(UndefinedInvariant):
            strong_geodetic_number(generate("path", 1))

    def test_solve_cap(self):
        with pytest.raises(SolveCapExceeded):
            strong_geodetic_number(C(6), limits=SolverLimits(max_vertices=5))

    def test_node_budget(self):
        with pytest.raises(SolveCapExceeded):
            strong_geodetic_number(C(8), limits=SolverLimits(node_budget=1))

    def test_disconnected(self):
        with pytest.raises(NotConnected):
            strong_geodetic_number(build_graph(4, [(0, 1), (2, 3)]))


class TestGeodeticNumber:
    def test_c4(self):
        assert geodetic_number(C(4)) == 2
        assert geodetic_basis(C(4)) == (0, 2)

    @pytest.mark.parametrize("k", range(2, 8))
    def test_paths(self, k):
        assert geodetic_number(P(k)) == 2

    def test_complete(self):
        assert geodetic_number(K(4)) == 4

    def test_never_above_strong(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_connected(rng, rng.randint(2, 7), 0.3)
            assert geodetic_number(g) <= strong_geodetic_number(g).number


def triples(seed, count, n_max=8):
    rng = random.Random(seed)
    for _ in range(count):
        g = random_connected(rng, rng.randint(2, n_max), rng.choice([0.1, 0.25, 0.45]))
        size = rng.randint(1, g.n)
        subset = tuple(sorted(rng.sample(range(g.n), size)))
        bound = rng.choice([UNBOUNDED, TWO_GEODESIC, LengthBound(3)])
        yield g, subset, bound


class TestInvariants:
    def test_oracle_agreement_and_lex_certificate(self):
        for g, subset, bound in triples(101, 200):
            try:
                ref = naive_oracle(g, subset, bound)
            except OracleBlowup:
                continue
            got = check_strong_geodetic(g, subset, bound)
            assert (got is None) == (ref is None)
            # the oracle returns the first hit in lexicographic product order
            assert got == ref

    def test_superset_monotone(self):
        rng = random.Random(5)
        for _ in range(80):
            g = random_connected(rng, rng.randint(3, 8), 0.3)
            bound = rng.choice([UNBOUNDED, TWO_GEODESIC])
            base = strong_geodetic_number(g, bound).certificate.basis
            extra = [v for v in range(g.n) if v not in base]
            if not extra:
                continue
            bigger = set(base) | set(rng.sample(extra, rng.randint(1, len(extra))))
            assert check_strong_geodetic(g, bigger, bound) is not None

    def test_bound_monotone_and_small_diameter_equality(self):
        rng = random.Random(9)
        for _ in range(80):
            g = random_connected(rng, rng.randint(2, 8), 0.3)
            free = strong_geodetic_number(g).number
            two = strong_geodetic_number(g, TWO_GEODESIC).number
            assert free <= two
            if distances(g).diam <= 2:
                assert free == two

    def test_pendant_always_needed(self):
        rng = random.Random(13)
        for _ in range(60):
            g = random_connected(rng, rng.randint(3, 8), 0.15)
            for p in pendant_vertices(g):
                rest = [v for v in range(g.n) if v != p]
                assert check_strong_geodetic(g, rest) is None
                assert check_strong_geodetic(g, rest, TWO_GEODESIC) is None

    def test_minimal_against_brute_force(self):
        rng = random.Random(17)
        for _ in range(40):
            g = random_connected(rng, rng.randint(2, 7), 0.3)
            for bound in (UNBOUNDED, TWO_GEODESIC):
                k, subset = brute_force_sg(g, bound)
                result = strong_geodetic_number(g, bound)
                assert result.number == k
                # both scan sizes in lexicographic order, so the bases agree
                assert result.certificate.basis == subset

    def test_unseeded_agrees(self):
        rng = random.Random(19)
        for _ in range(40):
            g = random_connected(rng, rng.randint(2, 8), 0.3)
            seeded = strong_geodetic_number(g)
            plain = strong_geodetic_number(g, use_mandatory=False)
            assert seeded.number == plain.number
            assert seeded.certificate == plain.certificate

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=2, max_value=8), st.randoms(use_true_random=False))
    def test_number_between_two_and_n(self, n, rnd):
        g = random_connected(rnd, n, 0.3)
        result = strong_geodetic_number(g)
        assert 2 <= result.number <= n
        assert_valid(g, result.certificate)


def test_certificate_covered_includes_basis():
    cert = StrongGeodeticCertificate((0, 2), {(0, 2): (0, 1, 2)})
    assert cert.covered == frozenset({0, 1, 2})
    assert cert.covers(P(3)) and not cert.covers(C(4))
