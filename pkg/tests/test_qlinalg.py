"""Subspace enumeration, canonical forms, shadows, and the q-analog bound."""

import random
from itertools import combinations, product

import pytest

from shadowlab.errors import CapacityError, ValidationError
from shadowlab.numkit import gaussian_binom
from shadowlab.qlinalg import (
    SubspaceFamily,
    check_q_kruskal_katona,
    enumerate_subspaces,
    rref,
    subspace_shadow,
)


def span_set(rows, q, n):
    """All linear combinations of rows, as a frozenset; test-local oracle."""
    out = set()
    for coeffs in product(range(q), repeat=len(rows)):
        v = [0] * n
        for c, row in zip(coeffs, rows):
            for i in range(n):
                v[i] = (v[i] + c * row[i]) % q
        out.add(tuple(v))
    return frozenset(out)


def brute_subspaces(q, n, d):
    """Spans of all d-tuples of nonzero vectors, deduplicated as point sets."""
    if d == 0:
        return {frozenset({tuple([0] * n)})}
    vectors = [v for v in product(range(q), repeat=n) if any(v)]
    out = set()
    for gens in combinations(vectors, d):
        s = span_set(gens, q, n)
        if len(s) == q**d:
            out.add(s)
    return out


class TestRref:
    def test_idempotent(self):
        rng = random.Random(2)
        for _ in range(200):
            q = rng.choice([2, 3, 5])
            rows = [[rng.randrange(q) for _ in range(4)] for _ in range(rng.randint(1, 4))]
            once = rref(rows, q)
            assert rref(once, q) == once

    def test_span_preserved(self):
        rng = random.Random(3)
        for _ in range(100):
            q = rng.choice([2, 3])
            n = 4
            rows = [[rng.randrange(q) for _ in range(n)] for _ in range(rng.randint(1, 3))]
            reduced = rref(rows, q)
            assert span_set(rows, q, n) == span_set(list(reduced), q, n)

    def test_nonprime_rejected(self):
        with pytest.raises(ValidationError):
            rref([[1, 0]], 4)


class TestEnumerateSubspaces:
    def test_lines_of_f2_3(self):
        fam = enumerate_subspaces(2, 3, 1)
        assert len(fam) == 7

    def test_planes_of_f2_4(self):
        fam = enumerate_subspaces(2, 4, 2)
        assert len(fam) == 35
        assert {span_set(m, 2, 4) for m in fam.members} == brute_subspaces(2, 4, 2)

    def test_zero_dim(self):
        assert len(enumerate_subspaces(3, 2, 0)) == 1

    @pytest.mark.parametrize("q,n_max", [(2, 4), (3, 3)])
    def test_counts_match_formula(self, q, n_max):
        for n in range(n_max + 1):
            for d in range(n + 1):
                assert len(enumerate_subspaces(q, n, d)) == gaussian_binom(n, d, q)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            enumerate_subspaces(2, 30, 2)

    def test_nonprime_rejected(self):
        with pytest.raises(ValidationError):
            enumerate_subspaces(4, 3, 1)


class TestSubspaceShadow:
    def test_single_plane_has_three_lines(self):
        fam = SubspaceFamily.make(2, 3, 2, [[[1, 0, 0], [0, 1, 0]]])
        lines = subspace_shadow(fam)
        assert len(lines) == 3
        pts = span_set([[1, 0, 0], [0, 1, 0]], 2, 3)
        for line in lines.members:
            assert span_set(line, 2, 3) <= pts

    def test_complete_family(self):
        planes = enumerate_subspaces(2, 3, 2)
        assert len(subspace_shadow(planes)) == 7

    def test_empty_family(self):
        fam = SubspaceFamily(q=2, n=3, d=2, members=())
        assert len(subspace_shadow(fam)) == 0

    def test_matches_brute_force(self):
        rng = random.Random(5)
        all_planes = enumerate_subspaces(2, 4, 2)
        for _ in range(20):
            members = rng.sample(all_planes.members, rng.randint(1, 10))
            fam = SubspaceFamily.make(2, 4, 2, members)
            got = {span_set(m, 2, 4) for m in subspace_shadow(fam).members}
            expected = set()
            for m in members:
                pts = span_set(m, 2, 4)
                for line in brute_subspaces(2, 4, 1):
                    if line <= pts:
                        expected.add(line)
            assert got == expected


class TestQKruskalKatona:
    def test_full_grassmannian_tight(self):
        fam = enumerate_subspaces(2, 4, 2)
        rep = check_q_kruskal_katona(fam)
        assert rep.satisfied
        assert rep.extra["t"] == pytest.approx(4.0, abs=1e-6)
        assert rep.computed == 15
        assert rep.bound == pytest.approx(15.0, abs=1e-5)

    def test_single_plane_tight(self):
        fam = SubspaceFamily.make(2, 3, 2, [[[1, 0, 0], [0, 1, 0]]])
        rep = check_q_kruskal_katona(fam)
        assert rep.satisfied
        assert rep.extra["t"] == pytest.approx(2.0, abs=1e-9)
        assert rep.computed == 3
        assert rep.bound == pytest.approx(3.0, abs=1e-6)

    def test_random_families(self):
        rng = random.Random(6)
        all_planes = enumerate_subspaces(2, 4, 2)
        for _ in range(50):
            members = rng.sample(all_planes.members, rng.randint(1, 20))
            fam = SubspaceFamily.make(2, 4, 2, members)
            assert check_q_kruskal_katona(fam).satisfied

    def test_exhaustive_all_subfamilies_f2_3(self):
        planes = enumerate_subspaces(2, 3, 2).members
        assert len(planes) == 7
        count = 0
        for mask in range(1, 2**7):
            members = [planes[i] for i in range(7) if mask >> i & 1]
            fam = SubspaceFamily.make(2, 3, 2, members)
            assert check_q_kruskal_katona(fam).satisfied
            count += 1
        assert count == 127


class TestSubspaceFamilyValidation:
    def test_non_canonical_rejected(self):
        with pytest.raises(ValidationError):
            SubspaceFamily.make(2, 3, 2, [[[0, 1, 0], [1, 0, 0]]])

    def test_wrong_rank_rejected(self):
        with pytest.raises(ValidationError):
            SubspaceFamily.make(2, 3, 2, [[[1, 0, 0], [1, 0, 0]]])

    def test_duplicates_rejected(self):
        m = [[1, 0, 0], [0, 1, 0]]
        with pytest.raises(ValidationError):
            SubspaceFamily.make(2, 3, 2, [m, m])
