"""Riemann-Roch theory for artinian monomial ideals."""

import random

import pytest

from chipalg.monomials import MonomialIdeal, degree, vec_sub
from chipalg.riemann_roch import (
    clifford_check,
    construct_rr_ideal,
    mono_rank,
    mono_rank_bruteforce,
    mono_rank_lcm,
    rr_inequalities,
    rr_profile,
    rr_verify,
    superadditivity_check,
)

K4_PARKING = MonomialIdeal.from_generators(
    3, [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2)]
)

STAIRCASE = MonomialIdeal.from_generators(
    2, [(9, 0), (6, 4), (5, 7), (2, 8), (0, 11)]
)


def test_staircase_profile():
    prof = rr_profile(STAIRCASE)
    assert set(prof.socle) == {(8, 3), (5, 6), (4, 7), (1, 10)}
    assert prof.level and prof.genus == 12
    assert prof.reflection_invariant
    assert prof.canonical == (9, 13)
    assert degree(prof.canonical) == 2 * prof.genus - 2


def test_k4_profile():
    prof = rr_profile(K4_PARKING)
    assert prof.level and prof.genus == 4
    assert prof.canonical == (2, 2, 2)
    assert len(prof.socle) == 6


def test_rank_definitions_agree_randomized():
    rng = random.Random(7)
    count = 0
    while count < 60:
        m = rng.randint(1, 3)
        comps = [
            tuple(rng.randint(1, 4) for _ in range(m))
            for _ in range(rng.randint(1, 4))
        ]
        from chipalg.monomials import intersect_irreducible

        M = intersect_irreducible(comps, m)
        b = tuple(rng.randint(0, 6) for _ in range(m))
        w = mono_rank_bruteforce(M, b)
        assert mono_rank(M, b) == w.rank == mono_rank_lcm(M, b)
        # the witness is genuine: x^(b-a) outside M at minimal degree
        assert not M.contains(vec_sub(b, w.witness))
        count += 1


def test_rank_sign_convention():
    assert mono_rank(K4_PARKING, (0, 0, 0)) == -1  # standard monomial
    assert mono_rank(K4_PARKING, (3, 0, 0)) == 0  # generator sits on the border
    assert mono_rank(K4_PARKING, (2, 2, 2)) == 2  # canonical: genus - 2


def test_rr_verify_staircase():
    for b in [(0, 0), (5, 5), (-2, 7), (12, 16), (9, 13)]:
        assert rr_verify(STAIRCASE, (9, 13), b)["pass"]


def test_rr_verify_rejects_bad_preconditions():
    not_artinian = MonomialIdeal.from_generators(2, [(1, 1)])
    with pytest.raises(ValueError, match="artinian"):
        rr_verify(not_artinian, (0, 0), (0, 0))
    c4_parking = MonomialIdeal.from_generators(
        3, [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    )
    with pytest.raises(ValueError, match="reflection"):
        rr_verify(c4_parking, (1, 1, 1), (0, 0, 0))


def test_rr_inequalities_collapse_for_level():
    # for a level reflection-invariant ideal the two-sided bound is tight
    M = construct_rr_ideal((2, 2), [(2, 0), (1, 1)])
    prof = rr_profile(M)
    assert prof.level and prof.genus_min == prof.genus_max
    rng = random.Random(8)
    for _ in range(10):
        b = (rng.randint(-3, 5), rng.randint(-3, 5))
        rep = rr_inequalities(M, (2, 2), b)
        assert rep["pass"]


def test_clifford_staircase():
    applied = 0
    # generators whose complement relative to K is also in the ideal
    for b in [(9, 0), (6, 4), (2, 8), (0, 11), (8, 3), (0, 0)]:
        rep = clifford_check(STAIRCASE, (9, 13), b)
        if not rep["skipped"]:
            assert rep["pass"]
            applied += 1
    assert applied >= 4


def test_superadditivity():
    rng = random.Random(9)
    for _ in range(20):
        a = tuple(rng.randint(0, 5) for _ in range(3))
        b = tuple(rng.randint(0, 5) for _ in range(3))
        if mono_rank(K4_PARKING, a) < 0 or mono_rank(K4_PARKING, b) < 0:
            continue
        assert superadditivity_check(K4_PARKING, a, b)["pass"]


def test_construct_rr_ideal_k4_seeds():
    M = construct_rr_ideal((2, 2, 2), [(2, 1, 0), (2, 0, 1), (1, 2, 0)])
    assert M == K4_PARKING


def test_construct_rr_ideal_validates():
    with pytest.raises(ValueError):
        construct_rr_ideal((2, 2, 1), [(2, 0, 0)])  # odd canonical degree
    with pytest.raises(ValueError):
        construct_rr_ideal((2, 2, 2), [(3, 0, 0)])  # seed does not divide K
    with pytest.raises(ValueError):
        construct_rr_ideal((2, 2, 2), [(1, 1, 1), (2, 0, 0)])  # wrong seed degree


def test_construct_rr_ideal_random_roundtrip():
    rng = random.Random(10)
    for _ in range(15):
        m = rng.randint(2, 3)
        K = tuple(2 * rng.randint(1, 2) for _ in range(m))
        while degree(K) % 2:
            K = tuple(rng.randint(0, 3) for _ in range(m))
        half = degree(K) // 2
        seeds = set()
        for _ in range(rng.randint(1, 3)):
            # random seed of degree half dividing K
            s = [0] * m
            left = half
            order = list(range(m))
            rng.shuffle(order)
            for i in order:
                take = min(left, K[i], rng.randint(0, half))
                s[i] = take
                left -= take
            if left == 0:
                seeds.add(tuple(s))
        if not seeds:
            continue
        M = construct_rr_ideal(K, sorted(seeds))
        prof = rr_profile(M)
        assert prof.reflection_invariant and K in prof.canonical_candidates
        b = tuple(rng.randint(-2, 4) for _ in range(m))
        assert rr_verify(M, K, b)["pass"]
