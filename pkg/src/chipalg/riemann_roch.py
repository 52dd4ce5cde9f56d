"""Riemann-Roch theory for artinian monomial ideals.

The rank of a monomial is one less than the minimal degree one must divide
by to leave the ideal; for artinian ideals it is computed from the socle.
An ideal is Riemann-Roch when it is artinian, level, and reflection
invariant, and then rank satisfies the exact duality identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .monomials import (
    MonomialIdeal,
    degree,
    degree_plus,
    divides,
    intersect_irreducible,
    socle,
    vec_add,
    vec_sub,
)

__all__ = [
    "RRProfile",
    "RankWitness",
    "mono_rank_bruteforce",
    "mono_rank",
    "mono_rank_lcm",
    "rr_profile",
    "rr_verify",
    "rr_inequalities",
    "clifford_check",
    "superadditivity_check",
    "construct_rr_ideal",
]


@dataclass(frozen=True)
class RankWitness:
    rank: int
    witness: tuple | None  # minimal-degree a with x^(b-a) outside the ideal


@dataclass(frozen=True)
class RRProfile:
    """Socle-derived Riemann-Roch data of an artinian monomial ideal."""

    ideal: MonomialIdeal
    socle: tuple
    genus_min: int  # one plus the minimum socle degree
    genus_max: int  # one plus the maximum socle degree
    level: bool
    canonical: tuple | None  # lexicographically smallest valid K, if any
    canonical_candidates: tuple  # all valid K (ties reported)
    reflection_invariant: bool

    @property
    def genus(self) -> int:
        if not self.level:
            raise ValueError("genus is only defined for level ideals")
        return self.genus_min


def _require_artinian(M: MonomialIdeal):
    if not M.is_artinian():
        raise ValueError("ideal must be artinian")


def mono_rank_bruteforce(M: MonomialIdeal, b) -> RankWitness:
    """Rank by direct search: the smallest-degree a with 0 <= a <= b and
    x^(b-a) outside M; rank = degree(a) - 1.

    Ties within a degree are broken lexicographically.
    """
    _require_artinian(M)
    b = tuple(b)
    if any(e < 0 for e in b):
        raise ValueError("brute-force rank needs a non-negative monomial")
    best = None
    for a in product(*(range(e + 1) for e in b)):
        if M.contains(vec_sub(b, a)):
            continue
        if best is None or (degree(a), a) < (degree(best), best):
            best = a
    if best is None:
        raise AssertionError("artinian ideal cannot contain all divisors of b")
    return RankWitness(degree(best) - 1, best)


def mono_rank(M: MonomialIdeal, b) -> int:
    """Rank of a Laurent monomial: min over socle c of degree_plus(b - c), minus 1."""
    _require_artinian(M)
    b = tuple(b)
    return min(degree_plus(vec_sub(b, c)) for c in socle(M)) - 1


def mono_rank_lcm(M: MonomialIdeal, b) -> int:
    """Rank via the S-pair form: min over socle c of degree(lcm(x^b, x^c)/x^c), minus 1."""
    _require_artinian(M)
    b = tuple(b)
    return min(
        sum(max(x, y) - y for x, y in zip(b, c)) for c in socle(M)
    ) - 1


def rr_profile(M: MonomialIdeal) -> RRProfile:
    """Socle, genus bounds, level flag, and the canonical monomial search.

    Any valid K must equal c + c' for socle monomials c, c', so the pair
    sums exhaust the candidates; K is valid when c -> K - c maps the socle
    onto itself.
    """
    _require_artinian(M)
    soc = tuple(socle(M))
    socset = set(soc)
    degs = [degree(c) for c in soc]
    gmin, gmax = 1 + min(degs), 1 + max(degs)
    candidates = sorted({vec_add(c, d) for c in soc for d in soc})
    valid = tuple(
        K
        for K in candidates
        if all(
            all(e >= 0 for e in vec_sub(K, c)) and vec_sub(K, c) in socset
            for c in soc
        )
    )
    return RRProfile(
        ideal=M,
        socle=soc,
        genus_min=gmin,
        genus_max=gmax,
        level=gmin == gmax,
        canonical=valid[0] if valid else None,
        canonical_candidates=valid,
        reflection_invariant=bool(valid),
    )


def rr_verify(M: MonomialIdeal, K, b) -> dict:
    """Check rank(x^b) - rank(x^K/x^b) = degree(x^b) - genus + 1 exactly.

    Requires an artinian, level, reflection-invariant ideal; a violated
    precondition is reported by name.
    """
    if not M.is_artinian():
        raise ValueError("precondition failed: ideal is not artinian")
    prof = rr_profile(M)
    if not prof.level:
        raise ValueError("precondition failed: ideal is not level")
    K = tuple(K)
    if K not in prof.canonical_candidates:
        raise ValueError(
            "precondition failed: ideal is not reflection-invariant with this K"
        )
    b = tuple(b)
    rb = mono_rank(M, b)
    rdual = mono_rank(M, vec_sub(K, b))
    genus = prof.genus
    return {
        "rank_b": rb,
        "rank_dual": rdual,
        "degree": degree(b),
        "genus": genus,
        "pass": rb - rdual == degree(b) - genus + 1,
    }


def rr_inequalities(M: MonomialIdeal, K, b) -> dict:
    """Check genus_min - 1 <= degree(b) - rank(x^b) + rank(x^K/x^b) <= genus_max - 1.

    Level is not required, but reflection invariance with the given K is.
    """
    prof = rr_profile(M)
    K = tuple(K)
    if K not in prof.canonical_candidates:
        raise ValueError(
            "precondition failed: ideal is not reflection-invariant with this K"
        )
    b = tuple(b)
    mid = degree(b) - mono_rank(M, b) + mono_rank(M, vec_sub(K, b))
    return {
        "lower": prof.genus_min - 1,
        "value": mid,
        "upper": prof.genus_max - 1,
        "pass": prof.genus_min - 1 <= mid <= prof.genus_max - 1,
    }


def clifford_check(M: MonomialIdeal, K, b) -> dict:
    """Clifford bound 2*rank(x^b) <= degree(x^b) - 1 for special divisors.

    Applies when b divides K and both rank(x^b) and rank(x^K/x^b) are
    non-negative; unmet preconditions are reported as skipped.
    """
    _require_artinian(M)
    K = tuple(K)
    b = tuple(b)
    report = {"skipped": False, "reason": None, "pass": None}
    if not divides(b, K) or any(e < 0 for e in b):
        report.update(skipped=True, reason="b does not divide K")
        return report
    rb = mono_rank(M, b)
    rdual = mono_rank(M, vec_sub(K, b))
    if rb < 0 or rdual < 0:
        report.update(skipped=True, reason="a side has negative rank")
        return report
    report.update(
        rank=rb, degree=degree(b), **{"pass": 2 * rb <= degree(b) - 1}
    )
    return report


def superadditivity_check(M: MonomialIdeal, a, b) -> dict:
    """Check rank(x^a * x^b) >= rank(x^a) + rank(x^b) for non-negative a, b."""
    _require_artinian(M)
    a, b = tuple(a), tuple(b)
    if any(e < 0 for e in a + b):
        raise ValueError("superadditivity needs non-negative monomials")
    ra, rb = mono_rank(M, a), mono_rank(M, b)
    rab = mono_rank(M, vec_add(a, b))
    return {"rank_a": ra, "rank_b": rb, "rank_ab": rab, "pass": rab >= ra + rb}


def construct_rr_ideal(K, seeds) -> MonomialIdeal:
    """Build a Riemann-Roch ideal with canonical monomial x^K.

    The socle is the seed set closed under c -> K - c; every seed must
    divide x^K and have degree degree(K)/2.  The ideal is the intersection
    of the irreducible ideals at socle + (1,...,1), and the construction is
    verified before returning.
    """
    K = tuple(K)
    if any(e < 0 for e in K):
        raise ValueError("canonical exponents must be non-negative")
    if degree(K) % 2:
        raise ValueError("degree of the canonical monomial must be even")
    half = degree(K) // 2
    soc = set()
    for s in seeds:
        s = tuple(s)
        if not divides(s, K) or any(e < 0 for e in s):
            raise ValueError(f"seed {s} does not divide the canonical monomial")
        if degree(s) != half:
            raise ValueError(f"seed {s} must have degree {half}")
        soc.add(s)
        soc.add(vec_sub(K, s))
    if not soc:
        raise ValueError("need at least one seed")
    e = (1,) * len(K)
    M = intersect_irreducible([vec_add(c, e) for c in sorted(soc)], len(K))
    prof = rr_profile(M)
    if set(prof.socle) != soc or K not in prof.canonical_candidates:
        raise AssertionError("constructed ideal failed its Riemann-Roch profile")
    return M
