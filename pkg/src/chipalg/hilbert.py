"""Hilbert series of the toppling quotient, graded by the divisor class
group Z (+) Div_0(G).

Group-algebra elements are finite integer combinations of (t-degree,
class) pairs; classes are residue tuples against the invariant factors of
Div_0(G).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chipfiring import parking_ideal
from .monomials import standard_monomials
from .multigraph import Multigraph, div_class, divisor_class_group
from .resolutions import cyc_partitions

__all__ = [
    "GradedPolynomial",
    "psi",
    "hilbert_numerator",
    "parking_sum",
    "hilbert_identity_check",
]


@dataclass(frozen=True)
class GradedPolynomial:
    """Element of the group algebra Z[Z (+) Div_0(G)].

    ``terms`` maps (t-degree, class residue tuple) to a nonzero integer
    coefficient; ``factors`` are the invariant factors defining class
    addition.
    """

    factors: tuple
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for (t, q), c in self.terms.items():
            if len(q) != len(self.factors):
                raise ValueError("class tuple does not match invariant factors")
            if c == 0:
                raise ValueError("terms must have nonzero coefficients")

    def _check(self, other: "GradedPolynomial"):
        if self.factors != other.factors:
            raise ValueError("mismatched grading groups")

    def add(self, other: "GradedPolynomial") -> "GradedPolynomial":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
            if out[k] == 0:
                del out[k]
        return GradedPolynomial(self.factors, out)

    def neg(self) -> "GradedPolynomial":
        return GradedPolynomial(self.factors, {k: -c for k, c in self.terms.items()})

    def sub(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self.add(other.neg())

    def mul(self, other: "GradedPolynomial") -> "GradedPolynomial":
        self._check(other)
        out = {}
        for (t1, q1), c1 in self.terms.items():
            for (t2, q2), c2 in other.terms.items():
                k = (
                    t1 + t2,
                    tuple((a + b) % d for a, b, d in zip(q1, q2, self.factors)),
                )
                out[k] = out.get(k, 0) + c1 * c2
                if out[k] == 0:
                    del out[k]
        return GradedPolynomial(self.factors, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPolynomial)
            and self.factors == other.factors
            and self.terms == other.terms
        )

    def to_json(self) -> list:
        return [
            {"t": t, "q": list(q), "coeff": c}
            for (t, q), c in sorted(self.terms.items())
        ]


def _one(g: Multigraph) -> GradedPolynomial:
    grp = divisor_class_group(g)
    ident = (0,) * len(grp.invariant_factors)
    return GradedPolynomial(grp.invariant_factors, {(0, ident): 1})


def psi(g: Multigraph, u) -> GradedPolynomial:
    """Image of the monomial x^u (u over the first n-1 nodes) in the group
    algebra: the single term t^|u| q^div(u)."""
    u = tuple(u)
    if any(e < 0 for e in u):
        raise ValueError("psi needs a non-negative exponent vector")
    grp = divisor_class_group(g)
    return GradedPolynomial(grp.invariant_factors, {(sum(u), div_class(g, u)): 1})


def hilbert_numerator(g: Multigraph) -> GradedPolynomial:
    """Numerator of the graded Hilbert series of the toppling quotient.

    Alternating sum, over all cyclically ordered partitions of [n], of the
    image of the x_n-free degree monomial of each basis element; the
    single-block partition contributes the constant term 1.
    """
    if not g.is_saturated():
        raise ValueError("the closed-form numerator requires a saturated graph")
    n = g.n
    out = GradedPolynomial(divisor_class_group(g).invariant_factors, {})
    from .resolutions import _basis_label

    for k in range(1, n + 1):
        for p in cyc_partitions(n, k):
            term = psi(g, _basis_label(g, p, n - 1))
            out = out.add(term if k % 2 else term.neg())
    return out


def parking_sum(g: Multigraph) -> GradedPolynomial:
    """Sum of t^|u| q^div(u) over all parking functions u (the standard
    monomials of the parking ideal); one term per spanning tree."""
    out = GradedPolynomial(divisor_class_group(g).invariant_factors, {})
    for u in standard_monomials(parking_ideal(g)):
        out = out.add(psi(g, u))
    return out


def hilbert_identity_check(g: Multigraph) -> dict:
    """Verify parking_sum * prod_{i<n} (1 - psi(x_i)) = numerator exactly."""
    one = _one(g)
    lhs = parking_sum(g)
    for i in range(g.n - 1):
        xi = tuple(1 if j == i else 0 for j in range(g.n - 1))
        lhs = lhs.mul(one.sub(psi(g, xi)))
    rhs = hilbert_numerator(g)
    return {
        "lhs_terms": len(lhs.terms),
        "rhs_terms": len(rhs.terms),
        "pass": lhs == rhs,
    }
