"""Toppling and parking-function ideals, lattice membership, and
divisor rank on a multigraph.

Node n is the distinguished node: lead monomials avoid x_n, parking
functions live on x_1..x_{n-1}, and divisor reduction is taken at n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .exactla import solve_integer
from .monomials import MonomialIdeal, degree_plus, socle, standard_monomials, vec_sub
from .multigraph import Multigraph, Split, connected_splits, laplacian, tree_count

__all__ = [
    "SplitBinomial",
    "FlagSocle",
    "split_binomial",
    "toppling_generators",
    "parking_ideal",
    "groebner_certificate",
    "lattice_member",
    "flag_socles",
    "lattice_socle_base",
    "canonical_divisor",
    "divisor_rank",
    "divisor_rank_oracle",
    "baker_norine_verify",
    "q_reduced",
    "lattice_points_in_box",
]


@dataclass(frozen=True)
class SplitBinomial:
    """The binomial x^(I->J) - x^(J->I) attached to a split; n lies in J,
    so the lead side is the x_n-free one."""

    split: Split
    lead: tuple  # exponents over [n]
    trail: tuple

    def __post_init__(self):
        if sum(self.lead) != sum(self.trail):
            raise ValueError("split binomial must be homogeneous")


@dataclass(frozen=True)
class FlagSocle:
    """A complete flag of [n-1] (as a permutation) with its socle monomial."""

    flag: tuple  # permutation of 1..n-1; T_i = first i entries
    monomial: tuple  # exponents over [n-1]


def _arrow(g: Multigraph, I, J) -> tuple:
    """Exponent vector over [n] of x^(I->J) = prod_{i in I} x_i^(sum_{k in J} u_ik)."""
    out = [0] * g.n
    for i in I:
        out[i - 1] = sum(g.u(i, k) for k in J)
    return tuple(out)


def split_binomial(g: Multigraph, s: Split) -> SplitBinomial:
    lead = _arrow(g, s.I, s.J)
    trail = _arrow(g, s.J, s.I)
    lam = laplacian(g)
    e_I = tuple(1 if i + 1 in s.I else 0 for i in range(g.n))
    if vec_sub(lead, trail) != lam.mul_vec(e_I):
        raise AssertionError("split binomial does not represent the Laplacian move")
    return SplitBinomial(s, lead, trail)


def toppling_generators(g: Multigraph) -> list:
    """Minimal generating binomials of the toppling ideal: one per connected split."""
    return [split_binomial(g, s) for s in connected_splits(g)]


def parking_ideal(g: Multigraph) -> MonomialIdeal:
    """The parking-function ideal in x_1..x_{n-1}: lead monomials of the
    toppling generators."""
    gens = [b.lead[: g.n - 1] for b in toppling_generators(g)]
    return MonomialIdeal.from_generators(g.n - 1, gens)


def groebner_certificate(g: Multigraph) -> dict:
    """Check that the parking ideal has exactly tree-count many standard monomials."""
    trees = tree_count(g)
    std = len(standard_monomials(parking_ideal(g)))
    return {"tree_count": trees, "standard_monomials": std, "pass": trees == std}


def lattice_member(g: Multigraph, v):
    """Whether v lies in the Laplacian lattice; returns (bool, witness or None)."""
    if len(v) != g.n:
        raise ValueError("vector length must equal the node count")
    x = solve_integer(laplacian(g), tuple(v))
    return (x is not None), x


def flag_socles(g: Multigraph) -> list:
    """The (n-1)! flag socle monomials of the parking ideal.

    For the flag T_1 c T_2 c ... c T_{n-1} of [n-1], the monomial is
    lcm(x^(T_i -> complement)) divided by x_1...x_{n-1}.
    """
    n = g.n
    out = []
    for perm in permutations(range(1, n)):
        exps = [0] * (n - 1)
        members = set()
        for i, v in enumerate(perm):
            members.add(v)
            outside = [k for k in range(1, n + 1) if k not in members]
            for j in members:
                e = sum(g.u(j, k) for k in outside)
                if e > exps[j - 1]:
                    exps[j - 1] = e
        out.append(FlagSocle(perm, tuple(e - 1 for e in exps)))
    return out


def lattice_socle_base(g: Multigraph) -> list:
    """Distinct base socle monomials s / x_n of the lattice module, as
    exponent vectors over [n] (last coordinate -1).

    For saturated graphs these are the flag monomials; in general the flag
    formula can emit lattice-equivalent Laurent duplicates, so the base is
    taken from the socle of the parking ideal directly.
    """
    base = sorted(set(socle(parking_ideal(g))))
    return [m + (-1,) for m in base]


def canonical_divisor(g: Multigraph) -> tuple:
    """Exponent vector (d_1 - 2, ..., d_n - 2); degree is 2*genus - 2."""
    return tuple(g.degree(i) - 2 for i in range(1, g.n + 1))


@lru_cache(maxsize=None)
def _reduced_laplacian_inverse(g: Multigraph):
    """Exact inverse of the Laplacian with row/column n deleted."""
    n = g.n - 1
    lam = laplacian(g).delete_row_col(n, n)
    a = [[Fraction(lam.at(i, j)) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next(i for i in range(k, n) if a[i][k] != 0)
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(tuple(row[n:]) for row in a)


def lattice_points_in_box(g: Multigraph, lo, hi) -> list:
    """All Laplacian-lattice vectors w with lo <= w <= hi componentwise.

    Returns (v, w) pairs with w = Laplacian @ v and v normalized to v_n = 0.
    """
    n = g.n
    if any(l > h for l, h in zip(lo, hi)):
        return []
    inv = _reduced_laplacian_inverse(g)
    m = n - 1
    # v' = inv @ w' over the box w' in prod [lo_i, hi_i], i < n
    vlo, vhi = [], []
    for j in range(m):
        a = b = Fraction(0)
        for i in range(m):
            cij = inv[j][i]
            if cij >= 0:
                a += cij * lo[i]
                b += cij * hi[i]
            else:
                a += cij * hi[i]
                b += cij * lo[i]
        vlo.append(-(-a.numerator // a.denominator))  # ceil
        vhi.append(b.numerator // b.denominator)  # floor
    lam = laplacian(g)
    a = [[lam.at(i, j) for j in range(m)] for i in range(n)]

    # Suffix interval of each linear form w_i over the unfixed coordinates.
    sufmin = [[0] * n for _ in range(m + 1)]
    sufmax = [[0] * n for _ in range(m + 1)]
    for j in range(m - 1, -1, -1):
        for i in range(n):
            c = a[i][j]
            x, y = c * vlo[j], c * vhi[j]
            sufmin[j][i] = sufmin[j + 1][i] + min(x, y)
            sufmax[j][i] = sufmax[j + 1][i] + max(x, y)

    out = []
    partial = [0] * n

    def rec(j, prefix):
        if j == m:
            out.append((prefix + (0,), tuple(partial)))
            return
        # Tighten the range of v'_j from every constraint row.
        aj, bj = vlo[j], vhi[j]
        for i in range(n):
            c = a[i][j]
            if c == 0:
                if partial[i] + sufmin[j + 1][i] > hi[i] or partial[i] + sufmax[j + 1][i] < lo[i]:
                    return
                continue
            # lo_i <= partial_i + c*v + rest <= hi_i with rest in the suffix interval
            low = lo[i] - partial[i] - sufmax[j + 1][i]
            high = hi[i] - partial[i] - sufmin[j + 1][i]
            if c > 0:
                aj = max(aj, -(-low // c))
                bj = min(bj, high // c)
            else:
                aj = max(aj, -(-high // c))
                bj = min(bj, low // c)
            if aj > bj:
                return
        for v in range(aj, bj + 1):
            for i in range(n):
                partial[i] += a[i][j] * v
            rec(j + 1, prefix + (v,))
            for i in range(n):
                partial[i] -= a[i][j] * v

    rec(0, ())
    return out


def divisor_rank(g: Multigraph, u) -> int:
    """Rank of the divisor x^u: min over lattice-module socle monomials c of
    degree_plus(u - c), minus 1.

    The socle is infinite (base monomials times lattice vectors); the search
    is cut to the box forced by the incumbent minimum, since degree_plus and
    degree_minus of u - c differ by the constant deg(u) - genus + 1.
    """
    if len(u) != g.n:
        raise ValueError("divisor length must equal the node count")
    u = tuple(u)
    base = lattice_socle_base(g)
    best = min(degree_plus(vec_sub(u, c0)) for c0 in base)
    degu = sum(u)
    genus = g.genus
    while True:
        bound_minus = best - (degu - genus + 1)
        improved = False
        for c0 in base:
            lo = tuple(ui - best - c0i for ui, c0i in zip(u, c0))
            hi = tuple(ui + bound_minus - c0i for ui, c0i in zip(u, c0))
            for _, w in lattice_points_in_box(g, lo, hi):
                c = tuple(a + b for a, b in zip(c0, w))
                val = degree_plus(vec_sub(u, c))
                if val < best:
                    best = val
                    improved = True
        if not improved:
            return best - 1


def q_reduced(g: Multigraph, d) -> tuple:
    """The q-reduced (superstable off the sink) representative of the
    divisor class of d, with q = node n.

    Stage 1 clears debt off q by unfiring the outer BFS layers; stage 2 is
    Dhar's burning algorithm.
    """
    n = g.n
    q = n - 1
    d = list(d)

    # BFS layers from q.
    dist = [-1] * n
    dist[q] = 0
    frontier = [q]
    while frontier:
        nxt = []
        for v in frontier:
            for w in range(n):
                if dist[w] < 0 and g.mult[v][w] > 0:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    maxdist = max(dist)

    # Unfire U_t = {v : dist[v] >= t} from the deepest layer inward; a layer
    # never loses chips after its own pass.
    for t in range(maxdist, 0, -1):
        layer = [v for v in range(n) if dist[v] == t]
        need = max(0, max(-d[v] for v in layer))
        if need == 0:
            continue
        inside = [v for v in range(n) if dist[v] >= t]
        outside = [v for v in range(n) if dist[v] < t]
        # gain per unfire for v inside: edges to the outside; each layer-t
        # vertex has at least one such edge.
        for v in inside:
            d[v] += need * sum(g.mult[v][w] for w in outside)
        for w in outside:
            d[w] -= need * sum(g.mult[v][w] for v in inside)

    # Dhar burning.
    while True:
        burnt = [False] * n
        burnt[q] = True
        incoming = [g.mult[v][q] for v in range(n)]
        changed = True
        nburnt = 1
        while changed:
            changed = False
            for v in range(n):
                if not burnt[v] and d[v] < incoming[v]:
                    burnt[v] = True
                    nburnt += 1
                    for w in range(n):
                        incoming[w] += g.mult[v][w]
                    changed = True
        if nburnt == n:
            return tuple(d)
        unburnt = [v for v in range(n) if not burnt[v]]
        for v in unburnt:
            d[v] -= sum(g.mult[v][w] for w in range(n) if burnt[w])
        for w in range(n):
            if burnt[w]:
                d[w] += sum(g.mult[v][w] for v in unburnt)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def divisor_rank_oracle(g: Multigraph, u) -> int:
    """Independent divisor rank: largest r such that subtracting any
    effective divisor of degree r leaves an effective class, decided by
    q-reduction."""
    if len(u) != g.n:
        raise ValueError("divisor length must equal the node count")
    u = tuple(u)
    deg = sum(u)
    if deg < 0:
        return -1

    def eff(d):
        red = q_reduced(g, d)
        return red[g.n - 1] >= 0

    if not eff(u):
        return -1
    r = 0
    while r < deg:
        if all(eff(vec_sub(u, e)) for e in _compositions(r + 1, g.n)):
            r += 1
        else:
            break
    return r


def baker_norine_verify(g: Multigraph, u) -> dict:
    """Check rank(x^u) - rank(x^k / x^u) = deg(u) - genus + 1 exactly."""
    u = tuple(u)
    k = canonical_divisor(g)
    ru = divisor_rank(g, u)
    rk = divisor_rank(g, vec_sub(k, u))
    deg = sum(u)
    genus = g.genus
    return {
        "rank_u": ru,
        "rank_k_minus_u": rk,
        "degree": deg,
        "genus": genus,
        "pass": ru - rk == deg - genus + 1,
    }
