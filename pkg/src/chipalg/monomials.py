"""Laurent monomials and artinian monomial ideals.

Monomials are plain exponent tuples (negative entries allowed for Laurent
monomials).  Ideals keep a minimized generator antichain.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

__all__ = [
    "MonomialIdeal",
    "degree",
    "degree_plus",
    "divides",
    "lcm_exp",
    "vec_add",
    "vec_sub",
    "standard_monomials",
    "socle",
    "intersect_irreducible",
    "alexander_dual_box_generators",
    "parse_ideal",
    "format_ideal",
    "monomial_str",
]


def degree(v) -> int:
    return sum(v)


def degree_plus(v) -> int:
    """Sum of the positive coordinates."""
    return sum(x for x in v if x > 0)


def divides(a, b) -> bool:
    """Componentwise a <= b, i.e. x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def lcm_exp(a, b) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def vec_add(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _minimize(gens):
    """Antichain of minimal elements under divisibility."""
    gens = sorted(set(map(tuple, gens)))
    out = []
    for g in gens:
        if not any(divides(h, g) for h in out if h != g):
            out.append(g)
    # a second pass in case a later element divides an earlier one
    return tuple(g for g in out if not any(divides(h, g) and h != g for h in out))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (an antichain)."""

    vars: int
    generators: tuple

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.vars:
                raise ValueError("generator length does not match variable count")
            if any(e < 0 for e in g):
                raise ValueError("generators must be non-negative")

    @classmethod
    def from_generators(cls, vars: int, gens) -> "MonomialIdeal":
        return cls(vars, _minimize(gens))

    def contains(self, b) -> bool:
        """Whether x^b lies in the ideal (false for any Laurent b not >= some generator)."""
        return any(divides(g, b) for g in self.generators)

    def is_artinian(self) -> bool:
        """Artinian iff each variable has a pure-power generator."""
        return all(self.pure_power(i) is not None for i in range(self.vars))

    def pure_power(self, i: int):
        """Exponent of the minimal pure power x_i^p among the generators, or None."""
        best = None
        for g in self.generators:
            if g[i] > 0 and all(e == 0 for k, e in enumerate(g) if k != i):
                if best is None or g[i] < best:
                    best = g[i]
        return best


def _require_artinian(M: MonomialIdeal):
    if not M.is_artinian():
        raise ValueError("ideal must be artinian (a pure power in every variable)")


def standard_monomials(M: MonomialIdeal) -> list:
    """All monomials outside an artinian ideal, in lexicographic order."""
    _require_artinian(M)
    bounds = [M.pure_power(i) for i in range(M.vars)]
    return [
        u for u in product(*(range(b) for b in bounds)) if not M.contains(u)
    ]


def socle(M: MonomialIdeal) -> list:
    """Standard monomials pushed into the ideal by every variable."""
    out = []
    for u in standard_monomials(M):
        if all(
            M.contains(u[:i] + (u[i] + 1,) + u[i + 1 :]) for i in range(M.vars)
        ):
            out.append(u)
    return out


def intersect_irreducible(components, vars: int) -> MonomialIdeal:
    """Intersection of the irreducible ideals <x_1^{v_1}, ..., x_m^{v_m}>.

    Each component is the strictly positive vector of pure-power exponents.
    """
    components = [tuple(v) for v in components]
    if not components:
        raise ValueError("need at least one component")
    for v in components:
        if len(v) != vars:
            raise ValueError("component length does not match variable count")
        if any(e <= 0 for e in v):
            raise ValueError("components must be strictly positive")

    def pure_powers(v):
        return [
            tuple(v[i] if k == i else 0 for k in range(vars)) for i in range(vars)
        ]

    gens = pure_powers(components[0])
    for v in components[1:]:
        gens = _minimize(lcm_exp(a, b) for a in gens for b in pure_powers(v))
    return MonomialIdeal(vars, tuple(gens))


def alexander_dual_box_generators(M: MonomialIdeal, K) -> list:
    """Minimal u with 0 <= u <= K and x^(K-u) outside M.

    This is the box/complement description of the Alexander dual's
    generators; for a reflection-invariant ideal with canonical monomial
    x^K it returns exactly the socle.
    """
    _require_artinian(M)
    K = tuple(K)
    if any(e < 0 for e in K):
        raise ValueError("box corner must be non-negative")
    hits = [
        u
        for u in product(*(range(k + 1) for k in K))
        if not M.contains(vec_sub(K, u))
    ]
    return [u for u in hits if not any(divides(v, u) and v != u for v in hits)]


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the shared ideal text format: ``vars <m>`` then ``gen e_1 ... e_m`` lines."""
    m = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if m is None:
            if parts[0] != "vars" or len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'vars <m>'")
            m = int(parts[1])
            if m < 1:
                raise ValueError(f"line {lineno}: need at least one variable")
            continue
        if parts[0] != "gen" or len(parts) != m + 1:
            raise ValueError(f"line {lineno}: expected 'gen' with {m} exponents")
        g = tuple(int(x) for x in parts[1:])
        if any(e < 0 for e in g):
            raise ValueError(f"line {lineno}: exponents must be non-negative")
        gens.append(g)
    if m is None:
        raise ValueError("missing 'vars <m>' line")
    if not gens:
        raise ValueError("ideal needs at least one generator")
    return MonomialIdeal.from_generators(m, gens)


def format_ideal(M: MonomialIdeal) -> str:
    lines = [f"vars {M.vars}"]
    for g in M.generators:
        lines.append("gen " + " ".join(str(e) for e in g))
    return "\n".join(lines) + "\n"


def monomial_str(v, names=None) -> str:
    """Human-readable monomial, e.g. (2, 0, -1) -> 'x1^2*x3^-1'."""
    if names is None:
        names = [f"x{i + 1}" for i in range(len(v))]
    parts = []
    for name, e in zip(names, v):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
