"""Pure-Python elimination kernels.

These are the hot inner loops of the package: every homology rank, tree
count, and field-rank query bottoms out here.  A compiled twin lives in
``_speedups.pyx``; both implement exactly the same arithmetic and either
may be selected at import time (see ``chipalg.kernels``).

All arithmetic is exact.  ``sparse_rank`` works on a column-major sparse
matrix (a list of ``{row: value}`` dicts) and performs fraction-free
Gaussian elimination: with a unit pivot the update is division-free, and
with a general pivot the row is cross-multiplied and re-normalized by its
gcd, which keeps entry growth tame on the incidence-like matrices we feed
it.  Over GF(p) the elimination is ordinary modular reduction.
"""

from math import gcd

__all__ = ["sparse_rank", "bareiss_det"]


def sparse_rank(cols, p=0):
    """Rank of an integer matrix given as sparse columns.

    ``p = 0`` computes the rank over the rationals, a prime ``p`` the rank
    over GF(p).  Primality of ``p`` is the caller's responsibility.
    """
    rows = {}
    for c, col in enumerate(cols):
        for r, v in col.items():
            if p:
                v %= p
            if v:
                rows.setdefault(r, {})[c] = v
    colrows = {}
    for r, row in rows.items():
        for c in row:
            colrows.setdefault(c, set()).add(r)

    rank = 0
    while rows:
        # Markowitz-style pivot: prefer unit entries and low fill-in.
        best = None
        bestkey = None
        done = False
        for r, row in rows.items():
            lr = len(row) - 1
            for c, v in row.items():
                fill = lr * (len(colrows[c]) - 1)
                if p:
                    key = (fill, 0)
                else:
                    key = (0 if v == 1 or v == -1 else 1, fill, abs(v))
                if bestkey is None or key < bestkey:
                    bestkey = key
                    best = (r, c)
                    if fill == 0 and (p or key[0] == 0):
                        done = True
                        break
            if done:
                break
        r, c = best
        prow = rows.pop(r)
        pv = prow[c]
        for cc in prow:
            s = colrows[cc]
            s.discard(r)
            if not s:
                del colrows[cc]
        rank += 1

        victims = list(colrows.get(c, ()))
        for r2 in victims:
            row2 = rows[r2]
            f = row2[c]
            if p:
                mult = (f * pow(pv, -1, p)) % p
                for cc, vv in prow.items():
                    nv = (row2.get(cc, 0) - mult * vv) % p
                    _put(colrows, row2, r2, cc, nv)
            elif pv == 1 or pv == -1:
                mult = f * pv
                for cc, vv in prow.items():
                    nv = row2.get(cc, 0) - mult * vv
                    _put(colrows, row2, r2, cc, nv)
            else:
                # row2 <- pv*row2 - f*prow, then strip the content gcd.
                for cc in row2:
                    if cc not in prow:
                        row2[cc] *= pv
                for cc, vv in prow.items():
                    nv = pv * row2.get(cc, 0) - f * vv
                    _put(colrows, row2, r2, cc, nv)
                g = 0
                for vv in row2.values():
                    g = gcd(g, vv)
                if g > 1:
                    for cc in row2:
                        row2[cc] //= g
            if not row2:
                del rows[r2]
    return rank


def _put(colrows, row, r, c, v):
    if v:
        if c not in row:
            colrows.setdefault(c, set()).add(r)
        row[c] = v
    elif c in row:
        del row[c]
        s = colrows[c]
        s.discard(r)
        if not s:
            del colrows[c]


def bareiss_det(rows):
    """Exact determinant of a square integer matrix (list of rows)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        ak = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (pk * ai[j] - aik * ak[j]) // prev
            ai[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]
