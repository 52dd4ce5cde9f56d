# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels.

Same contract as ``chipalg.kernels._impl`` (the pure-Python twin): exact
fraction-free sparse rank over Q or GF(p), and a Bareiss determinant.
The GF(p) update runs on C integers (safe for p < 2**31); the exact path
keeps Python integers since Bareiss-style entries can outgrow any fixed
word size.
"""

from math import gcd

__all__ = ["sparse_rank", "bareiss_det"]


cdef inline void _put(dict colrows, dict row, r, c, v):
    cdef set s
    if v:
        if c not in row:
            s = colrows.get(c)
            if s is None:
                s = set()
                colrows[c] = s
            s.add(r)
        row[c] = v
    elif c in row:
        del row[c]
        s = colrows[c]
        s.discard(r)
        if not s:
            del colrows[c]


def sparse_rank(cols, long p=0):
    """Rank of an integer matrix given as sparse columns (over Q or GF(p))."""
    cdef dict rows = {}
    cdef dict colrows = {}
    cdef dict row, row2, prow
    cdef set s
    cdef long rank = 0
    cdef long fill, lr
    cdef long fp, multp, pvp, nvp
    cdef bint done
    for c, col in enumerate(cols):
        for r, v in col.items():
            if p:
                v %= p
            if v:
                row = rows.get(r)
                if row is None:
                    row = {}
                    rows[r] = row
                row[c] = v
    for r, row in rows.items():
        for c in row:
            s = colrows.get(c)
            if s is None:
                s = set()
                colrows[c] = s
            s.add(r)

    while rows:
        best = None
        bestkey = None
        done = False
        for r, row in rows.items():
            lr = len(row) - 1
            for c, v in row.items():
                fill = lr * (len(<set> colrows[c]) - 1)
                if p:
                    key = (fill, 0)
                else:
                    key = (0 if v == 1 or v == -1 else 1, fill, abs(v))
                if bestkey is None or key < bestkey:
                    bestkey = key
                    best = (r, c)
                    if fill == 0 and (p or v == 1 or v == -1):
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
                pvp = pv
                fp = f
                multp = (fp * <long> pow(pvp, p - 2, p)) % p
                for cc, vv in prow.items():
                    nvp = (<long> row2.get(cc, 0) - multp * <long> vv) % p
                    _put(colrows, row2, r2, cc, nvp)
            elif pv == 1 or pv == -1:
                mult = f * pv
                for cc, vv in prow.items():
                    nv = row2.get(cc, 0) - mult * vv
                    _put(colrows, row2, r2, cc, nv)
            else:
                for cc in row2:
                    if cc not in prow:
                        row2[cc] = row2[cc] * pv
                for cc, vv in prow.items():
                    nv = pv * row2.get(cc, 0) - f * vv
                    _put(colrows, row2, r2, cc, nv)
                g = 0
                for vv in row2.values():
                    g = gcd(g, vv)
                if g > 1:
                    for cc in row2:
                        row2[cc] = row2[cc] // g
            if not row2:
                del rows[r2]
    return rank


def bareiss_det(rows):
    """Exact determinant of a square integer matrix (list of rows)."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    if n == 0:
        return 1
    cdef list a = [list(row) for row in rows]
    cdef list ai, ak
    cdef int sign = 1
    prev = 1
    for k in range(n - 1):
        ak = a[k]
        if ak[k] == 0:
            for i in range(k + 1, n):
                if (<list> a[i])[k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
            ak = a[k]
        pk = ak[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (pk * ai[j] - aik * ak[j]) // prev
            ai[k] = 0
        prev = pk
    return sign * (<list> a[n - 1])[n - 1]
