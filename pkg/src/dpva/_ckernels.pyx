# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``."""

from fractions import Fraction
from math import gcd

cdef tuple _ZERO = (0, 1)


cpdef tuple merge_pairs(tuple x, tuple y):
    cdef Py_ssize_t i = 0, j = 0, nx = len(x), ny = len(y)
    cdef tuple a, b
    cdef list out
    if nx == 0:
        return y
    if ny == 0:
        return x
    out = []
    while i < nx and j < ny:
        a = <tuple>x[i]
        b = <tuple>y[j]
        ka = a[0]
        kb = b[0]
        if ka == kb:
            e = a[1] + b[1]
            if e:
                out.append((ka, e))
            i += 1
            j += 1
        elif ka < kb:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
    while i < nx:
        out.append(x[i])
        i += 1
    while j < ny:
        out.append(y[j])
        j += 1
    return tuple(out)


cpdef tuple merge_odd(tuple x, tuple y):
    cdef Py_ssize_t i = 0, j = 0, nx = len(x), ny = len(y)
    cdef long long a, b
    cdef Py_ssize_t inversions = 0
    cdef list out
    if nx == 0:
        return 1, y
    if ny == 0:
        return 1, x
    out = []
    while i < nx and j < ny:
        a = x[i]
        b = y[j]
        if a == b:
            return 0, ()
        if a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            inversions += nx - i
            j += 1
    while i < nx:
        out.append(x[i])
        i += 1
    while j < ny:
        out.append(y[j])
        j += 1
    return (-1 if inversions & 1 else 1), tuple(out)


cpdef dict mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb, odd, key, pair
    cdef int sign
    for ka, ca in a.items():
        ea = <tuple>ka[0]
        sa = <tuple>ka[1]
        oa = <tuple>ka[2]
        for kb, cb in b.items():
            ob = <tuple>kb[2]
            if oa and ob:
                pair = merge_odd(oa, ob)
                sign = pair[0]
                if sign == 0:
                    continue
                odd = pair[1]
            else:
                sign = 1
                odd = oa or ob
            key = (merge_pairs(ea, <tuple>kb[0]), merge_pairs(sa, <tuple>kb[1]), odd)
            c = ca * cb
            if sign < 0:
                c = -c
            old = out.get(key)
            if old is None:
                out[key] = c
            else:
                c = c + old
                if c:
                    out[key] = c
                else:
                    del out[key]
    return out


cpdef dict shift_terms(dict terms, long long k):
    cdef dict out = {}
    cdef tuple key, ev, odd
    if k == 0:
        return dict(terms)
    for key, c in terms.items():
        ev = tuple([(p[0] + k, p[1]) for p in <tuple>key[0]])
        odd = tuple([code + k for code in <tuple>key[2]])
        out[(ev, key[1], odd)] = c
    return out


# rationals as (numerator, denominator) pairs of Python ints, denominator > 0;
# this skips the per-operation overhead of Fraction

cdef inline tuple _as_pair(object v):
    if isinstance(v, int):
        return (v, 1)
    return (v.numerator, v.denominator)


cdef inline tuple _sub_mul(tuple x, tuple f, tuple v):
    """``x - f * v``."""
    cdef object n1 = x[0], d1 = x[1]
    cdef object n = f[0] * v[0], d = f[1] * v[1]
    cdef object num, den, g
    if d1 == d:
        num = n1 - n
        den = d
    else:
        num = n1 * d - n * d1
        den = d1 * d
    if not num:
        return None
    g = gcd(num, den)
    if g != 1:
        num //= g
        den //= g
    return (num, den)


cdef inline tuple _mul(tuple x, tuple y):
    cdef object num = x[0] * y[0], den = x[1] * y[1]
    cdef object g = gcd(num, den)
    if g != 1:
        num //= g
        den //= g
    return (num, den)


cpdef dict rref(list rows):
    cdef dict pivots = {}
    cdef dict row, other, prow, out
    cdef tuple f, inv, piv, nv
    for raw in rows:
        row = {c: _as_pair(v) for c, v in (<dict>raw).items() if v}
        for col in [c for c in row if c in pivots]:
            f = <tuple>row[col]
            prow = <dict>pivots[col]
            for c2, v2 in prow.items():
                nv = _sub_mul(row.get(c2, _ZERO), f, <tuple>v2)
                if nv is None:
                    row.pop(c2, None)
                else:
                    row[c2] = nv
        if not row:
            continue
        p = min(row)
        piv = <tuple>row[p]
        inv = (piv[1], piv[0]) if piv[0] > 0 else (-piv[1], -piv[0])
        row = {c: _mul(<tuple>v, inv) for c, v in row.items()}
        for other in pivots.values():
            fo = other.get(p)
            if fo is not None:
                f = <tuple>fo
                for c2, v2 in row.items():
                    nv = _sub_mul(other.get(c2, _ZERO), f, <tuple>v2)
                    if nv is None:
                        other.pop(c2, None)
                    else:
                        other[c2] = nv
        pivots[p] = row
    out = {}
    for p, prow in pivots.items():
        out[p] = {c: (v[0] if v[1] == 1 else Fraction(v[0], v[1])) for c, v in prow.items()}
    return out
