"""Pure-Python kernels.

Term keys are triples ``(evens, syms, odd)``:

* ``evens`` -- tuple of ``(code, exp)`` pairs sorted by ``code``;
* ``syms``  -- tuple of ``(name, exp)`` pairs sorted by ``name``;
* ``odd``   -- strictly increasing tuple of codes.

A code packs a (component, shift) pair into one int whose natural order is
the lexicographic order on the pair, so shifting is plain addition.
"""

from __future__ import annotations

from fractions import Fraction

_ONE = Fraction(1)


def merge_pairs(x: tuple, y: tuple) -> tuple:
    """Multiply two sorted exponent maps, dropping zero exponents."""
    if not x:
        return y
    if not y:
        return x
    out = []
    i = j = 0
    nx, ny = len(x), len(y)
    while i < nx and j < ny:
        a, b = x[i], y[j]
        if a[0] == b[0]:
            e = a[1] + b[1]
            if e:
                out.append((a[0], e))
            i += 1
            j += 1
        elif a[0] < b[0]:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
    out.extend(x[i:])
    out.extend(y[j:])
    return tuple(out)


def merge_odd(x: tuple, y: tuple) -> tuple[int, tuple]:
    """Return ``(sign, merged)`` for the product of two sorted odd words.

    ``sign`` is 0 when a variable repeats.
    """
    if not x:
        return 1, y
    if not y:
        return 1, x
    out = []
    inversions = 0
    i = j = 0
    nx, ny = len(x), len(y)
    while i < nx and j < ny:
        a, b = x[i], y[j]
        if a == b:
            return 0, ()
        if a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            inversions += nx - i
            j += 1
    out.extend(x[i:])
    out.extend(y[j:])
    return (-1 if inversions & 1 else 1), tuple(out)


def mul_terms(a: dict, b: dict) -> dict:
    """Product of two term dictionaries."""
    out: dict = {}
    get = out.get
    for (ea, sa, oa), ca in a.items():
        for (eb, sb, ob), cb in b.items():
            if oa and ob:
                sign, odd = merge_odd(oa, ob)
                if not sign:
                    continue
            else:
                sign, odd = 1, oa or ob
            key = (merge_pairs(ea, eb), merge_pairs(sa, sb), odd)
            c = ca * cb if sign > 0 else -(ca * cb)
            old = get(key)
            if old is None:
                out[key] = c
            else:
                c += old
                if c:
                    out[key] = c
                else:
                    del out[key]
    return out


def shift_terms(terms: dict, k: int) -> dict:
    """Apply the shift ``S^k`` to every term."""
    if not k:
        return dict(terms)
    out = {}
    for (ev, sy, odd), c in terms.items():
        ev2 = tuple((code + k, e) for code, e in ev)
        odd2 = tuple(code + k for code in odd)
        out[(ev2, sy, odd2)] = c
    return out


def rref(rows: list) -> dict:
    """Sparse reduced row echelon form over the rationals.

    ``rows`` is a list of ``{column: coefficient}`` dicts.  Returns a dict
    mapping each pivot column to its reduced row, normalised so the pivot
    entry is 1.  The pivot of each new row is its smallest surviving column.
    """
    pivots: dict = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        for col in [c for c in row if c in pivots]:
            f = row.get(col)
            if not f:
                continue
            for c2, v2 in pivots[col].items():
                nv = row.get(c2, 0) - f * v2
                if nv:
                    row[c2] = nv
                else:
                    row.pop(c2, None)
        if not row:
            continue
        p = min(row)
        inv = _ONE / row[p]
        row = {c: v * inv for c, v in row.items()}
        for other in pivots.values():
            f = other.get(p)
            if f:
                for c2, v2 in row.items():
                    nv = other.get(c2, 0) - f * v2
                    if nv:
                        other[c2] = nv
                    else:
                        other.pop(c2, None)
        pivots[p] = row
    return pivots
