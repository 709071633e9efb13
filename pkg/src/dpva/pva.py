"""Multiplicative lambda-brackets of a matrix difference operator.

Shifts act on coefficients; ``lambda`` and ``mu`` are formal scalars.  On
generators ``{u^i_lambda u^j} = K^{ji}(lambda)``, and the Master Formula
extends this to arbitrary polynomials.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from itertools import product

from .errors import DependencyError, NotSkewError
from .operators import MatDiffOp
from .poly import SuperPoly


class LambdaSeries:
    """Finite Laurent series ``sum_p c_p lambda^p``."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity: int, coeffs: Mapping[int, SuperPoly] | None = None):
        self.arity = arity
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c}

    def add_term(self, p: int, c: SuperPoly) -> None:
        v = self.coeffs[p] + c if p in self.coeffs else c
        if v:
            self.coeffs[p] = v
        else:
            self.coeffs.pop(p, None)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other: LambdaSeries) -> LambdaSeries:
        out = LambdaSeries(self.arity, self.coeffs)
        for p, c in other.coeffs.items():
            out.add_term(p, c)
        return out

    def __neg__(self) -> LambdaSeries:
        return LambdaSeries(self.arity, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: LambdaSeries) -> LambdaSeries:
        return self + (-other)

    def items(self) -> Iterator[tuple[int, SuperPoly]]:
        return iter(sorted(self.coeffs.items()))

    def lines(self, names=None) -> list[str]:
        from .parse import to_str

        return [f"{to_str(c, names)} @ l^{p}" for p, c in self.items()]

    def __repr__(self) -> str:
        return "LambdaSeries(" + "; ".join(self.lines()) + ")"


class BiSeries:
    """Finite Laurent series in ``lambda`` and ``mu``."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity: int):
        self.arity = arity
        self.coeffs: dict[tuple[int, int], SuperPoly] = {}

    def add_term(self, p: int, q: int, c: SuperPoly) -> None:
        key = (p, q)
        v = self.coeffs[key] + c if key in self.coeffs else c
        if v:
            self.coeffs[key] = v
        else:
            self.coeffs.pop(key, None)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return "BiSeries(" + "; ".join(f"{c} @ l^{p} m^{q}" for (p, q), c in sorted(self.coeffs.items())) + ")"


def bracket_generators(K: MatDiffOp, i: int, j: int) -> LambdaSeries:
    """``{u^i_lambda u^j} = K^{ji}(lambda)``."""
    return LambdaSeries(K.arity, K.entry(j, i).coeffs)


def bracket_master(K: MatDiffOp, f: SuperPoly, g: SuperPoly) -> LambdaSeries:
    """Master Formula.

    ``sum dg/du^j_m (lambda S)^m K^{ji}(lambda S) (lambda S)^{-n} df/du^i_n``
    """
    out = LambdaSeries(K.arity)
    dfs = [(i, n, f.partial_u(i, n)) for i, n in f.variables()]
    dgs = [(j, m, g.partial_u(j, m)) for j, m in g.variables()]
    for i, n, df in dfs:
        for j, m, dg in dgs:
            for l, k in K.entry(j, i).coeffs.items():
                p = m + l - n
                out.add_term(p, dg * k.shift(m) * df.shift(p))
    return out


def skew_transform(series: LambdaSeries) -> LambdaSeries:
    """``-sum_p (lambda S)^{-p} c_p``."""
    return LambdaSeries(series.arity, {-p: -c.shift(-p) for p, c in series.coeffs.items()})


def check_skewsymmetry(K: MatDiffOp) -> bool:
    """Skewsymmetry of the bracket on every pair of generators."""
    n = K.arity
    gens = [SuperPoly.var(i, 0, n) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            lhs = bracket_master(K, gens[j], gens[i])
            rhs = skew_transform(bracket_master(K, gens[i], gens[j]))
            if lhs != rhs:
                return False
    return True


def jacobi_generator_residual(K: MatDiffOp, i: int, j: int, k: int) -> BiSeries:
    """Jacobi residual on generators, expanded in ``lambda`` and ``mu``.

    Terms::

        + dH^{kj}_l/du^s_n S^n(H^{si}_p)           lambda^{n+p}   mu^l
        - dH^{ki}_l/du^s_n S^n(H^{sj}_p)           lambda^l       mu^{n+p}
        - H^{ks}_r S^{r-n}(dH^{ji}_q/du^s_n)       lambda^{r-n+q} mu^{r-n}
    """
    out = BiSeries(K.arity)
    for l, h in K.entry(k, j).coeffs.items():
        for s, n in h.variables():
            d = h.partial_u(s, n)
            for p, c in K.entry(s, i).coeffs.items():
                out.add_term(n + p, l, d * c.shift(n))
    for l, h in K.entry(k, i).coeffs.items():
        for s, n in h.variables():
            d = h.partial_u(s, n)
            for p, c in K.entry(s, j).coeffs.items():
                out.add_term(l, n + p, -(d * c.shift(n)))
    for q, h in K.entry(j, i).coeffs.items():
        for s, n in h.variables():
            d = h.partial_u(s, n)
            for r, c in K.entry(k, s).coeffs.items():
                out.add_term(r - n + q, r - n, -(c * d.shift(r - n)))
    return out


def jacobi_residual_via_brackets(K: MatDiffOp, i: int, j: int, k: int) -> BiSeries:
    """Same residual assembled from :func:`bracket_master` calls.

    ``{u^i_lambda {u^j_mu u^k}} - {u^j_mu {u^i_lambda u^k}} - {{u^i_lambda u^j}_{lambda mu} u^k}``
    """
    n = K.arity
    ui, uj, uk = (SuperPoly.var(x, 0, n) for x in (i, j, k))
    out = BiSeries(n)
    for q, c in bracket_master(K, uj, uk).coeffs.items():
        for p, d in bracket_master(K, ui, c).coeffs.items():
            out.add_term(p, q, d)
    for p, c in bracket_master(K, ui, uk).coeffs.items():
        for q, d in bracket_master(K, uj, c).coeffs.items():
            out.add_term(p, q, -d)
    for q, c in bracket_master(K, ui, uj).coeffs.items():
        for r, d in bracket_master(K, c, uk).coeffs.items():
            out.add_term(q + r, r, -d)
    return out


@dataclass
class Verdict:
    """Outcome of a check.

    ``residuals`` is filled for operators with constant symbols: the listed
    symbol polynomials must all vanish for the identity to hold.
    """

    passed: bool
    witness: tuple | None = None
    condition: str | None = None
    residual: object = None
    residuals: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def _symbol_residuals(polys) -> list[SuperPoly]:
    seen = set()
    out = []
    for p in polys:
        for c in p.split_symbols().values():
            if c not in seen and -c not in seen:
                seen.add(c)
                out.append(c)
    return out


def check_jacobi(K: MatDiffOp) -> Verdict:
    if not check_skewsymmetry(K):
        raise NotSkewError("operator is not skewadjoint")
    symbolic = bool(K.symbols())
    n = K.arity
    collected: list[SuperPoly] = []
    first = None
    for i, j, k in product(range(n), repeat=3):
        res = jacobi_generator_residual(K, i, j, k)
        if res:
            if not symbolic:
                return Verdict(False, witness=(i, j, k), residual=res)
            first = first or ((i, j, k), res)
            collected.extend(res.coeffs.values())
    if first is None:
        return Verdict(True)
    return Verdict(False, witness=first[0], residual=first[1], residuals=_symbol_residuals(collected))


# order (-1, 1) -------------------------------------------------------------


def _as_matrix(M) -> list[list[SuperPoly]]:
    """Square matrix with plain numbers promoted; the arity is its size."""
    n = len(M)
    return [[e if isinstance(e, SuperPoly) else SuperPoly.const(e, n) for e in row] for row in M]


def check_dependency_profile(A, B) -> list[tuple[str, tuple[int, int], tuple[int, int]]]:
    """Violations of ``A = A(u, u_1)``, ``B = B(u)`` as ``(name, entry, var)``."""
    A, B = _as_matrix(A), _as_matrix(B)
    bad = []
    for name, M, allowed in (("A", A, {0, 1}), ("B", B, {0})):
        for i, row in enumerate(M):
            for j, e in enumerate(row):
                for v in sorted(e.variables()):
                    if v[1] not in allowed:
                        bad.append((name, (i, j), v))
    return bad


def _skew_matrix(B) -> bool:
    n = len(B)
    return all(B[i][j] == -B[j][i] for i in range(n) for j in range(n))


def order11_residuals(A, B) -> dict[str, dict[tuple[int, int, int], SuperPoly]]:
    """Left-hand sides of the four conditions for every ``(i, j, k)``."""
    A, B = _as_matrix(A), _as_matrix(B)
    n = len(A)
    arity = A[0][0].arity
    d0 = {}
    d1 = {}

    def D0(M, a, b, s):
        key = (id(M), a, b, s)
        if key not in d0:
            d0[key] = M[a][b].partial_u(s, 0)
        return d0[key]

    def D1(M, a, b, s):
        key = (id(M), a, b, s)
        if key not in d1:
            d1[key] = M[a][b].partial_u(s, 1)
        return d1[key]

    zero = SuperPoly.zero(arity)
    out: dict[str, dict] = {f"cond{c}": {} for c in range(1, 5)}
    for i, j, k in product(range(n), repeat=3):
        c1 = c2 = c3 = c4 = zero
        for s in range(n):
            c1 = c1 + D1(A, k, j, s) * A[s][i].shift(1) - A[k][s] * D0(A, j, i, s).shift(1)
            c2 = (
                c2
                + D0(A, k, j, s) * A[s][i]
                + D1(A, k, j, s) * B[s][i].shift(1)
                - D0(A, k, i, s) * A[s][j]
                - D1(A, k, i, s) * B[s][j].shift(1)
                - A[k][s] * D0(B, j, i, s).shift(1)
            )
            c3 = (
                c3
                + D1(A, k, j, s) * A[i][s]
                + D0(A, k, j, s) * B[i][s]
                - D1(A, i, j, s) * A[k][s]
                - D0(A, i, j, s) * B[k][s]
                + D0(B, k, i, s) * A[s][j]
            )
            c4 = c4 + D0(B, k, j, s) * B[s][i] + D0(B, i, k, s) * B[s][j] + D0(B, j, i, s) * B[s][k]
        for name, val in (("cond1", c1), ("cond2", c2), ("cond3", c3), ("cond4", c4)):
            if val:
                out[name][(i, j, k)] = val
    return out


def check_order11_conditions(A, B) -> Verdict:
    """Fast Jacobi test for ``K = A S + B - S^{-1} o A^T``."""
    A, B = _as_matrix(A), _as_matrix(B)
    bad = check_dependency_profile(A, B)
    if bad:
        raise DependencyError(f"dependency profile violated: {bad}")
    if not _skew_matrix(B):
        raise NotSkewError("B is not skew-symmetric")
    res = order11_residuals(A, B)
    for name in ("cond1", "cond2", "cond3", "cond4"):
        if res[name]:
            witness, value = sorted(res[name].items())[0]
            polys = [p for r in res.values() for p in r.values()]
            symbolic = any(p.symbols() for p in polys)
            return Verdict(
                False,
                witness=witness,
                condition=name,
                residual=value,
                residuals=_symbol_residuals(polys) if symbolic else [],
            )
    return Verdict(True)


def check_ultralocal(B) -> Verdict:
    """Jacobi test for the order-zero operator ``B``."""
    B = _as_matrix(B)
    if not _skew_matrix(B):
        raise NotSkewError("B is not skew-symmetric")
    n = len(B)
    for i, j, k in product(range(n), repeat=3):
        c4 = sum(
            (
                B[k][j].partial_u(s, 0) * B[s][i]
                + B[i][k].partial_u(s, 0) * B[s][j]
                + B[j][i].partial_u(s, 0) * B[s][k]
                for s in range(n)
            ),
            SuperPoly.zero(B[0][0].arity),
        )
        if c4:
            return Verdict(False, witness=(i, j, k), condition="cond4", residual=c4)
    for i, j, k in product(range(n), repeat=3):
        shifts = sorted({m for _, m in B[i][j].variables() if m})
        for m in shifts:
            val = sum(
                (B[i][j].partial_u(s, m) * B[s][k].shift(m) for s in range(n)),
                SuperPoly.zero(B[0][0].arity),
            )
            if val:
                return Verdict(False, witness=(i, j, k), condition=f"shift{m}", residual=val)
    return Verdict(True)
