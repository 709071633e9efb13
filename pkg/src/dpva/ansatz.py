"""Undetermined-coefficient solver for trivialisations.

Given a base bivector ``P`` and a target ``T`` with ``[P, T] = 0``, look for
``alpha`` and a 1-vector ``X`` with characteristics in a finite monomial
space such that ``T = alpha * ul + [P, X]``.  Each unknown contributes one
column of canonical coefficients; the linear system is solved exactly and
every returned solution is checked by recomputing the bracket.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product

from . import kernels
from .errors import IncompatibleError
from .functional import LocalPolyVector, integral
from .poly import SuperPoly, code
from .schouten import are_compatible, is_poisson, schouten_bracket


def monomial_basis(
    arity: int, window: tuple[int, int], maxdeg: int, laurent: bool = False
) -> list[SuperPoly]:
    """Monomials in ``u^i_n`` (``n`` in the window) of total degree <= ``maxdeg``.

    With ``laurent`` the bound applies to the sum of absolute exponents and
    negative exponents are allowed.  Sorted graded-lexicographically.
    """
    lo, hi = window
    variables = [code(i, n) for n in range(lo, hi + 1) for i in range(arity)]
    variables.sort()
    keys = set()
    if not laurent:
        for d in range(maxdeg + 1):
            for combo in combinations_with_replacement(variables, d):
                exps: dict[int, int] = {}
                for v in combo:
                    exps[v] = exps.get(v, 0) + 1
                keys.add(tuple(sorted(exps.items())))
    else:
        for support_size in range(min(maxdeg, len(variables)) + 1):
            for support in _subsets(variables, support_size):
                for exps in product(*[[e for e in range(-maxdeg, maxdeg + 1) if e] for _ in support]):
                    if sum(abs(e) for e in exps) <= maxdeg:
                        keys.add(tuple(zip(support, exps)))
    def grlex(ev):
        exps = dict(ev)
        return sum(abs(e) for _, e in ev), [-exps.get(v, 0) for v in variables]

    ordered = sorted(keys, key=grlex)
    return [SuperPoly._raw(arity, {(ev, (), ()): 1}) for ev in ordered]


def _subsets(items, k):
    from itertools import combinations

    return combinations(items, k)


@dataclass
class LinearSolution:
    particular: list[Fraction]
    pivots: list[int]
    free: list[int]
    nullspace: list[list[Fraction]]

    @property
    def nullity(self) -> int:
        return len(self.free)


def solve_linear(columns: list[dict], rhs: dict) -> LinearSolution | None:
    """Solve ``sum_k x_k * columns[k] = rhs`` over the rationals.

    Columns and ``rhs`` are sparse ``{row_key: value}`` dicts.  Free
    variables are set to zero in the particular solution.  Returns ``None``
    when the system is inconsistent.
    """
    ncols = len(columns)
    rows: dict = {}
    for k, col in enumerate(columns):
        for r, val in col.items():
            rows.setdefault(r, {})[k] = val
    for r, val in rhs.items():
        rows.setdefault(r, {})[ncols] = val
    reduced = kernels.rref(list(rows.values()))
    if ncols in reduced:
        return None
    pivots = sorted(reduced)
    free = [k for k in range(ncols) if k not in reduced]
    particular = [Fraction(0)] * ncols
    for p, row in reduced.items():
        particular[p] = Fraction(row.get(ncols, 0))
    nullspace = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for p, row in reduced.items():
            if f in row:
                vec[p] = -Fraction(row[f])
        nullspace.append(vec)
    return LinearSolution(particular, pivots, free, nullspace)


@dataclass
class Trivialisation:
    alpha: Fraction
    X: LocalPolyVector
    nullity: int
    alpha_determined: bool
    kernel: list[LocalPolyVector] = field(default_factory=list)

    def characteristics(self) -> list[SuperPoly]:
        from .schouten import characteristics

        return characteristics(self.X)


def _columns(P: LocalPolyVector, basis: list[SuperPoly]) -> tuple[list[dict], list[SuperPoly]]:
    n = P.arity
    cols, gens = [], []
    for i in range(n):
        th = SuperPoly.odd(i, 0, n)
        for b in basis:
            g = b * th
            gens.append(g)
            cols.append(schouten_bracket(P, g).density.terms)
    return cols, gens


def solve_trivialization(
    P_base, T, basis: list[SuperPoly], ul=None
) -> Trivialisation | None:
    """Solve ``T = alpha * ul + [P_base, X]`` within ``span(basis) * theta``."""
    P, T = integral(P_base), integral(T)
    cols, gens = _columns(P, basis)
    use_ul = ul is not None and bool(integral(ul))
    if use_ul:
        cols.append(integral(ul).density.terms)
    sol = solve_linear(cols, T.density.terms)
    if sol is None:
        return None
    ngen = len(gens)

    def assemble(vec) -> LocalPolyVector:
        total = SuperPoly.zero(P.arity)
        for x, g in zip(vec[:ngen], gens):
            if x:
                total = total + g.scale(x)
        return integral(total)

    X = assemble(sol.particular)
    alpha = sol.particular[ngen] if use_ul else Fraction(0)
    lhs = schouten_bracket(P, X)
    if use_ul:
        lhs = lhs + integral(ul) * alpha
    if lhs != T:
        raise ArithmeticError("solver returned a non-solution")
    determined = not use_ul or all(not v[ngen] for v in sol.nullspace)
    return Trivialisation(alpha, X, sol.nullity, determined, [assemble(v) for v in sol.nullspace])


def trivialize_bivector(
    P_base,
    T,
    ul=None,
    window: tuple[int, int] = (-1, 1),
    maxdeg: int = 2,
    allow_ul: bool = True,
    laurent: bool = False,
) -> Trivialisation | None:
    """Check ``[P_base, T] = 0`` and search the given ansatz space."""
    P, T = integral(P_base), integral(T)
    if not are_compatible(P, T):
        raise IncompatibleError("target is not closed under the base bracket")
    basis = monomial_basis(P.arity, window, maxdeg, laurent)
    return solve_trivialization(P, T, basis, ul if allow_ul else None)


@dataclass
class DerivedPair:
    P: LocalPolyVector
    poisson: bool
    beta: Fraction | None = None
    Y: LocalPolyVector | None = None


def derive_pair(
    P0, X, alpha, ul, window: tuple[int, int] = (-1, 1), maxdeg: int = 2
) -> DerivedPair:
    """``P = alpha * ul + [P0, X]``, with the cocycle data when ``P`` is Poisson.

    ``W = [X, [X, P0] - 2 alpha ul]`` is closed exactly when ``P`` is Poisson;
    then ``W = beta * ul + [P0, Y]`` is solved in the given ansatz space.
    """
    P0, X, ul = integral(P0), integral(X), integral(ul)
    alpha = Fraction(alpha)
    P = ul * alpha + schouten_bracket(P0, X)
    if not is_poisson(P):
        return DerivedPair(P, False)
    W = schouten_bracket(X, schouten_bracket(X, P0) - ul * (2 * alpha))
    found = trivialize_bivector(P0, W, ul, window, maxdeg)
    if found is None:
        return DerivedPair(P, True)
    return DerivedPair(P, True, found.alpha, found.X)
