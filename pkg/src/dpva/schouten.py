"""Schouten bracket of local poly-vectors.

For homogeneous ``A`` and ``B`` of odd degrees ``a`` and ``b``::

    [A, B] = SIGN * sum_l int( dA/du^l * dB/dtheta_l + (-1)^a dA/dtheta_l * dB/du^l )

with variational derivatives and left odd derivatives.  ``SIGN`` is +1:
with it ``[P, X]`` is the Lie derivative of the bivector ``P`` along the
evolutionary field ``X`` and the trivialisations ``P2 = [P1, X]`` of the
catalogued bi-Hamiltonian pairs hold with their known characteristics.
The opposite global sign gives ``[X, F] = X(F)`` instead; graded skew
symmetry and the graded Jacobi identity hold for either choice.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import DegreeError
from .functional import LocalPolyVector, integral
from .poly import SuperPoly

SIGN = 1


def _degree(A: LocalPolyVector) -> int:
    d = A.density.degree
    return 0 if d is None else d


def schouten_bracket(A, B) -> LocalPolyVector:
    A, B = integral(A), integral(B)
    if A.arity != B.arity:
        from .errors import ArityError

        raise ArityError(f"arity {A.arity} vs {B.arity}")
    a = _degree(A)
    _degree(B)
    fa, fb = A.density, B.density
    total = SuperPoly.zero(fa.arity)
    for l in range(fa.arity):
        total = total + fa.variational_u(l) * fb.variational_odd(l)
        t = fa.variational_odd(l) * fb.variational_u(l)
        total = total - t if a & 1 else total + t
    return integral(total.scale(SIGN))


def is_poisson(P) -> bool:
    P = integral(P)
    if P and P.degree != 2:
        raise DegreeError("is_poisson expects a bivector")
    return not schouten_bracket(P, P)


def are_compatible(P, Q) -> bool:
    return not schouten_bracket(P, Q)


def one_vector(Q: Sequence[SuperPoly]) -> LocalPolyVector:
    """``int sum_i Q^i theta_i``."""
    n = Q[0].arity
    total = SuperPoly.zero(n)
    for i, q in enumerate(Q):
        total = total + q * SuperPoly.odd(i, 0, n)
    return integral(total)


def characteristics(X) -> list[SuperPoly]:
    """Inverse of :func:`one_vector`."""
    X = integral(X)
    if X and X.degree != 1:
        raise DegreeError("expected a 1-vector")
    return [X.density.variational_odd(i) for i in range(X.arity)]


def evol_action(Q: Sequence[SuperPoly], F) -> LocalPolyVector:
    """``int sum_i Q^i dF/du^i``."""
    f = integral(F).density
    total = SuperPoly.zero(f.arity)
    for i, q in enumerate(Q):
        total = total + q * f.variational_u(i)
    return integral(total)


def evol_commutator(P: Sequence[SuperPoly], Q: Sequence[SuperPoly]) -> list[SuperPoly]:
    """``[P, Q]^i = sum (S^n P^j dQ^i/du^j_n - S^n Q^j dP^i/du^j_n)``."""
    out = []
    for i in range(len(Q)):
        t = SuperPoly.zero(P[0].arity)
        for j, n in Q[i].variables():
            t = t + P[j].shift(n) * Q[i].partial_u(j, n)
        for j, n in P[i].variables():
            t = t - Q[j].shift(n) * P[i].partial_u(j, n)
        out.append(t)
    return out
