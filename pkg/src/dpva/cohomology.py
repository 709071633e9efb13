"""Cohomology of the constant bracket ``P0 = int theta (zeta_1 - zeta)``.

Two components: ``u`` with odd partner ``theta`` and ``v`` with odd partner
``zeta``.  On densities the differential is

    D = sum_m (zeta_{m+1} - zeta_m) d/du_m + (theta_m - theta_{m-1}) d/dv_m,

acting on the even part with the new odd factor placed on the left.  Even
variables are ordered by ``(eps(n), i)`` with ``eps(n) = 2n`` for
``n >= 0`` and ``-2n - 1`` for ``n < 0``; ``i`` is 1 for ``u`` and 2 for ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityError, FiltrationError, NonIntegrableExponent, NotClosed
from .functional import integral
from .parse import parse
from .poly import SuperPoly
from .schouten import schouten_bracket

ARITY = 2
_HALF = Fraction(1, 2)

P0 = integral(parse("$u*$v[1] - $u*$v"))


def epsilon(n: int) -> int:
    return 2 * n if n >= 0 else -2 * n - 1


def rank(var: tuple[int, int]) -> tuple[int, int]:
    """Filtration rank of the even variable ``(comp, shift)``."""
    comp, n = var
    return epsilon(n), comp + 1


def _check(omega: SuperPoly) -> None:
    if omega.arity != ARITY:
        raise ArityError("the P0 complex has two components")


def _odd_image(comp: int, n: int) -> SuperPoly:
    if comp == 0:
        return SuperPoly.odd(1, n + 1, ARITY) - SuperPoly.odd(1, n, ARITY)
    return SuperPoly.odd(0, n, ARITY) - SuperPoly.odd(0, n - 1, ARITY)


def d_p0_apply(omega: SuperPoly) -> SuperPoly:
    """``D`` on a density."""
    _check(omega)
    total = SuperPoly.zero(ARITY)
    for comp, n in sorted(omega.variables()):
        total = total + _odd_image(comp, n) * omega.partial_u(comp, n)
    return total


def d_p0_functional(Q):
    """``d_{P0} Q = [P0, Q]``; equals ``int D(Q)`` in this sign convention."""
    return schouten_bracket(P0, Q)


def _x_operator(n: int, i: int, omega: SuperPoly) -> SuperPoly:
    total = SuperPoly.zero(ARITY)
    odd_comp = 1 if i == 1 else 0
    for comp, m in omega.odd_variables():
        if comp != odd_comp:
            continue
        upper = m > n if i == 1 else m >= n
        d = omega.partial_odd(comp, m)
        total = total + d if upper else total - d
    return total.scale(_HALF)


def homotopy_apply(n: int, i: int, omega: SuperPoly) -> SuperPoly:
    """``h_{n,i} = (int du^i_n) X_{n,i}`` on the filtered piece at ``(n, i)``."""
    _check(omega)
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    top = (epsilon(n), i)
    above = [v for v in omega.variables() if rank(v) > top]
    if above:
        raise FiltrationError(f"{omega} depends on {sorted(above)} above {(n, i)}")
    return _x_operator(n, i, omega).integrate_u(i - 1, n)


def leading_variable(omega: SuperPoly) -> tuple[int, int] | None:
    vs = omega.variables()
    return max(vs, key=rank) if vs else None


@dataclass
class Reduction:
    """``omega = D(primitive) + rep`` with ``rep`` in span{1, theta, zeta, theta zeta}."""

    primitive: SuperPoly
    rep: SuperPoly


def reduce_closed(omega: SuperPoly) -> Reduction:
    _check(omega)
    if omega.has_negative_exponent():
        raise NonIntegrableExponent("reduction needs a polynomial density")
    if d_p0_apply(omega):
        raise NotClosed(f"D({omega}) != 0")
    original = omega
    primitive = SuperPoly.zero(ARITY)

    # strip even variables from the top of the filtration down
    last = None
    while omega.variables():
        comp, n = leading_variable(omega)
        key = rank((comp, n))
        if last is not None and key >= last:
            raise NotClosed("filtration did not decrease")
        last = key
        h = homotopy_apply(n, comp + 1, omega)
        primitive = primitive + h
        omega = omega - d_p0_apply(h)

    # move odd factors to shift zero
    while True:
        pending = [(k, c) for k, c in omega.terms.items() if any(v[1] for v in _odd_of(k))]
        if not pending:
            break
        key, c = pending[0]
        mono = SuperPoly._raw(ARITY, {key: c})
        comp, n = max(_odd_of(key), key=lambda v: (epsilon(v[1]), v[0] + 1))
        R = mono.partial_odd(comp, n)
        if comp == 0:
            step = -1 if n > 0 else 1
            new = SuperPoly.odd(0, n + step, ARITY) * R
            prim = SuperPoly.var(1, n, ARITY) * R if n > 0 else -(SuperPoly.var(1, n + 1, ARITY) * R)
        else:
            step = -1 if n > 0 else 1
            new = SuperPoly.odd(1, n + step, ARITY) * R
            prim = SuperPoly.var(0, n - 1, ARITY) * R if n > 0 else -(SuperPoly.var(0, n, ARITY) * R)
        omega = omega - mono + new
        primitive = primitive + prim

    if d_p0_apply(primitive) + omega != original:
        raise ArithmeticError("reduction identity failed")
    return Reduction(primitive, omega)


def _odd_of(key) -> list[tuple[int, int]]:
    from .poly import decode

    return [decode(v) for v in key[2]]


REPRESENTATIVES = ("1", "$u", "$v", "$u*$v")
