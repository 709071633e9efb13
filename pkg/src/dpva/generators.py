"""Seeded random instances for property checks and cross-route tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .operators import MatDiffOp
from .poly import SuperPoly


def random_coeff(rng: random.Random, size: int = 3) -> Fraction:
    num = rng.randint(-size, size) or 1
    return Fraction(num, rng.choice((1, 1, 1, 2, 3)))


def random_monomial(
    rng: random.Random,
    arity: int,
    shifts: tuple[int, int],
    maxdeg: int,
    comps: list[tuple[int, int]] | None = None,
) -> SuperPoly:
    pool = comps or [(i, n) for i in range(arity) for n in range(shifts[0], shifts[1] + 1)]
    mono = SuperPoly.const(1, arity)
    for _ in range(rng.randint(0, maxdeg)):
        i, n = rng.choice(pool)
        mono = mono * SuperPoly.var(i, n, arity)
    return mono


def random_poly(
    rng: random.Random,
    arity: int = 2,
    shifts: tuple[int, int] = (-1, 1),
    maxdeg: int = 2,
    nterms: int = 3,
    odd_degree: int = 0,
    odd_shifts: tuple[int, int] | None = None,
    comps: list[tuple[int, int]] | None = None,
) -> SuperPoly:
    """Random polynomial; with ``odd_degree`` > 0 each term carries that many odd factors."""
    odd_shifts = odd_shifts or shifts
    total = SuperPoly.zero(arity)
    for _ in range(nterms):
        term = random_monomial(rng, arity, shifts, maxdeg, comps).scale(random_coeff(rng))
        for _ in range(odd_degree):
            term = term * SuperPoly.odd(rng.randrange(arity), rng.randint(*odd_shifts), arity)
        total = total + term
    return total


def random_skew_op11(
    rng: random.Random,
    arity: int = 2,
    maxdeg: int = 2,
    profile: bool = False,
    constant: bool = False,
) -> MatDiffOp:
    """Random ``K = A S + B - S^{-1} A^T`` with skew ``B``.

    ``profile`` restricts to ``A(u, u_1)``, ``B(u)``; ``constant`` gives
    constant coefficients.
    """
    deg = 0 if constant else maxdeg

    def entry(shifts):
        if rng.random() < 0.4:
            return SuperPoly.zero(arity)
        return random_poly(rng, arity, shifts, deg, rng.randint(1, 2))

    a_shifts = (0, 1) if profile else (-1, 1)
    b_shifts = (0, 0) if profile else (-1, 1)
    A = [[entry(a_shifts) for _ in range(arity)] for _ in range(arity)]
    B = [[SuperPoly.zero(arity) for _ in range(arity)] for _ in range(arity)]
    for i in range(arity):
        for j in range(i + 1, arity):
            b = entry(b_shifts)
            B[i][j], B[j][i] = b, -b
    return MatDiffOp.from_order11(A, B)


def random_linear_chart(rng: random.Random, arity: int = 2) -> MatDiffOp:
    """Invertible constant matrix, as an order-zero operator."""
    while True:
        M = [[Fraction(rng.randint(-2, 2)) for _ in range(arity)] for _ in range(arity)]
        if arity != 2 or M[0][0] * M[1][1] - M[0][1] * M[1][0]:
            return MatDiffOp.matrix([[SuperPoly.const(x, arity) for x in row] for row in M], arity)


def random_pencil(rng: random.Random, K1: MatDiffOp, K2: MatDiffOp) -> MatDiffOp:
    """``J (a K1 + b K2) J*`` for random rationals and a random constant chart."""
    a, b = random_coeff(rng), random_coeff(rng)
    J = random_linear_chart(rng, K1.arity)
    return J @ (K1 * a + K2 * b) @ J.adjoint()
