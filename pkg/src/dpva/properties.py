"""Randomised algebraic identities, each returning ``(passed, total)``."""

from __future__ import annotations

import random
from collections.abc import Mapping

from .cohomology import d_p0_apply
from .functional import integral
from .generators import random_poly, random_skew_op11
from .operators import MatDiffOp, ScalarOp
from .poly import SuperPoly
from .pva import LambdaSeries, bracket_master
from .schouten import schouten_bracket


def shift_derivative(rng: random.Random, cases: int) -> tuple[int, int]:
    ok = 0
    for _ in range(cases):
        f = random_poly(rng, 2, (-2, 2), 3, 4, odd_degree=rng.randint(0, 2))
        i, n = rng.randrange(2), rng.randint(-2, 2)
        even = f.partial_u(i, n).shift(1) == f.shift(1).partial_u(i, n + 1)
        odd = f.partial_odd(i, n).shift(1) == f.shift(1).partial_odd(i, n + 1)
        var = f.shift(1).variational_u(i) == f.variational_u(i)
        ok += even and odd and var
    return ok, cases


def _lam_shift(series: LambdaSeries) -> LambdaSeries:
    """``lambda S`` applied to a series."""
    return LambdaSeries(series.arity, {p + 1: c.shift(1) for p, c in series.coeffs.items()})


def sesquilinear_leibniz(rng: random.Random, cases: int, operators: list[MatDiffOp]) -> tuple[int, int]:
    ok = 0
    for _ in range(cases):
        K = rng.choice(operators)
        f, g, h = (random_poly(rng, 2, (-1, 1), 2, 2) for _ in range(3))
        base = bracket_master(K, f, g)
        left = bracket_master(K, f.shift(1), g) == LambdaSeries(2, {p - 1: c for p, c in base.coeffs.items()})
        right = bracket_master(K, f, g.shift(1)) == _lam_shift(base)
        gh = bracket_master(K, f, g * h)
        leib_terms = LambdaSeries(2)
        for p, c in bracket_master(K, f, h).coeffs.items():
            leib_terms.add_term(p, g * c)
        for p, c in base.coeffs.items():
            leib_terms.add_term(p, h * c)
        ok += left and right and gh == leib_terms
    return ok, cases


def _random_op(rng: random.Random) -> MatDiffOp:
    entries = {}
    for i in range(2):
        for j in range(2):
            coeffs = {l: random_poly(rng, 2, (-1, 1), 2, 2) for l in rng.sample(range(-2, 3), 2)}
            entries[(i, j)] = ScalarOp(2, coeffs)
    return MatDiffOp(2, entries)


def adjoint_involution(rng: random.Random, cases: int) -> tuple[int, int]:
    ok = 0
    for _ in range(cases):
        K1, K2 = _random_op(rng), _random_op(rng)
        ok += K1.adjoint().adjoint() == K1 and (K1 @ K2).adjoint() == K2.adjoint() @ K1.adjoint()
    return ok, cases


def _random_vector(rng: random.Random, degree: int):
    return integral(random_poly(rng, 2, (-1, 1), 2, 2, odd_degree=degree, odd_shifts=(-1, 1)))


def schouten_graded(rng: random.Random, cases: int) -> tuple[int, int]:
    ok = 0
    for _ in range(cases):
        a, b, c = (rng.randint(0, 2) for _ in range(3))
        A, B, C = _random_vector(rng, a), _random_vector(rng, b), _random_vector(rng, c)
        sab = -1 if (a - 1) * (b - 1) % 2 else 1
        skew = schouten_bracket(B, A) == schouten_bracket(A, B) * (-sab)
        lhs = schouten_bracket(A, schouten_bracket(B, C))
        rhs = schouten_bracket(schouten_bracket(A, B), C) + schouten_bracket(B, schouten_bracket(A, C)) * sab
        ok += skew and lhs == rhs
    return ok, cases


def d_squared(rng: random.Random, cases: int) -> tuple[int, int]:
    ok = 0
    for _ in range(cases):
        w = random_poly(rng, 2, (-2, 2), 3, 4, odd_degree=rng.randint(0, 2))
        ok += not d_p0_apply(d_p0_apply(w))
    return ok, cases


def total_difference(rng: random.Random, cases: int) -> tuple[int, int]:
    ok = 0
    for _ in range(cases):
        f = random_poly(rng, 2, (-2, 2), 3, 4, odd_degree=rng.randint(0, 3))
        ok += not integral(f.shift(rng.randint(1, 3)) - f)
    return ok, cases


def run_all(rng: random.Random, cases: int = 100, catalog: Mapping | None = None) -> dict[str, tuple[int, int]]:
    from .catalog import CATALOG

    catalog = catalog or CATALOG
    ops = [catalog[n].op for n in ("toda.h1", "toda.h2", "v2.h2", "rt.h1", "br.h2")]
    ops.append(random_skew_op11(rng))
    return {
        "shift": shift_derivative(rng, cases),
        "sesqui": sesquilinear_leibniz(rng, cases, ops),
        "adjoint": adjoint_involution(rng, cases),
        "schouten": schouten_graded(rng, cases),
        "d2": d_squared(rng, cases),
        "quotient": total_difference(rng, cases),
    }


__all__ = ["run_all", "SuperPoly"]
