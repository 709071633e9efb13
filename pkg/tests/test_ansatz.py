from fractions import Fraction

import pytest

from dpva import (
    P0,
    IncompatibleError,
    integral,
    monomial_basis,
    op_to_bivector,
    parse,
    schouten_bracket,
    solve_linear,
    solve_trivialization,
    trivialize_bivector,
)
from dpva.ansatz import derive_pair
from dpva.catalog import CATALOG, TRIVIALIZATIONS, ULTRALOCAL
from dpva.operators import MatDiffOp, ScalarOp, bivector_to_op


def biv(name):
    return op_to_bivector(CATALOG[name].op)


def test_basis_counts():
    assert monomial_basis(2, (0, 0), 2) == [parse(t) for t in ("1", "u", "v", "u^2", "u*v", "v^2")]
    assert monomial_basis(2, (0, 0), 0) == [parse("1")]
    assert len(monomial_basis(2, (-1, 1), 2)) == 28
    laurent = monomial_basis(2, (0, 0), 1, laurent=True)
    assert set(laurent) == {parse(t) for t in ("1", "u", "v", "u^-1", "v^-1")}


def test_solve_linear_small_systems():
    # columns x, y over rows r1, r2
    sol = solve_linear([{"r1": 1, "r2": 1}, {"r1": 1, "r2": -1}], {"r1": 2, "r2": 0})
    assert sol.particular == [1, 1] and sol.nullity == 0
    assert solve_linear([{"r1": 1}, {"r1": 1}], {"r1": 1, "r2": 1}) is None
    sol = solve_linear([{"r1": 1}, {"r1": 1}], {"r1": Fraction(3, 2)})
    assert sum(sol.particular) == Fraction(3, 2) and sol.nullity == 1
    x, y = sol.nullspace[0]
    assert x + y == 0


@pytest.mark.parametrize("name", sorted(TRIVIALIZATIONS))
def test_known_one_vectors(name):
    t = TRIVIALIZATIONS[name]
    assert schouten_bracket(biv(t.base), t.one_vector()) == biv(t.target)


def test_sign_flipped_relativistic_toda_g_fails():
    t = TRIVIALIZATIONS["rt"]
    flipped = integral(parse(f"({t.f})*$u + ({t.extra['sign_flipped_g']})*$v"))
    for sign in (1, -1):
        assert schouten_bracket(biv(t.base), flipped) * sign != biv(t.target)


@pytest.mark.parametrize("name", sorted(TRIVIALIZATIONS))
def test_solver_recovers(name):
    t = TRIVIALIZATIONS[name]
    P1, P2 = biv(t.base), biv(t.target)
    sol = trivialize_bivector(P1, P2, ULTRALOCAL[t.ul], t.window, t.maxdeg)
    assert sol is not None
    assert schouten_bracket(P1, sol.X) + ULTRALOCAL[t.ul] * sol.alpha == P2
    assert not schouten_bracket(P1, sol.X - t.one_vector())
    for k in sol.kernel:
        assert not schouten_bracket(P1, k)
    if name in ("toda", "br", "v2"):
        assert sol.alpha_determined and sol.alpha == 0


def test_solver_finds_toda_values():
    basis = monomial_basis(2, (0, 0), 2)
    sol = solve_trivialization(biv("toda.h1"), biv("toda.h2"), basis, ULTRALOCAL["ul.toda"])
    assert sol.nullity == 2
    assert sol.alpha == 0
    assert not schouten_bracket(biv("toda.h1"), sol.X - TRIVIALIZATIONS["toda"].one_vector())


def test_too_small_window_has_no_solution():
    # BR needs v_1
    assert trivialize_bivector(biv("toda.h1"), biv("br.h2"), ULTRALOCAL["ul.toda"], (0, 0), 2) is None


def test_incompatible_target_rejected():
    with pytest.raises(IncompatibleError):
        trivialize_bivector(biv("toda.h1"), biv("v2.h2"), None, (0, 0), 1)


def test_derived_pair_constant_example():
    ul = ULTRALOCAL["ul.p0"]
    pair = derive_pair(P0, integral(parse("v*$u")), 1, ul)
    S, Si = ScalarOp.shift_op(1, 2), ScalarOp.shift_op(-1, 2)
    assert pair.poisson
    assert bivector_to_op(pair.P) == MatDiffOp.matrix([[-(S - Si), 1], [-1, 0]], 2)


def test_linear_characteristics_give_constant_pairs():
    pair = derive_pair(P0, integral(parse("(u[1] - 2*v)*$u + 3*u[-1]*$v")), 0, ULTRALOCAL["ul.p0"])
    assert pair.poisson
    assert not bivector_to_op(pair.P).symbols()
    assert all(not c.variables() for op in bivector_to_op(pair.P).entries.values() for c in op.coeffs.values())


@pytest.mark.parametrize("name", ["family.p1", "family.p2"])
def test_non_constant_families(name):
    from dpva import are_compatible, is_poisson

    Q = biv(name)
    assert is_poisson(Q) and are_compatible(P0, Q)
