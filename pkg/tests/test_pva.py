import random

import pytest
from hypothesis import given

from dpva import (
    DependencyError,
    MatDiffOp,
    NotSkewError,
    ScalarOp,
    bracket_master,
    check_dependency_profile,
    check_jacobi,
    check_order11_conditions,
    check_ultralocal,
    op_to_bivector,
    is_poisson,
)
from dpva.catalog import CATALOG
from dpva.generators import random_skew_op11
from dpva.parse import parse
from dpva.pva import (
    LambdaSeries,
    bracket_generators,
    check_skewsymmetry,
    jacobi_generator_residual,
    jacobi_residual_via_brackets,
)

from strategies import polys

TODA = CATALOG["toda.h1"].op
S = ScalarOp.shift_op(1, 2)


def series(d):
    return LambdaSeries(2, {p: parse(t) for p, t in d.items()})


def test_generator_brackets():
    assert bracket_generators(TODA, 0, 1) == series({0: "u", -1: "-u[-1]"})
    assert not bracket_generators(TODA, 0, 0)
    assert bracket_generators(CATALOG["ul.constant"].op, 0, 1) == series({0: "-1"})


def test_master_formula_examples():
    assert bracket_master(TODA, parse("u"), parse("v^2")) == series({0: "2*u*v", -1: "-2*u[-1]*v"})
    assert bracket_master(TODA, parse("u[1]"), parse("v")) == series({-1: "u", -2: "-u[-1]"})
    assert not bracket_master(TODA, parse("u*v[1]"), parse("1"))


@given(polys(), polys())
def test_bracket_skewsymmetry_on_polys(f, g):
    from dpva.pva import skew_transform

    K = CATALOG["toda.h2"].op
    assert bracket_master(K, g, f) == skew_transform(bracket_master(K, f, g))


def test_skewsymmetry_checks():
    assert check_skewsymmetry(CATALOG["toda.h0"].op)
    assert not check_skewsymmetry(MatDiffOp.matrix([[S, 0], [0, 0]], 2))
    for e in CATALOG.values():
        assert check_skewsymmetry(e.op), e.name


@pytest.mark.parametrize("name", ["toda.h0", "toda.h1", "toda.h2", "br.h2", "v2.h1", "v2.h2", "rv.h2",
                                  "rt.h1", "rt.h2", "rt.htilde", "ul.constant", "normal.type1",
                                  "normal.type2", "normal.constant", "family.p1", "family.p2"])
def test_catalog_hamiltonian(name):
    assert check_jacobi(CATALOG[name].op)


def test_broken_operator_fails_third_condition():
    K = CATALOG["broken.h0"].op
    assert not check_jacobi(K)
    v = check_order11_conditions(*K.order11_parts())
    assert not v.passed and v.condition == "cond3"


def test_not_skew_raises():
    with pytest.raises(NotSkewError):
        check_jacobi(MatDiffOp.matrix([[S, 0], [0, 0]], 2))


def test_two_jacobi_routes_agree():
    rng = random.Random(8)
    ops = [random_skew_op11(rng) for _ in range(6)] + [CATALOG["toda.h2"].op, CATALOG["broken.h0"].op]
    for K in ops:
        for ijk in [(0, 0, 1), (0, 1, 1), (1, 0, 1)]:
            assert jacobi_generator_residual(K, *ijk) == jacobi_residual_via_brackets(K, *ijk)


def test_fast_path_examples():
    u, v = parse("u"), parse("v")
    A = [[parse("u*u[1]"), parse("u*v[1]")], [0, u]]
    B = [[0, parse("-u*v")], [parse("u*v"), 0]]
    assert check_order11_conditions(A, B)
    assert MatDiffOp.from_order11(A, B) == CATALOG["toda.h2"].op
    A1 = [[parse("v*v[1]"), 0], [0, 0]]
    B1 = [[0, 1], [-1, 0]]
    assert check_order11_conditions(A1, B1)


def test_dependency_profile():
    assert not check_dependency_profile(*CATALOG["toda.h2"].op.order11_parts())
    assert not check_dependency_profile(*CATALOG["toda.h0"].op.order11_parts())
    A = [[parse("u[2]"), 0], [0, 0]]
    B = [[0, 0], [0, 0]]
    bad = check_dependency_profile(A, B)
    assert bad and any(var == (0, 2) for _, _, var in bad)
    with pytest.raises(DependencyError):
        check_order11_conditions(A, B)


def test_ultralocal():
    assert check_ultralocal([[0, 1], [-1, 0]])
    assert check_ultralocal([[0, parse("u")], [parse("-u"), 0]])
    assert not check_ultralocal([[0, parse("u[1]")], [parse("-u[1]"), 0]])


def test_fast_path_matches_jacobi_on_random_profiles():
    rng = random.Random(21)
    for _ in range(15):
        K = random_skew_op11(rng, profile=True)
        assert bool(check_order11_conditions(*K.order11_parts())) == bool(check_jacobi(K))
        assert bool(check_jacobi(K)) == is_poisson(op_to_bivector(K))


def test_affine_family_residuals():
    fam = CATALOG["aff.family"].op
    v = check_jacobi(fam)
    assert not v.passed and v.residuals
    point = {"a": 1, "b": 0, "c": 0, "d": 1, "alpha": 0, "beta": 1, "gamma": 0}
    assert all(not r.substitute_symbols(point) for r in v.residuals)
    assert any(r.substitute_symbols(dict(point, gamma=1)) for r in v.residuals)
