import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dpva import (
    P0,
    ArityError,
    FiltrationError,
    NonIntegrableExponent,
    NotClosed,
    SuperPoly,
    d_p0_apply,
    d_p0_functional,
    homotopy_apply,
    integral,
    parse,
    reduce_closed,
    trivialize_bivector,
)
from dpva.catalog import ULTRALOCAL
from dpva.cohomology import epsilon, leading_variable, rank
from dpva.generators import random_poly

from strategies import polys


def test_differential_examples():
    assert d_p0_apply(parse("u")) == parse("$v[1] - $v")
    assert d_p0_apply(parse("v[1]")) == parse("$u[1] - $u")
    assert d_p0_apply(parse("u*$u")) == parse("($v[1] - $v)*$u")


def test_differential_on_functionals_matches_density():
    rng = random.Random(2)
    for _ in range(20):
        w = random_poly(rng, 2, (-2, 2), 2, 3, odd_degree=rng.randint(0, 2))
        assert d_p0_functional(integral(w)) == integral(d_p0_apply(w))


@given(polys(odd_max=2))
def test_d_squared_is_zero(w):
    assert not d_p0_apply(d_p0_apply(w))


@given(polys(odd_max=2), st.integers(-2, 2))
def test_d_commutes_with_shift(w, k):
    assert d_p0_apply(w.shift(k)) == d_p0_apply(w).shift(k)


def test_filtration_order():
    assert [epsilon(n) for n in (0, -1, 1, -2, 2)] == [0, 1, 2, 3, 4]
    assert rank((0, 0)) < rank((1, 0)) < rank((0, -1))
    assert leading_variable(parse("u[1]*v + v[-1]")) == (0, 1)


@pytest.mark.parametrize(
    "n, i, text, h, hd",
    [
        (0, 1, "u*$v[1]", "1/4*u^2", "1/2*u*($v + $v[1])"),
        (0, 2, "v*$u", "1/4*v^2", "1/2*v*($u + $u[-1])"),
    ],
)
def test_homotopy_examples(n, i, text, h, hd):
    w = parse(text)
    assert homotopy_apply(n, i, w) == parse(h)
    assert homotopy_apply(n, i, d_p0_apply(w)) == parse(hd)
    assert homotopy_apply(n, i, d_p0_apply(w)) + d_p0_apply(homotopy_apply(n, i, w)) == w


def test_homotopy_filtration_guard():
    with pytest.raises(FiltrationError):
        homotopy_apply(0, 1, parse("u[1]*$v"))
    with pytest.raises(ArityError):
        homotopy_apply(0, 1, SuperPoly.var(0, 0, 1))


@pytest.mark.parametrize("n", [-1, 0, 1])
@pytest.mark.parametrize("i", [1, 2])
def test_homotopy_identity_random(n, i):
    rng = random.Random(100 * n + i)
    top = (epsilon(n), i)
    pool = [(c, m) for c in range(2) for m in range(-3, 4) if rank((c, m)) <= top]
    for _ in range(20):
        w = random_poly(rng, 2, (-2, 2), 3, 3, odd_degree=rng.randint(0, 2), comps=pool)
        rest = homotopy_apply(n, i, d_p0_apply(w)) + d_p0_apply(homotopy_apply(n, i, w)) - w
        assert not rest.partial_u(i - 1, n)


def test_representatives_are_closed():
    for text in ("1", "u", "v", "$u", "$v", "u*$u - v*$v", "$u*$v"):
        assert not d_p0_functional(integral(parse(text))), text


@pytest.mark.parametrize(
    "text, rep",
    [
        ("$v[1] - $v", "0"),
        ("$u*$v[1] - $u[-1]*$v", "0"),
        ("$u*$v", "$u*$v"),
        ("3", "3"),
        ("$u[2]", "$u"),
        ("$u[-1]*$v[2]", "$u*$v"),
    ],
)
def test_reduce_closed_examples(text, rep):
    w = parse(text)
    r = reduce_closed(w)
    assert r.rep == parse(rep)
    assert d_p0_apply(r.primitive) + r.rep == w


def test_reduce_matches_reference_primitive_up_to_kernel():
    r = reduce_closed(parse("$u*$v[1] - $u[-1]*$v"))
    assert not d_p0_apply(r.primitive - parse("v*$v - u*$u"))


def test_reduce_exact_random():
    rng = random.Random(13)
    for _ in range(30):
        rho = random_poly(rng, 2, (-2, 2), 3, 2, odd_degree=rng.randint(0, 1))
        r = reduce_closed(d_p0_apply(rho))
        assert not r.rep
        assert d_p0_apply(r.primitive) == d_p0_apply(rho)


def test_reduce_errors():
    with pytest.raises(NotClosed):
        reduce_closed(parse("u"))
    with pytest.raises(NonIntegrableExponent):
        reduce_closed(parse("u^-1*$v[1] - u^-1*$v"))


def test_ultralocal_class():
    T = ULTRALOCAL["ul.p0"]
    found = trivialize_bivector(P0, T, T, (0, 0), 1)
    assert found is not None and found.alpha == 1 and not found.X
    for window in ((-1, 1), (-2, 2)):
        assert trivialize_bivector(P0, T, None, window, 3, allow_ul=False) is None
