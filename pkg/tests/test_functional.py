import pytest

from dpva import DegreeError, SuperPoly
from dpva.functional import integral, is_zero, normalize_N


def test_quotient_membership(P):
    g = P("u*v[-1]^2 + $u[2]")
    assert is_zero(g.shift(1) - g)
    assert not is_zero(SuperPoly.const(1, 2))
    assert is_zero(P("$u[1] - $u"))


def test_normalization(P):
    assert normalize_N(P("$u*$v")) == integral(P("$u*$v"))
    assert normalize_N(P("u*$u")) == integral(P("u*$u"))
    assert not normalize_N(SuperPoly.zero(2), 1)
    with pytest.raises(DegreeError):
        normalize_N(P("u*$u"), 2)


def test_vector_arithmetic(P):
    a, b = integral(P("u*$v[1]")), integral(P("u[3]*$v[4]"))
    assert a == b
    assert not a - b
    assert a * 2 == a + b
    assert a == P("u[-1]*$v")
    assert a.degree == 1
