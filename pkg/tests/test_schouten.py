import random

from hypothesis import given
from hypothesis import strategies as st

from dpva import (
    P0,
    are_compatible,
    characteristics,
    integral,
    is_poisson,
    one_vector,
    op_to_bivector,
    parse,
    schouten_bracket,
)
from dpva.catalog import CATALOG, TRIVIALIZATIONS, ULTRALOCAL
from dpva.schouten import evol_action, evol_commutator

from strategies import homogeneous, polys


def bivector(name):
    return op_to_bivector(CATALOG[name].op)


def test_constant_bracket_is_poisson():
    assert not schouten_bracket(P0, P0)
    assert is_poisson(integral(parse("$u*$v")))
    assert not schouten_bracket(integral(parse("$u")), integral(parse("$v")))


def test_broken_bivector_is_not_poisson():
    assert not is_poisson(integral(parse("$u*$v[1] - $u*$v + u*$u*$v")))
    assert is_poisson(bivector("rv.h2"))


def test_toda_trivialisation():
    t = TRIVIALIZATIONS["toda"]
    X = integral(parse("-u*v*$u + (-u - 1/2*v^2)*$v"))
    assert X == t.one_vector()
    assert schouten_bracket(bivector("toda.h1"), X) == bivector("toda.h2")


def test_compatibility():
    assert are_compatible(bivector("toda.h1"), bivector("toda.h2"))
    assert are_compatible(P0, ULTRALOCAL["ul.p0"])
    for a, b in [("rt.h1", "rt.h2"), ("rt.h1", "rt.htilde"), ("rt.h2", "rt.htilde")]:
        assert are_compatible(bivector(a), bivector(b))


def test_p0_differential_sign():
    # with this sign convention [P0, int v theta] = -int theta theta_1
    assert schouten_bracket(P0, integral(parse("v*$u"))) == integral(parse("-$u*$u[1]"))


def test_vector_field_action_sign():
    Q = [parse("u*v[1]"), parse("v^2*u[-1]")]
    F = integral(parse("u*v[2] + u^3"))
    assert schouten_bracket(one_vector(Q), F) == -evol_action(Q, F)


def test_one_vector_bracket_is_minus_commutator():
    P = [parse("u*v[1]"), parse("v^2*u[-1]")]
    Q = [parse("u^2"), parse("u*v")]
    assert schouten_bracket(one_vector(P), one_vector(Q)) == -one_vector(evol_commutator(P, Q))


def test_hamiltonian_flow():
    H = integral(parse("1/2*v^2 + u"))
    flow = [-c for c in characteristics(schouten_bracket(bivector("toda.h1"), H))]
    assert flow == [parse("u*v[1] - u*v"), parse("u - u[-1]")]


def test_conserved_quantity():
    Q = [parse("u*(v[1] - v)"), parse("v*(u - u[-1])")]
    assert not evol_action(Q, integral(parse("u + v")))
    assert not evol_commutator(Q, Q)[0] and not evol_commutator(Q, Q)[1]
    assert not evol_action(Q, integral(parse("1")))


def _sign(a, b):
    return -1 if (a - 1) * (b - 1) % 2 else 1


degrees = st.integers(0, 2)


@given(degrees, degrees, st.data())
def test_graded_skewsymmetry(a, b, data):
    A = integral(data.draw(homogeneous(a)))
    B = integral(data.draw(homogeneous(b)))
    assert schouten_bracket(B, A) == schouten_bracket(A, B) * (-_sign(a, b))


@given(degrees, degrees, degrees, st.data())
def test_graded_jacobi(a, b, c, data):
    A, B, C = (integral(data.draw(homogeneous(d, max_terms=2))) for d in (a, b, c))
    lhs = schouten_bracket(A, schouten_bracket(B, C))
    rhs = schouten_bracket(schouten_bracket(A, B), C) + schouten_bracket(B, schouten_bracket(A, C)) * _sign(a, b)
    assert lhs == rhs


@given(polys(odd_max=2))
def test_bracket_ignores_total_differences(f):
    P = bivector("toda.h2")
    assert not schouten_bracket(P, integral(f.shift(1) - f))


def test_adjoint_action_formula():
    # [P, X] is the Lie derivative K_Q - D_Q K - K D_Q* of the operator along Q
    from dpva.operators import MatDiffOp, ScalarOp, bivector_to_op, frechet

    from dpva.generators import random_poly, random_skew_op11

    rng = random.Random(4)
    for _ in range(20):
        K = random_skew_op11(rng)
        Q = [random_poly(rng, 2, (-1, 1), 2, 2) for _ in range(2)]
        X = one_vector(Q)
        D = frechet(Q)
        # derivative of K along the flow Q
        entries = {}
        for (i, j), op in K.entries.items():
            coeffs = {}
            for l, c in op.coeffs.items():
                t = c.scale(0)
                for comp, n in c.variables():
                    t = t + Q[comp].shift(n) * c.partial_u(comp, n)
                coeffs[l] = t
            entries[(i, j)] = ScalarOp(2, coeffs)
        KQ = MatDiffOp(2, entries)
        lie = KQ - D @ K - K @ D.adjoint()
        assert bivector_to_op(schouten_bracket(op_to_bivector(K), X)) == lie
