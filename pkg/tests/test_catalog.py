import pytest

from dpva import NotFound, check_jacobi, integral, is_poisson, is_skewadjoint, op_to_bivector
from dpva import catalog as cat
from dpva.operators import MatDiffOp, conjugate
from dpva.parse import parse


def test_lookup():
    assert cat.get("toda.h1").op is cat.CATALOG["toda.h1"].op
    assert cat.get("volterra2.h2").op == cat.CATALOG["v2.h2"].op
    with pytest.raises(NotFound, match="toda.h1"):
        cat.get("nosuch")


@pytest.mark.parametrize("name", cat.names())
def test_entries_skewadjoint(name):
    assert is_skewadjoint(cat.CATALOG[name].op)


@pytest.mark.parametrize("name", [n for n in cat.names() if not cat.CATALOG[n].op.symbols()])
def test_routes_agree_on_catalog(name):
    K = cat.CATALOG[name].op
    verdict = check_jacobi(K).passed
    assert verdict == is_poisson(op_to_bivector(K))
    assert verdict == cat.CATALOG[name].hamiltonian


def test_catalog_bivectors():
    for name, e in cat.CATALOG.items():
        if e.bivector:
            assert op_to_bivector(e.op) == integral(parse(e.bivector)), name


def test_toda_h2tilde_is_a_conjugate():
    K = cat.CATALOG["toda.h2"].op
    J = MatDiffOp.matrix([[parse("u^-1"), 0], [0, 1]], 2)
    assert conjugate(K, J) == cat.CATALOG["toda.h2tilde"].op
