"""Named operators, ultralocal representatives and known trivialisations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotFound
from .functional import LocalPolyVector, integral
from .operators import MatDiffOp, ScalarOp, conjugate
from .parse import parse
from .poly import SuperPoly


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    op: MatDiffOp
    hamiltonian: bool
    tags: tuple[str, ...] = ()
    bivector: str | None = None  # expected density of the bivector
    note: str = ""

    @property
    def order11(self) -> bool:
        o = self.op.order()
        return o is not None and o[0] >= -1 and o[1] <= 1


class _Ops:
    """Small operator vocabulary for writing entries in the usual matrix notation."""

    def __init__(self, names=("u", "v")):
        self.names = names
        self.n = len(names)
        self.S = ScalarOp.shift_op(1, self.n)
        self.Si = ScalarOp.shift_op(-1, self.n)
        self.one = ScalarOp.mul(1, self.n)

    def m(self, text: str) -> ScalarOp:
        return ScalarOp.mul(parse(text, self.names))

    def p(self, text: str) -> SuperPoly:
        return parse(text, self.names)

    def mat(self, rows) -> MatDiffOp:
        return MatDiffOp.matrix(rows, self.n).with_names(self.names)


def _toda(o: _Ops) -> dict[str, CatalogEntry]:
    S, Si, one, m = o.S, o.Si, o.one, o.m
    u, v = m("u"), m("v")
    h0 = o.mat([[0, S - one], [one - Si, 0]])
    h1 = o.mat([[0, u @ (S - one)], [(one - Si) @ u, 0]])
    h2 = o.mat([[u @ (S - Si) @ u, u @ (S - one) @ v], [v @ (one - Si) @ u, u @ S - Si @ u]])
    # Second Toda structure in the chart u' = log u, written with e^{u'} -> u.
    h2t = conjugate(h2, o.mat([[m("u^-1"), 0], [0, 1]]))
    return {
        "toda.h0": CatalogEntry("toda.h0", h0, True, ("toda", "constant"), "$u*$v[1] - $u*$v"),
        "toda.h1": CatalogEntry("toda.h1", h1, True, ("toda",), "u*$u*$v[1] - u*$u*$v"),
        "toda.h2": CatalogEntry(
            "toda.h2", h2, True, ("toda",), "u*u[1]*$u*$u[1] + u*v[1]*$u*$v[1] - u*v*$u*$v + u*$v*$v[1]"
        ),
        "toda.h2tilde": CatalogEntry(
            "toda.h2tilde",
            h2t,
            False,
            ("toda", "chart"),
            note="coefficients in the log chart with exp(u') written as u; "
            "Hamiltonian only with exponential calculus, not as a polynomial operator",
        ),
    }


def _volterra(o: _Ops) -> dict[str, CatalogEntry]:
    S, Si, one, m = o.S, o.Si, o.one, o.m
    u, v = m("u"), m("v")
    br = o.mat([[0, u @ (one - Si) @ u], [u @ (S - one) @ u, u @ S @ v - v @ Si @ u]])
    v1 = o.mat([[0, u @ (S - one) @ v], [v @ (one - Si) @ u, 0]])
    v2 = o.mat(
        [
            [u @ (S @ v - v @ Si) @ u, u @ (u @ S - u + S @ v - v) @ v],
            [v @ (u - Si @ u + v - v @ Si) @ u, v @ (u @ S - Si @ u) @ v],
        ]
    )
    A = [[o.p("0"), o.p("u")], [o.p("-u*u[1]"), o.p("-u*v[1] + u")]]
    B = [[o.p("0"), o.p("-u - u^2")], [o.p("u + u^2"), o.p("0")]]
    v2p = MatDiffOp.from_order11(A, B)
    return {
        "br.h2": CatalogEntry("br.h2", br, True, ("br",), "u^2*$u*$v + u*u[1]*$v*$u[1] + u*v[1]*$v*$v[1]"),
        "v2.h1": CatalogEntry("v2.h1", v1, True, ("v2",), "u*v[1]*$u*$v[1] - u*v*$u*$v"),
        "v2.h2": CatalogEntry(
            "v2.h2",
            v2,
            True,
            ("v2",),
            "u*u[1]*v[1]*$u*$u[1] + u*v[1]*(u + v[1])*$u*$v[1] - u*v*(u + v)*$u*$v + u*v*v[1]*$v*$v[1]",
        ),
        "v2.h2prime": CatalogEntry(
            "v2.h2prime", v2p, True, ("v2", "chart"), note="v2.h2 in the chart u' = u/v, v' = (u - 1)/v"
        ),
    }


def _relativistic(o: _Ops) -> dict[str, CatalogEntry]:
    S, Si, one, m = o.S, o.Si, o.one, o.m
    u, v = m("u"), m("v")
    a = u @ S @ m("u*v*(1 + u)") - m("u*v*(1 + u)") @ Si @ u
    b = u @ (S @ m("u*v") @ S + u @ S + S @ v) @ v - m("u*v*(u + v + u*v)")
    c = m("u*v*(1 + v)") @ S @ v - v @ Si @ m("u*v*(1 + v)")
    rv = o.mat([[a, b], [-b.adjoint(), c]])
    rt1 = o.mat([[0, u @ (S - one)], [(one - Si) @ u, Si @ u - u @ S]])
    rt2 = o.mat([[u @ (S - Si) @ u, u @ (S - one) @ v], [v @ (one - Si) @ u, 0]])
    rtt = o.mat([[0, 0], [0, u @ S - Si @ u]])
    return {
        "rv.h2": CatalogEntry(
            "rv.h2",
            rv,
            True,
            ("rv",),
            "u*u[1]*v[1]*(1 + u[1])*$u*$u[1] + u*u[1]*v[1]*v[2]*$u*$v[2] + u*v[1]*(u + v[1])*$u*$v[1]"
            " - u*v*(u + v + u*v)*$u*$v + u*v*(1 + v)*v[1]*$v*$v[1]",
        ),
        "rt.h1": CatalogEntry("rt.h1", rt1, True, ("rt",), "u*$u*$v[1] - u*$u*$v - u*$v*$v[1]"),
        "rt.h2": CatalogEntry("rt.h2", rt2, True, ("rt",), "u*u[1]*$u*$u[1] + u*v[1]*$u*$v[1] - u*v*$u*$v"),
        "rt.htilde": CatalogEntry("rt.htilde", rtt, True, ("rt",)),
    }


def _structural(o: _Ops) -> dict[str, CatalogEntry]:
    S, Si, one, m, p = o.S, o.Si, o.one, o.m, o.p
    z = p("0")
    ul = o.mat([[0, 1], [-1, 0]])
    aff = MatDiffOp.from_order11(
        [[p("a*u*u[1]"), p("u*(a*v[1] + b)")], [p("c*u*u[1]"), p("u*(c*v[1] + d)")]],
        [
            [z, p("-alpha*(u^2 - u) - beta*u*v - gamma*u")],
            [p("alpha*(u^2 - u) + beta*u*v + gamma*u"), z],
        ],
    )
    nconst = MatDiffOp.from_order11([[z, z], [p("1"), z]], [[z, p("kappa")], [p("-kappa"), z]])
    ntype1 = MatDiffOp.from_order11([[p("v*v[1]"), z], [z, z]], [[z, p("1")], [p("-1"), z]])
    ntype2 = MatDiffOp.from_order11([[z, z], [p("u[1] + v^2"), z]], [[z, z], [z, z]])
    fam1 = o.mat([[0, m("u^2") @ (S - one)], [(one - Si) @ m("u^2"), m("u") @ S - Si @ m("u")]])
    fam2 = o.mat([[S @ m("v^2") - m("v^2") @ Si, (S - one) @ m("v")], [m("v") @ (one - Si), 0]])
    broken = MatDiffOp.from_order11([[z, p("1")], [z, z]], [[z, p("u - 1")], [p("1 - u"), z]])
    return {
        "ul.constant": CatalogEntry("ul.constant", ul, True, ("ultralocal", "constant"), "$u*$v"),
        "aff.family": CatalogEntry(
            "aff.family", aff, False, ("affine", "symbolic"), note="Poisson only on the variety of its residuals"
        ),
        "normal.constant": CatalogEntry("normal.constant", nconst, True, ("normal", "symbolic")),
        "normal.type1": CatalogEntry("normal.type1", ntype1, True, ("normal",), note="g = v*v[1], sigma = 1"),
        "normal.type2": CatalogEntry("normal.type2", ntype2, True, ("normal",), note="f = u[1] + v^2"),
        "family.p1": CatalogEntry("family.p1", fam1, True, ("derived",), note="p2 = u^2, q2 = u"),
        "family.p2": CatalogEntry("family.p2", fam2, True, ("derived",), note="p2 = v^2, q2 = v"),
        "broken.h0": CatalogEntry(
            "broken.h0", broken, False, ("negative",), "$u*$v[1] - $u*$v + u*$u*$v", "fails the third condition"
        ),
    }


def _build() -> dict[str, CatalogEntry]:
    o = _Ops()
    out: dict[str, CatalogEntry] = {}
    for part in (_toda, _volterra, _relativistic, _structural):
        out.update(part(o))
    return out


CATALOG: dict[str, CatalogEntry] = _build()


ALIASES = {"volterra2.": "v2.", "bruschi.": "br.", "reltoda.": "rt.", "relvolterra.": "rv."}


def get(name: str) -> CatalogEntry:
    for prefix, short in ALIASES.items():
        if name.startswith(prefix):
            name = short + name[len(prefix):]
    try:
        return CATALOG[name]
    except KeyError:
        raise NotFound(f"no catalog entry {name!r}; available: {', '.join(names())}") from None


def names() -> list[str]:
    return sorted(CATALOG)


# ultralocal representatives ------------------------------------------------

_HALF = Fraction(1, 2)

ULTRALOCAL: dict[str, LocalPolyVector] = {
    "ul.toda": integral(parse("u*$u*$v").scale(_HALF)),
    "ul.v2": integral(parse("u*v*$u*$v").scale(_HALF)),
    "ul.p0": integral(parse("$u*$v")),
}


@dataclass(frozen=True)
class Trivialization:
    """``target = alpha * ul + [base, X]`` with ``X = int(f $u + g $v)``."""

    name: str
    base: str
    target: str
    f: str
    g: str
    ul: str
    window: tuple[int, int]
    maxdeg: int
    alpha: Fraction = Fraction(0)
    extra: dict = field(default_factory=dict)

    def one_vector(self) -> LocalPolyVector:
        return integral(parse(f"({self.f})*$u + ({self.g})*$v"))


TRIVIALIZATIONS: dict[str, Trivialization] = {
    t.name: t
    for t in (
        Trivialization("toda", "toda.h1", "toda.h2", "-u*v", "-u - 1/2*v^2", "ul.toda", (0, 0), 2),
        Trivialization("br", "toda.h1", "br.h2", "0", "-u*v[1]", "ul.toda", (-1, 1), 2),
        Trivialization("v2", "v2.h1", "v2.h2", "-u*v - u^2", "-u*v - v^2", "ul.v2", (0, 0), 2),
        Trivialization(
            "rv", "v2.h1", "rv.h2", "-u^2 - u*v - u*u[1]*v[1]", "-v^2 - u*v - u*v^2", "ul.v2", (0, 1), 3
        ),
        Trivialization(
            "rt",
            "rt.h1",
            "rt.h2",
            "-u*v - u*u[1]",
            "-u*v[1] + u[-1]*v[-1] - u*v - 1/2*u^2 - 1/2*v^2",
            "ul.toda",
            (-1, 1),
            2,
            extra={"sign_flipped_g": "u*v[1] - u[-1]*v[-1] + u*v + 1/2*u^2 + 1/2*v^2"},
        ),
    )
}
