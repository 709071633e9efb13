"""Local functionals: polynomials modulo total differences.

Two densities define the same functional when they differ by an element of
``(S - 1)``.  Shifting maps normal-form terms to normal-form terms with the
same sign, so each orbit of a non-constant term is represented by its
member whose smallest shift is 0.  Terms without variables are fixed by
``S`` and are left alone.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegreeError
from .poly import SuperPoly, min_shift, shift_key


def canonical_density(f: SuperPoly) -> SuperPoly:
    out: dict = {}
    for key, c in f.terms.items():
        m = min_shift(key)
        if m:
            key = shift_key(key, -m)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return SuperPoly._raw(f.arity, out)


class LocalPolyVector:
    """An element of the quotient, stored by its canonical density."""

    __slots__ = ("density",)

    def __init__(self, density: SuperPoly):
        self.density = canonical_density(density)

    @property
    def arity(self) -> int:
        return self.density.arity

    @property
    def degree(self) -> int | None:
        return self.density.degree

    def __bool__(self) -> bool:
        return bool(self.density)

    def __eq__(self, other) -> bool:
        if isinstance(other, LocalPolyVector):
            return self.density == other.density
        if isinstance(other, (SuperPoly, int, Fraction)):
            return self.density == canonical_density(_density(other, self.arity))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.density)

    def __add__(self, other) -> LocalPolyVector:
        return LocalPolyVector(self.density + _density(other, self.arity))

    __radd__ = __add__

    def __sub__(self, other) -> LocalPolyVector:
        return LocalPolyVector(self.density - _density(other, self.arity))

    def __rsub__(self, other) -> LocalPolyVector:
        return LocalPolyVector(_density(other, self.arity) - self.density)

    def __neg__(self) -> LocalPolyVector:
        return LocalPolyVector(-self.density)

    def __mul__(self, c) -> LocalPolyVector:
        return LocalPolyVector(self.density.scale(c))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"integral({self.density})"

    def __str__(self) -> str:
        return f"int({self.density})"


def _density(x, arity: int) -> SuperPoly:
    if isinstance(x, LocalPolyVector):
        return x.density
    if isinstance(x, SuperPoly):
        return x
    return SuperPoly.const(x, arity)


def integral(f) -> LocalPolyVector:
    """The functional with density ``f``."""
    if isinstance(f, LocalPolyVector):
        return f
    return LocalPolyVector(f)


canonicalize = integral


def is_zero(f) -> bool:
    return not integral(f)


def normalize_N(B, p: int | None = None) -> LocalPolyVector:
    """``sum_a (1/p) theta_a dB/dtheta_a`` for a homogeneous ``B`` of degree ``p``."""
    B = integral(B)
    d = B.degree
    if p is None:
        p = d
    if not p:
        raise DegreeError("normalization needs positive odd degree")
    if d is not None and d != p:
        raise DegreeError(f"declared degree {p}, actual {d}")
    dens = B.density
    total = SuperPoly.zero(dens.arity)
    for i in range(dens.arity):
        total = total + SuperPoly.odd(i, 0, dens.arity) * dens.variational_odd(i)
    return integral(total.scale(Fraction(1, p)))
