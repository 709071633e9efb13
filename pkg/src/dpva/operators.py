"""Matrix difference operators.

An entry is stored as ``{l: a_l}`` meaning ``sum_l a_l S^l`` with the
coefficient written to the left of the shift, so ``S o a = S(a) S``.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

from .errors import ArityError, DegreeError, NotPointTransform
from .functional import LocalPolyVector, integral
from .parse import default_names, parse, to_str
from .poly import SuperPoly


class ScalarOp:
    """A scalar difference operator ``sum_l a_l S^l``."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity: int, coeffs: Mapping[int, SuperPoly] | None = None):
        self.arity = arity
        self.coeffs: dict[int, SuperPoly] = {}
        for l, c in (coeffs or {}).items():
            if not isinstance(c, SuperPoly):
                c = SuperPoly.const(c, arity)
            elif c.arity != arity:
                raise ArityError(f"coefficient arity {c.arity} != {arity}")
            if c:
                self.coeffs[l] = c

    @classmethod
    def shift_op(cls, k: int, arity: int) -> ScalarOp:
        return cls(arity, {k: SuperPoly.const(1, arity)})

    @classmethod
    def mul(cls, f, arity: int | None = None) -> ScalarOp:
        if not isinstance(f, SuperPoly):
            f = SuperPoly.const(f, arity)
        return cls(f.arity, {0: f})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, ScalarOp):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def _lift(self, other) -> ScalarOp:
        if isinstance(other, ScalarOp):
            return other
        if isinstance(other, SuperPoly):
            return ScalarOp.mul(other)
        return ScalarOp.mul(other, self.arity)

    def __add__(self, other) -> ScalarOp:
        other = self._lift(other)
        out = dict(self.coeffs)
        for l, c in other.coeffs.items():
            out[l] = out[l] + c if l in out else c
        return ScalarOp(self.arity, out)

    __radd__ = __add__

    def __neg__(self) -> ScalarOp:
        return ScalarOp(self.arity, {l: -c for l, c in self.coeffs.items()})

    def __sub__(self, other) -> ScalarOp:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> ScalarOp:
        return self._lift(other) - self

    def __matmul__(self, other) -> ScalarOp:
        other = self._lift(other)
        out: dict[int, SuperPoly] = {}
        for l, a in self.coeffs.items():
            for m, b in other.coeffs.items():
                t = a * b.shift(l)
                out[l + m] = out[l + m] + t if l + m in out else t
        return ScalarOp(self.arity, out)

    def __rmatmul__(self, other) -> ScalarOp:
        return self._lift(other) @ self

    def __mul__(self, c) -> ScalarOp:
        return ScalarOp(self.arity, {l: a * c for l, a in self.coeffs.items()})

    __rmul__ = __mul__

    def adjoint(self) -> ScalarOp:
        return ScalarOp(self.arity, {-l: a.shift(-l) for l, a in self.coeffs.items()})

    def apply(self, f: SuperPoly) -> SuperPoly:
        total = SuperPoly.zero(self.arity)
        for l, a in self.coeffs.items():
            total = total + a * f.shift(l)
        return total

    def map_coeffs(self, fn) -> ScalarOp:
        return ScalarOp(self.arity, {l: fn(a) for l, a in self.coeffs.items()})

    def order(self) -> tuple[int, int] | None:
        if not self.coeffs:
            return None
        return min(self.coeffs), max(self.coeffs)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for l in sorted(self.coeffs, reverse=True):
            c = to_str(self.coeffs[l], names)
            parts.append(f"({c})" if l == 0 else f"({c})*S^{l}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ScalarOp({self.to_str()})"


class MatDiffOp:
    """A rectangular matrix of :class:`ScalarOp` entries (components from 0)."""

    __slots__ = ("arity", "shape", "entries", "names")

    def __init__(
        self,
        arity: int,
        entries: Mapping[tuple[int, int], ScalarOp] | None = None,
        shape: tuple[int, int] | None = None,
        names: Sequence[str] | None = None,
    ):
        self.arity = arity
        self.shape = shape or (arity, arity)
        self.names = tuple(names) if names else default_names(arity)
        self.entries: dict[tuple[int, int], ScalarOp] = {}
        for (i, j), op in (entries or {}).items():
            if not (0 <= i < self.shape[0] and 0 <= j < self.shape[1]):
                raise ArityError(f"entry {(i, j)} outside shape {self.shape}")
            if op.arity != arity:
                raise ArityError("entry arity mismatch")
            if op:
                self.entries[(i, j)] = op

    # construction -------------------------------------------------------

    @classmethod
    def from_coeffs(
        cls,
        arity: int,
        coeffs: Mapping[tuple[int, int], Mapping[int, SuperPoly]],
        names: Sequence[str] | None = None,
    ) -> MatDiffOp:
        return cls(arity, {ij: ScalarOp(arity, c) for ij, c in coeffs.items()}, names=names)

    @classmethod
    def from_order11(cls, A: Sequence[Sequence[SuperPoly]], B: Sequence[Sequence[SuperPoly]]) -> MatDiffOp:
        """``K = A S + B - S^{-1} o A^T``."""
        n = len(A)
        arity = _arity_of(A, B)
        entries = {}
        for i in range(n):
            for j in range(n):
                a = _poly(A[i][j], arity)
                b = _poly(B[i][j], arity)
                at = _poly(A[j][i], arity)
                entries[(i, j)] = ScalarOp(arity, {1: a, 0: b, -1: -at.shift(-1)})
        return cls(arity, entries)

    @classmethod
    def matrix(cls, rows: Sequence[Sequence[ScalarOp | SuperPoly | int]], arity: int | None = None) -> MatDiffOp:
        if arity is None:
            arity = _arity_of(rows)
        entries = {}
        for i, row in enumerate(rows):
            for j, e in enumerate(row):
                if isinstance(e, ScalarOp):
                    entries[(i, j)] = e
                else:
                    entries[(i, j)] = ScalarOp.mul(_poly(e, arity))
        return cls(arity, entries, shape=(len(rows), len(rows[0])))

    # access -----------------------------------------------------------

    def entry(self, i: int, j: int) -> ScalarOp:
        return self.entries.get((i, j)) or ScalarOp(self.arity)

    def coeff(self, i: int, j: int, l: int) -> SuperPoly:
        return self.entry(i, j).coeffs.get(l) or SuperPoly.zero(self.arity)

    def order(self) -> tuple[int, int] | None:
        ords = [op.order() for op in self.entries.values()]
        if not ords:
            return None
        return min(o[0] for o in ords), max(o[1] for o in ords)

    def order11_parts(self) -> tuple[list[list[SuperPoly]], list[list[SuperPoly]]]:
        """``(A, B)`` with ``A`` the coefficient of ``S`` and ``B`` of ``S^0``."""
        n = self.shape[0]
        A = [[self.coeff(i, j, 1) for j in range(n)] for i in range(n)]
        B = [[self.coeff(i, j, 0) for j in range(n)] for i in range(n)]
        return A, B

    def symbols(self) -> set[str]:
        return {s for op in self.entries.values() for c in op.coeffs.values() for s in c.symbols()}

    # algebra ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MatDiffOp):
            return self.shape == other.shape and self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def _check(self, other: MatDiffOp) -> None:
        if other.arity != self.arity:
            raise ArityError(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other: MatDiffOp) -> MatDiffOp:
        self._check(other)
        if other.shape != self.shape:
            raise ArityError("shape mismatch")
        out = dict(self.entries)
        for ij, op in other.entries.items():
            out[ij] = out[ij] + op if ij in out else op
        return MatDiffOp(self.arity, out, self.shape, self.names)

    def __neg__(self) -> MatDiffOp:
        return MatDiffOp(self.arity, {ij: -op for ij, op in self.entries.items()}, self.shape, self.names)

    def __sub__(self, other: MatDiffOp) -> MatDiffOp:
        return self + (-other)

    def __mul__(self, c) -> MatDiffOp:
        return MatDiffOp(self.arity, {ij: op * c for ij, op in self.entries.items()}, self.shape, self.names)

    __rmul__ = __mul__

    def __matmul__(self, other: MatDiffOp) -> MatDiffOp:
        self._check(other)
        if self.shape[1] != other.shape[0]:
            raise ArityError("inner dimensions differ")
        out: dict[tuple[int, int], ScalarOp] = {}
        for (i, k), a in self.entries.items():
            for (k2, j), b in other.entries.items():
                if k != k2:
                    continue
                t = a @ b
                out[(i, j)] = out[(i, j)] + t if (i, j) in out else t
        return MatDiffOp(self.arity, out, (self.shape[0], other.shape[1]), self.names)

    def adjoint(self) -> MatDiffOp:
        """``(K*)^{ij} = (K^{ji})*``."""
        out = {(j, i): op.adjoint() for (i, j), op in self.entries.items()}
        return MatDiffOp(self.arity, out, (self.shape[1], self.shape[0]), self.names)

    def transpose(self) -> MatDiffOp:
        out = {(j, i): op for (i, j), op in self.entries.items()}
        return MatDiffOp(self.arity, out, (self.shape[1], self.shape[0]), self.names)

    def apply(self, vec: Sequence[SuperPoly]) -> list[SuperPoly]:
        out = [SuperPoly.zero(self.arity) for _ in range(self.shape[0])]
        for (i, j), op in self.entries.items():
            out[i] = out[i] + op.apply(vec[j])
        return out

    def map_coeffs(self, fn) -> MatDiffOp:
        out = {ij: op.map_coeffs(fn) for ij, op in self.entries.items()}
        return MatDiffOp(self.arity, out, self.shape, self.names)

    def substitute_symbols(self, mapping: Mapping[str, object]) -> MatDiffOp:
        return self.map_coeffs(lambda c: c.substitute_symbols(mapping))

    def with_names(self, names: Sequence[str]) -> MatDiffOp:
        return MatDiffOp(self.arity, self.entries, self.shape, names)

    # text and json ------------------------------------------------------

    def to_str(self) -> str:
        lines = []
        for (i, j) in sorted(self.entries):
            lines.append(f"K[{i + 1},{j + 1}] = {self.entries[(i, j)].to_str(self.names)}")
        return "\n".join(lines) if lines else "0"

    def __repr__(self) -> str:
        return f"MatDiffOp(\n{self.to_str()}\n)"

    def to_json(self) -> dict:
        entries = {}
        for (i, j) in sorted(self.entries):
            op = self.entries[(i, j)]
            entries[f"{i + 1},{j + 1}"] = [
                {"shift": l, "coeff": to_str(op.coeffs[l], self.names)} for l in sorted(op.coeffs)
            ]
        return {"components": list(self.names), "symbols": sorted(self.symbols()), "entries": entries}

    @classmethod
    def from_json(cls, data: Mapping | str) -> MatDiffOp:
        if isinstance(data, str):
            data = json.loads(data)
        names = tuple(data["components"])
        arity = len(names)
        coeffs: dict[tuple[int, int], dict[int, SuperPoly]] = {}
        for key, items in data.get("entries", {}).items():
            i, j = (int(x) - 1 for x in key.split(","))
            slot = coeffs.setdefault((i, j), {})
            for item in items:
                c = parse(str(item["coeff"]), names)
                l = int(item["shift"])
                slot[l] = slot[l] + c if l in slot else c
        return cls.from_coeffs(arity, coeffs, names)


def _poly(x, arity: int) -> SuperPoly:
    return x if isinstance(x, SuperPoly) else SuperPoly.const(x, arity)


def _arity_of(*mats: Iterable) -> int:
    for m in mats:
        for row in m:
            for e in row:
                if isinstance(e, (SuperPoly, ScalarOp)):
                    return e.arity
    raise ArityError("cannot infer arity from constant entries")


# free functions ------------------------------------------------------------


def compose(K1: MatDiffOp, K2: MatDiffOp) -> MatDiffOp:
    return K1 @ K2


def adjoint(K: MatDiffOp) -> MatDiffOp:
    return K.adjoint()


def is_skewadjoint(K: MatDiffOp) -> bool:
    return K.adjoint() == -K


def op_to_bivector(K: MatDiffOp) -> LocalPolyVector:
    """``1/2 sum int theta_i K^{ij}_l theta_{j,l}``."""
    n = K.arity
    total = SuperPoly.zero(n)
    for (i, j), op in K.entries.items():
        th = SuperPoly.odd(i, 0, n)
        for l, c in op.coeffs.items():
            total = total + th * c * SuperPoly.odd(j, l, n)
    return integral(total.scale(Fraction(1, 2)))


def bivector_to_op(P) -> MatDiffOp:
    """The skewadjoint ``K`` with ``sum_j K^{ij}(theta_j) = dP/dtheta_i``."""
    P = integral(P)
    if P and P.degree != 2:
        raise DegreeError(f"expected a bivector, got degree {P.degree}")
    n = P.arity
    coeffs: dict[tuple[int, int], dict[int, SuperPoly]] = {}
    for i in range(n):
        for word, even in P.density.variational_odd(i).split_odd().items():
            (j, l), = word
            coeffs.setdefault((i, j), {})[l] = even
    return MatDiffOp.from_coeffs(n, coeffs)


def frechet(phi: Sequence[SuperPoly]) -> MatDiffOp:
    """``D^{ij} = sum_n (d phi^i / d u^j_n) S^n``."""
    arity = phi[0].arity
    entries = {}
    for i, f in enumerate(phi):
        for j, n in f.variables():
            slot = entries.setdefault((i, j), {})
            slot[n] = f.partial_u(j, n)
    return MatDiffOp(arity, {ij: ScalarOp(arity, c) for ij, c in entries.items()}, shape=(len(phi), arity))


def frechet_adjoint(phi: Sequence[SuperPoly]) -> MatDiffOp:
    return frechet(phi).adjoint()


def change_of_variables(K: MatDiffOp, phi: Sequence[SuperPoly]) -> MatDiffOp:
    """``D_phi o K o D_phi*``, coefficients still in the old variables."""
    D = frechet(phi)
    return D @ K @ D.adjoint()


def conjugate(K: MatDiffOp, J: MatDiffOp) -> MatDiffOp:
    """``J o K o J*`` for an arbitrary operator ``J``."""
    return J @ K @ J.adjoint()


def point_transform(K: MatDiffOp, phi: Sequence[SuperPoly]) -> MatDiffOp:
    """``J K J^T`` with ``J`` the Jacobian of a point map ``phi``."""
    for f in phi:
        bad = sorted(v for v in f.variables() if v[1] != 0)
        if bad:
            raise NotPointTransform(f"{f} depends on shifted variables {bad}")
    return change_of_variables(K, phi)
