"""Difference polynomials with odd variables.

A :class:`SuperPoly` is a finite sum of terms ``c * m * theta_word`` where

* ``c`` is an exact rational (``int`` or :class:`fractions.Fraction`);
* ``m`` is a Laurent monomial in the even variables ``u^i_n`` and in
  constant symbols (names that are fixed by the shift and have zero
  derivatives);
* ``theta_word`` is a product of distinct odd variables ``theta_{i,n}`` kept
  in increasing ``(i, n)`` order, so every term has one normal form.

Components are numbered from 0.  The shift ``S`` sends ``u^i_n`` to
``u^i_{n+1}`` and ``theta_{i,n}`` to ``theta_{i,n+1}``.  Purely even
polynomials play the role of ordinary difference polynomials; ``DiffPoly``
is an alias kept for readability at call sites that expect no odd part.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational

from . import kernels
from .errors import ArityError, NonIntegrableExponent, NonInvertibleSubstitution

_SHIFT_BITS = 20
_OFFSET = 1 << (_SHIFT_BITS - 1)
_MASK = (1 << _SHIFT_BITS) - 1

Key = tuple  # (evens, syms, odd)
_EMPTY: Key = ((), (), ())


def code(comp: int, shift: int) -> int:
    """Pack a (component, shift) pair into an order-preserving int."""
    return (comp << _SHIFT_BITS) + shift + _OFFSET


def comp_of(c: int) -> int:
    return c >> _SHIFT_BITS


def shift_of(c: int) -> int:
    return (c & _MASK) - _OFFSET


def decode(c: int) -> tuple[int, int]:
    return c >> _SHIFT_BITS, (c & _MASK) - _OFFSET


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_coeff(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficients must be rational, got {type(c).__name__}")


def _key_min_shift(key: Key) -> int | None:
    evens, _, odd = key
    shifts = [shift_of(c) for c, _ in evens]
    shifts.extend(shift_of(c) for c in odd)
    return min(shifts) if shifts else None


def _shift_key(key: Key, k: int) -> Key:
    if not k:
        return key
    evens, syms, odd = key
    return (tuple((c + k, e) for c, e in evens), syms, tuple(c + k for c in odd))


class SuperPoly:
    """Immutable polynomial in even, odd and symbol variables."""

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[Key, object] | None = None):
        self.arity = arity
        self.terms: dict = {}
        if terms:
            for k, c in terms.items():
                c = _as_coeff(c)
                if c:
                    self.terms[k] = c
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> SuperPoly:
        p = cls.__new__(cls)
        p.arity = arity
        p.terms = terms
        p._hash = None
        return p

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> SuperPoly:
        return cls._raw(arity, {})

    @classmethod
    def const(cls, c, arity: int) -> SuperPoly:
        c = _as_coeff(c)
        return cls._raw(arity, {_EMPTY: c} if c else {})

    @classmethod
    def var(cls, comp: int, shift: int, arity: int, exp: int = 1) -> SuperPoly:
        _check_comp(comp, arity)
        if not exp:
            return cls.const(1, arity)
        return cls._raw(arity, {(((code(comp, shift), exp),), (), ()): 1})

    @classmethod
    def odd(cls, comp: int, shift: int, arity: int) -> SuperPoly:
        _check_comp(comp, arity)
        return cls._raw(arity, {((), (), (code(comp, shift),)): 1})

    @classmethod
    def symbol(cls, name: str, arity: int, exp: int = 1) -> SuperPoly:
        if not exp:
            return cls.const(1, arity)
        return cls._raw(arity, {((), ((name, exp),), ()): 1})

    # basic protocol ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Key, object]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, SuperPoly):
            if self.arity != other.arity and self.terms and other.terms:
                return False
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({_EMPTY: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"SuperPoly({self})"

    def __str__(self) -> str:
        from .parse import to_str

        return to_str(self)

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> SuperPoly:
        if isinstance(other, SuperPoly):
            if other.arity != self.arity:
                raise ArityError(f"arity {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return SuperPoly.const(other, self.arity)
        return NotImplemented

    def __add__(self, other) -> SuperPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return SuperPoly._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self) -> SuperPoly:
        return SuperPoly._raw(self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> SuperPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return SuperPoly._raw(self.arity, out)

    def __rsub__(self, other) -> SuperPoly:
        return (-self).__add__(other)

    def scale(self, c) -> SuperPoly:
        c = _as_coeff(c)
        if not c:
            return SuperPoly.zero(self.arity)
        if c == 1:
            return self
        return SuperPoly._raw(self.arity, {k: _norm(v * c) for k, v in self.terms.items()})

    def __mul__(self, other) -> SuperPoly:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return SuperPoly.zero(self.arity)
        terms = kernels.mul_terms(self.terms, other.terms)
        return SuperPoly._raw(self.arity, {k: _norm(c) for k, c in terms.items()})

    def __rmul__(self, other) -> SuperPoly:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> SuperPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        if isinstance(other, SuperPoly):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, k: int) -> SuperPoly:
        if k < 0:
            return self.inverse() ** (-k)
        result = SuperPoly.const(1, self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> SuperPoly:
        """Inverse of a single even monomial."""
        if len(self.terms) != 1:
            raise NonInvertibleSubstitution(f"{self} is not a monomial")
        ((evens, syms, odd), c), = self.terms.items()
        if odd:
            raise NonInvertibleSubstitution(f"{self} has an odd factor")
        key = (tuple((v, -e) for v, e in evens), tuple((s, -e) for s, e in syms), ())
        return SuperPoly._raw(self.arity, {key: _norm(Fraction(1) / c)})

    # structure ----------------------------------------------------------

    def degrees(self) -> set[int]:
        """Set of odd degrees occurring in the terms."""
        return {len(k[2]) for k in self.terms}

    @property
    def degree(self) -> int | None:
        """Odd degree if homogeneous (``None`` for the zero polynomial)."""
        ds = self.degrees()
        if len(ds) > 1:
            from .errors import DegreeError

            raise DegreeError(f"mixed odd degrees {sorted(ds)}")
        return next(iter(ds)) if ds else None

    @property
    def is_even(self) -> bool:
        return all(not k[2] for k in self.terms)

    def variables(self) -> set[tuple[int, int]]:
        """Even variables ``(comp, shift)`` that occur."""
        return {decode(c) for k in self.terms for c, _ in k[0]}

    def odd_variables(self) -> set[tuple[int, int]]:
        return {decode(c) for k in self.terms for c in k[2]}

    def symbols(self) -> set[str]:
        return {s for k in self.terms for s, _ in k[1]}

    def has_negative_exponent(self) -> bool:
        return any(e < 0 for k in self.terms for _, e in k[0])

    def split_odd(self) -> dict[tuple, SuperPoly]:
        """Group terms by odd word: ``{((comp, shift), ...): even part}``."""
        groups: dict = defaultdict(dict)
        for (ev, sy, odd), c in self.terms.items():
            groups[tuple(decode(o) for o in odd)][(ev, sy, ())] = c
        return {w: SuperPoly._raw(self.arity, t) for w, t in groups.items()}

    def split_symbols(self) -> dict[tuple, SuperPoly]:
        """Group terms by their non-symbol part; values are symbol polynomials."""
        groups: dict = defaultdict(dict)
        for (ev, sy, odd), c in self.terms.items():
            groups[(ev, odd)][((), sy, ())] = c
        return {k: SuperPoly._raw(self.arity, t) for k, t in groups.items()}

    # shift and derivatives ---------------------------------------------

    def shift(self, k: int = 1) -> SuperPoly:
        if not k or not self.terms:
            return self
        return SuperPoly._raw(self.arity, kernels.shift_terms(self.terms, k))

    def partial_u(self, comp: int, shift: int) -> SuperPoly:
        _check_comp(comp, self.arity)
        target = code(comp, shift)
        out: dict = {}
        for (ev, sy, odd), c in self.terms.items():
            for idx, (v, e) in enumerate(ev):
                if v == target:
                    ev2 = ev[:idx] + ((v, e - 1),) + ev[idx + 1 :] if e != 1 else ev[:idx] + ev[idx + 1 :]
                    _acc(out, (ev2, sy, odd), c * e)
                    break
        return SuperPoly._raw(self.arity, out)

    def partial_odd(self, comp: int, shift: int) -> SuperPoly:
        """Left derivative with respect to ``theta_{comp, shift}``."""
        _check_comp(comp, self.arity)
        target = code(comp, shift)
        out: dict = {}
        for (ev, sy, odd), c in self.terms.items():
            if target in odd:
                idx = odd.index(target)
                _acc(out, (ev, sy, odd[:idx] + odd[idx + 1 :]), -c if idx & 1 else c)
        return SuperPoly._raw(self.arity, out)

    def variational_u(self, comp: int) -> SuperPoly:
        """``sum_n S^{-n} d/du^comp_n``."""
        _check_comp(comp, self.arity)
        out: dict = {}
        for (ev, sy, odd), c in self.terms.items():
            for idx, (v, e) in enumerate(ev):
                if comp_of(v) != comp:
                    continue
                ev2 = ev[:idx] + ((v, e - 1),) + ev[idx + 1 :] if e != 1 else ev[:idx] + ev[idx + 1 :]
                _acc(out, _shift_key((ev2, sy, odd), -shift_of(v)), c * e)
        return SuperPoly._raw(self.arity, out)

    def variational_odd(self, comp: int) -> SuperPoly:
        """``sum_n S^{-n} d/dtheta_{comp,n}`` with left derivatives."""
        _check_comp(comp, self.arity)
        out: dict = {}
        for (ev, sy, odd), c in self.terms.items():
            for idx, v in enumerate(odd):
                if comp_of(v) != comp:
                    continue
                key = _shift_key((ev, sy, odd[:idx] + odd[idx + 1 :]), -shift_of(v))
                _acc(out, key, -c if idx & 1 else c)
        return SuperPoly._raw(self.arity, out)

    def integrate_u(self, comp: int, shift: int) -> SuperPoly:
        """Antiderivative in ``u^comp_shift`` with zero integration constant."""
        _check_comp(comp, self.arity)
        target = code(comp, shift)
        out: dict = {}
        for (ev, sy, odd), c in self.terms.items():
            e = next((ee for v, ee in ev if v == target), 0)
            if e == -1:
                raise NonIntegrableExponent(f"exponent -1 in {decode(target)}")
            if e:
                ev2 = tuple((v, ee + 1) if v == target else (v, ee) for v, ee in ev)
            else:
                ev2 = tuple(sorted(ev + ((target, 1),)))
            _acc(out, (ev2, sy, odd), Fraction(c) / (e + 1))
        return SuperPoly._raw(self.arity, {k: _norm(v) for k, v in out.items()})

    # substitution -----------------------------------------------------

    def substitute(self, mapping: Mapping[int, SuperPoly]) -> SuperPoly:
        """Replace ``u^i_n`` by ``S^n(mapping[i])`` for each mapped component."""
        arity = None
        for img in mapping.values():
            if arity is None:
                arity = img.arity
            elif img.arity != arity:
                raise ArityError("images of different arity")
        if arity is None:
            return self
        cache: dict = {}

        def power(v: int, e: int) -> SuperPoly:
            key = (v, e)
            if key not in cache:
                i, n = decode(v)
                base = mapping[i].shift(n)
                if e < 0:
                    base = _invert_image(base)
                    e = -e
                cache[key] = base**e
            return cache[key]

        total = SuperPoly.zero(arity)
        for (ev, sy, odd), c in self.terms.items():
            rest = tuple((v, e) for v, e in ev if comp_of(v) not in mapping)
            term = SuperPoly._raw(arity, {(rest, sy, odd): c})
            for v, e in ev:
                if comp_of(v) in mapping:
                    term = term * power(v, e)
            total = total + term
        return total

    def substitute_symbols(self, mapping: Mapping[str, object]) -> SuperPoly:
        """Replace constant symbols by rationals or polynomials."""
        total = SuperPoly.zero(self.arity)
        for (ev, sy, odd), c in self.terms.items():
            rest = tuple((s, e) for s, e in sy if s not in mapping)
            term = SuperPoly._raw(self.arity, {(ev, rest, odd): c})
            for s, e in sy:
                if s not in mapping:
                    continue
                img = mapping[s]
                if not isinstance(img, SuperPoly):
                    img = SuperPoly.const(img, self.arity)
                if e < 0:
                    img = _invert_image(img)
                    e = -e
                term = term * img**e
            total = total + term
        return total


DiffPoly = SuperPoly


def _acc(out: dict, key: Key, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _check_comp(comp: int, arity: int) -> None:
    if not 0 <= comp < arity:
        raise ArityError(f"component {comp} out of range for arity {arity}")


def _invert_image(p: SuperPoly) -> SuperPoly:
    if len(p.terms) != 1:
        raise NonInvertibleSubstitution(f"negative power of non-monomial {p}")
    return p.inverse()


def from_terms(arity: int, terms: Iterable[tuple[object, dict, dict, Iterable]]) -> SuperPoly:
    """Build from ``(coeff, {(comp, shift): exp}, {symbol: exp}, odd_vars)`` tuples.

    ``odd_vars`` is a sequence of ``(comp, shift)`` in product order; the sign
    of the permutation to the normal order is applied.
    """
    total = SuperPoly.zero(arity)
    for c, evens, syms, odd in terms:
        ev = tuple(sorted((code(i, n), e) for (i, n), e in evens.items() if e))
        sy = tuple(sorted((s, e) for s, e in syms.items() if e))
        mono = SuperPoly._raw(arity, {(ev, sy, ()): _as_coeff(c)} if c else {})
        for i, n in odd:
            mono = mono * SuperPoly.odd(i, n, arity)
        total = total + mono
    return total


# functional spellings -------------------------------------------------------


def shift(f: SuperPoly, k: int = 1) -> SuperPoly:
    return f.shift(k)


def partial_u(i: int, n: int, f: SuperPoly) -> SuperPoly:
    return f.partial_u(i, n)


def partial_odd(i: int, n: int, f: SuperPoly) -> SuperPoly:
    return f.partial_odd(i, n)


def variational_u(i: int, f: SuperPoly) -> SuperPoly:
    return f.variational_u(i)


def variational_odd(i: int, f: SuperPoly) -> SuperPoly:
    return f.variational_odd(i)


def integrate_u(i: int, n: int, f: SuperPoly) -> SuperPoly:
    return f.integrate_u(i, n)


def substitute(f: SuperPoly, mapping: Mapping[int, SuperPoly]) -> SuperPoly:
    return f.substitute(mapping)


def min_shift(key: Key) -> int | None:
    return _key_min_shift(key)


def shift_key(key: Key, k: int) -> Key:
    return _shift_key(key, k)
