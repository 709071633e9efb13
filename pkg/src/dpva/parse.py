"""Text syntax for polynomials.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := ['+' | '-'] factor ('*' factor)*
    factor   := atom ('^' int)?
    atom     := rational | ident ('[' int ']')? | '$' ident ('[' int ']')? | '(' expr ')'
    rational := int ('/' posint)?

Declared component names denote even variables (``u[1]`` is ``u`` shifted
once); ``$u[n]`` is the odd partner of ``u[n]``.  Any other identifier is a
constant symbol.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from fractions import Fraction

from .errors import ParseError
from .poly import SuperPoly, decode

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def default_names(arity: int) -> tuple[str, ...]:
    if arity == 1:
        return ("u",)
    if arity == 2:
        return ("u", "v")
    return tuple(f"u{i + 1}" for i in range(arity))


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {pos}: {text[pos:]!r}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("int", num))
        elif ident is not None:
            out.append(("ident", ident))
        elif op in "+-*^/()[]$":
            out.append(("op", op))
        elif op.strip():
            raise ParseError(f"unexpected character {op!r}")
        pos = m.end()
    out.append(("end", ""))
    return out


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = {n: k for k, n in enumerate(names)}
        self.arity = len(names)

    def peek(self) -> tuple[str, str]:
        return self.toks[self.i]

    def take(self, kind: str, value: str | None = None) -> str:
        k, v = self.toks[self.i]
        if k != kind or (value is not None and v != value):
            raise ParseError(f"expected {value or kind}, found {v or k!r}")
        self.i += 1
        return v

    def accept(self, value: str) -> bool:
        if self.toks[self.i] == ("op", value):
            self.i += 1
            return True
        return False

    def signed_int(self) -> int:
        sign = -1 if self.accept("-") else 1
        return sign * int(self.take("int"))

    def expr(self) -> SuperPoly:
        total = self.term()
        while True:
            if self.accept("+"):
                total = total + self.term()
            elif self.accept("-"):
                total = total - self.term()
            else:
                return total

    def term(self) -> SuperPoly:
        neg = False
        if self.accept("-"):
            neg = True
        else:
            self.accept("+")
        value = self.factor()
        while self.accept("*"):
            value = value * self.factor()
        return -value if neg else value

    def factor(self) -> SuperPoly:
        base = self.atom()
        if self.accept("^"):
            base = base ** self.signed_int()
        return base

    def index(self) -> int:
        if self.accept("["):
            n = self.signed_int()
            self.take("op", "]")
            return n
        return 0

    def atom(self) -> SuperPoly:
        kind, value = self.peek()
        if kind == "int":
            self.i += 1
            num = int(value)
            if self.accept("/"):
                den = int(self.take("int"))
                if den == 0:
                    raise ParseError("zero denominator")
                return SuperPoly.const(Fraction(num, den), self.arity)
            return SuperPoly.const(num, self.arity)
        if kind == "ident":
            self.i += 1
            if value in self.names:
                return SuperPoly.var(self.names[value], self.index(), self.arity)
            if self.peek() == ("op", "["):
                raise ParseError(f"constant symbol {value!r} cannot carry a shift")
            return SuperPoly.symbol(value, self.arity)
        if self.accept("$"):
            name = self.take("ident")
            if name not in self.names:
                raise ParseError(f"odd partner of unknown component {name!r}")
            return SuperPoly.odd(self.names[name], self.index(), self.arity)
        if self.accept("("):
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"unexpected token {value or kind!r}")


def parse(text: str, names: Sequence[str] = ("u", "v")) -> SuperPoly:
    """Parse ``text`` with ``names`` as the even component names."""
    p = _Parser(text, names)
    result = p.expr()
    p.take("end")
    return result


def _var_str(name: str, shift: int) -> str:
    return name if shift == 0 else f"{name}[{shift}]"


def _sort_key(key) -> tuple:
    evens, syms, odd = key
    return (
        len(odd),
        sum(abs(e) for _, e in evens) + sum(abs(e) for _, e in syms),
        tuple(v for v, _ in evens),
        tuple(e for _, e in evens),
        syms,
        odd,
    )


def term_str(key, names: Sequence[str]) -> str:
    evens, syms, odd = key
    parts = []
    for s, e in syms:
        parts.append(s if e == 1 else f"{s}^{e}")
    for v, e in evens:
        i, n = decode(v)
        base = _var_str(names[i], n)
        parts.append(base if e == 1 else f"{base}^{e}")
    for v in odd:
        i, n = decode(v)
        parts.append("$" + _var_str(names[i], n))
    return "*".join(parts)


def to_str(p: SuperPoly, names: Sequence[str] | None = None) -> str:
    """Deterministic text form; ``parse(to_str(p)) == p``."""
    if names is None:
        names = default_names(p.arity)
    if not p.terms:
        return "0"
    out = []
    for key in sorted(p.terms, key=_sort_key):
        c = p.terms[key]
        mono = term_str(key, names)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
