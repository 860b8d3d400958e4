"""Coefficient fields, monomial orders, polynomials and quotient rings.

Ring elements are always kept in normal form with respect to the reduced
Groebner basis of the defining ideal, so equality is representational.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import _engine


class ReflexaError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(ReflexaError, ValueError):
    pass


class RingMismatchError(ReflexaError, ValueError):
    pass


class ParseError(ReflexaError, ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


# ---------------------------------------------------------------- fields


class RationalField:
    """Exact rationals; elements are ``fractions.Fraction``."""

    characteristic = 0
    name = "QQ"

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    @staticmethod
    def normalize(x):
        return x

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def format(self, c) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p); elements are Python ints in ``[0, p)``."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x) -> int:
        p = self.characteristic
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def normalize(self, x):
        return x % self.characteristic

    def inv(self, a):
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return a * self.inv(b) % self.characteristic

    def format(self, c) -> str:
        p = self.characteristic
        return str(c - p if c > p // 2 else c)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return self.name


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str):
    """Accepts ``QQ`` or ``GF(p)``."""
    t = text.replace(" ", "")
    if t in ("QQ", "Q"):
        return QQ
    m = re.fullmatch(r"GF\((\d+)\)", t)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown field {text!r}; expected QQ or GF(p)")


# ---------------------------------------------------------------- orders


class MonomialOrder:
    """``lex`` or ``degrevlex`` with a variable precedence (indices, largest first)."""

    TAGS = ("lex", "degrevlex")

    def __init__(self, tag: str = "degrevlex", precedence: Sequence[int] | None = None,
                 nvars: int | None = None):
        if tag not in self.TAGS:
            raise ValueError(f"unknown monomial order {tag!r}")
        if precedence is None:
            if nvars is None:
                raise ValueError("need precedence or nvars")
            precedence = tuple(range(nvars))
        self.tag = tag
        self.precedence = tuple(precedence)
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of variable indices")
        self._identity = self.precedence == tuple(range(len(self.precedence)))
        self._cache: dict = {}

    @property
    def nvars(self) -> int:
        return len(self.precedence)

    def key(self, m: tuple):
        k = self._cache.get(m)
        if k is None:
            if len(m) != self.nvars:
                raise DimensionError(f"monomial {m} has {len(m)} exponents, expected {self.nvars}")
            e = m if self._identity else tuple(m[i] for i in self.precedence)
            if self.tag == "lex":
                k = e
            else:
                k = (sum(e), tuple(-x for x in reversed(e)))
            self._cache[m] = k
        return k

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.tag == other.tag
                and self.precedence == other.precedence)

    def __hash__(self):
        return hash((self.tag, self.precedence))

    def __repr__(self):
        return f"MonomialOrder({self.tag!r}, {self.precedence})"


LT, EQ, GT = -1, 0, 1


def monomial_compare(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> int:
    """Return ``GT``/``EQ``/``LT`` (1/0/-1) comparing ``a`` with ``b``."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise DimensionError("monomials of different lengths")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------- rings


class QuotientRing:
    """``k[vars] / ideal`` with the reduced Groebner basis of the ideal cached.

    An empty ideal gives the polynomial ring itself.
    """

    def __init__(self, field, variables: Sequence[str], order: str | MonomialOrder = "degrevlex",
                 ideal: Iterable = ()):
        self.field = field
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        for v in self.variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise ValueError(f"bad variable name {v!r}")
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder(
            order, nvars=len(self.variables))
        if self.order.nvars != len(self.variables):
            raise DimensionError("order and variable count disagree")
        self.nvars = len(self.variables)
        self._zero_mono = (0,) * self.nvars
        self._gb_cache: dict = {}
        raw = []
        for g in ideal:
            raw.append(self._raw_input(g))
        res = _engine.groebner([{(0, m): c for m, c in r.items()} for r in raw if r],
                               field, self.term_key, 1)
        self._ideal_gb = [{m: c for (_, m), c in g.items()} for g in res.basis]
        self._reducer = res.reducer
        self._key = (field, self.variables, self.order,
                     tuple(tuple(sorted(g.items())) for g in self._ideal_gb))

    # -- structure

    def term_key(self, t):
        return (-t[0], self.order.key(t[1]))

    @property
    def is_polynomial_ring(self) -> bool:
        return not self._ideal_gb

    @property
    def is_zero_ring(self) -> bool:
        return any(all(e == 0 for e in m) for g in self._ideal_gb for m in g)

    @property
    def ambient(self) -> "QuotientRing":
        if self.is_polynomial_ring:
            return self
        return _ambient(self.field, self.variables, self.order)

    @property
    def ideal_basis(self) -> list["Polynomial"]:
        """Reduced Groebner basis of the defining ideal, as ambient polynomials."""
        amb = self.ambient
        return [Polynomial(amb, dict(g)) for g in self._ideal_gb]

    def quotient(self, gens: Iterable) -> "QuotientRing":
        """``self / (gens)``; generators may be strings or ring elements."""
        extra = [self._raw_input(g) for g in gens]
        return QuotientRing(self.field, self.variables, self.order,
                            [dict(g) for g in self._ideal_gb] + extra)

    def with_field(self, field) -> "QuotientRing":
        """Same presentation over another coefficient field (coefficients must be integral-ish)."""
        gens = [{m: field(_to_fraction(c, self.field)) for m, c in g.items()}
                for g in self._ideal_gb]
        return QuotientRing(field, self.variables, self.order, gens)

    # -- elements

    def reduce_raw(self, terms: dict) -> dict:
        if not self._ideal_gb or not terms:
            return {m: c for m, c in terms.items() if c}
        v = {(0, m): c for m, c in terms.items() if c}
        r = _engine.reduce_vec(v, self._reducer, self.field, self.term_key)
        return {m: c for (_, m), c in r.items()}

    def _raw_input(self, x) -> dict:
        if isinstance(x, Polynomial):
            if x.ring.variables != self.variables or x.ring.field != self.field:
                raise RingMismatchError("element from an incompatible ring")
            return dict(x._terms)
        if isinstance(x, dict):
            norm = self.field.normalize
            out = {}
            for m, c in x.items():
                m = tuple(m)
                if len(m) != self.nvars:
                    raise DimensionError("exponent vector of wrong length")
                c = norm(self.field(c))
                if c:
                    out[m] = c
            return out
        if isinstance(x, str):
            return parse_polynomial_raw(x, self.variables, self.field)
        if isinstance(x, (int, Fraction)):
            c = self.field(x)
            return {self._zero_mono: c} if c else {}
        raise TypeError(f"cannot convert {type(x).__name__} to a ring element")

    def __call__(self, x=0) -> "Polynomial":
        if isinstance(x, Polynomial) and x.ring == self:
            return x
        return Polynomial(self, self.reduce_raw(self._raw_input(x)))

    def element(self, terms: dict) -> "Polynomial":
        return Polynomial(self, self.reduce_raw(terms))

    def parse(self, text: str) -> "Polynomial":
        return self(text)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self(1)

    @property
    def gens(self) -> list["Polynomial"]:
        out = []
        for i in range(self.nvars):
            m = tuple(1 if j == i else 0 for j in range(self.nvars))
            out.append(self.element({m: self.field(1)}))
        return out

    def gen(self, name: str) -> "Polynomial":
        return self.gens[self.variables.index(name)]

    def standard_monomials(self, max_degree: int) -> list[tuple]:
        """Monomials of degree <= max_degree that are not leading monomials of the ideal."""
        lms = [max(g, key=self.order.key) for g in self._ideal_gb]
        out = []
        for m in _monomials_up_to(self.nvars, max_degree):
            if not any(_engine.mono_divides(l, m) for l in lms):
                out.append(m)
        return out

    # -- identity

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        base = f"{self.field!r}[{','.join(self.variables)}]"
        if self.is_polynomial_ring:
            return base
        gens = ", ".join(str(g) for g in self.ideal_basis)
        return f"{base}/({gens})"


@lru_cache(maxsize=None)
def _ambient(field, variables, order) -> QuotientRing:
    return QuotientRing(field, variables, order)


def polynomial_ring(field, variables: Sequence[str], order: str = "degrevlex") -> QuotientRing:
    return QuotientRing(field, variables, order)


def _monomials_up_to(n: int, d: int):
    def rec(i, left):
        if i == n - 1:
            for e in range(left + 1):
                yield (e,)
            return
        for e in range(left + 1):
            for rest in rec(i + 1, left - e):
                yield (e,) + rest
    if n == 0:
        yield ()
        return
    yield from rec(0, d)


def _to_fraction(c, field) -> Fraction:
    if isinstance(field, PrimeField):
        p = field.characteristic
        return Fraction(c - p if c > p // 2 else c)
    return Fraction(c)


# ---------------------------------------------------------------- polynomials


class Polynomial:
    """Immutable ring element in normal form; ``_terms`` maps exponents to coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: QuotientRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._hash = None

    # -- inspection

    def terms(self) -> list[tuple[tuple, object]]:
        """(monomial, coefficient) pairs, strictly descending in the ring's order."""
        key = self.ring.order.key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_coefficient(self):
        return self._terms.get(self.ring._zero_mono, 0)

    def leading_monomial(self) -> tuple:
        return max(self._terms, key=self.ring.order.key)

    def leading_coefficient(self):
        return self._terms[self.leading_monomial()]

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    # -- arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        norm = self.ring.field.normalize
        out = dict(self._terms)
        for m, c in other._terms.items():
            nc = norm(out.get(m, 0) + c)
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.normalize
        return Polynomial(self.ring, {m: norm(-c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return self.ring.zero
        norm = self.ring.field.normalize
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _engine.mono_mul(m1, m2)
                nc = norm(out.get(m, 0) + c1 * c2)
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, self.ring.reduce_raw(out))

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: f.normalize(x * c) for m, x in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- identity and printing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        return format_polynomial(self._terms, self.ring.variables, self.ring.field, self.ring.order)

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------- text syntax


def format_polynomial(terms: dict, variables: Sequence[str], field, order: MonomialOrder) -> str:
    if not terms:
        return "0"
    parts = []
    for m, c in sorted(terms.items(), key=lambda t: order.key(t[0]), reverse=True):
        cs = field.format(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(variables, m) if e)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize_poly(text: str, variables: Sequence[str]):
    names = sorted(variables, key=len, reverse=True)
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            toks.append(("num", int(num), start))
        elif ident is not None:
            i = 0
            while i < len(ident):
                for v in names:
                    if ident.startswith(v, i):
                        toks.append(("var", variables.index(v), start + i))
                        i += len(v)
                        break
                else:
                    raise ParseError(f"unknown variable in {ident!r}", 1, start + i + 1)
        elif sym.strip():
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r}", 1, start + 1)
            toks.append((sym, None, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _PolyParser:
    def __init__(self, text, variables, field):
        self.toks = _tokenize_poly(text, variables)
        self.i = 0
        self.n = len(variables)
        self.field = field

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", 1, tok[2] + 1)
        self.i += 1
        return tok

    def const(self, c) -> dict:
        c = self.field(c)
        return {(0,) * self.n: c} if c else {}

    def add(self, a, b, sign=1):
        norm = self.field.normalize
        out = dict(a)
        for m, c in b.items():
            nc = norm(out.get(m, 0) + sign * c)
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return out

    def mul(self, a, b):
        norm = self.field.normalize
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _engine.mono_mul(m1, m2)
                nc = norm(out.get(m, 0) + c1 * c2)
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return out

    def parse(self):
        if self.peek() == "end":
            raise ParseError("empty polynomial", 1, 1)
        v = self.expr()
        tok = self.toks[self.i]
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r}", 1, tok[2] + 1)
        return v

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.add({}, self.term(), sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            acc = self.add(acc, self.term(), sign)
        return acc

    def term(self):
        acc = self.factor()
        while True:
            k = self.peek()
            if k == "*":
                self.take()
                acc = self.mul(acc, self.factor())
            elif k in ("num", "var", "("):
                acc = self.mul(acc, self.factor())
            else:
                return acc

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.take("num")[1]
            out = self.const(1)
            for _ in range(e):
                out = self.mul(out, base)
            return out
        return base

    def atom(self):
        kind, val, at = self.take()
        if kind == "num":
            if self.peek() == "/":
                self.take()
                den = self.take("num")[1]
                if den == 0:
                    raise ParseError("division by zero", 1, at + 1)
                return self.const(Fraction(val, den))
            return self.const(val)
        if kind == "var":
            m = tuple(1 if j == val else 0 for j in range(self.n))
            return {m: self.field(1)}
        if kind == "(":
            v = self.expr()
            self.take(")")
            return v
        if kind == "-":
            return {m: self.field.normalize(-c) for m, c in self.factor().items()}
        raise ParseError(f"unexpected {kind!r}", 1, at + 1)


def parse_polynomial_raw(text: str, variables: Sequence[str], field) -> dict:
    """Parse ``X*Z - Y^2`` style text into an exponent->coefficient dict."""
    return _PolyParser(text, tuple(variables), field).parse()
