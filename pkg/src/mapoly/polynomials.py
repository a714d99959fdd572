"""Sparse multivariate polynomials with exact integer or rational coefficients.

Variables are named ``x``, ``y``, ``a``, ``b``, ``z`` and the indexed families
``x0, x1, ...`` and ``y0, y1, ...``.  Their fixed order is
``x < x0 < x1 < ... < y < y0 < y1 < ... < a < b < z``.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by that order;
a polynomial maps monomials to nonzero coefficients (``int`` or
:class:`fractions.Fraction`).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

Monomial = tuple  # tuple[tuple[str, int], ...]
Coefficient = Union[int, Fraction]

_PLAIN = {"x": 0, "y": 2, "a": 4, "b": 5, "z": 6}
_VAR = re.compile(r"([xy])(0|[1-9][0-9]*)|[xyabz]")


@lru_cache(maxsize=None)
def variable_key(name: str) -> tuple[int, int]:
    """Sort key of a variable name; raises ``ValueError`` for unknown names."""
    m = _VAR.fullmatch(name)
    if m is None:
        raise ValueError(f"unknown variable {name!r}")
    if m.group(1) is None:
        return (_PLAIN[name], 0)
    return (1 if m.group(1) == "x" else 3, int(m.group(2)))


def xg(g: int) -> str:
    return f"x{g}"


def yg(g: int) -> str:
    return f"y{g}"


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def make_monomial(powers: Mapping[str, int]) -> Monomial:
    items = [(v, e) for v, e in powers.items() if e]
    for v, e in items:
        variable_key(v)
        if e < 0:
            raise ValueError(f"negative exponent for {v}")
    return tuple(sorted(items, key=lambda t: variable_key(t[0])))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: variable_key(t[0])))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_cmp(m1: Monomial, m2: Monomial) -> int:
    """Negative when ``m1`` is printed before ``m2``: higher total degree first,
    then higher exponent of the earliest variable where they differ."""
    d1, d2 = _mono_degree(m1), _mono_degree(m2)
    if d1 != d2:
        return -1 if d1 > d2 else 1
    p1, p2 = dict(m1), dict(m2)
    for v in sorted(set(p1) | set(p2), key=variable_key):
        e1, e2 = p1.get(v, 0), p2.get(v, 0)
        if e1 != e2:
            return -1 if e1 > e2 else 1
    return 0


class Polynomial:
    """Immutable sparse polynomial.

    >>> x, y = Polynomial.var("x"), Polynomial.var("y")
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = _normalize(c)
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: Coefficient) -> "Polynomial":
        return cls({(): c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Polynomial":
        return cls({make_monomial({name: power}): 1})

    @classmethod
    def from_powers(cls, powers: Mapping[str, int], coeff: Coefficient = 1) -> "Polynomial":
        return cls({make_monomial(powers): coeff})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)) or isinstance(value, Rational):
            return cls.const(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to Polynomial")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Coefficient]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def variables(self) -> set[str]:
        return {v for mono in self._terms for v, _ in mono}

    def coefficient(self, powers: Mapping[str, int]) -> Coefficient:
        return self._terms.get(make_monomial(powers), 0)

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant(self) -> Coefficient:
        """Value of a constant polynomial; ``ValueError`` if any variable occurs."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), 0)

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self._terms), default=0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                out[mono] = out.get(mono, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        try:
            return self._terms == Polynomial.coerce(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution -----------------------------------------------------

    def substitute(self, bindings: Mapping[str, object]) -> "Polynomial":
        """Replace every variable by the bound polynomial or number.

        All variables occurring in ``self`` must be bound; pass ``{"x": "x"}``
        style identity bindings (or the polynomial ``x``) to keep one symbolic.
        """
        missing = self.variables() - set(bindings)
        if missing:
            raise ValueError(f"unbound variable(s): {', '.join(sorted(missing, key=variable_key))}")
        images = {}
        for v in self.variables():
            b = bindings[v]
            images[v] = Polynomial.var(b) if isinstance(b, str) else Polynomial.coerce(b)
        powers: dict[tuple[str, int], Polynomial] = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = images[v] ** e
            return powers[key]

        out: dict = {}
        for mono, c in self._terms.items():
            term = Polynomial.const(c)
            for v, e in mono:
                term = term * power(v, e)
            for m, tc in term._terms.items():
                out[m] = out.get(m, 0) + tc
        return Polynomial(out)

    def evaluate(self, bindings: Mapping[str, object]) -> Fraction:
        """Exact value at a rational point (``0**0`` is taken as 1)."""
        missing = self.variables() - set(bindings)
        if missing:
            raise ValueError(f"unbound variable(s): {', '.join(sorted(missing, key=variable_key))}")
        vals = {v: Fraction(bindings[v]) for v in self.variables()}
        total = Fraction(0)
        for mono, c in self._terms.items():
            t = Fraction(c)
            for v, e in mono:
                t *= vals[v] ** e
            total += t
        return total

    # -- text -------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        return sorted(self._terms.items(), key=cmp_to_key(lambda s, t: _grlex_cmp(s[0], t[0])))

    def __str__(self) -> str:
        return canonical_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({canonical_text(self)!r})"


def _format_monomial(mono: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)


def canonical_text(p: Polynomial) -> str:
    """Deterministic text: graded order, ``*`` products, ``^`` powers."""
    if not p:
        return "0"
    parts = []
    for i, (mono, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        mag = -c if neg else c
        body = _format_monomial(mono)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if i == 0:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append((" - " if neg else " + ") + text)
    return "".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :func:`canonical_text`; accepts any term order and ``p/q`` coefficients."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    out: dict = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at offset {pos}: {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(1) is None and pos > 0:
            raise ValueError(f"missing operator at offset {pos}")
        coeff: Coefficient = 1
        powers: dict[str, int] = {}
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if re.fullmatch(r"[0-9]+(/[0-9]+)?", factor):
                coeff = coeff * Fraction(factor)
                continue
            if "^" in factor:
                name, exp = factor.split("^", 1)
                exp = int(exp)
            else:
                name, exp = factor, 1
            variable_key(name)
            powers[name] = powers.get(name, 0) + exp
        mono = make_monomial(powers)
        out[mono] = out.get(mono, 0) + sign * coeff
        pos = m.end()
    return Polynomial(out)


# -- functional interface ---------------------------------------------------

def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def substitute(p: Polynomial, bindings: Mapping[str, object]) -> Polynomial:
    return p.substitute(bindings)


def evaluate(p: Polynomial, bindings: Mapping[str, object]) -> Fraction:
    return p.evaluate(bindings)


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    out: dict = {}
    for p in polys:
        for mono, c in p.items():
            out[mono] = out.get(mono, 0) + c
    return Polynomial(out)


def from_counts(counts: Mapping[Monomial, int]) -> Polynomial:
    return Polynomial(dict(counts))


ZERO = Polynomial()
ONE = Polynomial.const(1)
X = Polynomial.var("x")
Y = Polynomial.var("y")
A = Polynomial.var("a")
B = Polynomial.var("b")
Z = Polynomial.var("z")
