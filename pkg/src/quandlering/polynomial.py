"""Exact multivariate polynomials over the rationals.

Monomials are plain tuples of exponents, one entry per variable ``t0 .. t{n-1}``.
Coefficients are :class:`fractions.Fraction`; nothing in here touches floats.

The text format shared with the rest of the package looks like::

    t0^2 - t0
    5*t4^2 - 5*t4
    3/2*t0*t1 + 1

``*`` is optional between factors and ``**`` is accepted as a synonym for ``^``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Coefficient = Union[int, Fraction]

ORDER_KINDS = ("lex", "grlex", "grevlex")


# ---------------------------------------------------------------------------
# monomials


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Return ``a / b``; caller guarantees ``b`` divides ``a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``precedence`` lists variable indices from most to least significant; ``None``
    means the default ``t0 > t1 > ... > t{n-1}``.
    """

    kind: str = "grevlex"
    precedence: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}; expected one of {ORDER_KINDS}")
        if self.precedence is not None:
            prec = tuple(self.precedence)
            if sorted(prec) != list(range(len(prec))):
                raise ValueError(f"precedence {prec} is not a permutation")
            object.__setattr__(self, "precedence", prec)

    def key(self, m: Monomial):
        """Sort key: larger key means larger monomial."""
        if self.precedence is not None:
            m = tuple(m[v] for v in self.precedence)
        if self.kind == "lex":
            return m
        if self.kind == "grlex":
            return (sum(m), m)
        return (sum(m), tuple(-e for e in reversed(m)))

    def __str__(self):
        return self.kind


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")


def as_order(order: MonomialOrder | str | None) -> MonomialOrder:
    if order is None:
        return GREVLEX
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None, nvars: int = 0):
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} exponents")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self._terms = clean
        self._nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], nvars: int) -> Polynomial:
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p._terms = terms
        p._nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c: Coefficient, nvars: int) -> Polynomial:
        c = Fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        m = [0] * nvars
        m[i] = 1
        return cls._raw({tuple(m): Fraction(1)}, nvars)

    # -- basic accessors ----------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def variables(self) -> frozenset[int]:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return frozenset(used)

    def univariate_variable(self) -> int | None:
        """Index of the only variable present, or ``None``."""
        vs = self.variables()
        return next(iter(vs)) if len(vs) == 1 else None

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # -- ordering -----------------------------------------------------------

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder) -> tuple[Monomial, Fraction]:
        m = self.leading_monomial(order)
        return m, self._terms[m]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def monic(self, order: MonomialOrder) -> Polynomial:
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        return self._raw({m: c / lc for m, c in self._terms.items()}, self._nvars)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other._nvars != self._nvars:
                raise ValueError(f"variable count mismatch: {self._nvars} vs {other._nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self._nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._raw(out, self._nvars)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({m: -c for m, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: Coefficient, m: Monomial | None = None) -> Polynomial:
        """Return ``c * x^m * self``."""
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self._nvars)
        if m is None:
            return self._raw({k: v * c for k, v in self._terms.items()}, self._nvars)
        return self._raw({mono_mul(k, m): v * c for k, v in self._terms.items()}, self._nvars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return self._raw(out, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self._nvars)
        for _ in range(k):
            result = result * self
        return result

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, point: Sequence[Coefficient]) -> Fraction:
        if len(point) != self._nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self._nvars}")
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    def substitute(self, mapping: Mapping[int, Polynomial | Coefficient]) -> Polynomial:
        """Replace variable ``i`` by ``mapping[i]`` (a polynomial or a number).

        The variable count is unchanged; substituted variables simply stop appearing.
        """
        if not mapping:
            return self
        images = {
            i: v if isinstance(v, Polynomial) else Polynomial.constant(v, self._nvars)
            for i, v in mapping.items()
        }
        numeric = all(p.is_constant() for p in images.values())
        if numeric:
            # fast path: plain constant folding
            values = {i: p._terms.get((0,) * self._nvars, Fraction(0)) for i, p in images.items()}
            out: dict[Monomial, Fraction] = {}
            for m, c in self._terms.items():
                coeff = c
                rest = list(m)
                for i, v in values.items():
                    if m[i]:
                        coeff *= v ** m[i]
                        rest[i] = 0
                if coeff:
                    key = tuple(rest)
                    s = out.get(key, 0) + coeff
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            return self._raw(out, self._nvars)
        result = Polynomial.zero(self._nvars)
        for m, c in self._terms.items():
            rest = list(m)
            term = Polynomial.constant(c, self._nvars)
            for i, img in images.items():
                if m[i]:
                    term = term * img ** m[i]
                    rest[i] = 0
            result = result + term.scale(1, tuple(rest))
        return result

    def with_nvars(self, nvars: int) -> Polynomial:
        """Embed into (or restrict to) a ring with ``nvars`` variables."""
        if nvars == self._nvars:
            return self
        out = {}
        for m, c in self._terms.items():
            if nvars < self._nvars and any(m[nvars:]):
                raise ValueError(f"polynomial uses variables beyond t{nvars - 1}")
            out[(tuple(m) + (0,) * nvars)[:nvars]] = c
        return self._raw(out, nvars)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self._nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, nvars={self._nvars})"

    def __str__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# text format


def _format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"t{i}")
        elif e > 1:
            parts.append(f"t{i}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text: terms in decreasing ``order``, e.g. ``5*t4^2 - 5*t4``."""
    if p.is_zero():
        return "0"
    out = []
    for idx, (m, c) in enumerate(p.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(m)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class PolynomialParseError(ValueError):
    """Bad polynomial text; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>t(?P<idx>\d+))|(?P<pow>\^|\*\*)|(?P<op>[-+*]))"
)


def _tokenize(text: str, line: int):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise PolynomialParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = mt.lastgroup if mt.lastgroup != "idx" else "var"
        start = mt.start(kind) + 1
        if kind == "num":
            tokens.append(("num", mt.group("num"), start))
        elif kind == "var":
            tokens.append(("var", int(mt.group("idx")), start))
        elif kind == "pow":
            tokens.append(("pow", "^", start))
        else:
            tokens.append(("op", mt.group("op"), start))
        pos = mt.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


def _parse_terms(text: str, line: int) -> list[tuple[Fraction, dict[int, int]]]:
    tokens = _tokenize(text, line)
    i = 0
    terms = []

    def peek():
        return tokens[i]

    if peek()[0] == "end":
        raise PolynomialParseError("empty polynomial", line, 1)
    first = True
    while peek()[0] != "end":
        sign = 1
        kind, val, col = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise PolynomialParseError("expected '+' or '-'", line, col)
        first = False
        coeff = Fraction(sign)
        powers: dict[int, int] = {}
        nfactors = 0
        while True:
            kind, val, col = peek()
            if kind == "num":
                num, _, den = val.partition("/")
                if den and int(den) == 0:
                    raise PolynomialParseError("zero denominator", line, col)
                coeff *= Fraction(int(num), int(den) if den else 1)
                i += 1
            elif kind == "var":
                i += 1
                exp = 1
                if peek()[0] == "pow":
                    i += 1
                    k2, v2, c2 = peek()
                    if k2 != "num" or "/" in v2:
                        raise PolynomialParseError("expected integer exponent", line, c2)
                    exp = int(v2)
                    i += 1
                powers[val] = powers.get(val, 0) + exp
            else:
                if nfactors == 0:
                    raise PolynomialParseError("expected a number or variable", line, col)
                break
            nfactors += 1
            kind, val, col = peek()
            if kind == "op" and val == "*":
                i += 1
                if peek()[0] not in ("num", "var"):
                    raise PolynomialParseError("expected a factor after '*'", line, peek()[2])
            elif kind == "pow":
                raise PolynomialParseError("exponent must follow a variable", line, col)
        terms.append((coeff, powers))
    return terms


def parse_polynomial(text: str, nvars: int | None = None, line: int = 1) -> Polynomial:
    """Parse one polynomial. ``nvars`` defaults to one past the highest index used."""
    terms = _parse_terms(text, line)
    top = max((v for _, pw in terms for v in pw), default=-1) + 1
    if nvars is None:
        nvars = top
    elif top > nvars:
        raise PolynomialParseError(f"variable t{top - 1} exceeds {nvars} variables", line, 1)
    out: dict[Monomial, Fraction] = {}
    for c, pw in terms:
        m = [0] * nvars
        for v, e in pw.items():
            m[v] += e
        key = tuple(m)
        out[key] = out.get(key, 0) + c
    return Polynomial(out, nvars)


def parse_system(text: str, nvars: int | None = None) -> list[Polynomial]:
    """Parse one polynomial per non-blank line; ``#`` starts a comment."""
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if body.strip():
            raw.append((lineno, _parse_terms(body, lineno)))
    if nvars is None:
        nvars = max((v + 1 for _, terms in raw for _, pw in terms for v in pw), default=1)
    polys = []
    for lineno, terms in raw:
        out: dict[Monomial, Fraction] = {}
        for c, pw in terms:
            m = [0] * nvars
            for v, e in pw.items():
                if v >= nvars:
                    raise PolynomialParseError(f"variable t{v} exceeds {nvars} variables", lineno, 1)
                m[v] += e
            out[tuple(m)] = out.get(tuple(m), 0) + c
        polys.append(Polynomial(out, nvars))
    return polys


def format_system(polys: Iterable[Polynomial], order: MonomialOrder = GREVLEX) -> str:
    return "".join(format_polynomial(p, order) + "\n" for p in polys)


# ---------------------------------------------------------------------------
# univariate integer roots


def _divisors(a: int) -> list[int]:
    a = abs(a)
    small, large = [], []
    d = 1
    while d * d <= a:
        if a % d == 0:
            small.append(d)
            if d * d != a:
                large.append(a // d)
        d += 1
    return small + large[::-1]


def integer_roots(p: Polynomial) -> list[int]:
    """Sorted integer roots of a univariate (or constant) polynomial.

    Clears denominators, factors out the largest power of the variable, then
    tries every signed divisor of the remaining constant term. The zero
    polynomial has every integer as a root and is rejected.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    vs = p.variables()
    if not vs:
        return []
    if len(vs) > 1:
        raise ValueError(f"{p} is not univariate")
    (v,) = vs
    scale = math.lcm(*(c.denominator for c in p._terms.values()))
    coeffs: dict[int, int] = {m[v]: int(c * scale) for m, c in p.items()}
    low = min(coeffs)
    roots = {0} if low > 0 else set()
    shifted = {e - low: c for e, c in coeffs.items()}
    if len(shifted) > 1:
        top = max(shifted)
        dense = [shifted.get(e, 0) for e in range(top, -1, -1)]
        for d in _divisors(shifted[0]):
            for r in (d, -d):
                acc = 0
                for c in dense:
                    acc = acc * r + c
                if acc == 0:
                    roots.add(r)
    return sorted(roots)

