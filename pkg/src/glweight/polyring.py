"""Sparse multivariate polynomials with exact rational coefficients.

Generators are ``N``, the Casimirs ``C1, C2, ...``, the shifted power sums
``p1, p2, ...`` and the formal chord-diagram symbols ``K1, K2, ...``.  A
monomial is a sorted tuple of ``(generator, exponent)`` pairs; a polynomial
is a dict from monomials to nonzero coefficients.  Coefficients are kept as
``int`` whenever they are integral and as :class:`fractions.Fraction`
otherwise, so equality and hashing never depend on the numeric type.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

Rational = Union[int, Fraction]

_KIND_NAMES = ("N", "C", "p", "K")
_N, _C, _P, _K = range(4)


class Generator(NamedTuple):
    """A polynomial variable; tuple order gives N < C1 < C2 < ... < p1 < ... < K1 < ..."""

    kind: int
    index: int = 0

    def __str__(self) -> str:
        if self.kind == _N:
            return "N"
        return f"{_KIND_NAMES[self.kind]}{self.index}"

    def latex(self) -> str:
        if self.kind == _N:
            return "N"
        return f"{_KIND_NAMES[self.kind]}_{{{self.index}}}"

    @property
    def is_casimir(self) -> bool:
        return self.kind == _C

    @property
    def is_power_sum(self) -> bool:
        return self.kind == _P


def _indexed(kind: int, k: int) -> Generator:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"generator index must be a positive integer, got {k!r}")
    return Generator(kind, k)


NVAR = Generator(_N, 0)


def C(k: int) -> Generator:
    return _indexed(_C, k)


def P(k: int) -> Generator:
    return _indexed(_P, k)


def K(k: int) -> Generator:
    return _indexed(_K, k)


def parse_generator(name: str) -> Generator:
    m = re.fullmatch(r"(N)|([CpPK])_?\{?(\d+)\}?", name)
    if m is None:
        raise ValueError(f"unknown generator {name!r}")
    if m.group(1):
        return NVAR
    kind = {"C": _C, "p": _P, "P": _P, "K": _K}[m.group(2)]
    return _indexed(kind, int(m.group(3)))


# -- monomials -------------------------------------------------------------

Monomial = tuple  # tuple[tuple[Generator, int], ...], sorted by generator

ONE_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for g, e in b:
        d[g] = d.get(g, 0) + e
    return tuple(sorted(d.items()))


def mono_pow(a: Monomial, e: int) -> Monomial:
    return tuple((g, x * e) for g, x in a)


def weighted_c_degree(mono: Monomial) -> int:
    """Sum of ``k * exponent`` over the Casimir generators ``C_k``."""
    return sum(g.index * e for g, e in mono if g.kind == _C)


def weighted_p_degree(mono: Monomial) -> int:
    return sum(g.index * e for g, e in mono if g.kind == _P)


def _norm(c: Rational) -> Rational:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


# -- polynomials -----------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial in canonical form (no zero coefficients)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = _norm(Fraction(c) if isinstance(c, str) else c)
        self.terms: dict = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Polynomial:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Rational) -> Polynomial:
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, g: Generator | str, exponent: int = 1) -> Polynomial:
        if isinstance(g, str):
            g = parse_generator(g)
        if exponent == 0:
            return cls.constant(1)
        return cls._raw({((g, exponent),): 1})

    @classmethod
    def coerce(cls, x) -> Polynomial:
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.constant(x)
        if isinstance(x, Generator):
            return cls.var(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def generators(self) -> set:
        return {g for mono in self.terms for g, _ in mono}

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def coefficient(self, mono: Monomial) -> Rational:
        return self.terms.get(mono, 0)

    def constant_term(self) -> Rational:
        return self.terms.get(ONE_MONO, 0)

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def max_weighted_c_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(weighted_c_degree(m) for m in self.terms)

    def top_c_degree_part(self) -> Polynomial:
        d = self.max_weighted_c_degree()
        return Polynomial._raw({m: c for m, c in self.terms.items() if weighted_c_degree(m) == d})

    # arithmetic

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> Polynomial:
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for mono, c in small.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = _norm(s)
            else:
                out.pop(mono, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return Polynomial.coerce(other) - self

    def scale(self, c: Rational) -> Polynomial:
        if not c:
            return ZERO
        return Polynomial._raw({m: _norm(x * c) for m, x in self.terms.items()})

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(b) == 1 and ONE_MONO in b:
            return self.scale(b[ONE_MONO])
        if len(a) == 1 and ONE_MONO in a:
            return other.scale(a[ONE_MONO])
        out: dict = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # substitution and evaluation

    def substitute(self, assignment: Mapping[Generator, object]) -> Polynomial:
        """Simultaneous substitution; unmapped generators are left alone."""
        if not assignment:
            return self
        images = {g: Polynomial.coerce(v) for g, v in assignment.items()}
        powers: dict = {}

        def power(g, e):
            key = (g, e)
            if key not in powers:
                powers[key] = images[g] ** e
            return powers[key]

        out = ZERO
        for mono, c in self.terms.items():
            kept = tuple((g, e) for g, e in mono if g not in images)
            term = Polynomial._raw({kept: c})
            for g, e in mono:
                if g in images:
                    term = term * power(g, e)
                    if not term:
                        break
            out = out + term
        return out

    def evaluate(self, values: Mapping[Generator, Rational]) -> Rational:
        total: Rational = 0
        for mono, c in self.terms.items():
            v = Fraction(c)
            for g, e in mono:
                if g not in values:
                    raise KeyError(f"no value bound for generator {g}")
                v *= Fraction(values[g]) ** e
            total += v
        return _norm(Fraction(total))

    # serialization

    def to_json_obj(self) -> dict:
        terms = []
        for mono, c in self.sorted_terms():
            c = Fraction(c)
            terms.append({
                "coeff": f"{c.numerator}/{c.denominator}",
                "mono": {str(g): e for g, e in mono},
            })
        return {"terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> Polynomial:
        if not isinstance(obj, Mapping) or "terms" not in obj:
            raise ValueError("polynomial JSON must be an object with a 'terms' list")
        out: dict = {}
        for t in obj["terms"]:
            c = Fraction(t["coeff"])
            mono = []
            for name, e in t["mono"].items():
                if not isinstance(e, int) or e < 1:
                    raise ValueError(f"bad exponent {e!r} for {name}")
                mono.append((parse_generator(name), e))
            mono = tuple(sorted(mono))
            if len({g for g, _ in mono}) != len(mono):
                raise ValueError("repeated generator in monomial")
            if c == 0:
                raise ValueError("zero coefficient in polynomial JSON")
            if mono in out:
                raise ValueError("duplicate monomial in polynomial JSON")
            out[mono] = _norm(c)
        return cls._raw(out)

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        return cls.from_json_obj(json.loads(text))

    def _format(self, var, mul: str, frac) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self.sorted_terms():
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = [var(g, e) for g, e in mono]
            if not factors:
                body = frac(a)
            elif a == 1:
                body = mul.join(factors)
            else:
                body = frac(a) + mul + mul.join(factors)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        def var(g, e):
            return str(g) if e == 1 else f"{g}^{e}"

        return self._format(var, "*", str)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_latex(self) -> str:
        def var(g, e):
            return g.latex() if e == 1 else f"{g.latex()}^{{{e}}}"

        def frac(a):
            if a.denominator == 1:
                return str(a.numerator)
            return f"\\frac{{{a.numerator}}}{{{a.denominator}}}"

        return self._format(var, " ", frac)

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        return _Parser(text).parse()


ZERO = Polynomial._raw({})
ONE = Polynomial._raw({ONE_MONO: 1})


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_substitute(p: Polynomial, assignment: Mapping[Generator, object]) -> Polynomial:
    return p.substitute(assignment)


def poly_eval_rational(p: Polynomial, values: Mapping[Generator, Rational]) -> Rational:
    return p.evaluate(values)


# -- text parser -----------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>N|[CpPK]_?\{\d+\}|[CpPK]_?\d+)|(?P<op>[-+*/^()]))"
)


class PolynomialParseError(ValueError):
    pass


class _Parser:
    """Recursive descent over ``+ - * / ^ ( )``; juxtaposition multiplies.

    Accepts both the CLI's output (``-N*C2 + C1^2``) and table notation
    (``2 C_2 N^2+(-2 C_1^2-3 C_2^2) N``).  Division is by constants only.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                bad = text[pos:].strip().split()[0] if text[pos:].strip() else text[pos:]
                raise PolynomialParseError(f"unexpected token {bad!r} at offset {pos}")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, tok):
        kind, val, pos = tok
        if kind is None:
            raise PolynomialParseError("unexpected end of input")
        raise PolynomialParseError(f"unexpected token {val!r} at offset {pos}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolynomialParseError("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            self.fail(self.peek())
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            acc = acc + self.term() * sign
        return acc

    def _starts_factor(self, tok) -> bool:
        kind, val, _ = tok
        return kind in ("num", "var") or val == "("

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif tok[1] == "/":
                self.take()
                d = self.factor()
                if len(d.terms) != 1 or ONE_MONO not in d.terms:
                    raise PolynomialParseError(f"division by non-constant at offset {tok[2]}")
                acc = acc.scale(Fraction(1) / Fraction(d.terms[ONE_MONO]))
            elif self._starts_factor(tok):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] == "num":
                return base ** int(tok[1])
            self.fail(tok)
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return Polynomial.constant(int(val))
        if kind == "var":
            return Polynomial.var(parse_generator(val))
        if val == "(":
            inner = self.expr()
            if self.take()[1] != ")":
                raise PolynomialParseError("missing closing parenthesis")
            return inner
        self.fail(tok)


# -- truncated power series ------------------------------------------------


class TruncationError(ValueError):
    pass


class PowerSeries:
    """Series ``sum_j coeffs[j] u^j`` known modulo ``u^(order+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = [Polynomial.coerce(c) for c in list(coeffs)[: order + 1]]
        cs += [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([ONE], order)

    def __getitem__(self, j: int) -> Polynomial:
        return self.coeffs[j] if 0 <= j <= self.order else ZERO

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*u^{j}" for j, c in enumerate(self.coeffs) if c)
        return f"PowerSeries({body or '0'}, order={self.order})"

    def _check(self, other: PowerSeries):
        if self.order != other.order:
            raise TruncationError(f"truncation mismatch: {self.order} vs {other.order}")

    def __add__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        return PowerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def scale(self, c) -> PowerSeries:
        c = Polynomial.coerce(c)
        return PowerSeries([x * c for x in self.coeffs], self.order)

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        return series_mul(self, other)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    a._check(b)
    T = a.order
    out = []
    for n in range(T + 1):
        acc = ZERO
        for j in range(n + 1):
            if a.coeffs[j] and b.coeffs[n - j]:
                acc = acc + a.coeffs[j] * b.coeffs[n - j]
        out.append(acc)
    return PowerSeries(out, T)


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a with zero constant term, via n*b_n = sum_k k*a_k*b_(n-k)."""
    if a.coeffs[0]:
        raise ValueError("series_exp needs a zero constant term")
    T = a.order
    b = [ONE]
    for n in range(1, T + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if a.coeffs[k] and b[n - k]:
                acc = acc + (a.coeffs[k] * b[n - k]).scale(k)
        b.append(acc.scale(Fraction(1, n)))
    return PowerSeries(b, T)


def series_log(a: PowerSeries) -> PowerSeries:
    """log(a) for a with constant term 1, via n*b_n = n*a_n - sum_k k*b_k*a_(n-k)."""
    if a.coeffs[0] != ONE:
        raise ValueError("series_log needs constant term 1")
    T = a.order
    b = [ZERO]
    for n in range(1, T + 1):
        acc = a.coeffs[n].scale(n)
        for k in range(1, n):
            if b[k] and a.coeffs[n - k]:
                acc = acc - (b[k] * a.coeffs[n - k]).scale(k)
        b.append(acc.scale(Fraction(1, n)))
    return PowerSeries(b, T)


def series_from_terms(terms: Iterable[tuple[int, object]], order: int) -> PowerSeries:
    coeffs = [ZERO] * (order + 1)
    for j, c in terms:
        if j <= order:
            coeffs[j] = coeffs[j] + Polynomial.coerce(c)
    return PowerSeries(coeffs, order)
