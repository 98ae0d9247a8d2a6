"""Brute-force computations in U(gl_N) for small concrete N.

Elements are kept in the PBW basis with the generator order

    lowering units E_ij (i > j)  <  Cartan units E_ii  <  raising units E_ij (i < j),

so a PBW monomial lies in ``n_- U + U n_+`` unless it consists of Cartan
units only, and the Harish-Chandra projection is just "drop every other
monomial".  Words are straightened with

    E_ab E_cd = E_cd E_ab + delta_bc E_ad - delta_da E_cb.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .diagrams import Images, Permutation
from .polyring import NVAR, Polynomial

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class OracleResourceError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_index_tuples: int = 3 ** 8   # N^m summands in w_direct
    max_terms: int = 500_000         # PBW terms in any single element


DEFAULT_LIMITS = OracleLimits()


@lru_cache(maxsize=None)
def pbw_units(N: int) -> tuple:
    lowering = sorted((i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i > j)
    cartan = [(i, i) for i in range(1, N + 1)]
    raising = sorted((i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i < j)
    return tuple(lowering + cartan + raising)


@lru_cache(maxsize=None)
def _rank_table(N: int) -> dict:
    return {u: r for r, u in enumerate(pbw_units(N))}


def unit_kind(i: int, j: int) -> str:
    return "lowering" if i > j else "cartan" if i == j else "raising"


class Straightener:
    """Memoized rewriting of words (tuples of unit ranks) into PBW form.

    ``order='first'`` resolves the leftmost out-of-order pair first,
    ``order='last'`` the rightmost; the normal form does not depend on it.
    """

    def __init__(self, N: int, order: str = "first", limits: OracleLimits = DEFAULT_LIMITS):
        if order not in ("first", "last"):
            raise ValueError("order must be 'first' or 'last'")
        self.N = N
        self.order = order
        self.limits = limits
        self.units = pbw_units(N)
        self.rank = _rank_table(N)
        self._memo: dict = {}
        # bracket of two units as a list of (coeff, unit rank)
        self._bracket = {}
        for x, (a, b) in enumerate(self.units):
            for y, (c, d) in enumerate(self.units):
                out = []
                if b == c:
                    out.append((1, self.rank[(a, d)]))
                if d == a:
                    out.append((-1, self.rank[(c, b)]))
                self._bracket[x, y] = out

    def _descent(self, word):
        rng = range(len(word) - 1)
        if self.order == "last":
            rng = reversed(rng)
        for p in rng:
            if word[p] > word[p + 1]:
                return p
        return -1

    def normalize(self, word: tuple) -> dict:
        memo = self._memo
        hit = memo.get(word)
        if hit is not None:
            return hit
        p = self._descent(word)
        if p < 0:
            result = {word: 1}
        else:
            x, y = word[p], word[p + 1]
            head, tail = word[:p], word[p + 2:]
            result = dict(self.normalize(head + (y, x) + tail))
            for c, z in self._bracket[x, y]:
                for mono, v in self.normalize(head + (z,) + tail).items():
                    s = result.get(mono, 0) + c * v
                    if s:
                        result[mono] = s
                    else:
                        del result[mono]
            if len(result) > self.limits.max_terms:
                raise OracleResourceError(f"straightening exceeded {self.limits.max_terms} terms")
        memo[word] = result
        return result


_straighteners: dict = {}


def straightener(N: int, order: str = "first") -> Straightener:
    key = (N, order)
    if key not in _straighteners:
        _straighteners[key] = Straightener(N, order)
    return _straighteners[key]


class UElement:
    """Finite combination of PBW monomials (sorted tuples of unit ranks)."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: dict | None = None):
        if N < 1:
            raise ValueError("N must be >= 1")
        self.N = N
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def unit(cls, N: int) -> UElement:
        return cls(N, {(): 1})

    @classmethod
    def scalar(cls, N: int, c) -> UElement:
        return cls(N, {(): c})

    @classmethod
    def generator(cls, N: int, i: int, j: int) -> UElement:
        if not (1 <= i <= N and 1 <= j <= N):
            raise ValueError(f"E_{i}{j} outside gl_{N}")
        return cls(N, {(_rank_table(N)[(i, j)],): 1})

    def _same(self, other: UElement):
        if self.N != other.N:
            raise ValueError(f"N mismatch: {self.N} vs {other.N}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, UElement):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def __add__(self, other: UElement) -> UElement:
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return UElement(self.N, out)

    def __sub__(self, other: UElement) -> UElement:
        return self + other.scale(-1)

    def scale(self, c) -> UElement:
        return UElement(self.N, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> UElement:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return u_mul(self, other)

    def is_zero(self) -> bool:
        return not self.terms

    def pbw_terms(self) -> list:
        """Sorted ``(coeff, [((i, j), exponent), ...])`` pairs."""
        units = pbw_units(self.N)
        out = []
        for mono in sorted(self.terms):
            factors = []
            for r in mono:
                if factors and factors[-1][0] == units[r]:
                    factors[-1] = (units[r], factors[-1][1] + 1)
                else:
                    factors.append((units[r], 1))
            out.append((self.terms[mono], factors))
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, factors in self.pbw_terms():
            body = " ".join(f"E{i}{j}" + (f"^{e}" if e > 1 else "") for (i, j), e in factors)
            c = Fraction(c)
            coeff = "" if abs(c) == 1 and body else str(abs(c))
            parts.append(("-" if c < 0 else "+", (coeff + " " + body).strip()))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {b}" for sg, b in parts[1:])

    def __repr__(self) -> str:
        return f"UElement(N={self.N}, {self})"


def u_mul(a: UElement, b: UElement, order: str = "first") -> UElement:
    a._same(b)
    st = straightener(a.N, order)
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c = ca * cb
            for m, v in st.normalize(ma + mb).items():
                out[m] = out.get(m, 0) + c * v
    if len(out) > st.limits.max_terms:
        raise OracleResourceError(f"product exceeded {st.limits.max_terms} terms")
    return UElement(a.N, out)


def normal_order_word(N: int, word: Sequence, order: str = "first") -> UElement:
    """PBW form of a product of matrix units given as ``[(i, j), ...]``."""
    rank = _rank_table(N)
    return UElement(N, straightener(N, order).normalize(tuple(rank[u] for u in word)))


def w_direct(p: Permutation | Images, N: int, limits: OracleLimits = DEFAULT_LIMITS,
             order: str = "first") -> UElement:
    """``sum_i E_{i_1 i_s(1)} ... E_{i_m i_s(m)}`` summed over all index tuples."""
    images = p.images if isinstance(p, Permutation) else tuple(p)
    m = len(images)
    if N ** m > limits.max_index_tuples:
        raise OracleResourceError(
            f"w_direct needs {N}^{m} = {N ** m} summands, limit is {limits.max_index_tuples}")
    rank = _rank_table(N)
    st = straightener(N, order)
    out: dict = {}
    for idx in product(range(1, N + 1), repeat=m):
        word = tuple(rank[(idx[q], idx[images[q] - 1])] for q in range(m))
        for mono, v in st.normalize(word).items():
            out[mono] = out.get(mono, 0) + v
    return UElement(N, out)


@lru_cache(maxsize=None)
def casimir_element(k: int, N: int) -> UElement:
    """``C_k = sum E_{i1 i2} E_{i2 i3} ... E_{ik i1}``."""
    if k < 1:
        raise ValueError("Casimir index must be >= 1")
    return w_direct(tuple(list(range(2, k + 1)) + [1]), N)


@lru_cache(maxsize=None)
def _casimir_power(k: int, e: int, N: int) -> UElement:
    if e == 1:
        return casimir_element(k, N)
    return u_mul(_casimir_power(k, e - 1, N), casimir_element(k, N))


def expand_polynomial(p: Polynomial, N: int) -> UElement:
    """Evaluate a polynomial in ``N, C_k`` inside U(gl_N) for a concrete ``N``."""
    out = UElement(N)
    for mono, c in p.terms.items():
        term = UElement.scalar(N, c)
        for g, e in mono:
            if g == NVAR:
                term = term.scale(N ** e)
            elif g.is_casimir:
                term = u_mul(term, _casimir_power(g.index, e, N))
            else:
                raise ValueError(f"expand_polynomial expects N and C_k only, found {g}")
        out = out + term
    return out


def is_central(a: UElement) -> bool:
    for i in range(1, a.N + 1):
        for j in range(1, a.N + 1):
            e = UElement.generator(a.N, i, j)
            if u_mul(a, e) != u_mul(e, a):
                return False
    return True


@dataclass(frozen=True)
class CartanPolynomial:
    """Polynomial in the commuting ``E_11..E_NN``: exponent vector -> coefficient."""

    N: int
    terms: tuple  # sorted ((exponents, coeff), ...)

    def evaluate(self, lam: Sequence) -> Fraction:
        lam = [Fraction(x) for x in getattr(lam, "lam", lam)]
        if len(lam) != self.N:
            raise ValueError(f"weight has {len(lam)} entries, expected {self.N}")
        total = Fraction(0)
        for exps, c in self.terms:
            v = Fraction(c)
            for x, e in zip(lam, exps):
                if e:
                    v *= x ** e
            total += v
        return total

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        # higher total degree first, then E11 before E22
        for exps, c in sorted(self.terms, key=lambda t: (-sum(t[0]), [-e for e in t[0]])):
            body = " ".join(f"E{i}{i}" + (f"^{e}" if e > 1 else "")
                            for i, e in enumerate(exps, 1) if e)
            c = Fraction(c)
            coeff = "" if abs(c) == 1 and body else str(abs(c))
            parts.append(("-" if c < 0 else "+", (coeff + " " + body).strip()))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {b}" for sg, b in parts[1:])


def cartan_part(a: UElement) -> CartanPolynomial:
    """Harish-Chandra projection: keep the PBW monomials made of Cartan units only."""
    units = pbw_units(a.N)
    out = {}
    for mono, c in a.terms.items():
        exps = [0] * a.N
        for r in mono:
            i, j = units[r]
            if i != j:
                break
            exps[i - 1] += 1
        else:
            out[tuple(exps)] = c
    return CartanPolynomial(a.N, tuple(sorted(out.items())))
