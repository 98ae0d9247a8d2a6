"""Projection of chord diagrams to primitive elements and ``w_bar = w_GL . pi``.

Formal products of diagrams are sorted tuples of :class:`ChordDiagram`; the
empty diagram is the unit and never appears inside a product.  Diagrams are
compared by their sorted pair lists only, which is enough here because every
chord subdiagram of ``K_n`` relabels to exactly ``K_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator

from .diagrams import EMPTY_DIAGRAM, ChordDiagram, chord_to_perm, make_kn
from .engine import WeightSystem
from .polyring import ONE, ONE_MONO, ZERO, K, Polynomial, PowerSeries, mono_mul, series_log


def chord_subdiagram(d: ChordDiagram, chords: Iterable[int]) -> ChordDiagram:
    """Induced diagram on the chords with the given indices into ``d.pairs``."""
    chosen = sorted(set(chords))
    if any(not 0 <= c < d.n for c in chosen):
        raise ValueError(f"chord index out of range 0..{d.n - 1}")
    ends = sorted(x for c in chosen for x in d.pairs[c])
    relabel = {x: i for i, x in enumerate(ends, 1)}
    return ChordDiagram(tuple((relabel[a], relabel[b]) for a, b in (d.pairs[c] for c in chosen)))


def coproduct(d: ChordDiagram) -> list:
    """All ``(D_J, D_complement)`` over subsets ``J`` of chords, ``J`` as a bitmask in order."""
    n = d.n
    out = []
    for mask in range(1 << n):
        J = [c for c in range(n) if mask >> c & 1]
        Jbar = [c for c in range(n) if not mask >> c & 1]
        out.append((chord_subdiagram(d, J), chord_subdiagram(d, Jbar)))
    return out


def set_partitions(items: list) -> Iterator[list]:
    """Unordered partitions of ``items`` into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


class DiagramCombination:
    """Integer combination of formal products of chord diagrams."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        for prod, c in (terms or {}).items():
            key = tuple(sorted(x for x in prod if x.n > 0))
            clean[key] = clean.get(key, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def of(cls, *diagrams: ChordDiagram, coeff: int = 1) -> DiagramCombination:
        return cls({tuple(diagrams): coeff})

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagramCombination):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: DiagramCombination) -> DiagramCombination:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return DiagramCombination(out)

    def __sub__(self, other: DiagramCombination) -> DiagramCombination:
        return self + DiagramCombination({k: -v for k, v in other.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for prod in sorted(self.terms, key=lambda p: (-sum(d.n for d in p), len(p), p)):
            c = self.terms[prod]
            body = "*".join(f"[{d}]" for d in prod) or "1"
            parts.append(f"{c:+d} {body}")
        return " ".join(parts)

    def evaluate(self, value) -> Polynomial:
        """Replace each diagram by ``value(diagram)`` and each product by the product."""
        out = ZERO
        for prod, c in self.terms.items():
            term = Polynomial.constant(c)
            for d in prod:
                term = term * value(d)
            out = out + term
        return out


def primitive_projection(d: ChordDiagram) -> DiagramCombination:
    """``pi(D) = D - sum_{i>=2} (-1)^i (i-1)! sum_{splittings into i parts} D_1 ... D_i``."""
    terms: dict = {}
    for part in set_partitions(list(range(d.n))):
        i = len(part)
        coeff = 1 if i <= 1 else -((-1) ** i) * factorial(i - 1)
        key = tuple(sorted(chord_subdiagram(d, block) for block in part))
        terms[key] = terms.get(key, 0) + coeff
    if d.n == 0:
        return DiagramCombination({(): 1})
    return DiagramCombination(terms)


class DiagramValues:
    """``w_GL`` on chord diagrams, memoized per diagram encoding."""

    def __init__(self, ws: WeightSystem | None = None):
        self.ws = ws or WeightSystem()
        self._memo: dict = {}

    def __call__(self, d: ChordDiagram) -> Polynomial:
        if d not in self._memo:
            self._memo[d] = self.ws(chord_to_perm(d))
        return self._memo[d]


_default_values = DiagramValues()


def wbar(d: ChordDiagram, values: DiagramValues | None = None) -> Polynomial:
    """``w_GL(pi(D))``."""
    return primitive_projection(d).evaluate(values or _default_values)


# -- exponential generating series in the formal K-algebra ------------------


@dataclass(frozen=True)
class KSeries:
    """``coeffs[n]`` is the coefficient of ``x^n / n!``, a polynomial in ``K1, K2, ...``."""

    n_max: int
    coeffs: tuple

    def __getitem__(self, n: int) -> Polynomial:
        return self.coeffs[n]

    def combination(self, n: int) -> DiagramCombination:
        return ksymbols_to_combination(self.coeffs[n])


def kn_primitive_series(n_max: int) -> KSeries:
    """Coefficients of ``log(1 + sum_n K_n x^n / n!)`` up to ``x^n_max``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    base = [ONE] + [Polynomial.var(K(n)).scale(Fraction(1, factorial(n)))
                    for n in range(1, n_max + 1)]
    logged = series_log(PowerSeries(base, n_max))
    return KSeries(n_max, tuple(logged[n].scale(factorial(n)) for n in range(n_max + 1)))


def ksymbols_to_combination(p: Polynomial) -> DiagramCombination:
    terms = {}
    for mono, c in p.terms.items():
        if Fraction(c).denominator != 1:
            raise ValueError(f"non-integral coefficient {c} in diagram combination")
        prod = []
        for g, e in mono:
            if g.kind != 3:
                raise ValueError(f"{g} is not a diagram symbol K_n")
            prod.extend([make_kn(g.index)] * e)
        terms[tuple(prod)] = int(c)
    return DiagramCombination(terms)


def _tensor_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            key = (mono_mul(l1, l2), mono_mul(r1, r2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _kn_coproduct(n: int) -> dict:
    def sym(j):
        return ((K(j), 1),) if j else ONE_MONO

    return {(sym(j), sym(n - j)): comb(n, j) for j in range(n + 1)}


def formal_coproduct(p: Polynomial) -> dict:
    """Coproduct in the free commutative algebra on ``K_n``, ``Delta K_n = sum binom(n,j) K_j (x) K_(n-j)``.

    Returns ``{(left monomial, right monomial): coefficient}``.
    """
    out: dict = {}
    for mono, c in p.terms.items():
        acc = {(ONE_MONO, ONE_MONO): c}
        for g, e in mono:
            if g.kind != 3:
                raise ValueError(f"{g} is not a diagram symbol K_n")
            for _ in range(e):
                acc = _tensor_mul(acc, _kn_coproduct(g.index))
        for k, v in acc.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def is_primitive(p: Polynomial) -> bool:
    expected: dict = {}
    for mono, c in p.terms.items():
        for key in ((ONE_MONO, mono), (mono, ONE_MONO)):
            expected[key] = expected.get(key, 0) + c
    expected = {k: v for k, v in expected.items() if v}
    return formal_coproduct(p) == expected
