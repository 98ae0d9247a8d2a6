"""Harish-Chandra images of Casimirs in the shifted power sums ``p_k``.

The images ``phi(C_k)`` are read off the generating identity

    1 - N u - sum_k phi(C_k) u^(k+1)
        = (1 - N u) exp( sum_j ((1 - (N-1)u/2)^(-j) - (1 - (N+1)u/2)^(-j)) u^j p_j / j ),

expanded with ``N`` symbolic, so each image is valid for every ``N`` at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .polyring import (
    NVAR,
    ONE,
    ZERO,
    C,
    P,
    Polynomial,
    PowerSeries,
    series_exp,
    series_mul,
)

_N = Polynomial.var(NVAR)


@dataclass(frozen=True)
class WeightVector:
    lam: tuple

    def __post_init__(self):
        lam = tuple(Fraction(x) for x in self.lam)
        if not lam:
            raise ValueError("a weight vector needs N >= 1 entries")
        object.__setattr__(self, "lam", lam)

    @property
    def N(self) -> int:
        return len(self.lam)

    @classmethod
    def parse(cls, text: str) -> WeightVector:
        try:
            return cls(tuple(Fraction(t.strip()) for t in text.split(",")))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad weight vector {text!r}; expected e.g. '1,0,0'") from None


def _inverse_power_series(alpha: Polynomial, j: int, order: int) -> PowerSeries:
    """(1 - alpha u)^(-j) = sum_i binom(j+i-1, i) alpha^i u^i."""
    coeffs = []
    power = ONE
    for i in range(order + 1):
        coeffs.append(power.scale(comb(j + i - 1, i)))
        power = power * alpha
    return PowerSeries(coeffs, order)


def casimir_generating_series(order: int) -> PowerSeries:
    """Right-hand side of the generating identity modulo ``u^(order+1)``."""
    alpha = (_N - 1).scale(Fraction(1, 2))
    beta = (_N + 1).scale(Fraction(1, 2))
    exponent = [ZERO] * (order + 1)
    for j in range(1, order):
        diff = _inverse_power_series(alpha, j, order) - _inverse_power_series(beta, j, order)
        pj = Polynomial.var(P(j)).scale(Fraction(1, j))
        for i in range(order + 1 - j):
            if diff[i]:
                exponent[i + j] = exponent[i + j] + diff[i] * pj
    lead = PowerSeries([ONE, -_N], order)
    return series_mul(lead, series_exp(PowerSeries(exponent, order)))


@lru_cache(maxsize=None)
def phi_casimir(k: int) -> Polynomial:
    """``phi(C_k)`` as a polynomial in ``N, p_1..p_k``."""
    if k < 1:
        raise ValueError("Casimir index must be >= 1")
    return -casimir_generating_series(k + 1)[k + 1]


def to_p_basis(p: Polynomial) -> Polynomial:
    """Apply the Harish-Chandra isomorphism monomial by monomial."""
    assignment = {}
    for g in p.generators():
        if g.is_casimir:
            assignment[g] = phi_casimir(g.index)
        elif g != NVAR:
            raise ValueError(f"to_p_basis expects N and C_k only, found {g}")
    return p.substitute(assignment)


def shifted_power_sum_value(k: int, w: WeightVector | Sequence) -> Fraction:
    """``sum_i ((lam_i + (N+1)/2 - i)^k - ((N+1)/2 - i)^k)``."""
    if not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    N = w.N
    total = Fraction(0)
    for i, lam in enumerate(w.lam, 1):
        shift = Fraction(N + 1, 2) - i
        total += (lam + shift) ** k - shift ** k
    return total


def eigenvalue(p: Polynomial, w: WeightVector | Sequence) -> Fraction:
    """Value of a p-basis polynomial at ``N = len(w)``, ``p_k = p_k(w)``."""
    if not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    values = {NVAR: w.N}
    for g in p.generators():
        if g.is_power_sum:
            values[g] = shifted_power_sum_value(g.index, w)
        elif g != NVAR:
            raise ValueError(f"eigenvalue expects N and p_k only, found {g}")
    return Fraction(p.evaluate(values))


def casimir_images(k_max: int) -> dict:
    return {C(k): phi_casimir(k) for k in range(1, k_max + 1)}
