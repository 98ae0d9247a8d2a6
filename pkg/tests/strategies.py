"""Shared hypothesis strategies and brute-force helpers."""

import itertools

from hypothesis import strategies as st

from glweight.polyring import NVAR, C, P, Polynomial


def all_perms(max_m, min_m=0):
    for m in range(min_m, max_m + 1):
        yield from itertools.permutations(range(1, m + 1))


generators = st.sampled_from([NVAR, C(1), C(2), C(3), P(1), P(2)])

monomials = st.dictionaries(generators, st.integers(1, 3), max_size=3).map(
    lambda d: tuple(sorted(d.items())))

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)

polynomials = st.dictionaries(monomials, rationals, max_size=5).map(Polynomial)


@st.composite
def permutations(draw, min_m=0, max_m=6):
    m = draw(st.integers(min_m, max_m))
    return tuple(draw(st.permutations(list(range(1, m + 1)))))

