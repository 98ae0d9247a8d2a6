"""Acceptance gate: one group of tests per criterion, exact comparisons only.

Test names carry the criterion number (``test_cNN_...``); conftest prints a
PASS/FAIL line per criterion at the end of the run.
"""

import random
import time

import pytest

from glweight import golden
from glweight.diagrams import Permutation, chord_to_perm, concat, cycles, make_kn, rotate
from glweight.engine import EngineConfig, MemoCache, WeightSystem
from glweight.hc import eigenvalue, phi_casimir, to_p_basis
from glweight.hopf import DiagramValues, is_primitive, kn_primitive_series, primitive_projection, wbar
from glweight.oracle import cartan_part, expand_polynomial, is_central, w_direct
from glweight.polyring import NVAR, ONE, C, P, Polynomial
from strategies import all_perms

NS = range(2, 8)


@pytest.fixture(scope="module")
def timed_kn():
    """w_GL(K_n) for n = 1..7 from an empty cache, with wall-clock times."""
    ws = WeightSystem()
    start = time.perf_counter()
    values = {n: ws(chord_to_perm(make_kn(n))) for n in range(1, 7)}
    t6 = time.perf_counter() - start
    start = time.perf_counter()
    values[7] = ws(chord_to_perm(make_kn(7)))
    t7 = time.perf_counter() - start
    return values, t6, t7, ws


@pytest.fixture(scope="module")
def wbar_values(timed_kn):
    diag = DiagramValues(timed_kn[3])
    return {n: primitive_projection(make_kn(n)).evaluate(diag) for n in NS}


# -- 1. C-basis table ------------------------------------------------------


@pytest.mark.parametrize("n", NS)
def test_c01_wgl_c_basis_table(timed_kn, n):
    assert timed_kn[0][n] == golden.table("wgl_c")[n]


def test_c01_examples_and_leading_term(timed_kn):
    values = timed_kn[0]
    assert values[2] == Polynomial.parse("-N C2 + C1^2 + C2^2")
    assert values[7].terms[((NVAR, 6), (C(2), 1))] == 720


def test_c01_runtime(timed_kn):
    _, t6, t7, _ = timed_kn
    print(f"K2..K6: {t6:.1f}s, K7: {t7:.1f}s")
    assert t6 < 30
    assert t7 < 600


# -- 2. p-basis table ------------------------------------------------------


@pytest.mark.parametrize("n", NS)
def test_c02_wgl_p_basis_table(timed_kn, n):
    assert to_p_basis(timed_kn[0][n]) == golden.table("wgl_p")[n]


def test_c02_k4_coefficient_shift(timed_kn):
    assert to_p_basis(timed_kn[0][4]).terms[((NVAR, 3), (P(2), 1))] == -7


# -- 3. primitive tables ---------------------------------------------------


@pytest.mark.parametrize("n", NS)
def test_c03_wbar_c_basis_table(wbar_values, n):
    assert wbar_values[n] == golden.table("wbar_c")[n]


@pytest.mark.parametrize("n", NS)
def test_c03_wbar_p_basis_table(wbar_values, n):
    assert to_p_basis(wbar_values[n]) == golden.table("wbar_p")[n]


def test_c03_wbar_k3_example():
    assert wbar(make_kn(3)) == Polynomial.parse("2 N^2 C2 - 2 N C1^2")


# -- 4. phi list -----------------------------------------------------------


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_c04_phi_list(k):
    assert phi_casimir(k) == golden.phi_list()[k]


# -- 5. worked examples, via the recursion from an empty cache -------------


def test_c05_worked_examples():
    ws = WeightSystem(MemoCache())
    assert ws(chord_to_perm(make_kn(2))) == Polynomial.parse("C2^2 + C1^2 - N C2")
    assert ws(Permutation((3, 1, 2))) == Polynomial.parse("C3 + C1^2 - N C2")
    assert len(ws.cache) > 0  # values came from swap steps, not a lookup


# -- 6. oracle equivalence -------------------------------------------------


@pytest.mark.parametrize("N", [2, 3])
def test_c06_oracle_equivalence_exhaustive(ws, N):
    start = time.perf_counter()
    for images in all_perms(5):
        assert expand_polynomial(ws(images), N) == w_direct(images, N), images
    print(f"N={N}: {time.perf_counter() - start:.1f}s")


def test_c06_oracle_equivalence_random_s6(ws):
    rng = random.Random(6)
    start = time.perf_counter()
    for _ in range(50):
        images = tuple(rng.sample(range(1, 7), 6))
        for N in (2, 3):
            assert expand_polynomial(ws(images), N) == w_direct(images, N), (images, N)
    print(f"50 random S6, N=2,3: {time.perf_counter() - start:.1f}s")


# -- 7. centrality ---------------------------------------------------------


@pytest.mark.parametrize("N", [2, 3])
def test_c07_centrality(N):
    for images in all_perms(4):
        assert is_central(w_direct(images, N)), images


# -- 8. Harish-Chandra consistency -----------------------------------------


@pytest.mark.parametrize("N", [2, 3])
def test_c08_harish_chandra_consistency(ws, N):
    rng = random.Random(100 + N)
    weights = [tuple(rng.randint(-5, 5) for _ in range(N)) for _ in range(5)]
    for images in all_perms(4):
        proj = cartan_part(w_direct(images, N))
        pform = to_p_basis(ws(images))
        for lam in weights:
            assert proj.evaluate(lam) == eigenvalue(pform, lam), (images, lam)


# -- 9. property suites ----------------------------------------------------


def test_c09_cyclic_invariance():
    plain = WeightSystem(MemoCache(rotation_keys=False))
    for images in all_perms(6):
        base = plain(images)
        for s in range(1, len(images)):
            assert plain(rotate(images, s)) == base, (images, s)


def test_c09_multiplicativity(ws):
    rng = random.Random(9)
    for _ in range(200):
        a = rng.randint(0, 8)
        b = rng.randint(0, 8 - a)
        p = tuple(rng.sample(range(1, a + 1), a))
        q = tuple(rng.sample(range(1, b + 1), b))
        assert ws(concat(p, q)) == ws(p) * ws(q), (p, q)


def test_c09_strategy_independence(ws):
    other = WeightSystem(MemoCache(), EngineConfig(strategy="right", early_stop=False))
    for images in all_perms(5):
        assert other(images) == ws(images), images


def test_c09_leading_term(ws):
    for images in all_perms(6):
        expected = ONE
        for c in cycles(images):
            expected = expected * Polynomial.var(C(len(c)))
        assert ws(images).top_c_degree_part() == expected, images


def test_c09_integrality(ws, timed_kn):
    for images in all_perms(6):
        assert ws(images).is_integral()
    assert all(v.is_integral() for v in timed_kn[0].values())


def test_c09_degree_drop(timed_kn, wbar_values):
    for n in NS:
        assert wbar_values[n].max_weighted_c_degree() <= n
        assert timed_kn[0][n].max_weighted_c_degree() == 2 * n


# -- 10. Hopf structure ----------------------------------------------------


def test_c10_egf_matches_partitions():
    series = kn_primitive_series(7)
    for n in range(1, 8):
        assert series.combination(n) == primitive_projection(make_kn(n)), n


def test_c10_primitivity():
    series = kn_primitive_series(7)
    for n in range(1, 8):
        assert is_primitive(series[n]), n
