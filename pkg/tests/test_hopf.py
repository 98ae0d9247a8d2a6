import itertools
from fractions import Fraction

import pytest

from glweight.diagrams import EMPTY_DIAGRAM, ChordDiagram, make_kn
from glweight.engine import WeightSystem
from glweight.hopf import (
    DiagramCombination,
    DiagramValues,
    chord_subdiagram,
    coproduct,
    formal_coproduct,
    is_primitive,
    kn_primitive_series,
    ksymbols_to_combination,
    primitive_projection,
    set_partitions,
    wbar,
)
from glweight.polyring import NVAR, ONE, C, K, Polynomial

N_ = Polynomial.var(NVAR)
C1, C2 = Polynomial.var(C(1)), Polynomial.var(C(2))
K1, K2, K3 = (make_kn(n) for n in (1, 2, 3))
k1, k2, k3 = (Polynomial.var(K(n)) for n in (1, 2, 3))
BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def test_subdiagram_examples():
    for pair in itertools.combinations(range(3), 2):
        assert chord_subdiagram(K3, pair) == K2
    d = ChordDiagram(((1, 4), (2, 3), (5, 6)))
    assert chord_subdiagram(d, range(3)) == d
    assert chord_subdiagram(d, []) == EMPTY_DIAGRAM
    assert chord_subdiagram(d, [0, 1]) == ChordDiagram(((1, 4), (2, 3)))
    with pytest.raises(ValueError):
        chord_subdiagram(d, [3])


def test_subdiagrams_of_kn_are_kk():
    for n in range(1, 7):
        for k in range(n + 1):
            for J in itertools.combinations(range(n), k):
                assert chord_subdiagram(make_kn(n), J) == (make_kn(k) if k else EMPTY_DIAGRAM)


def test_coproduct_examples():
    assert coproduct(K1) == [(EMPTY_DIAGRAM, K1), (K1, EMPTY_DIAGRAM)]
    assert coproduct(K2) == [(EMPTY_DIAGRAM, K2), (K1, K1), (K1, K1), (K2, EMPTY_DIAGRAM)]
    assert coproduct(EMPTY_DIAGRAM) == [(EMPTY_DIAGRAM, EMPTY_DIAGRAM)]
    assert len(coproduct(make_kn(5))) == 32


def test_set_partitions_counts():
    for n, b in enumerate(BELL):
        parts = list(set_partitions(list(range(n))))
        assert len(parts) == b
        canon = {tuple(sorted(tuple(sorted(x)) for x in p)) for p in parts}
        assert len(canon) == b


def test_primitive_projection_examples():
    assert primitive_projection(K1) == DiagramCombination.of(K1)
    assert primitive_projection(K2) == DiagramCombination.of(K2) - DiagramCombination.of(K1, K1)
    assert primitive_projection(K3) == (DiagramCombination.of(K3)
                                        + DiagramCombination.of(K2, K1, coeff=-3)
                                        + DiagramCombination.of(K1, K1, K1, coeff=2))
    assert primitive_projection(EMPTY_DIAGRAM) == DiagramCombination({(): 1})


def test_projection_of_concatenation_evaluates_to_zero():
    # two side-by-side chords equal K1 * K1 in the diagram algebra; formally
    # they stay distinct, but the multiplicative weight system kills pi(D)
    d = ChordDiagram(((1, 2), (3, 4)))
    assert primitive_projection(d) == DiagramCombination.of(d) - DiagramCombination.of(K1, K1)
    assert wbar(d) == Polynomial()
    assert wbar(ChordDiagram(((1, 4), (2, 3), (5, 6)))) == Polynomial()


def test_combination_arithmetic_and_str():
    a = DiagramCombination.of(K2) - DiagramCombination.of(K1, K1)
    assert a - a == DiagramCombination()
    assert str(a) == "+1 [1-3,2-4] -1 [1-2]*[1-2]"
    assert str(DiagramCombination()) == "0"
    assert DiagramCombination.of(EMPTY_DIAGRAM, K1) == DiagramCombination.of(K1)


def test_wbar_examples():
    assert wbar(K2) == -N_ * C2 + C1 ** 2
    assert wbar(K3) == 2 * N_ ** 2 * C2 - 2 * N_ * C1 ** 2
    assert wbar(K1) == C2
    assert wbar(EMPTY_DIAGRAM) == ONE


def test_kn_series_examples():
    s = kn_primitive_series(3)
    assert s[1] == k1
    assert s[2] == k2 - k1 ** 2
    assert s[3] == k3 - 3 * k2 * k1 + 2 * k1 ** 3
    with pytest.raises(ValueError):
        kn_primitive_series(0)


def test_series_matches_partition_formula():
    s = kn_primitive_series(7)
    for n in range(1, 8):
        assert s.combination(n) == primitive_projection(make_kn(n)), n


def test_ksymbols_to_combination_errors():
    with pytest.raises(ValueError):
        ksymbols_to_combination(k1 * N_)
    with pytest.raises(ValueError):
        ksymbols_to_combination(k1.scale(Fraction(1, 2)))


def test_formal_coproduct_of_generators():
    assert formal_coproduct(k1) == {((), ((K(1), 1),)): 1, (((K(1), 1),), ()): 1}
    d = formal_coproduct(k2)
    assert d[(((K(1), 1),), ((K(1), 1),))] == 2
    assert formal_coproduct(ONE) == {((), ()): 1}
    assert is_primitive(k1)
    assert not is_primitive(k2)
    assert not is_primitive(k1 * k1)


def test_projection_is_primitive():
    s = kn_primitive_series(7)
    for n in range(1, 8):
        assert is_primitive(s[n]), n


def test_degree_drop(kn_values, ws):
    values = DiagramValues(ws)
    for n in range(2, 8):
        assert wbar(make_kn(n), values).max_weighted_c_degree() <= n
        assert kn_values[n].max_weighted_c_degree() == 2 * n


def test_wbar_evaluation_coherence(kn_values, ws):
    """Evaluating via the engine agrees with substituting precomputed K_k values."""
    table = {make_kn(n): v for n, v in kn_values.items()}
    for n in range(1, 8):
        d = make_kn(n)
        via_table = primitive_projection(d).evaluate(table.__getitem__)
        assert via_table == wbar(d, DiagramValues(ws))
        assert via_table == kn_primitive_series(n).combination(n).evaluate(table.__getitem__)


def test_diagram_values_memoizes():
    values = DiagramValues(WeightSystem())
    first = values(K2)
    assert values(K2) is first
