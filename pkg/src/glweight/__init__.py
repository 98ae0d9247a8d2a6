"""Universal gl_N weight system on permutations and chord diagrams."""

from .diagrams import ChordDiagram, Permutation, chord_to_perm, make_kn, parse_chord_diagram, parse_permutation
from .engine import EngineConfig, MemoCache, WeightSystem, wgl, wsl
from .hc import phi_casimir, to_p_basis
from .hopf import primitive_projection, wbar
from .polyring import NVAR, C, P, Polynomial

__all__ = [
    "C", "ChordDiagram", "EngineConfig", "MemoCache", "NVAR", "P", "Permutation", "Polynomial",
    "WeightSystem", "chord_to_perm", "make_kn", "parse_chord_diagram", "parse_permutation",
    "phi_casimir", "primitive_projection", "to_p_basis", "wbar", "wgl", "wsl",
]
