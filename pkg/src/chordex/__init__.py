"""Exact enumeration for chord expansion of chord diagrams."""

from .chord import (
    ChordDiagram,
    ClassLabel,
    NcdMultiset,
    RandomPolicy,
    canonical_key,
    crossings,
    ex,
    expand_step,
    lex_first,
    ncd,
)
from .families import (
    build_E,
    build_Enk,
    build_bipartite_crossing,
    build_crossing,
    e_count,
    f_count,
    f_fast,
)
from .intersection import Multigraph, intersection_graph, tutte_2_neg1
from .sequences import downup_count, entringer, euler
from .young import EpsVector, Filling, Shape, cor6_rhs, enumerate_fillings, g_count

__version__ = "0.1.0"

__all__ = [
    "ChordDiagram", "ClassLabel", "NcdMultiset", "RandomPolicy", "canonical_key", "crossings", "ex",
    "expand_step", "lex_first", "ncd", "build_E", "build_Enk", "build_bipartite_crossing",
    "build_crossing", "e_count", "f_count", "f_fast", "Multigraph", "intersection_graph",
    "tutte_2_neg1", "downup_count", "entringer", "euler", "EpsVector", "Filling", "Shape",
    "cor6_rhs", "enumerate_fillings", "g_count",
]
