"""Type-A Lie poset algebras: index, contact classification, homology."""

from ._core import (
    LieposetError,
    Poset,
    algebra_index,
    antichain,
    are_isomorphic,
    betti_numbers,
    build_sequence,
    center_dimension,
    chain,
    classify,
    complete_poset,
    dimension,
    disjoint_sum,
    enumerate_posets,
    extremal,
    h2_dimension,
    hasse_dot,
    index,
    index_formula,
    is_acyclic,
    is_contact,
    is_frobenius,
    sweep,
)

__all__ = [
    "LieposetError",
    "Poset",
    "algebra_index",
    "antichain",
    "are_isomorphic",
    "betti_numbers",
    "build_sequence",
    "center_dimension",
    "chain",
    "classify",
    "complete_poset",
    "dimension",
    "disjoint_sum",
    "enumerate_posets",
    "extremal",
    "h2_dimension",
    "hasse_dot",
    "index",
    "index_formula",
    "is_acyclic",
    "is_contact",
    "is_frobenius",
    "sweep",
]
