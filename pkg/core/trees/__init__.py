"""
Trees Module

장식된 셔플 트리 단항식과 자유 오퍼라드 연산을 제공합니다.
"""

from core.trees.monomial import Node, Tree, TreeMonomial, render_tree
from core.trees.operations import (
    act,
    canonicalize,
    coefficient_vector,
    compose_at,
    count_basis,
    enumerate_basis,
    graft,
    graft_poly,
    identity_poly,
    leaf_map_poly,
    poly_from_vector,
)
from core.trees.permutations import all_permutations, compose, from_cycles, inverse, to_cycles
from core.trees.poly import TreePoly
from core.trees.symbols import (
    ANTISYMMETRIC,
    PAIR,
    SYMMETRIC,
    UNARY,
    GeneratorSymbol,
    Signature,
    Symbol,
    antisymmetric,
    colored_generators,
    pair,
    symmetric,
    unary,
)

__all__ = [
    "Node",
    "Tree",
    "TreeMonomial",
    "render_tree",
    "TreePoly",
    "Symbol",
    "GeneratorSymbol",
    "Signature",
    "SYMMETRIC",
    "ANTISYMMETRIC",
    "PAIR",
    "UNARY",
    "symmetric",
    "antisymmetric",
    "pair",
    "unary",
    "colored_generators",
    "canonicalize",
    "act",
    "graft",
    "graft_poly",
    "compose_at",
    "identity_poly",
    "enumerate_basis",
    "count_basis",
    "coefficient_vector",
    "poly_from_vector",
    "leaf_map_poly",
    "all_permutations",
    "compose",
    "inverse",
    "from_cycles",
    "to_cycles",
]
