"""Finite-ring computational algebra: constructions, deciders, theorem suites."""

from .constructions import (
    augmentation,
    formal_matrix,
    generalized_matrix,
    group_ring,
    matrix_ring,
    trivial_extension,
    upper_triangular,
)
from .deciders import Decomposition, PropertyReport, classify
from .errors import (
    AssociativityError,
    CapExceededError,
    NotCentralError,
    NotNilpotentError,
    ParseError,
    WrongConstructionError,
)
from .fastpath import (
    Factorization,
    connell_regular_zn,
    factorize,
    is_squarefree,
    zn_unit_regular,
    zng_unit_regular,
    zng_unit_regular_by_group_order,
)
from .groups import (
    FiniteGroup,
    cyclic,
    dihedral,
    element_order,
    group_product,
    p_group_prime,
    quaternion8,
    symmetric,
)
from .harness import SearchConfig, SuiteReport, falsify, standard_corpus
from .kernel import (
    Ring,
    RingCaches,
    direct_product,
    freeze,
    is_nilpotent,
    make_zmod,
    ring_pow,
    verify_ring_axioms,
)

__all__ = [
    "AssociativityError",
    "CapExceededError",
    "Decomposition",
    "Factorization",
    "FiniteGroup",
    "NotCentralError",
    "NotNilpotentError",
    "ParseError",
    "PropertyReport",
    "Ring",
    "RingCaches",
    "SearchConfig",
    "SuiteReport",
    "WrongConstructionError",
    "augmentation",
    "classify",
    "connell_regular_zn",
    "cyclic",
    "dihedral",
    "direct_product",
    "element_order",
    "factorize",
    "falsify",
    "formal_matrix",
    "freeze",
    "generalized_matrix",
    "group_product",
    "group_ring",
    "is_nilpotent",
    "is_squarefree",
    "make_zmod",
    "matrix_ring",
    "p_group_prime",
    "quaternion8",
    "ring_pow",
    "standard_corpus",
    "symmetric",
    "trivial_extension",
    "upper_triangular",
    "verify_ring_axioms",
    "zn_unit_regular",
    "zng_unit_regular",
    "zng_unit_regular_by_group_order",
]
