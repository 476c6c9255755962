"""Bases, extremals and membership for finitely generated max-times cones."""
from ._backend import NAME as BACKEND
from .extremals import (
    METHODS,
    BasisResult,
    Decomposition,
    MinimaResult,
    NotAMemberError,
    caratheodory_decompose,
    essentially_equal,
    extract_basis,
    extremal_columns,
    is_extremal_column,
    is_redundant_column,
    pareto_minima,
    slice_minima,
)
from .maxcore import (
    DimensionError,
    Tolerance,
    as_matrix,
    as_vector,
    leq,
    mat_vec_otimes,
    max_norm,
    oplus,
    scale_at,
    scale_max,
    support,
)
from .residuation import (
    CoveringCertificate,
    ResiduationResult,
    brute_force_member,
    covering_sets,
    residuate,
    solve_exact,
)

__version__ = "0.1.0"
