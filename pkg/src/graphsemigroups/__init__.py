"""Divisor theory of finite graphs and the Weierstrass semigroups of a vertex."""

from .divisors import (
    divisor_of,
    fire_set,
    indicator,
    is_g_parking,
    is_principal,
    linearly_equivalent,
    monopole_witness_valid,
    reduce,
)
from .errors import (
    BadDegree,
    BadParameter,
    DisconnectedGraph,
    EnumerationCapExceeded,
    GraphSemigroupError,
    InputError,
    LengthMismatch,
    NotEffective,
    TheoremViolation,
)
from .graph import Graph, build_laplacian, canonical_divisor, from_spec, genus
from .jacobian_group import abel_jacobi, abel_jacobi_injective, jacobian
from .rank_rr import obstructions, rank, verify_riemann_roch, winnable
from .semigroups import (
    containment_report,
    generated_semigroup,
    hf_window,
    hr_window,
    hred_window,
    min_nonzero_hf,
)

__version__ = "0.1.0"
