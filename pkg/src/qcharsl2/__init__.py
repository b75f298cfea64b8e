"""Exact q-character computations for quantum affine sl2 on one spectral coset."""

from .characters import (
    kr_character,
    simple_character,
    standard_character,
    standard_character_geometric,
    standard_ordering,
    t_system_holds,
)
from .decomp import (
    MultiplicityQuery,
    StalkQuery,
    decomposition_row,
    ic_stalk_poly,
    multiplicity_closed,
    multiplicity_oracle,
    rank_tuple,
)
from .polyring import LaurentPoly, Monomial, TPoly, a_inverse_factorization, gauss_binom_t
from .qstrings import (
    DrinfeldData,
    QString,
    StringDecomposition,
    decompose,
    decompose_bruteforce,
    in_general_position,
    kij_multiplicities,
)
from .quiver_a import (
    ComplexStratum,
    Interval,
    degeneration_leq,
    euler_form,
    ext_dim,
    hom_dim,
    is_sparse,
    orbit_dim,
    rigid_decomposition,
    stratum,
)

__all__ = [
    "LaurentPoly",
    "Monomial",
    "TPoly",
    "a_inverse_factorization",
    "gauss_binom_t",
    "DrinfeldData",
    "QString",
    "StringDecomposition",
    "decompose",
    "decompose_bruteforce",
    "in_general_position",
    "kij_multiplicities",
    "Interval",
    "ComplexStratum",
    "euler_form",
    "ext_dim",
    "hom_dim",
    "rigid_decomposition",
    "stratum",
    "is_sparse",
    "degeneration_leq",
    "orbit_dim",
    "kr_character",
    "t_system_holds",
    "simple_character",
    "standard_character",
    "standard_character_geometric",
    "standard_ordering",
    "MultiplicityQuery",
    "StalkQuery",
    "rank_tuple",
    "multiplicity_closed",
    "multiplicity_oracle",
    "decomposition_row",
    "ic_stalk_poly",
]
