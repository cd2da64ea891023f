"""Exact computations with dynamical (Lefschetz) zeta functions."""

from .errors import (
    ConsistencyError,
    DomainError,
    NonAdmissibleError,
    PrecisionError,
    SizeLimitError,
    ZetaError,
)
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    add,
    binomial_factor,
    inverse,
    mul,
    substitute_tk,
)
from .zeta import (
    FactorExponents,
    exp_series,
    expand_factors,
    factorize,
    indices_from_zeta,
    is_integral,
    log_series,
    pow_rational,
    zeta_from_indices,
)
from .transforms import (
    DoldCoefficients,
    OrbitCount,
    compositions_of,
    dold_check,
    dold_coefficients,
    exponents_from_orbit_counts,
    indices_from_dold,
    indices_from_sp_compositions,
    indices_from_sp_recurrence,
    linear_coefficient_of_iterate,
    mobius,
    sp_from_indices_compositions,
    sp_from_indices_recurrence,
)
from .spectral import (
    OrbitTable,
    RationalMatrix,
    SpectralClass,
    admissibility_order,
    char_poly,
    commutativity_witness,
    determinant,
    index_sequence_of_matrix,
    iterate_zeta_axiom,
    lecalvez_zeta,
    linear_zeta,
    local_index,
    macdonald_series,
    matrix_zeta,
    multiplicative_assemble,
    orbit_zeta,
    orbit_zeta_iterate,
    real_root_count,
    spectral_class,
)
from .polynomial import Polynomial, cyclotomic

__version__ = "0.1.0"

__all__ = [
    "add",
    "admissibility_order",
    "binomial_factor",
    "char_poly",
    "commutativity_witness",
    "compositions_of",
    "ConsistencyError",
    "cyclotomic",
    "DEFAULT_ORDER",
    "determinant",
    "dold_check",
    "dold_coefficients",
    "DoldCoefficients",
    "DomainError",
    "exp_series",
    "expand_factors",
    "exponents_from_orbit_counts",
    "FactorExponents",
    "factorize",
    "index_sequence_of_matrix",
    "indices_from_dold",
    "indices_from_sp_compositions",
    "indices_from_sp_recurrence",
    "indices_from_zeta",
    "inverse",
    "is_integral",
    "iterate_zeta_axiom",
    "lecalvez_zeta",
    "linear_coefficient_of_iterate",
    "linear_zeta",
    "local_index",
    "log_series",
    "macdonald_series",
    "matrix_zeta",
    "mobius",
    "mul",
    "multiplicative_assemble",
    "NonAdmissibleError",
    "orbit_zeta",
    "orbit_zeta_iterate",
    "OrbitCount",
    "OrbitTable",
    "Polynomial",
    "pow_rational",
    "PrecisionError",
    "RationalMatrix",
    "real_root_count",
    "SizeLimitError",
    "sp_from_indices_compositions",
    "sp_from_indices_recurrence",
    "spectral_class",
    "SpectralClass",
    "substitute_tk",
    "TruncatedSeries",
    "zeta_from_indices",
    "ZetaError",
]
