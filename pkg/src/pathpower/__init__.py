"""Independent sets, signed spectra, and induced-degree floors on grid
graphs [m]^k (Cartesian powers of paths), cross-checked by exact search
oracles at desk scale."""

from .constructions import (
    CONSTRUCTION_KINDS,
    alpha_formula,
    alternating_independent_set,
    append_coordinate,
    build_construction,
    is_independent,
    low_degree_witness_set,
)
from .errors import (
    BracketingError,
    DimensionMismatchError,
    EigenSolveError,
    InvalidVertexError,
    PathPowerError,
    SizeCapError,
    UnprovenAlphaError,
)
from .grid import DEFAULT_SIZE_CAP, PathPower, VertexSet, induced_max_degree
from .search import (
    FSearchResult,
    FValue,
    MisResult,
    SearchBudget,
    brute_force_f,
    degree_bound_check,
    lower_bound_even,
    max_independent_set,
    theoretical_f_value,
)
from .signed import (
    SignedMatrix,
    check_support,
    principal_submatrix,
    read_matrix_market,
    signed_grid_matrix,
    square_identity_check,
    write_matrix_market,
)
from .spectral import (
    IntPolynomial,
    Odd3SpectrumResult,
    SpectrumReport,
    bareiss_det,
    base_square_spectrum,
    beta,
    charpoly_base_square_check,
    charpoly_exact,
    composed_square_spectrum,
    eigenvalues_sym,
    fg_identity_check,
    interlacing_check,
    kron_sum_spectrum,
    min_positive_eig_even,
    multiset_distance,
    nonsingularity_check_even,
    odd3_spectrum_check,
    poly_f,
    poly_g,
    signed_spectrum_from_squares,
    spectrum_report,
    square_compose_check,
    symmetry_check,
)

__version__ = "0.1.0"

__all__ = [
    "CONSTRUCTION_KINDS",
    "DEFAULT_SIZE_CAP",
    "BracketingError",
    "DimensionMismatchError",
    "EigenSolveError",
    "FSearchResult",
    "FValue",
    "IntPolynomial",
    "InvalidVertexError",
    "MisResult",
    "Odd3SpectrumResult",
    "PathPower",
    "PathPowerError",
    "SearchBudget",
    "SignedMatrix",
    "SizeCapError",
    "SpectrumReport",
    "UnprovenAlphaError",
    "VertexSet",
    "alpha_formula",
    "alternating_independent_set",
    "append_coordinate",
    "bareiss_det",
    "base_square_spectrum",
    "beta",
    "brute_force_f",
    "build_construction",
    "charpoly_base_square_check",
    "charpoly_exact",
    "check_support",
    "composed_square_spectrum",
    "degree_bound_check",
    "eigenvalues_sym",
    "fg_identity_check",
    "induced_max_degree",
    "interlacing_check",
    "is_independent",
    "kron_sum_spectrum",
    "low_degree_witness_set",
    "lower_bound_even",
    "max_independent_set",
    "min_positive_eig_even",
    "multiset_distance",
    "nonsingularity_check_even",
    "odd3_spectrum_check",
    "poly_f",
    "poly_g",
    "principal_submatrix",
    "read_matrix_market",
    "signed_grid_matrix",
    "signed_spectrum_from_squares",
    "spectrum_report",
    "square_compose_check",
    "square_identity_check",
    "symmetry_check",
    "theoretical_f_value",
    "write_matrix_market",
    "__version__",
]
