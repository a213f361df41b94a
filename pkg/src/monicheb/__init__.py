"""Exact tools for the monic integer Chebyshev problem on Farey intervals.

The package constructs monic integer polynomials with prescribed rational
values, searches for sup-norm witnesses with exact LLL reduction, and
certifies sup-norm bounds unconditionally with Sturm sequences and
Bernstein subdivision over arbitrary-precision rationals.
"""

from .numpoly import (
    IntPoly,
    Interval,
    MINUS_INFINITY,
    RatPoly,
    bernstein_split,
    extended_gcd,
    format_poly,
    format_rational,
    parse_poly,
    parse_rational,
    poly_affine_compose,
    poly_compose,
    poly_eval,
    poly_gcd,
    poly_integrate_product,
    to_bernstein,
)
from .farey import (
    FareyPair,
    farey_intervals,
    farey_sequence,
    is_consecutive_pair,
    mediant,
)
from .construct import (
    CongruenceError,
    ConstructionState,
    DegreeSearchError,
    admissible_degree,
    construction_state,
    multipoint_monic,
    multiplicative_order,
    pair_polynomial,
    triple_polynomial,
)
from .constants import (
    CONJECTURED,
    PROVEN_EQUAL,
    ConstantValue,
    SymbolicEndpoint,
    conjecture_value,
    finite_set_constant,
    interval_constant,
    parse_endpoint,
    point_constant,
    surd_pair_constant,
    transform_constant,
)
from .certify import (
    NormCertificate,
    Verdict,
    WitnessRecord,
    bernstein_prefilter,
    certify_sup_bound,
    decide_sup_bound,
    rational_point_lower_bound,
    sup_norm_enclosure,
    verify_witness,
)
from .lattice import (
    GramMatrix,
    ReductionResult,
    SearchBasis,
    SmallValueError,
    build_search_basis,
    det_unimodular,
    gram_matrix,
    lll_reduce,
    search_witness,
    small_value_polynomial,
)
from .cli import RunReport, TableEntry, bundled_table_path, parse_table_file, run

__version__ = "0.1.0"

__all__ = [
    "IntPoly", "Interval", "MINUS_INFINITY", "RatPoly",
    "bernstein_split", "extended_gcd", "format_poly", "format_rational",
    "parse_poly", "parse_rational", "poly_affine_compose", "poly_compose",
    "poly_eval", "poly_gcd", "poly_integrate_product", "to_bernstein",
    "FareyPair", "farey_intervals", "farey_sequence", "is_consecutive_pair",
    "mediant",
    "CongruenceError", "ConstructionState", "DegreeSearchError",
    "admissible_degree", "construction_state", "multipoint_monic",
    "multiplicative_order", "pair_polynomial", "triple_polynomial",
    "CONJECTURED", "PROVEN_EQUAL", "ConstantValue", "SymbolicEndpoint",
    "conjecture_value", "finite_set_constant", "interval_constant",
    "parse_endpoint", "point_constant", "surd_pair_constant",
    "transform_constant",
    "NormCertificate", "Verdict", "WitnessRecord", "bernstein_prefilter",
    "certify_sup_bound", "decide_sup_bound", "rational_point_lower_bound",
    "sup_norm_enclosure", "verify_witness",
    "GramMatrix", "ReductionResult", "SearchBasis", "SmallValueError",
    "build_search_basis", "det_unimodular", "gram_matrix", "lll_reduce",
    "search_witness", "small_value_polynomial",
    "RunReport", "TableEntry", "bundled_table_path", "parse_table_file", "run",
]
