"""Exact combinatorics of watermelon lattice paths and boxed plane partitions.

Everything is computed over the integers: sparse Laurent polynomials in q,
q-binomial coefficients, Schur polynomials at geometric points, watermelon
path ensembles with an optional deviation, MacMahon boxes, and a volume
preserving bijection between the two pictures.  The identities module
cross-checks every closed form against direct enumeration.
"""

from .laurent import (
    LaurentPoly,
    NotDivisible,
    PolyMatrix,
    det_cofactor,
    det_fraction_free,
    geometric_sum,
    vandermonde,
)
from .partitions import (
    check_partition,
    conjugate,
    enumerate_in_box,
    format_partition,
    parse_partition,
    weight,
)
from .paths import (
    BNest,
    CNest,
    Watermelon,
    closed_genfunc,
    count_deviation,
    count_deviation_det,
    enumerate_watermelons,
    genfunc_det_forms,
    gv_count,
    make_watermelon,
    watermelon_from_dict,
    watermelon_genfunc,
    watermelon_paths,
)
from .planepartitions import (
    BoxMismatch,
    enumerate_box,
    gradient_bijection,
    gradient_bijection_inverse,
    macmahon_product,
    pp_from_dict,
    pp_to_dict,
    zq,
)
from .qanalogs import h_complete, qbinomial, qfactorial, qint
from .schur import (
    DegeneratePoint,
    NonzeroTail,
    bialternant,
    gv_determinant,
    h_determinant,
    limit_vanishing_vars,
    principal_product,
    tableau_sum,
)
from .tableaux import count_ssyt, enumerate_ssyt, is_ssyt

__version__ = "0.1.0"

__all__ = [
    "BNest",
    "BoxMismatch",
    "CNest",
    "DegeneratePoint",
    "LaurentPoly",
    "NonzeroTail",
    "NotDivisible",
    "PolyMatrix",
    "Watermelon",
    "bialternant",
    "check_partition",
    "closed_genfunc",
    "conjugate",
    "count_deviation",
    "count_deviation_det",
    "count_ssyt",
    "det_cofactor",
    "det_fraction_free",
    "enumerate_box",
    "enumerate_in_box",
    "enumerate_ssyt",
    "enumerate_watermelons",
    "format_partition",
    "genfunc_det_forms",
    "geometric_sum",
    "gradient_bijection",
    "gradient_bijection_inverse",
    "gv_count",
    "gv_determinant",
    "h_complete",
    "h_determinant",
    "is_ssyt",
    "limit_vanishing_vars",
    "macmahon_product",
    "make_watermelon",
    "parse_partition",
    "pp_from_dict",
    "pp_to_dict",
    "principal_product",
    "qbinomial",
    "qfactorial",
    "qint",
    "tableau_sum",
    "vandermonde",
    "watermelon_from_dict",
    "watermelon_genfunc",
    "watermelon_paths",
    "weight",
    "zq",
]
