"""Exact symmetric functions: bases, outer and inner Hopf structures, series,
Sweedler cochains, branching operators and cliffordized products."""

from .branching import BranchingOperator, apply_branch, deformed_counit, deformed_product, inverse_branch
from .clifford import circle_product, gauged_circle_product, nl_product, variant_product
from .cohomology import Cochain, classify1, classify2, coboundary, convolve, counit, from_table, invert
from .errors import ExpressionSyntaxError, SchurkitError, WeightCapError
from .expr import parse_cochain, parse_expression
from .inner_alg import counit_inner, inner_coproduct, inner_product, inner_unit, plethysm_pn, sn_character
from .outer_hopf import antipode, check_case, counit_outer, lr_coefficient, outer_coproduct, outer_product, skew
from .partition import Partition, conjugate, partitions_of, to_frobenius, z_value
from .series import SeriesId, characteristic_cochain, series, series_product
from .symfunc import (
    Basis,
    SymFunc,
    TensorExp,
    convert,
    e,
    h,
    kostka,
    m,
    matrix_count_check,
    p,
    s,
    schur_scalar,
    schur_scalar_inverse,
    transition_matrix,
)

__version__ = "0.1.0"
