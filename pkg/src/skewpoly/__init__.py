"""skewpoly: exact multivariate skew polynomial arithmetic over division rings.

Free skew polynomial rings F[x; sigma, delta] with evaluation by
remainder, zero-set geometry (P-closure, P-bases, matroid structure),
skew Vandermonde linear algebra and Lagrange/Newton interpolation, over
finite fields and the rational quaternions, all in exact arithmetic.
"""

from .errors import (
    DivisionByZero,
    DuplicatePoint,
    InvalidFrame,
    InvalidInput,
    NoSolution,
    NotARing,
    NotFinite,
    NotPIndependent,
    NotSeparable,
    RingMismatch,
    SkewPolyError,
    ZeroPolynomial,
)
from .rings import FieldElement, FiniteField, Quaternion, QuaternionRing, ring_from_json
from .frames import (
    Frame,
    FrameReport,
    LinearMap,
    QuatMap,
    block_frame,
    conventional_frame,
    diagonal_frame,
    frame_from_json,
    frobenius_frame,
    inner_frame,
    validate_frame,
)
from .freering import (
    BOTTOM,
    SkewPolynomial,
    constant,
    from_terms,
    mono_key,
    monomial,
    monomials_below,
    mul,
    mul_monomial_constant,
    one,
    poly_from_json,
    variable,
    zero,
)
from .evaluation import (
    DivisionResult,
    ProductRuleReport,
    check_product_rule,
    conjugate,
    divide,
    evaluate,
    fundamental,
    fundamental_table,
    point_from_json,
    point_to_json,
)
from .linalg import Matrix, left_apply, left_null_space, mat_mul, rank, row_reduce_left, solve_left
from .geometry import (
    MatroidReport,
    PBasisResult,
    all_points,
    closure_members,
    complementary_p_basis,
    find_p_basis,
    in_closure,
    is_p_independent_from,
    is_two_sided,
    matroid_check,
    rank_of,
    set_is_p_independent,
    vandermonde,
)
from .interpolation import (
    DualPBasis,
    QuotientElement,
    dual_p_basis,
    lagrange_interpolate,
    lagrange_via_vandermonde,
    quotient_mul,
    reduce_mod_ideal,
    separator,
)

__version__ = "0.1.0"
