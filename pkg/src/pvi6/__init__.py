"""Exact engine for complicated and exotic formal expansions of Painleve VI.

Everything is computed over Q(i) (and quadratic extensions of it) with no
floating point: graded series whose coefficients are Laurent series in the
resummation variable chi, the Newton-Bruno polygon and its truncations, the
per-grade linear operators with their Fuchsian analysis, and exact rational
reconstruction of the coefficient series.
"""

from .errors import (
    ConfigParseError,
    ConstraintViolation,
    DivisionByZero,
    HigherLogUnsupported,
    InconsistentTruncation,
    IncompatibleExtensions,
    InsufficientKnownOrder,
    InsufficientTerms,
    NonIntegerGrade,
    NotASingularPoint,
    NotFuchsian,
    PVI6Error,
    ResonantHead,
    TruncationResidualNonzero,
    UnknownOrder,
    UnsupportedExtension,
    ZeroSeries,
)
from .extension import AlgebraicNumber, QuadraticExtension, quadratic_roots, scalar_arith
from .fuchs import (
    INFINITY,
    LinearOperator,
    SingularPointReport,
    fuchsian_at,
    indicial_data,
    local_shape_report,
    normalize_operator,
    normalized_equation,
    operator_support,
    reciprocal_operator,
    shift_operator,
    singular_points,
)
from .graded import GradedSeries, delta_apply
from .diffsum import DiffSum, evaluate, power_transform, substitute_affine, support
from .laurent import COMPLICATED, LaurentSeries, VariableKind, exotic
from .painleve import (
    FamilySpec,
    PVIParams,
    check_truncated_solution,
    closed_form_correspondence,
    grade0_linear_operator,
    linearized_reference_forms,
    phi0_build,
    phi0_graded,
    phi0_series,
    pvi_diffsum,
)
from .polygon import NewtonPolygon, build_polygon, enumerate_faces, truncate_for_direction
from .polys import Poly, poly_gcd, squarefree_decomposition
from .ratfunc import RationalFunction, pade_reconstruct
from .recursion import (
    CoefficientEquation,
    ExpansionState,
    build_linear_operator_k,
    compute_rhs_k,
    expand,
    head_factors,
    rationality_certificate,
    residual_orders,
    solve_k,
    undetermined_coefficients_oracle,
)
from .scalars import QI, QI_I, QI_ONE, QI_ZERO, GaussianRational, Rat

__version__ = "1.0.0"
