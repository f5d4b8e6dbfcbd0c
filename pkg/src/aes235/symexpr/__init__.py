"""Exact symbolic expression engine.

Parsing, differentiation, normalisation, substitution, numeric
evaluation, sound zero testing, and exact linear solving over the
expression field of a five-variable chart.
"""

from .core import (
    Chart,
    ChartMismatchError,
    DEFAULT_CHART,
    Expr,
    ExprDivisionError,
    Point,
    SymExprError,
    diff,
    normalize,
    opaque_function,
    sqrt_int,
    subst,
)
from .linalg import (
    MonomialOverflowError,
    NonPolynomialRowError,
    SingularMatrixError,
    det,
    nullspace_fraction,
    poly_nullspace,
    solve_linear,
    solve_linear_multi,
)
from .numeric import (
    GUARD_FLOOR,
    PRECISION_BITS,
    ZERO_THRESHOLD,
    EvalDomainError,
    PoleAtPointError,
    SamplingError,
    ZeroResult,
    eval_at,
    is_zero,
    random_point,
    sample_points,
    zero_test,
)
from .parser import ParseError, UnknownIdentifierError, parse
from .printer import to_text

__all__ = [
    "Chart",
    "ChartMismatchError",
    "DEFAULT_CHART",
    "EvalDomainError",
    "Expr",
    "ExprDivisionError",
    "GUARD_FLOOR",
    "MonomialOverflowError",
    "NonPolynomialRowError",
    "ParseError",
    "Point",
    "PoleAtPointError",
    "PRECISION_BITS",
    "SamplingError",
    "SingularMatrixError",
    "SymExprError",
    "UnknownIdentifierError",
    "ZERO_THRESHOLD",
    "ZeroResult",
    "det",
    "diff",
    "eval_at",
    "is_zero",
    "normalize",
    "nullspace_fraction",
    "opaque_function",
    "parse",
    "poly_nullspace",
    "random_point",
    "sample_points",
    "solve_linear",
    "solve_linear_multi",
    "sqrt_int",
    "subst",
    "to_text",
]
