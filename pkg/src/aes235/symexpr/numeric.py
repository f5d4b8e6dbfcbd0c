"""Numeric evaluation and sound zero testing.

Evaluation is exact (a :class:`fractions.Fraction`) on rational
expressions and a 200-bit real otherwise.  Zero testing is symbolic first:
an expression whose normal form is 0 is certainly zero, and a nonzero
normal form without transcendental atoms is certainly nonzero (the normal
form is canonical on the fraction field, and square roots of distinct
squarefree integers are linearly independent over the rationals).  Only
atom-bearing expressions fall through to sampling: 16 pseudo-random
points with coordinates in [1/8, 2], resampled while any guard expression
is smaller than 1e-6 in magnitude, evaluated at 200 bits against a 1e-40
threshold.  A ``False`` verdict is always certain; a ``True`` verdict
obtained through sampling is probabilistic and is flagged as such.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import sympy as sp

from .core import Chart, Expr, Point, SymExprError, normalize

__all__ = [
    "PRECISION_BITS",
    "ZERO_THRESHOLD",
    "GUARD_FLOOR",
    "EvalDomainError",
    "PoleAtPointError",
    "SamplingError",
    "ZeroResult",
    "eval_at",
    "is_zero",
    "random_point",
    "sample_points",
    "zero_test",
]

PRECISION_BITS = 200
_EVALF_DIGITS = 62  # > 200 bits of decimal headroom
ZERO_THRESHOLD = mpmath.mpf("1e-40")
GUARD_FLOOR = mpmath.mpf("1e-6")
_SAMPLES = 16
_MAX_RESAMPLE = 512

# sample box [1/8, 2] on a dyadic grid fine enough to behave like a
# continuous draw
_BOX_DEN = 1 << 20
_BOX_LO = _BOX_DEN // 8
_BOX_HI = 2 * _BOX_DEN


class PoleAtPointError(SymExprError):
    """The expression has a pole at the requested point."""


class EvalDomainError(SymExprError):
    """An atom was evaluated outside its real domain (e.g. log of a
    nonpositive value)."""


class SamplingError(SymExprError):
    """Numeric sampling could not be carried out."""


def _has_opaque_atoms(sym: sp.Expr) -> bool:
    from .core import CORE_FUNCTIONS

    core = set(CORE_FUNCTIONS.values())
    if sym.atoms(sp.Derivative):
        return True
    return any(type(f) not in core for f in sym.atoms(sp.Function))


def eval_at(e: Expr, pt: Point, extra: dict[sp.Symbol, Fraction] | None = None):
    """Value of ``e`` at ``pt``: exact Fraction on rational input, else a
    200-bit :class:`mpmath.mpf`.

    ``extra`` optionally binds non-chart symbols (abstract constants).
    Raises :class:`PoleAtPointError` on vanishing denominators and
    :class:`EvalDomainError` when an atom leaves its real domain.
    """
    ne = normalize(e)
    subs = pt.as_sympy()
    if extra:
        subs = {**subs, **{s: sp.Rational(v.numerator, v.denominator) for s, v in extra.items()}}
    unbound = ne.sym.free_symbols - set(subs)
    if unbound:
        raise SamplingError(f"unbound symbols {sorted(map(str, unbound))} in evaluation")
    if _has_opaque_atoms(ne.sym):
        raise SamplingError("cannot numerically evaluate opaque function atoms")

    if ne.is_rational_function():
        num, den = sp.fraction(sp.together(ne.sym))
        den_v = den.subs(subs, simultaneous=True)
        if den_v == 0:
            raise PoleAtPointError(f"denominator vanishes at {pt!r}")
        num_v = num.subs(subs, simultaneous=True)
        value = sp.Rational(num_v, den_v)
        return Fraction(int(value.p), int(value.q))

    substituted = ne.sym.subs(subs, simultaneous=True)
    if substituted.has(sp.zoo, sp.nan):
        raise PoleAtPointError(f"pole at {pt!r}")
    approx = sp.N(substituted, _EVALF_DIGITS)
    if approx.has(sp.zoo, sp.nan):
        raise PoleAtPointError(f"pole at {pt!r}")
    if approx.is_number and approx.is_Rational:
        return Fraction(int(approx.p), int(approx.q))
    re_part, im_part = approx.as_real_imag()
    if im_part != 0:
        raise EvalDomainError(f"evaluation left the real domain at {pt!r}")
    if not re_part.is_number:
        raise SamplingError(f"could not evaluate {e!r} numerically")
    with mpmath.workprec(PRECISION_BITS):
        return mpmath.mpf(sp.Float(re_part, _EVALF_DIGITS)._mpf_)


def random_point(chart: Chart, rng: random.Random) -> Point:
    coords = {
        name: Fraction(rng.randint(_BOX_LO, _BOX_HI), _BOX_DEN) for name in chart.names
    }
    return Point(chart, coords)


def _abs_value(v) -> mpmath.mpf:
    if isinstance(v, Fraction):
        with mpmath.workprec(PRECISION_BITS):
            return abs(mpmath.mpf(v.numerator) / mpmath.mpf(v.denominator))
    return abs(v)


def sample_points(
    chart: Chart,
    guards: Sequence[Expr],
    rng: random.Random,
    count: int = _SAMPLES,
) -> list[Point]:
    """Draw ``count`` points from the sample box, resampling while any
    guard expression has magnitude below ``GUARD_FLOOR``."""
    points: list[Point] = []
    attempts = 0
    while len(points) < count:
        if attempts > _MAX_RESAMPLE:
            raise SamplingError("guards reject the entire sample box")
        attempts += 1
        pt = random_point(chart, rng)
        ok = True
        for g in guards:
            try:
                gv = eval_at(g, pt)
            except (PoleAtPointError, EvalDomainError):
                ok = False
                break
            if _abs_value(gv) < GUARD_FLOOR:
                ok = False
                break
        if ok:
            points.append(pt)
    return points


@dataclass(frozen=True)
class ZeroResult:
    """Outcome of a zero test.

    ``certain`` is always true for a ``False`` verdict; a ``True`` verdict
    is certain only when it was decided symbolically.  ``witness`` holds a
    point where the expression was observed nonzero.
    """

    zero: bool
    certain: bool
    witness: Point | None = None

    def __bool__(self) -> bool:
        return self.zero

    @property
    def probabilistic(self) -> bool:
        return self.zero and not self.certain


def zero_test(
    e: Expr,
    guards: Sequence[Expr] = (),
    seed: int = 0,
    samples: int = _SAMPLES,
) -> ZeroResult:
    """Sound one-sided zero test; see the module docstring."""
    ne = normalize(e)
    if ne.sym.is_zero:
        return ZeroResult(True, certain=True)
    if not ne.has_transcendental_atoms():
        extra = ne.sym.free_symbols - set(ne.chart.symbols)
        if not extra:
            return ZeroResult(False, certain=True)
        # polynomial identity in abstract constants: nonzero normal form
        # means nonzero as an identity
        return ZeroResult(False, certain=True)
    if _has_opaque_atoms(ne.sym):
        raise SamplingError(
            "zero test is undecidable: nonzero normal form with opaque atoms"
        )
    rng = random.Random(seed)
    extra_syms = sorted(ne.sym.free_symbols - set(ne.chart.symbols), key=str)
    for pt in sample_points(ne.chart, guards, rng, samples):
        extra = {
            s: Fraction(rng.randint(_BOX_LO, _BOX_HI), _BOX_DEN) for s in extra_syms
        }
        value = eval_at(ne, pt, extra=extra)
        if isinstance(value, Fraction):
            if value != 0:
                return ZeroResult(False, certain=True, witness=pt)
        elif _abs_value(value) >= ZERO_THRESHOLD:
            return ZeroResult(False, certain=True, witness=pt)
    return ZeroResult(True, certain=False)


def is_zero(e: Expr, guards: Sequence[Expr] = (), seed: int = 0) -> bool:
    """Boolean form of :func:`zero_test` (the probabilistic flag is
    available on the detailed result)."""
    return zero_test(e, guards=guards, seed=seed).zero
