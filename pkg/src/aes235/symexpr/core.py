"""Exact symbolic expressions over a fixed coordinate chart.

Expressions are trees over rational constants, chart variables, square roots
of positive integers, integer powers, and a small set of transcendental
atoms (exp, log, sin, cos, tan, sinh, cosh).  The normal form of an
expression is a single fraction whose numerator and denominator are
coprime, integer-content-free polynomials in the chart variables, the
square-root symbols, and the transcendental atoms, with a sign-normalised
denominator.  Transcendental atoms are opaque kernels: no identities
beyond sqrt(n)^2 -> n are ever applied, which keeps symbolic zero testing
sound (cancellations that hold only through trigonometric identities are
handled by the numeric sampling branch in :mod:`aes235.symexpr.numeric`).

The tree arithmetic itself is delegated to sympy; this module owns the
chart discipline, the normal form, and the error contract.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

import sympy as sp

__all__ = [
    "Chart",
    "Expr",
    "Point",
    "DEFAULT_CHART",
    "SymExprError",
    "ExprDivisionError",
    "ChartMismatchError",
    "diff",
    "normalize",
    "subst",
    "sqrt_int",
    "opaque_function",
]


class SymExprError(Exception):
    """Base class for all errors raised by the expression engine."""


class ExprDivisionError(SymExprError):
    """Division by an expression that is the zero polynomial."""


class ChartMismatchError(SymExprError):
    """Two expressions from different charts were combined."""


#: Transcendental atoms admitted in expression trees.
CORE_FUNCTIONS: dict[str, sp.FunctionClass] = {
    "exp": sp.exp,
    "log": sp.log,
    "sin": sp.sin,
    "cos": sp.cos,
    "tan": sp.tan,
    "sinh": sp.sinh,
    "cosh": sp.cosh,
}

ExprLike = Union["Expr", int, Fraction, sp.Rational]


class Chart:
    """An ordered tuple of real coordinate names.

    All expressions carry a reference to their chart; mixing charts raises
    :class:`ChartMismatchError`.  Charts with equal name tuples are
    interchangeable.
    """

    __slots__ = ("names", "symbols", "_by_name")

    def __init__(self, names: Iterable[str] = ("x", "y", "p", "q", "z")):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate chart variable in {names!r}")
        for n in names:
            if not n.isidentifier():
                raise ValueError(f"chart variable {n!r} is not an identifier")
            if n in CORE_FUNCTIONS or n == "sqrt":
                raise ValueError(f"chart variable {n!r} shadows a function name")
        self.names = names
        self.symbols = tuple(sp.Symbol(n, real=True) for n in names)
        self._by_name = dict(zip(names, self.symbols))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chart) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Chart{self.names!r}"

    def __len__(self) -> int:
        return len(self.names)

    def var(self, name: str) -> "Expr":
        try:
            return Expr(self._by_name[name], self)
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self!r}") from None

    @property
    def vars(self) -> tuple["Expr", ...]:
        return tuple(Expr(s, self) for s in self.symbols)

    def symbol(self, name: str) -> sp.Symbol:
        return self._by_name[name]

    def zero(self) -> "Expr":
        return Expr(sp.Integer(0), self)

    def one(self) -> "Expr":
        return Expr(sp.Integer(1), self)

    def const(self, value: ExprLike) -> "Expr":
        return Expr(_to_sympy_const(value), self)

    def parse(self, text: str, opaque: Mapping[str, sp.FunctionClass] | None = None) -> "Expr":
        from .parser import parse

        return parse(text, self, opaque=opaque)

    def point(self, values: Mapping[str, ExprLike]) -> "Point":
        return Point(self, values)


DEFAULT_CHART = Chart()


def _to_sympy_const(value: ExprLike) -> sp.Expr:
    if isinstance(value, bool):
        raise TypeError("bool is not a valid expression constant")
    if isinstance(value, int):
        return sp.Integer(value)
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, _RationalABC):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, sp.Expr) and value.is_Rational:
        return value
    raise TypeError(f"cannot interpret {value!r} as an exact constant")


class Expr:
    """Immutable wrapper around a sympy expression bound to a chart.

    Arithmetic operators build trees without normalising; call
    :meth:`normalize` (or the module-level :func:`normalize`) to reach the
    canonical fraction form.  Equality is structural.
    """

    __slots__ = ("sym", "chart")

    def __init__(self, sym: sp.Expr, chart: Chart):
        if not isinstance(sym, sp.Basic):
            raise TypeError(f"expected a sympy expression, got {type(sym).__name__}")
        object.__setattr__(self, "sym", sp.sympify(sym))
        object.__setattr__(self, "chart", chart)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Expr instances are immutable")

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other: ExprLike) -> "Expr":
        if isinstance(other, Expr):
            if other.chart != self.chart:
                raise ChartMismatchError(f"{self.chart!r} vs {other.chart!r}")
            return other
        return Expr(_to_sympy_const(other), self.chart)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: ExprLike) -> "Expr":
        return Expr(self.sym + self._coerce(other).sym, self.chart)

    __radd__ = __add__

    def __sub__(self, other: ExprLike) -> "Expr":
        return Expr(self.sym - self._coerce(other).sym, self.chart)

    def __rsub__(self, other: ExprLike) -> "Expr":
        return Expr(self._coerce(other).sym - self.sym, self.chart)

    def __mul__(self, other: ExprLike) -> "Expr":
        return Expr(self.sym * self._coerce(other).sym, self.chart)

    __rmul__ = __mul__

    def __truediv__(self, other: ExprLike) -> "Expr":
        divisor = self._coerce(other)
        if divisor.sym.is_zero:
            raise ExprDivisionError("division by the zero polynomial")
        return Expr(self.sym / divisor.sym, self.chart)

    def __rtruediv__(self, other: ExprLike) -> "Expr":
        return self._coerce(other).__truediv__(self)

    def __pow__(self, exponent: int) -> "Expr":
        if isinstance(exponent, Expr):
            if not exponent.sym.is_Integer:
                raise TypeError("exponents must be integers")
            exponent = int(exponent.sym)
        if not isinstance(exponent, int):
            raise TypeError("exponents must be integers")
        if exponent < 0 and self.sym.is_zero:
            raise ExprDivisionError("division by the zero polynomial")
        return Expr(self.sym ** exponent, self.chart)

    def __neg__(self) -> "Expr":
        return Expr(-self.sym, self.chart)

    def __pos__(self) -> "Expr":
        return self

    # -- structure --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Expr):
            return self.chart == other.chart and self.sym == other.sym
        if isinstance(other, (int, Fraction)):
            return self.sym == _to_sympy_const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.sym, self.chart))

    def __str__(self) -> str:
        from .printer import to_text

        return to_text(self)

    def __repr__(self) -> str:
        return f"Expr({self.__str__()!r})"

    # -- calculus ---------------------------------------------------------

    def diff(self, var: "Expr | str", order: int = 1) -> "Expr":
        return diff(self, var, order)

    def normalize(self) -> "Expr":
        return normalize(self)

    def subst(self, bindings: Mapping["Expr | str", ExprLike]) -> "Expr":
        return subst(self, bindings)

    # -- predicates -------------------------------------------------------

    @property
    def is_structural_zero(self) -> bool:
        return self.sym.is_zero is True

    def free_chart_vars(self) -> tuple[str, ...]:
        free = self.sym.free_symbols
        return tuple(n for n, s in zip(self.chart.names, self.chart.symbols) if s in free)

    def has_transcendental_atoms(self) -> bool:
        """True if any function atom or unevaluated derivative occurs."""
        return bool(self.sym.atoms(sp.Function, sp.Derivative))

    def is_rational_function(self) -> bool:
        """True when the expression lives in the pure fraction field of the
        chart variables: no function atoms and no irrational powers."""
        if self.has_transcendental_atoms():
            return False
        for pw in self.sym.atoms(sp.Pow):
            if not pw.exp.is_Integer:
                return False
        return True

    def fraction(self) -> tuple[sp.Expr, sp.Expr]:
        """Numerator and denominator of the normal form."""
        return sp.fraction(sp.together(normalize(self).sym))


def sqrt_int(n: int, chart: Chart = DEFAULT_CHART) -> Expr:
    """The square-root symbol sqrt(n) for a positive integer n.

    Perfect squares collapse to integers; the only rewrite ever applied is
    sqrt(n)^2 -> n.
    """
    if not isinstance(n, int) or n <= 0:
        raise ValueError("sqrt expects a positive integer")
    return Expr(sp.sqrt(sp.Integer(n)), chart)


def opaque_function(name: str, *args: Expr) -> Expr:
    """An opaque scalar function applied to expression arguments.

    The atom has no evaluation rules; differentiation produces unevaluated
    derivative atoms, which normalisation and coefficient collection treat
    as independent generators.
    """
    if not args:
        raise ValueError("an opaque function needs at least one argument")
    chart = args[0].chart
    sym_args = []
    for a in args:
        if a.chart != chart:
            raise ChartMismatchError("opaque function arguments from different charts")
        sym_args.append(normalize(a).sym)
    return Expr(sp.Function(name, real=True)(*sym_args), chart)


def _resolve_var(chart: Chart, var: Expr | str) -> sp.Symbol:
    if isinstance(var, str):
        return chart.symbol(var)
    if isinstance(var, Expr):
        if var.chart != chart:
            raise ChartMismatchError(f"{chart!r} vs {var.chart!r}")
        if var.sym in chart.symbols:
            return var.sym
    raise ValueError(f"{var!r} is not a chart variable")


def diff(e: Expr, var: Expr | str, order: int = 1) -> Expr:
    """Exact partial derivative, returned in normal form."""
    s = _resolve_var(e.chart, var)
    return normalize(Expr(sp.diff(e.sym, s, order), e.chart))


_BAD_VALUES = (sp.zoo, sp.nan, sp.oo, -sp.oo)


def _deep_cancel(sym: sp.Expr) -> sp.Expr:
    if isinstance(sym, sp.Derivative):
        return sym
    if sym.is_Function:
        return sym.func(*[_cancel_checked(a) for a in sym.args])
    if sym.args:
        return sym.func(*[_deep_cancel(a) for a in sym.args])
    return sym


def _cancel_checked(sym: sp.Expr) -> sp.Expr:
    try:
        out = sp.cancel(_deep_cancel(sym))
    except ZeroDivisionError as exc:  # pragma: no cover - sympy internals
        raise ExprDivisionError("division by the zero polynomial") from exc
    if out.has(*_BAD_VALUES):
        raise ExprDivisionError("division by the zero polynomial")
    return out


def normalize(e: Expr) -> Expr:
    """Canonical single-fraction form; idempotent.

    Arguments of transcendental atoms are normalised recursively, then the
    surrounding tree is put over a common denominator with coprime,
    content-free parts.
    """
    return Expr(_cancel_checked(e.sym), e.chart)


def subst(e: Expr, bindings: Mapping[Expr | str, ExprLike]) -> Expr:
    """Simultaneous substitution of chart variables, then normalisation."""
    table = {}
    for var, value in bindings.items():
        s = _resolve_var(e.chart, var)
        repl = e._coerce(value) if not isinstance(value, Expr) else value
        if repl.chart != e.chart:
            raise ChartMismatchError(f"{e.chart!r} vs {repl.chart!r}")
        table[s] = repl.sym
    return normalize(Expr(e.sym.subs(table, simultaneous=True), e.chart))


class Point:
    """A total assignment of exact rational values to the chart variables."""

    __slots__ = ("chart", "values")

    def __init__(self, chart: Chart, values: Mapping[str, ExprLike]):
        vals: dict[str, Fraction] = {}
        for name in chart.names:
            if name not in values:
                raise ValueError(f"point is missing a value for {name!r}")
            v = values[name]
            if isinstance(v, Expr):
                if not v.sym.is_Rational:
                    raise TypeError(f"point value for {name!r} is not rational")
                v = Fraction(int(v.sym.p), int(v.sym.q))
            elif isinstance(v, int):
                v = Fraction(v)
            elif isinstance(v, _RationalABC):
                v = Fraction(v.numerator, v.denominator)
            else:
                raise TypeError(f"point value for {name!r} must be exact, got {type(v).__name__}")
            vals[name] = v
        extra = set(values) - set(chart.names)
        if extra:
            raise ValueError(f"point assigns unknown variables {sorted(extra)}")
        self.chart = chart
        self.values = vals

    def __getitem__(self, name: str) -> Fraction:
        return self.values[name]

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}={self.values[n]}" for n in self.chart.names)
        return f"Point({inner})"

    def as_sympy(self) -> dict[sp.Symbol, sp.Rational]:
        return {
            self.chart.symbol(n): sp.Rational(v.numerator, v.denominator)
            for n, v in self.values.items()
        }
