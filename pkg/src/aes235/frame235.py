"""Adapted frames on (2,3,5) distributions and the almost Einstein operator.

Conventions.  A frame is a pair of vector fields (e1, e2) spanning the
distribution D on a five-variable chart; the scale is the wedge e1^e2.
With e3 = [e1, e2], the growth conditions say that (e1, e2, e3) has rank 3
and (e1, e2, e3, [e1, e3], [e2, e3]) is a frame of the tangent space.
Writing theta for the class of e3 in [D,D]/D, the degree -3 quotient has
the basis (f1, f2) = (q3[e1, e3], q3[e2, e3]), and the Levi pairings in
this trivialisation are L_{ab} = eps_{ab} and L^{ab} = eps^{ab} with
eps_{12} = eps^{12} = 1.

The generalised Reeb field is R = e3 + a*e1 + b*e2, with (a, b) fixed by
requiring the induced partial connection to annihilate the scale.  The
partial connection coefficients G^d_{cb} (nabla_{e_c} e_b = G^d_{cb} e_d)
are read off from the degree -3 part of [e_c, [e_b, R]].  On Monge frames
(e1, e2) = (Q, X) = (d/dq, d/dx + p d/dy + q d/dp + F d/dz) everything has
a closed form in the derivatives of F, which doubles as the regression
oracle for the general path.

The lowest component of the Rho tensor is the symmetric bilinear form
P(u)(v) = (1/5) dalpha(Psi1(u) - Psi2(u), v) on D, and the almost Einstein
operator sends a density sigma (trivialised against the scale) to
Sym(nabla^2 sigma) - P sigma, a symmetric 2x2 matrix over the frame.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Literal, Sequence

import sympy as sp

from .symexpr import (
    Chart,
    DEFAULT_CHART,
    Expr,
    SymExprError,
    ZeroResult,
    det,
    is_zero,
    normalize,
    poly_nullspace,
    solve_linear,
    solve_linear_multi,
    zero_test,
)

__all__ = [
    "Density",
    "Frame235",
    "NotA235Error",
    "OneForm",
    "RhoWithDefect",
    "ScaleVerdict",
    "Sym2",
    "VectorField",
    "alpha",
    "check_scale",
    "general_frame",
    "hessian_sym",
    "iota7",
    "kernel_poly",
    "monge_frame",
    "partial_connection",
    "psi_maps",
    "reeb",
    "rho_lowest",
    "rho_lowest_with_defect",
    "theta0",
]

Path = Literal["auto", "closed_form", "general", "rhoT"]


class NotA235Error(SymExprError):
    """The input data does not define a (2,3,5) distribution."""


class VectorField:
    """A derivation on the chart, as coordinate-frame coefficients."""

    __slots__ = ("chart", "coeffs")

    def __init__(self, chart: Chart, coeffs: Sequence[Expr]):
        if len(coeffs) != len(chart):
            raise ValueError("coefficient count must match the chart dimension")
        self.chart = chart
        self.coeffs = tuple(coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VectorField)
            and self.chart == other.chart
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.chart, self.coeffs))

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"VectorField[{inner}]"

    def apply(self, f: Expr) -> Expr:
        """Directional derivative of a scalar."""
        total = self.chart.zero()
        for c, name in zip(self.coeffs, self.chart.names):
            total = total + c * f.diff(name)
        return normalize(total)

    __call__ = apply

    def bracket(self, other: "VectorField") -> "VectorField":
        coeffs = [
            normalize(self.apply(Expr(c.sym, self.chart)) - other.apply(Expr(d.sym, self.chart)))
            for c, d in zip(other.coeffs, self.coeffs)
        ]
        return VectorField(self.chart, coeffs)

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.chart, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.chart, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, f: Expr) -> "VectorField":
        return VectorField(self.chart, [normalize(f * c) for c in self.coeffs])

    def normalized(self) -> "VectorField":
        return VectorField(self.chart, [normalize(c) for c in self.coeffs])

    def is_zero_field(self, guards: Sequence[Expr] = (), seed: int = 0) -> bool:
        return all(is_zero(c, guards=guards, seed=seed) for c in self.coeffs)


class OneForm:
    """A linear functional on vector fields, as coordinate-coframe
    coefficients."""

    __slots__ = ("chart", "coeffs")

    def __init__(self, chart: Chart, coeffs: Sequence[Expr]):
        if len(coeffs) != len(chart):
            raise ValueError("coefficient count must match the chart dimension")
        self.chart = chart
        self.coeffs = tuple(coeffs)

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"OneForm[{inner}]"

    def pair(self, v: VectorField) -> Expr:
        total = self.chart.zero()
        for a, b in zip(self.coeffs, v.coeffs):
            total = total + a * b
        return normalize(total)

    __call__ = pair


@dataclass(frozen=True)
class Density:
    """A density trivialised against the frame scale: a single scalar."""

    sigma: Expr

    @property
    def chart(self) -> Chart:
        return self.sigma.chart


@dataclass(frozen=True)
class Sym2:
    """Symmetric bilinear form on D in the frame (e1, e2)."""

    a11: Expr
    a12: Expr
    a22: Expr

    def entries(self) -> tuple[Expr, Expr, Expr]:
        return (self.a11, self.a12, self.a22)

    def __getitem__(self, key: tuple[int, int]) -> Expr:
        i, j = key
        if (i, j) in ((0, 0),):
            return self.a11
        if (i, j) in ((0, 1), (1, 0)):
            return self.a12
        if (i, j) == (1, 1):
            return self.a22
        raise KeyError(key)

    def map(self, fn) -> "Sym2":
        return Sym2(fn(self.a11), fn(self.a12), fn(self.a22))


@dataclass(frozen=True)
class RhoWithDefect:
    """Symmetrised Rho component plus the raw antisymmetric defect of the
    bracket-based path (expected to vanish)."""

    sym: Sym2
    antisym_defect: Expr


def _decompose_multi(
    basis: Sequence[VectorField],
    targets: Sequence[VectorField],
    guards: Sequence[Expr],
    seed: int,
) -> list[list[Expr]]:
    """Coefficients of each target in the given 5-field basis (one
    elimination, many right-hand sides)."""
    chart = basis[0].chart
    n = len(chart)
    a = [[basis[j].coeffs[i] for j in range(n)] for i in range(n)]
    b_cols = [list(t.coeffs) for t in targets]
    try:
        return solve_linear_multi(a, b_cols, guards=guards, seed=seed)
    except SymExprError as exc:
        raise NotA235Error(f"adapted basis is degenerate: {exc}") from exc


class Frame235:
    """A 2-frame spanning a (2,3,5) distribution, with its derived data.

    The constructor computes and caches the Reeb field, the adapted basis
    (e1, e2, R, [e1, R], [e2, R]) and the partial connection; the 1-form
    alpha, the maps Psi1/Psi2 and the Rho component are computed lazily.
    All cached data is immutable after construction, and every operation
    is pure, so independent frames may be processed concurrently.
    """

    def __init__(
        self,
        chart: Chart,
        e1: VectorField,
        e2: VectorField,
        guards: Sequence[Expr] = (),
        monge_F: Expr | None = None,
        seed: int = 0,
        check: bool = True,
    ):
        self.chart = chart
        self.e1 = e1.normalized()
        self.e2 = e2.normalized()
        self.guards = tuple(normalize(g) for g in guards)
        self.monge_F = normalize(monge_F) if monge_F is not None else None
        self.seed = seed
        self.e3 = self.e1.bracket(self.e2)

        if self.monge_F is None and check:
            self._check_growth()

        if self.monge_F is not None:
            a, b = self._monge_reeb_coeffs()
        else:
            a, b = self._general_reeb_coeffs()
        self.reeb_coeffs = (a, b)
        self.reeb_field = (self.e3 + self.e1.scale(a) + self.e2.scale(b)).normalized()
        self.adapted = (
            self.e1,
            self.e2,
            self.reeb_field,
            self.e1.bracket(self.reeb_field),
            self.e2.bracket(self.reeb_field),
        )
        if self.monge_F is not None:
            self.gamma = self._monge_gamma()
        else:
            self.gamma = self._general_gamma(self.adapted)

    # -- construction helpers ---------------------------------------------

    def _check_growth(self) -> None:
        pairs = [(self.e1, self.e2)]
        rank2 = False
        for u, v in pairs:
            for i, j in itertools.combinations(range(len(self.chart)), 2):
                minor = u.coeffs[i] * v.coeffs[j] - u.coeffs[j] * v.coeffs[i]
                if not is_zero(minor, guards=self.guards, seed=self.seed):
                    rank2 = True
                    break
        if not rank2:
            raise NotA235Error("frame generators are linearly dependent")
        pre = (
            self.e1,
            self.e2,
            self.e3,
            self.e1.bracket(self.e3),
            self.e2.bracket(self.e3),
        )
        rows = [[v.coeffs[j] for j in range(len(self.chart))] for v in pre]
        d = det(rows, guards=self.guards, seed=self.seed)
        if is_zero(d, guards=self.guards, seed=self.seed):
            raise NotA235Error(
                "bracket-generated basis is degenerate: the growth vector is not (2,3,5)"
            )

    def _monge_Q(self, f: Expr, order: int = 1) -> Expr:
        return f.diff("q", order)

    def _monge_reeb_coeffs(self) -> tuple[Expr, Expr]:
        F = self.monge_F
        q2f = self._monge_Q(F, 2)
        if is_zero(q2f, seed=self.seed):
            raise NotA235Error("F_qq vanishes identically: not a (2,3,5) distribution")
        q3f = self._monge_Q(F, 3)
        fz = F.diff("z")
        a = normalize(self.e2.apply(q2f) / q2f - fz)
        b = normalize(-(q3f / q2f))
        return a, b

    def _general_reeb_coeffs(self) -> tuple[Expr, Expr]:
        pre = (
            self.e1,
            self.e2,
            self.e3,
            self.e1.bracket(self.e3),
            self.e2.bracket(self.e3),
        )
        generators = (self.e1, self.e2)
        targets = []
        for c in range(2):
            for b in range(2):
                targets.append(generators[c].bracket(generators[b].bracket(self.e3)))
        cols = _decompose_multi(pre, targets, self.guards, self.seed)
        # B[c][b][d] = coefficient of f_{d+1} in q3([e_c, [e_b, e3]])
        B = [[(cols[2 * c + b][3], cols[2 * c + b][4]) for b in range(2)] for c in range(2)]
        a = normalize(B[1][0][0] + B[1][1][1])
        b = normalize(-(B[0][0][0] + B[0][1][1]))
        return a, b

    def _monge_gamma(self):
        F = self.monge_F
        q2f = self._monge_Q(F, 2)
        a, b = self.reeb_coeffs
        zero = self.chart.zero()
        xxf = self.e2.apply(self.e2.apply(F))
        e3f = self.e3.apply(F)
        c1 = normalize((self._monge_Q(xxf) - 3 * self.e2.apply(e3f)) / q2f)
        return (
            ((zero, zero), (zero, zero)),
            ((a, b), (c1, normalize(-a))),
        )

    def _general_gamma(self, adapted):
        generators = (self.e1, self.e2)
        targets = []
        for c in range(2):
            for b in range(2):
                targets.append(generators[c].bracket(generators[b].bracket(self.reeb_field)))
        cols = _decompose_multi(adapted, targets, self.guards, self.seed)
        rows = []
        for c in range(2):
            rows.append(
                tuple(
                    (normalize(cols[2 * c + b][3]), normalize(cols[2 * c + b][4]))
                    for b in range(2)
                )
            )
        return tuple(rows)

    # -- lazy derived data --------------------------------------------------

    @cached_property
    def alpha_form(self) -> OneForm:
        """The unique 1-form with alpha(R) = 1 vanishing on e1, e2 and on
        [e1, R], [e2, R]."""
        n = len(self.chart)
        a = [[self.adapted[i].coeffs[j] for j in range(n)] for i in range(n)]
        rhs = [self.chart.zero()] * n
        rhs[2] = self.chart.one()
        try:
            sol = solve_linear(a, rhs, guards=self.guards, seed=self.seed)
        except SymExprError as exc:
            raise NotA235Error(f"frame degenerate while solving for alpha: {exc}") from exc
        return OneForm(self.chart, sol)

    def psi1_of(self, gamma: VectorField) -> VectorField:
        """Psi1(gamma), from half the degree -3 part of [R, [gamma, R]]."""
        w = self.reeb_field.bracket(gamma.bracket(self.reeb_field))
        c = _decompose_multi(self.adapted, [w], self.guards, self.seed)[0]
        half = Fraction(1, 2)
        return (
            self.e1.scale(self.chart.const(half) * c[3])
            + self.e2.scale(self.chart.const(half) * c[4])
        ).normalized()

    def psi2_of(self, gamma: VectorField) -> VectorField:
        """Psi2(gamma) = alpha([e2, [gamma, R]]) e1 - alpha([e1, [gamma, R]]) e2."""
        w = gamma.bracket(self.reeb_field)
        al = self.alpha_form
        c1 = al.pair(self.e2.bracket(w))
        c2 = normalize(-al.pair(self.e1.bracket(w)))
        return (self.e1.scale(c1) + self.e2.scale(c2)).normalized()

    @cached_property
    def psi_matrices(self) -> tuple[tuple[tuple[Expr, Expr], ...], ...]:
        """Matrices of Psi1 and Psi2 in the frame: entry [i][c][d] is the
        e_{d+1} coefficient of Psi_{i+1}(e_{c+1})."""
        mats = []
        for psi in (self.psi1_of, self.psi2_of):
            rows = []
            for gen in (self.e1, self.e2):
                img = psi(gen)
                coeffs = _decompose_in_span(
                    (self.e1, self.e2), img, self.guards, self.seed
                )
                rows.append(coeffs)
            mats.append(tuple(rows))
        return tuple(mats)

    def dalpha(self, u: VectorField, v: VectorField) -> Expr:
        al = self.alpha_form
        return normalize(u.apply(al.pair(v)) - v.apply(al.pair(u)) - al.pair(u.bracket(v)))

    @cached_property
    def rho(self) -> Sym2:
        if self.monge_F is not None:
            return self._rho_closed_form()
        return self._rho_from_brackets().sym

    def _rho_closed_form(self) -> Sym2:
        F = self.monge_F
        if F is None:
            raise NotA235Error("closed-form Rho needs a Monge frame")
        Q, X = self.e1, self.e2
        q2f = self._monge_Q(F, 2)
        q3f = self._monge_Q(F, 3)
        q4f = self._monge_Q(F, 4)
        fz = F.diff("z")
        xq2f = X.apply(q2f)
        e3f = self.e3.apply(F)
        tenth = self.chart.const(Fraction(1, 10))
        p_qq = normalize(tenth * (-3 * q4f / q2f + 4 * q3f**2 / q2f**2))
        p_qx = normalize(
            tenth
            * (
                (-2 * self._monge_Q(xq2f) - X.apply(q3f)) / q2f
                + 4 * q3f * xq2f / q2f**2
                - q3f * fz / q2f
                + 2 * self._monge_Q(fz)
            )
        )
        xf = X.apply(F)
        xxf = X.apply(xf)
        qxf = self._monge_Q(xf)
        p_xx = normalize(
            tenth
            * (
                (
                    -self._monge_Q(self._monge_Q(xxf))
                    + 3 * self._monge_Q(X.apply(e3f))
                    + 2 * X.apply(self._monge_Q(self._monge_Q(xf)))
                    - 4 * X.apply(self._monge_Q(X.apply(self._monge_Q(F))))
                )
                / q2f
                + q3f * (3 * self._monge_Q(xxf) - 9 * X.apply(e3f)) / q2f**2
                + xq2f**2 / q2f**2
                - fz**2
            )
        )
        return Sym2(p_qq, p_qx, p_xx)

    def _rho_from_brackets(self) -> RhoWithDefect:
        psi1, psi2 = self.psi_matrices
        generators = (self.e1, self.e2)
        raw = [[None, None], [None, None]]
        fifth = self.chart.const(Fraction(1, 5))
        for c in range(2):
            u = (
                self.e1.scale(psi1[c][0] - psi2[c][0])
                + self.e2.scale(psi1[c][1] - psi2[c][1])
            ).normalized()
            for b in range(2):
                raw[c][b] = normalize(fifth * self.dalpha(u, generators[b]))
        half = self.chart.const(Fraction(1, 2))
        sym = Sym2(
            raw[0][0],
            normalize(half * (raw[0][1] + raw[1][0])),
            raw[1][1],
        )
        defect = normalize(half * (raw[0][1] - raw[1][0]))
        return RhoWithDefect(sym, defect)


def _decompose_in_span(
    generators: Sequence[VectorField],
    target: VectorField,
    guards: Sequence[Expr],
    seed: int,
) -> tuple[Expr, Expr]:
    """Coefficients of a field lying in the span of (e1, e2); raises if the
    remaining coordinate equations are violated."""
    chart = generators[0].chart
    n = len(chart)
    pivot_pair = None
    for i, j in itertools.combinations(range(n), 2):
        minor = (
            generators[0].coeffs[i] * generators[1].coeffs[j]
            - generators[0].coeffs[j] * generators[1].coeffs[i]
        )
        if not is_zero(minor, guards=guards, seed=seed):
            pivot_pair = (i, j)
            break
    if pivot_pair is None:
        raise NotA235Error("degenerate span")
    i, j = pivot_pair
    a = [
        [generators[0].coeffs[i], generators[1].coeffs[i]],
        [generators[0].coeffs[j], generators[1].coeffs[j]],
    ]
    sol = solve_linear(a, [target.coeffs[i], target.coeffs[j]], guards=guards, seed=seed)
    residual = target - (generators[0].scale(sol[0]) + generators[1].scale(sol[1]))
    for c in residual.coeffs:
        if not is_zero(c, guards=guards, seed=seed):
            raise NotA235Error("field does not lie in the span of the frame")
    return (sol[0], sol[1])


# -- constructors -----------------------------------------------------------


def monge_frame(F: Expr | str, chart: Chart | None = None, seed: int = 0) -> Frame235:
    """Frame (Q, X) of the distribution defined by dz = F dx on the jet
    chart: Q = d/dq, X = d/dx + p d/dy + q d/dp + F d/dz.

    The nondegeneracy guard is F_qq; it must not vanish identically.
    """
    chart = chart or DEFAULT_CHART
    if set("xypqz") - set(chart.names):
        raise ValueError("a Monge frame needs the jet chart (x, y, p, q, z)")
    if isinstance(F, str):
        F = chart.parse(F)
    F = normalize(F)
    zero, one = chart.zero(), chart.one()
    coeffs_q = {name: zero for name in chart.names}
    coeffs_q["q"] = one
    e1 = VectorField(chart, [coeffs_q[n] for n in chart.names])
    coeffs_x = {name: zero for name in chart.names}
    coeffs_x["x"] = one
    coeffs_x["y"] = chart.var("p")
    coeffs_x["p"] = chart.var("q")
    coeffs_x["z"] = F
    e2 = VectorField(chart, [coeffs_x[n] for n in chart.names])
    fqq = normalize(F.diff("q", 2))
    if is_zero(fqq, seed=seed):
        raise NotA235Error("F_qq vanishes identically: not a (2,3,5) distribution")
    return Frame235(chart, e1, e2, guards=(fqq,), monge_F=F, seed=seed)


def general_frame(
    e1: VectorField,
    e2: VectorField,
    guards: Sequence[Expr] = (),
    seed: int = 0,
) -> Frame235:
    """Frame from two explicit generators with nondegeneracy guards; the
    growth-vector conditions are checked under the guards."""
    if e1.chart != e2.chart:
        raise ValueError("frame generators must share a chart")
    return Frame235(e1.chart, e1, e2, guards=guards, seed=seed)


# -- operations -------------------------------------------------------------


def reeb(f: Frame235, path: Path = "auto") -> VectorField:
    """The generalised Reeb field of the frame scale.

    ``closed_form`` uses the Monge formula
    R = [Q, X] + (X(F_qq)/F_qq - F_z) Q - (F_qqq/F_qq) X and requires a
    Monge frame; ``general`` re-derives (a, b) from the trace condition on
    the induced connection.  Both paths agree on Monge inputs.
    """
    if path in ("auto",):
        return f.reeb_field
    if path == "closed_form":
        if f.monge_F is None:
            raise NotA235Error("closed-form Reeb needs a Monge frame")
        a, b = f._monge_reeb_coeffs()
    elif path == "general":
        a, b = f._general_reeb_coeffs()
    else:
        raise ValueError(f"unknown path {path!r}")
    return (f.e3 + f.e1.scale(a) + f.e2.scale(b)).normalized()


def partial_connection(f: Frame235, path: Path = "auto"):
    """Connection coefficients G[c][b] = (G^1_{cb}, G^2_{cb}) with
    nabla_{e_c} e_b = G^d_{cb} e_d."""
    if path == "auto":
        return f.gamma
    if path == "closed_form":
        if f.monge_F is None:
            raise NotA235Error("closed-form connection needs a Monge frame")
        return f._monge_gamma()
    if path == "general":
        a, b = f._general_reeb_coeffs()
        r = (f.e3 + f.e1.scale(a) + f.e2.scale(b)).normalized()
        adapted = (f.e1, f.e2, r, f.e1.bracket(r), f.e2.bracket(r))
        return f._general_gamma(adapted)
    raise ValueError(f"unknown path {path!r}")


def alpha(f: Frame235) -> OneForm:
    return f.alpha_form


def psi_maps(f: Frame235):
    """The 2x2 frame matrices of Psi1 and Psi2."""
    return f.psi_matrices


def rho_lowest(f: Frame235, path: Path = "auto") -> Sym2:
    """Lowest-homogeneity Rho component in the frame scale.

    ``closed_form`` (Monge frames only) uses the explicit formulas in the
    derivatives of F; ``rhoT`` derives it from Psi1, Psi2 and dalpha and
    symmetrises, reporting the antisymmetric defect through
    :func:`rho_lowest_with_defect`.
    """
    if path == "auto":
        return f.rho
    if path == "closed_form":
        return f._rho_closed_form()
    if path == "rhoT":
        return f._rho_from_brackets().sym
    raise ValueError(f"unknown path {path!r}")


def rho_lowest_with_defect(f: Frame235) -> RhoWithDefect:
    """The bracket-path Rho with its raw antisymmetric part."""
    return f._rho_from_brackets()


def _hessian_full(f: Frame235, sigma: Expr):
    generators = (f.e1, f.e2)
    first = [g.apply(sigma) for g in generators]
    h = [[None, None], [None, None]]
    for c in range(2):
        for b in range(2):
            correction = f.gamma[c][b][0] * first[0] + f.gamma[c][b][1] * first[1]
            h[c][b] = normalize(generators[c].apply(first[b]) - correction)
    return h


def hessian_sym(f: Frame235, sigma: Density) -> Sym2:
    """Symmetrised second covariant derivative of the density in the frame
    scale (the connection annihilates the scale, so weights drop out)."""
    h = _hessian_full(f, sigma.sigma)
    half = f.chart.const(Fraction(1, 2))
    return Sym2(h[0][0], normalize(half * (h[0][1] + h[1][0])), h[1][1])


def theta0(f: Frame235, sigma: Density, path: Path = "auto") -> Sym2:
    """The almost Einstein operator: Sym(nabla^2 sigma) - P sigma."""
    hs = hessian_sym(f, sigma)
    p = rho_lowest(f, path=path)
    s = sigma.sigma
    return Sym2(
        normalize(hs.a11 - p.a11 * s),
        normalize(hs.a12 - p.a12 * s),
        normalize(hs.a22 - p.a22 * s),
    )


@dataclass(frozen=True)
class ScaleVerdict:
    """Outcome of testing a density against the almost Einstein equation."""

    kind: str  # "solution" | "non-solution" | "probably-solution"
    components: tuple[ZeroResult, ZeroResult, ZeroResult]

    @property
    def is_solution(self) -> bool:
        return self.kind != "non-solution"

    @property
    def probabilistic(self) -> bool:
        return self.kind == "probably-solution"


def check_scale(f: Frame235, sigma: Density, seed: int = 0) -> ScaleVerdict:
    """Zero-test the three operator components; a verdict that needed the
    sampling branch is only probably a solution."""
    th = theta0(f, sigma)
    results = tuple(zero_test(e, guards=f.guards, seed=seed) for e in th.entries())
    if all(r.zero for r in results):
        kind = "solution" if all(r.certain for r in results) else "probably-solution"
    else:
        kind = "non-solution"
    return ScaleVerdict(kind, results)


def _monomial_exponents(n_vars: int, degree: int):
    for total in range(degree + 1):
        for cut in itertools.combinations(range(total + n_vars - 1), n_vars - 1):
            exps = []
            prev = -1
            for c in cut:
                exps.append(c - prev - 1)
                prev = c
            exps.append(total + n_vars - 2 - prev)
            yield tuple(exps)


def kernel_poly(
    f: Frame235,
    degree: int,
    monomial_cap: int = 200_000,
    seed: int = 0,
) -> list[Density]:
    """Exact basis of the polynomial-density kernel of the operator up to
    the given total degree.

    The operator is applied to an ansatz with one unknown rational
    coefficient per monomial; clearing the declared denominators (powers of
    F_qq and of the denominator of F) leaves rows that are polynomial in
    the chart variables and the transcendental atoms, whose collected
    coefficients form an exact rational system.  Atoms are treated as
    independent generators, which is sound for the bundled corpus (a
    rational F or one involving exp); kernels that close up only through
    trigonometric identities are outside this routine's scope.
    """
    if f.monge_F is None:
        raise NotA235Error("polynomial kernel search needs a Monge frame")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    chart = f.chart
    exps = list(_monomial_exponents(len(chart), degree))
    coeff_syms = [Expr(sp.Symbol(f"_c{i}"), chart) for i in range(len(exps))]
    monomials = []
    for e in exps:
        m = sp.Integer(1)
        for s, k in zip(chart.symbols, e):
            m *= s**k
        monomials.append(Expr(m, chart))
    ansatz = chart.zero()
    for c, m in zip(coeff_syms, monomials):
        ansatz = ansatz + c * m
    th = theta0(f, Density(normalize(ansatz)))
    rows = []
    for comp in th.entries():
        num, _den = comp.fraction()
        rows.append(Expr(num, chart))
    basis = poly_nullspace(rows, coeff_syms, monomial_cap=monomial_cap)
    densities = []
    for vec in basis:
        s = chart.zero()
        for coeff, m in zip(vec, monomials):
            if coeff:
                s = s + chart.const(coeff) * m
        densities.append(Density(normalize(s)))
    return densities


def iota7(f: Frame235, sigma: Density) -> VectorField:
    """First-order lift of a density into [D, D]: degree -1 part
    eps^{cb} (e_c sigma) e_b, degree -2 part sigma R, degree -3 part zero."""
    s = sigma.sigma
    d1 = f.e1.apply(s)
    d2 = f.e2.apply(s)
    return (
        f.e1.scale(normalize(-d2)) + f.e2.scale(d1) + f.reeb_field.scale(s)
    ).normalized()
