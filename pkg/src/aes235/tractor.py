"""Slot calculus on the standard tractor bundle in a fixed frame scale.

A tractor section splits into five slots (chi, phi^a, upsilon, tau_a,
sigma).  The top two slots require curvature data beyond the
lowest-homogeneity Rho component, so they may carry an ``UNKNOWN`` marker;
the slot algebra is three-valued (concrete, zero, unknown): multiplying
an unknown by a structural zero gives zero, any other operation reading an
unknown yields unknown, never a silent zero.

Rho components other than the lowest one default to named abstract
constants, so the printed covariant-derivative formulas stay testable as
algebraic identities.  Directional derivatives transverse to the
distribution (the lozenge direction and the duals) are opaque operators by
default; the single computable identity
``nabla_loz sigma = L^{bc}(nabla_b nabla_c sigma - P_{bc} sigma)`` is
provided as :func:`weyl_loz_deriv_sigma`.  Barred indices are already
converted to unbarred ones throughout, and the Levi trivialisations are
L_{ab} = eps_{ab}, L^{ab} = eps^{ab} with eps_12 = eps^12 = +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal, Sequence, Union

import sympy as sp

from .frame235 import Density, Frame235, Sym2, _hessian_full, rho_lowest
from .symexpr import Chart, Expr, normalize

__all__ = [
    "UNKNOWN",
    "Unknown",
    "RhoSymbols",
    "TractorSlots",
    "Upsilon",
    "change_scale",
    "codifferential_nabla_bottom_rows",
    "l0_partial",
    "theta0_via_tractor",
    "tractor_deriv",
    "weyl_loz_deriv_sigma",
]


class Unknown:
    """Marker for slots whose value the available data cannot determine."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNKNOWN"


UNKNOWN = Unknown()

Slot = Union[Expr, Unknown]


def _is_zero_slot(x: Slot) -> bool:
    return isinstance(x, Expr) and x.sym.is_zero


def s_add(*terms: Slot) -> Slot:
    """Three-valued sum: unknown absorbs unless it never occurs."""
    acc = None
    for t in terms:
        if isinstance(t, Unknown):
            return UNKNOWN
        acc = t if acc is None else acc + t
    return normalize(acc)


def s_mul(a: Slot, b: Slot) -> Slot:
    """Three-valued product: a structural zero annihilates an unknown."""
    if _is_zero_slot(a) or _is_zero_slot(b):
        zero = (a if isinstance(a, Expr) else b).chart.zero()
        return zero
    if isinstance(a, Unknown) or isinstance(b, Unknown):
        return UNKNOWN
    return normalize(a * b)


def s_neg(a: Slot) -> Slot:
    return UNKNOWN if isinstance(a, Unknown) else normalize(-a)


@dataclass(frozen=True)
class TractorSlots:
    """Five-slot section in a fixed scale.  ``sigma``, ``tau`` and
    ``upsilon`` are always concrete; ``chi`` and ``phi`` may be unknown."""

    chi: Slot
    phi: tuple[Slot, Slot]
    upsilon: Expr
    tau: tuple[Expr, Expr]
    sigma: Expr

    @property
    def chart(self) -> Chart:
        return self.sigma.chart

    def to_jsonable(self) -> dict:
        def enc(x: Slot):
            return "unknown" if isinstance(x, Unknown) else str(x)

        return {
            "chi": enc(self.chi),
            "phi": [enc(self.phi[0]), enc(self.phi[1])],
            "upsilon": enc(self.upsilon),
            "tau": [enc(self.tau[0]), enc(self.tau[1])],
            "sigma": enc(self.sigma),
        }


@dataclass(frozen=True)
class Upsilon:
    """A graded covector (u1_a, u2, u3^a) in the frame trivialisation."""

    u1: tuple[Expr, Expr]
    u2: Expr
    u3: tuple[Expr, Expr]

    @classmethod
    def zero(cls, chart: Chart) -> "Upsilon":
        z = chart.zero()
        return cls((z, z), z, (z, z))


class RhoSymbols:
    """The nine Rho component families with their symmetries built in.

    Entries are expressions; unspecified ones default to named abstract
    constants (plain symbols), keeping derivative formulas testable as
    identities.  Index helpers follow the unbarred convention: ``dd`` is
    P_{ab} (symmetric), ``d_loz`` is P_{a <>} = P_{<> a}, ``d_up`` is
    P_a^b = P^b_a, ``lozloz`` is P_{<><>}, ``loz_up`` is P_<>^a = P^a_<>,
    and ``upup`` is P^{ab} (symmetric).
    """

    def __init__(
        self,
        chart: Chart,
        dd: Sym2 | None = None,
        d_loz: tuple[Expr, Expr] | None = None,
        d_up=None,
        lozloz: Expr | None = None,
        loz_up: tuple[Expr, Expr] | None = None,
        upup: Sym2 | None = None,
        prefix: str = "P",
    ):
        self.chart = chart

        def sym(name: str) -> Expr:
            return Expr(sp.Symbol(f"{prefix}_{name}", real=True), chart)

        self.dd = dd if dd is not None else Sym2(sym("11"), sym("12"), sym("22"))
        self.d_loz = d_loz if d_loz is not None else (sym("1o"), sym("2o"))
        if d_up is not None:
            self.d_up = tuple(tuple(d_up[i][j] for j in range(2)) for i in range(2))
        else:
            self.d_up = ((sym("1u1"), sym("1u2")), (sym("2u1"), sym("2u2")))
        self.lozloz = lozloz if lozloz is not None else sym("oo")
        self.loz_up = loz_up if loz_up is not None else (sym("ou1"), sym("ou2"))
        self.upup = upup if upup is not None else Sym2(sym("u11"), sym("u12"), sym("u22"))

    @classmethod
    def abstract(cls, chart: Chart, prefix: str = "P") -> "RhoSymbols":
        return cls(chart, prefix=prefix)

    @classmethod
    def with_lowest(cls, chart: Chart, lowest: Sym2, prefix: str = "P") -> "RhoSymbols":
        """Concrete lowest-homogeneity block, abstract everything else."""
        return cls(chart, dd=lowest, prefix=prefix)

    # accessors in the index notation of the derivative formulas
    def p(self, a: int, b: int) -> Expr:
        return self.dd[a, b]

    def p_loz(self, a: int) -> Expr:
        return self.d_loz[a]

    def p_up(self, a: int, b: int) -> Expr:
        """P_a^b (= P^b_a)."""
        return self.d_up[a][b]

    def p_lozloz(self) -> Expr:
        return self.lozloz

    def p_loz_up(self, a: int) -> Expr:
        return self.loz_up[a]

    def p_upup(self, a: int, b: int) -> Expr:
        return self.upup[a, b]


# Levi trivialisations: L_{ab} = eps_{ab}, L^{ab} = eps^{ab}, eps_12 = 1.
_EPS = ((0, 1), (-1, 0))


def _eps(chart: Chart, i: int, j: int) -> Expr:
    return chart.const(_EPS[i][j])


def change_scale(t: TractorSlots, u: Upsilon) -> TractorSlots:
    """Slot transformation under a change of scale by the graded covector
    ``u``; the bottom slot is invariant."""
    ch = t.chart
    u1, u2, u3 = u.u1, u.u2, u.u3
    sigma = t.sigma
    tau = t.tau
    ups = t.upsilon
    half = ch.const(Fraction(1, 2))

    def lu1tau() -> Expr:
        # L^{ab} (u1)_a tau_b = u1_1 tau_2 - u1_2 tau_1
        return normalize(u1[0] * tau[1] - u1[1] * tau[0])

    new_sigma = sigma
    new_tau = (
        normalize(tau[0] + sigma * u1[0]),
        normalize(tau[1] + sigma * u1[1]),
    )
    new_ups = normalize(ups - 4 * lu1tau() - sigma * u2)

    def lup(vec: tuple[Expr, Expr], a: int) -> Expr:
        # L^{ba} vec_b : a = 0 -> -vec_1 ; a = 1 -> +vec_0
        return normalize(-vec[1]) if a == 0 else vec[0]

    new_phi = []
    for a in range(2):
        new_phi.append(
            s_add(
                t.phi[a],
                s_mul(ch.const(-4) * lup(u1, a), ups),
                normalize(-2 * u2 * lup(tau, a)),
                normalize(8 * lu1tau() * lup(u1, a)),
                normalize(sigma * u3[a]),
                normalize(-2 * sigma * u2 * lup(u1, a)),
            )
        )
    phi_dot_u1 = s_add(s_mul(t.phi[0], u1[0]), s_mul(t.phi[1], u1[1]))
    new_chi = s_add(
        t.chi,
        s_neg(phi_dot_u1),
        s_mul(ch.const(-1) * u2, ups),
        normalize(-(tau[0] * u3[0] + tau[1] * u3[1])),
        normalize(4 * u2 * lu1tau()),
        normalize(half * sigma * u2 * u2),
        normalize(-sigma * (u1[0] * u3[0] + u1[1] * u3[1])),
    )
    return TractorSlots(new_chi, (new_phi[0], new_phi[1]), new_ups, new_tau, new_sigma)


def l0_partial(f: Frame235, sigma: Density) -> TractorSlots:
    """Partial splitting of a density: the computable bottom three slots
    of the lift whose covariant derivative is annihilated by the
    codifferential; the top two slots are marked unknown."""
    s = normalize(sigma.sigma)
    h = _hessian_full(f, s)
    p = rho_lowest(f)
    ch = f.chart
    # -L^{bc}(nabla_b nabla_c sigma - P_{bc} sigma): only the antisymmetric
    # Hessian part survives the contraction, P being symmetric
    ups = normalize(-(h[0][1] - h[1][0]) + (p.a12 - p.a12) * s)
    tau = (f.e1.apply(s), f.e2.apply(s))
    return TractorSlots(UNKNOWN, (UNKNOWN, UNKNOWN), ups, tau, s)


def _nabla_d_scalar(f: Frame235, b: int, e: Expr) -> Expr:
    gen = (f.e1, f.e2)[b]
    return gen.apply(e)


def _nabla_d_tau(f: Frame235, b: int, tau: tuple[Expr, Expr], a: int) -> Expr:
    gen = (f.e1, f.e2)[b]
    correction = f.gamma[b][a][0] * tau[0] + f.gamma[b][a][1] * tau[1]
    return normalize(gen.apply(tau[a]) - correction)


def _nabla_d_phi(f: Frame235, b: int, phi: tuple[Slot, Slot], a: int) -> Slot:
    if isinstance(phi[0], Unknown) or isinstance(phi[1], Unknown):
        return UNKNOWN
    gen = (f.e1, f.e2)[b]
    correction = f.gamma[b][0][a] * phi[0] + f.gamma[b][1][a] * phi[1]
    return normalize(gen.apply(phi[a]) + correction)


def _opaque_deriv(name: str) -> Callable[[Expr], Expr]:
    fn = sp.Function(name, real=True)

    def apply(e: Expr) -> Expr:
        return Expr(fn(normalize(e).sym), e.chart)

    return apply


Direction = Union[int, Literal["loz"], tuple[Literal["dual"], int]]


def tractor_deriv(
    t: TractorSlots,
    direction: Direction,
    f: Frame235,
    rho: RhoSymbols,
    loz_deriv: Callable[[Expr], Expr] | None = None,
    dual_deriv: Callable[[int, Expr], Expr] | None = None,
) -> TractorSlots:
    """One directional covariant derivative of a tractor section.

    ``direction`` is a frame index (0 or 1), the string ``"loz"`` for the
    direction transverse to D inside its derived square, or ``("dual", a)``
    for the dual directions.  Transverse scalar derivatives default to
    opaque operators unless supplied.
    """
    ch = t.chart
    half = ch.const(Fraction(1, 2))
    quarter = ch.const(Fraction(1, 4))

    if isinstance(direction, int):
        b = direction
        if b not in (0, 1):
            raise ValueError("frame direction must be 0 or 1")
        d_chi = UNKNOWN if isinstance(t.chi, Unknown) else _nabla_d_scalar(f, b, t.chi)
        chi_row = s_add(
            d_chi,
            s_mul(rho.p(b, 0), t.phi[0]),
            s_mul(rho.p(b, 1), t.phi[1]),
            normalize(rho.p_loz(b) * t.upsilon),
            normalize(rho.p_up(b, 0) * t.tau[0] + rho.p_up(b, 1) * t.tau[1]),
        )
        phi_row = []
        for a in range(2):
            # L^{ca} P_{bc} : a = 0 -> -P_{b2} ; a = 1 -> +P_{b1}
            lp = normalize(-rho.p(b, 1)) if a == 0 else rho.p(b, 0)
            ltau = normalize(-t.tau[1]) if a == 0 else t.tau[0]
            phi_row.append(
                s_add(
                    _nabla_d_phi(f, b, t.phi, a),
                    s_mul(t.chi, ch.one() if a == b else ch.zero()),
                    normalize(4 * t.upsilon * lp),
                    normalize(2 * rho.p_loz(b) * ltau),
                    normalize(-t.sigma * rho.p_up(b, a)),
                )
            )
        ups_row = s_add(
            _nabla_d_scalar(f, b, t.upsilon),
            s_mul(half * _eps(ch, b, 0), t.phi[0]),
            s_mul(half * _eps(ch, b, 1), t.phi[1]),
            # 4 L^{cd} P_{bc} tau_d = 4 (P_{b1} tau_2 - P_{b2} tau_1)
            normalize(4 * (rho.p(b, 0) * t.tau[1] - rho.p(b, 1) * t.tau[0])),
            normalize(t.sigma * rho.p_loz(b)),
        )
        tau_row = tuple(
            normalize(
                _nabla_d_tau(f, b, t.tau, a)
                + half * _eps(ch, b, a) * t.upsilon
                - t.sigma * rho.p(b, a)
            )
            for a in range(2)
        )
        sigma_row = normalize(_nabla_d_scalar(f, b, t.sigma) - t.tau[b])
        return TractorSlots(chi_row, (phi_row[0], phi_row[1]), ups_row, tau_row, sigma_row)

    if direction == "loz":
        dv = loz_deriv or _opaque_deriv("nabla_loz")
        d_chi = UNKNOWN if isinstance(t.chi, Unknown) else dv(t.chi)
        chi_row = s_add(
            d_chi,
            s_mul(rho.p_loz(0), t.phi[0]),
            s_mul(rho.p_loz(1), t.phi[1]),
            normalize(rho.p_lozloz() * t.upsilon),
            normalize(rho.p_loz_up(0) * t.tau[0] + rho.p_loz_up(1) * t.tau[1]),
        )
        phi_row = []
        for a in range(2):
            lp = normalize(-rho.p_loz(1)) if a == 0 else rho.p_loz(0)
            ltau = normalize(-t.tau[1]) if a == 0 else t.tau[0]
            d_phi = UNKNOWN if isinstance(t.phi[a], Unknown) else dv(t.phi[a])
            phi_row.append(
                s_add(
                    d_phi,
                    normalize(4 * t.upsilon * lp),
                    normalize(2 * rho.p_lozloz() * ltau),
                    normalize(-t.sigma * rho.p_loz_up(a)),
                )
            )
        ups_row = s_add(
            dv(t.upsilon),
            t.chi,
            normalize(4 * (rho.p_loz(0) * t.tau[1] - rho.p_loz(1) * t.tau[0])),
            normalize(t.sigma * rho.p_lozloz()),
        )
        tau_row = []
        for a in range(2):
            # -(1/4) L_{ca} phi^c : a = 0 -> +phi^2/4 ; a = 1 -> -phi^1/4
            lphi = s_mul(quarter if a == 0 else ch.const(Fraction(-1, 4)), t.phi[1 - a])
            tau_row.append(
                s_add(dv(t.tau[a]), lphi, normalize(-t.sigma * rho.p_loz(a)))
            )
        sigma_row = normalize(dv(t.sigma) + t.upsilon)
        return TractorSlots(chi_row, (phi_row[0], phi_row[1]), ups_row, tuple(tau_row), sigma_row)

    if isinstance(direction, tuple) and direction[0] == "dual":
        b = direction[1]
        if b not in (0, 1):
            raise ValueError("dual direction must be 0 or 1")
        base = dual_deriv or (lambda i, e: _opaque_deriv(f"nabla_up{i + 1}")(e))
        dv = lambda e: base(b, e)
        d_chi = UNKNOWN if isinstance(t.chi, Unknown) else dv(t.chi)
        chi_row = s_add(
            d_chi,
            s_mul(rho.p_up(0, b), t.phi[0]),
            s_mul(rho.p_up(1, b), t.phi[1]),
            normalize(rho.p_loz_up(b) * t.upsilon),
            normalize(rho.p_upup(b, 0) * t.tau[0] + rho.p_upup(b, 1) * t.tau[1]),
        )
        phi_row = []
        for a in range(2):
            # L^{ca} P^b_c : a = 0 -> -P^b_2 ; a = 1 -> +P^b_1
            lp = normalize(-rho.p_up(1, b)) if a == 0 else rho.p_up(0, b)
            ltau = normalize(-t.tau[1]) if a == 0 else t.tau[0]
            d_phi = UNKNOWN if isinstance(t.phi[a], Unknown) else dv(t.phi[a])
            phi_row.append(
                s_add(
                    d_phi,
                    normalize(4 * t.upsilon * lp),
                    normalize(2 * rho.p_loz_up(b) * ltau),
                    normalize(-t.sigma * rho.p_upup(b, a)),
                )
            )
        ups_row = s_add(
            dv(t.upsilon),
            normalize(4 * (rho.p_up(0, b) * t.tau[1] - rho.p_up(1, b) * t.tau[0])),
            normalize(t.sigma * rho.p_loz_up(b)),
        )
        tau_row = tuple(
            s_add(
                dv(t.tau[a]),
                s_mul(t.chi, ch.one() if a == b else ch.zero()),
                normalize(-t.sigma * rho.p_up(a, b)),
            )
            for a in range(2)
        )
        sigma_row = s_add(dv(t.sigma), s_neg(t.phi[b]))
        return TractorSlots(chi_row, (phi_row[0], phi_row[1]), ups_row, tau_row, sigma_row)

    raise ValueError(f"unknown direction {direction!r}")


def weyl_loz_deriv_sigma(f: Frame235, sigma: Density) -> Expr:
    """The one computable transverse derivative:
    nabla_loz sigma = L^{bc}(nabla_b nabla_c sigma - P_{bc} sigma); the Rho
    term drops out of the contraction by symmetry."""
    h = _hessian_full(f, normalize(sigma.sigma))
    return normalize(h[0][1] - h[1][0])


def theta0_via_tractor(f: Frame235, sigma: Density) -> Sym2:
    """Second route to the almost Einstein operator: take the partial
    splitting, apply the frame-direction covariant derivatives, and
    symmetrise the tau row.  Must agree with the direct formula."""
    t = l0_partial(f, sigma)
    rho = RhoSymbols.with_lowest(f.chart, rho_lowest(f))
    rows = [tractor_deriv(t, b, f, rho).tau for b in (0, 1)]
    half = f.chart.const(Fraction(1, 2))
    return Sym2(
        normalize(rows[0][0]),
        normalize(half * (rows[0][1] + rows[1][0])),
        normalize(rows[1][1]),
    )


def codifferential_nabla_bottom_rows(
    f: Frame235,
    t: TractorSlots,
    rho: RhoSymbols,
    loz_deriv_sigma: Expr | None = None,
) -> tuple[tuple[Expr, Expr], Expr]:
    """The two computable rows of the codifferential of the covariant
    derivative: the tau row (nabla_a sigma - tau_a) and the upsilon row
    -4 L^{bc}(nabla_b tau_c + upsilon L_{bc}/2 - P_{bc} sigma)
    - (nabla_loz sigma + upsilon)."""
    ch = t.chart
    tau_row = tuple(
        normalize(_nabla_d_scalar(f, a, t.sigma) - t.tau[a]) for a in range(2)
    )
    half = ch.const(Fraction(1, 2))
    inner = []
    for b in range(2):
        for c in range(2):
            if _EPS[b][c] == 0:
                continue
            term = normalize(
                _nabla_d_tau(f, b, t.tau, c)
                + half * _eps(ch, b, c) * t.upsilon
                - rho.p(b, c) * t.sigma
            )
            inner.append(_eps(ch, b, c) * term)
    contraction = normalize(inner[0] + inner[1]) if len(inner) == 2 else ch.zero()
    dloz = loz_deriv_sigma if loz_deriv_sigma is not None else _opaque_deriv("nabla_loz")(t.sigma)
    ups_row = normalize(-4 * contraction - (dloz + t.upsilon))
    return tau_row, ups_row
