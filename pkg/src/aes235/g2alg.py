"""Exact 7x7 matrix model of the split exceptional 14-dimensional Lie
algebra, its |3|-grading, pairings, and its action on the 7-dimensional
representation.

An element is determined by parameters (A, X, Y, Z, W, r, s) with A a 2x2
block, X, W columns, Y, Z rows and r, s scalars; the realised matrix is
block-assembled with coefficients in Q(sqrt 2).  Parameters, not raw
matrices, are the canonical representation: re-parametrising a commutator
checks every entry of the realisation, so a transcription slip in the
block formula surfaces as a closure failure instead of silent garbage.

Grades: A -> 0, X -> -1, r -> -2, Y -> -3, Z -> +1, s -> +2, W -> +3.
The invariant pairing is normalised so that the grade-wise dualities are
(Y, W) -> Y_a W^a / 3, (r, s) -> rs / 2, (X, Z) -> Z_a X^a and, on grade
zero, (A, A') -> [tr(AA') + tr(A) tr(A')] / 3; this is 1/24 of the
Killing form, i.e. one sixth of the 7-dimensional trace form.

Vectors of the representation are written top-to-bottom as
(chi, phi^1, phi^2, upsilon, tau_1, tau_2, sigma); all modules share this
slot order.  The Levi–Civita symbol convention is eps_12 = eps^12 = +1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import sympy as sp

from .symexpr import Chart, DEFAULT_CHART, Expr, SymExprError, normalize

__all__ = [
    "ClosureError",
    "G2Element",
    "GRADES",
    "V7",
    "act_on_V",
    "act_on_V_tablewise",
    "bracket",
    "g2_element",
    "grade_project",
    "kostant_codiff",
    "pairing",
    "verify_structure",
]

GRADES = (-3, -2, -1, 0, 1, 2, 3)

_PARAM_GRADE = {"A": 0, "X": -1, "r": -2, "Y": -3, "Z": 1, "s": 2, "W": 3}


class ClosureError(SymExprError):
    """A matrix claimed to lie in the algebra failed re-parametrisation."""


def _sqrt2(chart: Chart) -> Expr:
    return Expr(sp.sqrt(2), chart)


def _zero2(chart: Chart) -> tuple[Expr, Expr]:
    z = chart.zero()
    return (z, z)


def _zero22(chart: Chart):
    z = chart.zero()
    return ((z, z), (z, z))


@dataclass(frozen=True)
class G2Element:
    """Algebra element in parameter form.  ``A`` is a 2x2 nested tuple,
    ``X`` and ``W`` are columns, ``Y`` and ``Z`` rows, ``r``/``s``
    scalars, all with exact expression entries."""

    A: tuple[tuple[Expr, Expr], tuple[Expr, Expr]]
    X: tuple[Expr, Expr]
    Y: tuple[Expr, Expr]
    Z: tuple[Expr, Expr]
    W: tuple[Expr, Expr]
    r: Expr
    s: Expr

    @property
    def chart(self) -> Chart:
        return self.r.chart

    def matrix(self) -> tuple[tuple[Expr, ...], ...]:
        """The realised 7x7 matrix (rows of entries)."""
        ch = self.chart
        zero = ch.zero()
        s2 = _sqrt2(ch)
        a, x, yv, zv, w, r, s = self.A, self.X, self.Y, self.Z, self.W, self.r, self.s
        tra = normalize(a[0][0] + a[1][1])
        inv_s2 = normalize(s2 / 2)  # 1/sqrt(2)
        m = [[zero] * 7 for _ in range(7)]
        # row 0
        m[0][0] = normalize(-tra)
        m[0][1], m[0][2] = zv[0], zv[1]
        m[0][3] = s
        m[0][4], m[0][5] = w[0], w[1]
        # rows 1..2
        for i in range(2):
            m[1 + i][0] = x[i]
            for j in range(2):
                m[1 + i][1 + j] = normalize(a[i][j] - (tra if i == j else zero))
            # sqrt(2) * J * Z^T, with J = [[0, -1], [1, 0]]
            m[1 + i][3] = normalize(s2 * (-zv[1] if i == 0 else zv[0]))
            # (s / sqrt(2)) * J
            m[1 + i][4 + (1 - i)] = normalize(inv_s2 * s * (-1 if i == 0 else 1))
            m[1 + i][6] = normalize(-w[i])
        # row 3
        m[3][0] = r
        # -sqrt(2) * X^T * J = (-sqrt(2) x2, sqrt(2) x1)
        m[3][1] = normalize(-(s2 * x[1]))
        m[3][2] = normalize(s2 * x[0])
        # -sqrt(2) * Z * J = sqrt(2) * (-z2, z1) ... Z J = (z2, -z1)
        m[3][4] = normalize(-(s2 * zv[1]))
        m[3][5] = normalize(s2 * zv[0])
        m[3][6] = s
        # rows 4..5
        for i in range(2):
            m[4 + i][0] = yv[i]
            # -(r / sqrt(2)) * J
            m[4 + i][1 + (1 - i)] = normalize(inv_s2 * r * (1 if i == 0 else -1))
            # sqrt(2) * J * X
            m[4 + i][3] = normalize(s2 * (-x[1] if i == 0 else x[0]))
            for j in range(2):
                m[4 + i][4 + j] = normalize((tra if i == j else zero) - a[j][i])
            m[4 + i][6] = normalize(-zv[i])
        # row 6
        m[6][1] = normalize(-yv[0])
        m[6][2] = normalize(-yv[1])
        m[6][3] = r
        m[6][4] = normalize(-x[0])
        m[6][5] = normalize(-x[1])
        m[6][6] = tra
        return tuple(tuple(row) for row in m)

    def grade_part(self, a: int) -> "G2Element":
        return grade_project(self, a)

    def __add__(self, other: "G2Element") -> "G2Element":
        pair2 = lambda u, v: (normalize(u[0] + v[0]), normalize(u[1] + v[1]))
        return G2Element(
            A=tuple(
                tuple(normalize(self.A[i][j] + other.A[i][j]) for j in range(2))
                for i in range(2)
            ),
            X=pair2(self.X, other.X),
            Y=pair2(self.Y, other.Y),
            Z=pair2(self.Z, other.Z),
            W=pair2(self.W, other.W),
            r=normalize(self.r + other.r),
            s=normalize(self.s + other.s),
        )

    def scale(self, c: Expr) -> "G2Element":
        pair2 = lambda u: (normalize(c * u[0]), normalize(c * u[1]))
        return G2Element(
            A=tuple(tuple(normalize(c * self.A[i][j]) for j in range(2)) for i in range(2)),
            X=pair2(self.X),
            Y=pair2(self.Y),
            Z=pair2(self.Z),
            W=pair2(self.W),
            r=normalize(c * self.r),
            s=normalize(c * self.s),
        )


def g2_element(
    chart: Chart = DEFAULT_CHART,
    A=None,
    X=None,
    Y=None,
    Z=None,
    W=None,
    r: Expr | int = 0,
    s: Expr | int = 0,
) -> G2Element:
    """Assemble an element from (sparse) parameters."""

    def conv(v) -> Expr:
        if isinstance(v, Expr):
            return normalize(v)
        return chart.const(v)

    def pair2(v) -> tuple[Expr, Expr]:
        if v is None:
            return _zero2(chart)
        return (conv(v[0]), conv(v[1]))

    if A is None:
        a = _zero22(chart)
    else:
        a = tuple(tuple(conv(A[i][j]) for j in range(2)) for i in range(2))
    return G2Element(A=a, X=pair2(X), Y=pair2(Y), Z=pair2(Z), W=pair2(W), r=conv(r), s=conv(s))


def from_matrix(m: Sequence[Sequence[Expr]], chart: Chart | None = None) -> G2Element:
    """Re-parametrise a 7x7 matrix and verify it lies in the algebra.

    Any entry of the realisation of the extracted parameters that differs
    from the input raises :class:`ClosureError`.
    """
    chart = chart or m[0][0].chart
    tra = m[6][6]
    # the middle diagonal block stores A - tr(A) I
    a11 = normalize(m[1][1] + tra)
    a22 = normalize(m[2][2] + tra)
    a = ((a11, m[1][2]), (m[2][1], a22))
    candidate = G2Element(
        A=a,
        X=(m[1][0], m[2][0]),
        Y=(m[4][0], m[5][0]),
        Z=(m[0][1], m[0][2]),
        W=(m[0][4], m[0][5]),
        r=m[3][0],
        s=m[0][3],
    )
    realized = candidate.matrix()
    for i in range(7):
        for j in range(7):
            delta = normalize(m[i][j] - realized[i][j])
            if not delta.sym.is_zero:
                raise ClosureError(
                    f"matrix is not in the algebra: entry ({i}, {j}) mismatch {delta}"
                )
    return candidate


def _mat_mul(a, b, chart: Chart):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = chart.zero()
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            row.append(normalize(acc))
        out.append(tuple(row))
    return tuple(out)


def bracket(m1: G2Element, m2: G2Element) -> G2Element:
    """Matrix commutator, re-parametrised (closure-checked)."""
    chart = m1.chart
    a, b = m1.matrix(), m2.matrix()
    ab = _mat_mul(a, b, chart)
    ba = _mat_mul(b, a, chart)
    comm = tuple(
        tuple(normalize(ab[i][j] - ba[i][j]) for j in range(7)) for i in range(7)
    )
    return from_matrix(comm, chart)


def grade_project(m: G2Element, a: int) -> G2Element:
    """Keep only the parameters of grade ``a``."""
    if a not in GRADES:
        raise ValueError(f"grade must be one of {GRADES}")
    ch = m.chart
    zero = g2_element(ch)
    return G2Element(
        A=m.A if a == 0 else zero.A,
        X=m.X if a == -1 else zero.X,
        r=m.r if a == -2 else zero.r,
        Y=m.Y if a == -3 else zero.Y,
        Z=m.Z if a == 1 else zero.Z,
        s=m.s if a == 2 else zero.s,
        W=m.W if a == 3 else zero.W,
    )


def pairing(m1: G2Element, m2: G2Element) -> Expr:
    """Invariant pairing: one twenty-fourth of the Killing form, i.e.
    trace(m1 m2) / 6 in the realisation."""
    chart = m1.chart
    a, b = m1.matrix(), m2.matrix()
    acc = chart.zero()
    for i in range(7):
        for k in range(7):
            acc = acc + a[i][k] * b[k][i]
    return normalize(acc / 6)


@dataclass(frozen=True)
class V7:
    """Vector of the 7-dimensional representation, slots top-to-bottom
    (chi, phi^1, phi^2, upsilon, tau_1, tau_2, sigma)."""

    chi: Expr
    phi: tuple[Expr, Expr]
    upsilon: Expr
    tau: tuple[Expr, Expr]
    sigma: Expr

    @property
    def chart(self) -> Chart:
        return self.sigma.chart

    @classmethod
    def zero(cls, chart: Chart = DEFAULT_CHART) -> "V7":
        z = chart.zero()
        return cls(z, (z, z), z, (z, z), z)

    @classmethod
    def from_vector(cls, vec: Sequence[Expr]) -> "V7":
        if len(vec) != 7:
            raise ValueError("a representation vector has 7 slots")
        return cls(vec[0], (vec[1], vec[2]), vec[3], (vec[4], vec[5]), vec[6])

    def vector(self) -> tuple[Expr, ...]:
        return (self.chi, *self.phi, self.upsilon, *self.tau, self.sigma)

    def __add__(self, other: "V7") -> "V7":
        return V7.from_vector(
            [normalize(a + b) for a, b in zip(self.vector(), other.vector())]
        )

    def __sub__(self, other: "V7") -> "V7":
        return V7.from_vector(
            [normalize(a - b) for a, b in zip(self.vector(), other.vector())]
        )


def act_on_V(m: G2Element, v: V7) -> V7:
    """Matrix-vector action of the realised matrix."""
    chart = m.chart
    mat = m.matrix()
    vec = v.vector()
    out = []
    for i in range(7):
        acc = chart.zero()
        for j in range(7):
            acc = acc + mat[i][j] * vec[j]
        out.append(normalize(acc))
    return V7.from_vector(out)


def act_on_V_tablewise(m: G2Element, v: V7) -> V7:
    """The same action assembled from the grade-by-grade slot maps; kept
    as an independent route so the two can be checked against each other.

    eps_12 = eps^12 = +1 throughout.
    """
    ch = m.chart
    zero = ch.zero()
    s2 = _sqrt2(ch)
    inv_s2 = normalize(s2 / 2)
    chi, phi, ups, tau, sig = v.chi, v.phi, v.upsilon, v.tau, v.sigma
    o_chi, o_ups, o_sig = zero, zero, zero
    o_phi = [zero, zero]
    o_tau = [zero, zero]

    # grade -3 (Y): phi -> sigma-slot, chi -> tau-slot
    yv = m.Y
    o_sig = o_sig + (-(yv[0] * phi[0] + yv[1] * phi[1]))
    o_tau[0] = o_tau[0] + chi * yv[0]
    o_tau[1] = o_tau[1] + chi * yv[1]

    # grade -2 (r): ups -> sigma, phi -> tau, chi -> ups
    r = m.r
    o_sig = o_sig + r * ups
    # -(1/sqrt2) r eps_{ba} phi^b : a=1 gives +phi^2/sqrt2, a=2 gives -phi^1/sqrt2
    o_tau[0] = o_tau[0] + inv_s2 * r * phi[1]
    o_tau[1] = o_tau[1] - inv_s2 * r * phi[0]
    o_ups = o_ups + r * chi

    # grade -1 (X): tau -> sigma, ups -> tau, phi -> ups, chi -> phi
    x = m.X
    o_sig = o_sig + (-(tau[0] * x[0] + tau[1] * x[1]))
    # sqrt2 ups eps_{ba} X^b : a=1 -> -X^2, a=2 -> +X^1
    o_tau[0] = o_tau[0] - s2 * ups * x[1]
    o_tau[1] = o_tau[1] + s2 * ups * x[0]
    o_ups = o_ups + s2 * (x[0] * phi[1] - x[1] * phi[0])
    o_phi[0] = o_phi[0] + chi * x[0]
    o_phi[1] = o_phi[1] + chi * x[1]

    # grade 0 (A)
    a = m.A
    tra = a[0][0] + a[1][1]
    o_sig = o_sig + tra * sig
    o_tau[0] = o_tau[0] - (tau[0] * a[0][0] + tau[1] * a[1][0]) + tra * tau[0]
    o_tau[1] = o_tau[1] - (tau[0] * a[0][1] + tau[1] * a[1][1]) + tra * tau[1]
    o_phi[0] = o_phi[0] + (a[0][0] * phi[0] + a[0][1] * phi[1]) - tra * phi[0]
    o_phi[1] = o_phi[1] + (a[1][0] * phi[0] + a[1][1] * phi[1]) - tra * phi[1]
    o_chi = o_chi - tra * chi

    # grade +1 (Z): sigma -> tau, tau -> ups, ups -> phi, phi -> chi
    zv = m.Z
    o_tau[0] = o_tau[0] - sig * zv[0]
    o_tau[1] = o_tau[1] - sig * zv[1]
    o_ups = o_ups + s2 * (zv[0] * tau[1] - zv[1] * tau[0])
    # sqrt2 ups eps^{ba} Z_b : a=1 -> -Z_2, a=2 -> +Z_1
    o_phi[0] = o_phi[0] - s2 * ups * zv[1]
    o_phi[1] = o_phi[1] + s2 * ups * zv[0]
    o_chi = o_chi + zv[0] * phi[0] + zv[1] * phi[1]

    # grade +2 (s): sigma -> ups, tau -> phi, ups -> chi
    s = m.s
    o_ups = o_ups + s * sig
    # (1/sqrt2) s eps^{ba} tau_b : a=1 -> -tau_2, a=2 -> +tau_1
    o_phi[0] = o_phi[0] - inv_s2 * s * tau[1]
    o_phi[1] = o_phi[1] + inv_s2 * s * tau[0]
    o_chi = o_chi + s * ups

    # grade +3 (W): sigma -> phi, tau -> chi
    w = m.W
    o_phi[0] = o_phi[0] - sig * w[0]
    o_phi[1] = o_phi[1] - sig * w[1]
    o_chi = o_chi + tau[0] * w[0] + tau[1] * w[1]

    return V7(
        normalize(o_chi),
        (normalize(o_phi[0]), normalize(o_phi[1])),
        normalize(o_ups),
        (normalize(o_tau[0]), normalize(o_tau[1])),
        normalize(o_sig),
    )


def kostant_codiff(pairs: Sequence[tuple[G2Element, V7]]) -> V7:
    """The codifferential on decomposables: minus the sum of the actions
    of the covector parts.  Covectors must be embedded as elements with
    only positive-grade parameters."""
    if not pairs:
        return V7.zero()
    chart = pairs[0][0].chart
    acc = V7.zero(chart)
    for cov, t in pairs:
        for name in ("X", "Y"):
            vec = getattr(cov, name)
            if not (vec[0].sym.is_zero and vec[1].sym.is_zero):
                raise ValueError("covector embedding must have only positive-grade parts")
        if not cov.r.sym.is_zero:
            raise ValueError("covector embedding must have only positive-grade parts")
        for i in range(2):
            for j in range(2):
                if not cov.A[i][j].sym.is_zero:
                    raise ValueError("covector embedding must have only positive-grade parts")
        acc = acc - act_on_V(cov, t)
    return acc


# -- structure verification --------------------------------------------------


def _random_element(chart: Chart, rng: random.Random, grade: int | None = None) -> G2Element:
    def rnd() -> Expr:
        return chart.const(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))

    params = dict(
        A=((rnd(), rnd()), (rnd(), rnd())),
        X=(rnd(), rnd()),
        Y=(rnd(), rnd()),
        Z=(rnd(), rnd()),
        W=(rnd(), rnd()),
        r=rnd(),
        s=rnd(),
    )
    el = g2_element(chart, **params)
    if grade is None:
        return el
    return grade_project(el, grade)


def _basis_elements(chart: Chart) -> dict[int, list[G2Element]]:
    one = chart.one()
    out: dict[int, list[G2Element]] = {g: [] for g in GRADES}
    for i in range(2):
        for j in range(2):
            a = [[chart.zero()] * 2 for _ in range(2)]
            a[i][j] = one
            out[0].append(g2_element(chart, A=a))
    for g, name in ((-1, "X"), (-3, "Y"), (1, "Z"), (3, "W")):
        for i in range(2):
            vec = [chart.zero(), chart.zero()]
            vec[i] = one
            out[g].append(g2_element(chart, **{name: tuple(vec)}))
    out[-2].append(g2_element(chart, r=one))
    out[2].append(g2_element(chart, s=one))
    return out


def _is_zero_element(m: G2Element) -> bool:
    flat = [m.r, m.s, *m.X, *m.Y, *m.Z, *m.W, *(m.A[0]), *(m.A[1])]
    return all(normalize(e).sym.is_zero for e in flat)


def verify_structure(
    seed: int = 0,
    chart: Chart = DEFAULT_CHART,
    realize: Callable[[G2Element], tuple[tuple[Expr, ...], ...]] | None = None,
) -> dict[str, dict]:
    """Machine-check the algebra model: grading containments, the duality
    table, the two Levi bracket coefficients, the action table against the
    realised matrices, and the eps-contraction convention.  Returns a
    deterministic report {check: {pass, detail}}.

    ``realize`` overrides the matrix realisation (used by mutation tests).
    """
    realize = realize or (lambda m: m.matrix())
    rng = random.Random(seed)
    report: dict[str, dict] = {}

    def record(name: str, ok: bool, detail: str) -> None:
        report[name] = {"pass": bool(ok), "detail": detail}

    # 1. grading containments via bracket + projection
    ok, detail = True, "[g_a, g_b] c g_{a+b} on random parameters"
    for ga in GRADES:
        for gb in GRADES:
            m1 = _random_element(chart, rng, ga)
            m2 = _random_element(chart, rng, gb)
            try:
                br = bracket(m1, m2)
            except ClosureError as exc:
                ok, detail = False, f"closure failure at grades ({ga}, {gb}): {exc}"
                break
            for g in GRADES:
                part = grade_project(br, g)
                expected_zero = g != ga + gb
                if expected_zero and not _is_zero_element(part):
                    ok, detail = False, f"[g_{ga}, g_{gb}] leaked into g_{g}"
                    break
            if ok and abs(ga + gb) > 3 and not _is_zero_element(br):
                ok, detail = False, f"[g_{ga}, g_{gb}] nonzero outside the grading range"
            if not ok:
                break
        if not ok:
            break
    record("grading_bracket_containment", ok, detail)

    # 2. duality table
    one = chart.one()
    two = chart.const(2)
    three = chart.const(3)
    ok, detail = True, "pairings match the printed duality coefficients"
    checks = []
    ew = g2_element(chart, W=(one, chart.zero()))
    ey = g2_element(chart, Y=(one, chart.zero()))
    checks.append((pairing(ey, ew), chart.const(Fraction(1, 3)), "(Y, W)"))
    checks.append((pairing(g2_element(chart, r=two), g2_element(chart, s=three)), three, "(r, s)"))
    ex = g2_element(chart, X=(one, chart.zero()))
    ez = g2_element(chart, Z=(one, chart.zero()))
    checks.append((pairing(ex, ez), one, "(X, Z)"))
    checks.append((pairing(ex, ew), chart.zero(), "grade-mismatched (X, W)"))
    a1 = _random_element(chart, rng, 0)
    a2 = _random_element(chart, rng, 0)
    tr_prod = chart.zero()
    for i in range(2):
        for j in range(2):
            tr_prod = tr_prod + a1.A[i][j] * a2.A[j][i]
    tr1 = a1.A[0][0] + a1.A[1][1]
    tr2 = a2.A[0][0] + a2.A[1][1]
    expected = normalize((tr_prod + tr1 * tr2) / 3)
    checks.append((pairing(a1, a2), expected, "(A, A')"))
    for got, want, label in checks:
        if not normalize(got - want).sym.is_zero:
            ok, detail = False, f"duality {label}: got {got}, expected {want}"
            break
    record("duality_pairing_table", ok, detail)

    # 3. Levi bracket coefficients
    ok, detail = True, "bracket components carry coefficients 2*sqrt(2) and 3/sqrt(2)"
    s2 = _sqrt2(chart)
    x1 = _random_element(chart, rng, -1)
    x2 = _random_element(chart, rng, -1)
    br = bracket(x1, x2)
    want_r = normalize(2 * s2 * (x1.X[0] * x2.X[1] - x1.X[1] * x2.X[0]))
    if not normalize(br.r - want_r).sym.is_zero:
        ok, detail = False, f"[g_-1, g_-1] r-component: got {br.r}, expected {want_r}"
    else:
        er = _random_element(chart, rng, -2)
        br2 = bracket(x1, er)
        coeff = normalize(3 * s2 / 2)  # 3/sqrt(2)
        want_y = (
            normalize(coeff * er.r * (-x1.X[1])),
            normalize(coeff * er.r * x1.X[0]),
        )
        if not (
            normalize(br2.Y[0] - want_y[0]).sym.is_zero
            and normalize(br2.Y[1] - want_y[1]).sym.is_zero
        ):
            ok, detail = False, f"[g_-1, g_-2] Y-component: got {br2.Y}, expected {want_y}"
    record("levi_bracket_coefficients", ok, detail)

    # 4. action table vs realised matrices
    ok, detail = True, "slot-wise action maps equal the matrix action"
    basis = _basis_elements(chart)
    unit_vectors = []
    for k in range(7):
        vec = [chart.zero()] * 7
        vec[k] = one
        unit_vectors.append(V7.from_vector(vec))
    for g in GRADES:
        for el in basis[g]:
            mat = realize(el)
            for v in unit_vectors:
                vv = v.vector()
                got = []
                for i in range(7):
                    acc = chart.zero()
                    for j in range(7):
                        acc = acc + mat[i][j] * vv[j]
                    got.append(normalize(acc))
                want = act_on_V_tablewise(el, v).vector()
                for gi, wi in zip(got, want):
                    if not normalize(gi - wi).sym.is_zero:
                        ok = False
                        detail = f"action of grade {g} disagrees with the table"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    record("action_table_matches_matrix", ok, detail)

    # 5. eps-contraction convention: sum_c eps^{ca} eps_{cb} = delta^a_b
    eps = ((0, 1), (-1, 0))
    ok = True
    for a in range(2):
        for b in range(2):
            val = sum(eps[c][a] * eps[c][b] for c in range(2))
            if val != (1 if a == b else 0):
                ok = False
    record(
        "levi_convention_identity",
        ok,
        "eps^{ca} eps_{cb} = delta^a_b with eps_12 = eps^12 = 1",
    )

    return report
