"""Exact linear algebra over the expression field and over the rationals.

Square systems with expression entries are solved by fraction-free
(Bareiss) elimination after row-wise denominator clearing; pivots are
selected with the sound zero test, so frames whose coefficients vanish
only through transcendental identities are handled correctly.  Rational
nullspaces are computed by plain reduced row echelon form over
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy as sp

from .core import Chart, Expr, SymExprError, normalize
from .numeric import is_zero

__all__ = [
    "SingularMatrixError",
    "NonPolynomialRowError",
    "MonomialOverflowError",
    "solve_linear",
    "solve_linear_multi",
    "det",
    "nullspace_fraction",
    "poly_nullspace",
]


class SingularMatrixError(SymExprError):
    """Elimination found no usable pivot; carries the offending column and
    the candidate entries that all tested zero."""

    def __init__(self, column: int, candidates: Sequence[Expr]):
        self.column = column
        self.candidates = tuple(candidates)
        shown = ", ".join(str(c) for c in self.candidates[:3])
        super().__init__(f"singular matrix: no nonzero pivot in column {column} ({shown})")


class NonPolynomialRowError(SymExprError):
    """A row handed to the nullspace solver was not polynomial."""


class MonomialOverflowError(SymExprError):
    """Coefficient collection exceeded the configured monomial cap."""


def _clear_denominators(row: list[Expr]) -> list[Expr]:
    entries = [normalize(e) for e in row]
    dens = []
    for e in entries:
        _, den = sp.fraction(sp.together(e.sym))
        dens.append(den)
    lcm = sp.lcm(dens) if dens else sp.Integer(1)
    if lcm == 1:
        return entries
    chart = entries[0].chart
    return [normalize(Expr(e.sym * lcm, chart)) for e in entries]


def _bareiss_eliminate(
    rows: list[list[Expr]],
    n: int,
    guards: Sequence[Expr],
    seed: int,
) -> list[list[Expr]]:
    """In-place fraction-free elimination of the first ``n`` columns of an
    augmented matrix with ``n`` rows.  Entries stay polynomial when the
    input rows are polynomial."""
    chart = rows[0][0].chart
    prev = Expr(sp.Integer(1), chart)
    for k in range(n):
        pivot_row = None
        for r in range(k, n):
            if not is_zero(rows[r][k], guards=guards, seed=seed):
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularMatrixError(k, [rows[r][k] for r in range(k, n)])
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
        pivot = rows[k][k]
        for r in range(n):
            if r == k:
                continue
            factor = rows[r][k]
            for c in range(len(rows[r])):
                rows[r][c] = normalize(
                    (rows[r][c] * pivot - factor * rows[k][c]) / prev
                )
        prev = pivot
    return rows


def solve_linear_multi(
    a: Sequence[Sequence[Expr]],
    b_columns: Sequence[Sequence[Expr]],
    guards: Sequence[Expr] = (),
    seed: int = 0,
) -> list[list[Expr]]:
    """Solve ``a @ x = b`` for several right-hand sides with one
    elimination.  Returns one solution column per right-hand side."""
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("matrix must be square and nonempty")
    m = len(b_columns)
    if any(len(col) != n for col in b_columns):
        raise ValueError("right-hand sides must match the matrix size")
    rows = [
        _clear_denominators(list(a[i]) + [col[i] for col in b_columns])
        for i in range(n)
    ]
    _bareiss_eliminate(rows, n, guards, seed)
    solutions = []
    for j in range(m):
        col = [normalize(rows[i][n + j] / rows[i][i]) for i in range(n)]
        solutions.append(col)
    return solutions


def solve_linear(
    a: Sequence[Sequence[Expr]],
    b: Sequence[Expr],
    guards: Sequence[Expr] = (),
    seed: int = 0,
) -> list[Expr]:
    """Exact solution of a square system over the expression field."""
    return solve_linear_multi(a, [list(b)], guards=guards, seed=seed)[0]


def det(a: Sequence[Sequence[Expr]], guards: Sequence[Expr] = (), seed: int = 0) -> Expr:
    """Exact determinant by fraction-free elimination.

    Row-wise denominator clearing is undone at the end, so the result is
    the determinant of the matrix as given.
    """
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("matrix must be square and nonempty")
    chart = a[0][0].chart
    rows: list[list[Expr]] = []
    scale = Expr(sp.Integer(1), chart)
    for i in range(n):
        original = [normalize(e) for e in a[i]]
        cleared = _clear_denominators(list(a[i]))
        # recover the clearing factor from any nonzero entry
        factor = None
        for orig, new in zip(original, cleared):
            if not orig.sym.is_zero:
                factor = normalize(new / orig)
                break
        if factor is None:
            return chart.zero()
        scale = normalize(scale * factor)
        rows.append(cleared)
    sign = 1
    prev = Expr(sp.Integer(1), chart)
    for k in range(n - 1):
        pivot_row = None
        for r in range(k, n):
            if not is_zero(rows[r][k], guards=guards, seed=seed):
                pivot_row = r
                break
        if pivot_row is None:
            return chart.zero()
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for r in range(k + 1, n):
            factor = rows[r][k]
            for c in range(k, n):
                rows[r][c] = normalize((rows[r][c] * pivot - factor * rows[k][c]) / prev)
        prev = pivot
    value = rows[n - 1][n - 1]
    return normalize(sign * value / scale)


# -- rational nullspace ----------------------------------------------------


def _rref(mat: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [row[:] for row in mat]
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace_fraction(mat: list[list[Fraction]], n_cols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the rational nullspace, one vector per free column."""
    if not mat:
        basis = []
        for j in range(n_cols):
            v = [Fraction(0)] * n_cols
            v[j] = Fraction(1)
            basis.append(tuple(v))
        return basis
    rref, pivots = _rref(mat)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(tuple(v))
    return basis


def _collection_generators(exprs: Sequence[sp.Expr], chart: Chart, unknowns: Sequence[sp.Symbol]):
    """Chart variables first, then every other generator (atoms, radicals,
    stray symbols) in a deterministic order, then the unknowns."""
    others: set[sp.Expr] = set()
    unknown_set = set(unknowns)
    for e in exprs:
        others |= e.atoms(sp.Function) | e.atoms(sp.Derivative)
        others |= {s for s in e.free_symbols if s not in chart.symbols and s not in unknown_set}
        for pw in e.atoms(sp.Pow):
            if not pw.exp.is_Integer:
                others.add(pw)
    ordered = sorted(others, key=sp.default_sort_key)
    return list(chart.symbols) + ordered, list(unknowns)


def poly_nullspace(
    rows: Sequence[Expr],
    unknowns: Sequence[Expr],
    monomial_cap: int | None = 200_000,
) -> list[tuple[Fraction, ...]]:
    """Exact rational basis of the common nullspace of linear forms.

    Each row must be polynomial (after the caller's denominator clearing)
    in the chart variables and at most linear homogeneous in the unknown
    symbols; the coefficient of every chart monomial yields one rational
    equation in the unknowns.
    """
    if not unknowns:
        return []
    chart = unknowns[0].chart
    unknown_syms = []
    for u in unknowns:
        if not (isinstance(u, Expr) and u.sym.is_Symbol):
            raise ValueError(f"unknown {u!r} is not a plain symbol")
        unknown_syms.append(u.sym)

    matrix: list[list[Fraction]] = []
    n = len(unknown_syms)
    for row in rows:
        ne = normalize(row)
        if ne.sym.is_zero:
            continue
        num, den = sp.fraction(sp.together(ne.sym))
        if den.free_symbols or any(den.has(a) for a in num.atoms(sp.Function)):
            raise NonPolynomialRowError(f"row has a nonconstant denominator: {den}")
        gens, usyms = _collection_generators([num], chart, unknown_syms)
        try:
            poly = sp.Poly(num, *(gens + usyms))
        except sp.PolynomialError as exc:
            raise NonPolynomialRowError(str(exc)) from exc
        n_gens = len(gens)
        groups: dict[tuple[int, ...], list[Fraction]] = {}
        for monom, coeff in poly.terms():
            head, tail = monom[:n_gens], monom[n_gens:]
            udeg = sum(tail)
            if udeg == 0:
                raise NonPolynomialRowError(
                    "row has a term free of the unknowns; the system is inhomogeneous"
                )
            if udeg > 1:
                raise NonPolynomialRowError("row is not linear in the unknowns")
            j = tail.index(1)
            if not coeff.is_Rational:
                raise NonPolynomialRowError(f"non-rational coefficient {coeff}")
            vec = groups.setdefault(head, [Fraction(0)] * n)
            vec[j] += Fraction(int(coeff.p), int(coeff.q))
        if monomial_cap is not None and len(groups) > monomial_cap:
            raise MonomialOverflowError(
                f"{len(groups)} collected monomials exceed the cap {monomial_cap}"
            )
        matrix.extend(groups[key] for key in sorted(groups))
        if monomial_cap is not None and len(matrix) > monomial_cap:
            raise MonomialOverflowError(
                f"{len(matrix)} collected rows exceed the cap {monomial_cap}"
            )
    return nullspace_fraction(matrix, n)
