"""Symbolic calculus for rank-2 distributions on 5-manifolds with growth
vector (2,3,5).

Given a distribution in Monge normal form (a single function F of the
chart (x, y, p, q, z)) or as an explicit 2-frame with nondegeneracy
guards, the package computes the scale-dependent geometry — generalised
Reeb field, partial connection, the lowest-homogeneity Rho component —
and the second-order operator whose kernel consists of the almost
Einstein scales.  A finite-dimensional exact model of the split real form
of the exceptional 14-dimensional Lie algebra backs the algebraic
identities, and a tractor slot calculus cross-checks the operator through
an independent composition.
"""

from . import frame235, g2alg, symexpr, tractor
from .frame235 import (
    Density,
    Frame235,
    Sym2,
    VectorField,
    check_scale,
    general_frame,
    iota7,
    kernel_poly,
    monge_frame,
    reeb,
    rho_lowest,
    theta0,
)
from .symexpr import Chart, DEFAULT_CHART, Expr, Point, parse
from .tractor import l0_partial, theta0_via_tractor

__version__ = "0.1.0"

__all__ = [
    "Chart",
    "DEFAULT_CHART",
    "Density",
    "Expr",
    "Frame235",
    "Point",
    "Sym2",
    "VectorField",
    "check_scale",
    "frame235",
    "g2alg",
    "general_frame",
    "iota7",
    "kernel_poly",
    "l0_partial",
    "monge_frame",
    "parse",
    "reeb",
    "rho_lowest",
    "symexpr",
    "theta0",
    "theta0_via_tractor",
    "tractor",
]
