"""Printer emitting the same grammar the parser accepts.

Powers use ``^``, rationals print as ratio literals, multiplication is
explicit, and square-root symbols print as ``sqrt(n)``.  Unevaluated
derivative atoms (which only arise from opaque functions created through
the API, never from parsing) fall back to sympy's display form; they are
the one construct outside the round-trippable grammar.
"""

from __future__ import annotations

import sympy as sp

from .core import Expr

__all__ = ["to_text"]

_SUM, _PROD, _UNARY, _POW, _ATOM = 1, 2, 3, 4, 5


def _is_sqrt(sym: sp.Expr) -> bool:
    return (
        isinstance(sym, sp.Pow)
        and sym.exp == sp.Rational(1, 2)
        and sym.base.is_Integer
        and sym.base > 0
    )


def _print(sym: sp.Expr, parent: int) -> str:
    text, prec = _print_prec(sym)
    if prec < parent:
        return f"({text})"
    return text


def _print_prec(sym: sp.Expr) -> tuple[str, int]:
    if sym.is_Integer:
        if sym < 0:
            return f"-{-sym}", _UNARY
        return str(sym), _ATOM
    if sym.is_Rational:
        sign = "-" if sym < 0 else ""
        text = f"{sign}{abs(sym.p)}/{sym.q}"
        return text, _UNARY if sign else _PROD
    if sym.is_Symbol:
        return sym.name, _ATOM
    if _is_sqrt(sym):
        return f"sqrt({sym.base})", _ATOM
    if isinstance(sym, sp.Add):
        terms = sym.as_ordered_terms()
        parts = [_print(terms[0], _SUM)]
        for t in terms[1:]:
            text = _print(t, _SUM)
            if text.startswith("-"):
                parts.append(f" - {text[1:]}")
            else:
                parts.append(f" + {text}")
        return "".join(parts), _SUM
    if isinstance(sym, sp.Mul):
        return _print_mul(sym)
    if isinstance(sym, sp.Pow):
        return _print_pow(sym)
    if isinstance(sym, sp.Function):
        args = ", ".join(_print(a, _SUM) for a in sym.args)
        return f"{sym.func.__name__}({args})", _ATOM
    # outside the grammar (unevaluated derivatives etc.): readable fallback
    return sp.sstr(sym), _ATOM


def _print_pow(sym: sp.Pow) -> tuple[str, int]:
    base, exp = sym.base, sym.exp
    if exp.is_Integer and exp < 0:
        inner, _ = _print_pow(sp.Pow(base, -exp)) if exp != -1 else (_print(base, _POW + 1), 0)
        if exp == -1:
            inner = _print(base, _POW + 1)
        return f"1/{inner}", _PROD
    if not exp.is_Integer:
        # sqrt handled separately; other fractional powers cannot be built
        # through the public API, print defensively
        return sp.sstr(sym), _ATOM
    base_text = _print(base, _POW + 1)
    return f"{base_text}^{exp}", _POW


def _print_mul(sym: sp.Mul) -> tuple[str, int]:
    coeff, rest = sym.as_coeff_Mul()
    sign = ""
    if coeff.is_Rational and coeff < 0:
        sign = "-"
        coeff = -coeff
    num_parts: list[str] = []
    den_parts: list[str] = []
    if coeff.is_Rational:
        if coeff.p != 1 or coeff.q == 1:
            num_parts.append(str(coeff.p))
        if coeff.q != 1:
            den_parts.append(str(coeff.q))
    else:  # irrational coefficient (e.g. sqrt(2)); treat as a factor
        rest = coeff * rest
    factors = rest.as_ordered_factors() if isinstance(rest, sp.Mul) else [rest]
    for f in factors:
        if f == 1:
            continue
        if isinstance(f, sp.Pow) and f.exp.is_Integer and f.exp < 0 and not _is_sqrt(f):
            if f.exp == -1:
                den_parts.append(_print(f.base, _UNARY))
            else:
                den_parts.append(_print(sp.Pow(f.base, -f.exp), _UNARY))
        else:
            num_parts.append(_print(f, _PROD))
    num_text = "*".join(num_parts) if num_parts else "1"
    for d in den_parts:
        num_text += f"/{d}"
    if sign:
        return f"-{num_text}", _UNARY
    return num_text, _PROD


def to_text(e: Expr) -> str:
    """Render an expression in the input grammar."""
    return _print(e.sym, 0)
