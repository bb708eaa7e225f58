"""Univariate polynomials over a ground field, as coefficient tuples (highest degree first)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sympy import Poly, QQ as SYM_QQ, symbols
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_irreducible_p

from .exactlin import Field, Mat, _rref_array

__all__ = ["minpoly", "factor", "is_irreducible", "evaluate", "monic_irreducibles", "fmt_poly",
           "companion", "poly_mul", "poly_pow"]

_x = symbols("x")


def minpoly(a: Mat) -> tuple:
    """Monic minimal polynomial of a square matrix."""
    f = a.field
    n = a.rows
    if n == 0:
        return (f.one,)
    powers = [Mat.identity(f, n)]
    for _ in range(n):
        powers.append(powers[-1] @ a)
    v = np.stack([p.a.reshape(-1) for p in powers], axis=1)
    r, piv = _rref_array(v, f)
    k = len(piv)  # first k powers are independent, A^k depends on them
    assert piv == list(range(k))
    coeffs = [f.one] + [f(-r[i, k]) for i in reversed(range(k))]
    return tuple(coeffs)


def evaluate(poly: tuple, a: Mat) -> Mat:
    """Horner evaluation of ``poly`` at the square matrix ``a``."""
    f = a.field
    out = Mat.zeros(f, a.rows, a.rows)
    eye = Mat.identity(f, a.rows)
    for c in poly:
        out = out @ a + eye.scale(c)
    return out


def _to_int_list(poly: tuple) -> list[int]:
    return [int(c) for c in poly]


def factor(poly: tuple, f: Field) -> list[tuple[tuple, int]]:
    """Monic irreducible factors with multiplicities, in a canonical order."""
    if len(poly) <= 1:
        return []
    if f.is_finite:
        _, facs = gf_factor(_to_int_list(poly), f.p, ZZ)
        out = [(tuple(int(c) % f.p for c in g), int(e)) for g, e in facs]
    else:
        p = Poly([Fraction(c) for c in poly], _x, domain=SYM_QQ)
        _, facs = p.factor_list()
        out = []
        for g, e in facs:
            cs = [Fraction(int(c.p), int(c.q)) for c in g.all_coeffs()]
            lead = cs[0]
            out.append((tuple(c / lead for c in cs), int(e)))
    out.sort(key=lambda ge: (len(ge[0]), ge[0]))
    return out


def is_irreducible(poly: tuple, f: Field) -> bool:
    if len(poly) < 2:
        return False
    if f.is_finite:
        return bool(gf_irreducible_p(_to_int_list(poly), f.p, ZZ))
    facs = factor(poly, f)
    return len(facs) == 1 and facs[0][1] == 1


def monic_irreducibles(f: Field, degree: int) -> list[tuple]:
    """All monic irreducible polynomials of the given degree over GF(p)."""
    if not f.is_finite:
        raise ValueError("infinitely many irreducibles over Q")
    out = []
    p = f.p
    for code in range(p**degree):
        tail = []
        c = code
        for _ in range(degree):
            tail.append(c % p)
            c //= p
        poly = (1,) + tuple(reversed(tail))
        if is_irreducible(poly, f):
            out.append(poly)
    return out


def poly_mul(a: tuple, b: tuple, f: Field) -> tuple:
    out = [f.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = f(out[i + j] + x * y)
    return tuple(out)


def poly_pow(a: tuple, e: int, f: Field) -> tuple:
    out: tuple = (f.one,)
    for _ in range(e):
        out = poly_mul(out, a, f)
    return out


def companion(poly: tuple, f: Field) -> Mat:
    """Companion matrix: ones on the subdiagonal, ``-coeffs`` in the last column."""
    d = len(poly) - 1
    rows = [[f.zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = f.one
    for i in range(d):
        rows[i][d - 1] = f(-poly[d - i])
    return Mat.from_rows(f, rows, d, d)


def fmt_poly(poly: tuple) -> str:
    d = len(poly) - 1
    parts = []
    for i, c in enumerate(poly):
        e = d - i
        if c == 0:
            continue
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        if e == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return "+".join(parts).replace("+-", "-") if parts else "0"
