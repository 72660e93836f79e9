"""Resultants and discriminants by fraction-free Sylvester elimination.

Entries of the Sylvester matrix are polynomials in the remaining variables,
so Bareiss elimination (whose interior divisions are exact over any integral
domain) keeps everything in ZZ/QQ/F_q without fractions.

The discriminant convention used package-wide:

    disc_v(f) = (-1)^(d(d-1)/2) * res_v(f, df/dv) / lc_v(f),   d = deg_v(f)

with the empty-product convention disc = 1 for d = 1.
"""

from __future__ import annotations

from .mpoly import MPoly


def coeff_list(f: MPoly, var) -> list[MPoly]:
    """Coefficients of f as polynomials with `var` eliminated, ascending."""
    d = f.deg_in(var)
    out = [dict() for _ in range(d + 1)] if d >= 0 else []
    for e, c in f.terms.items():
        k = e[var]
        e2 = list(e)
        e2[var] = 0
        out[k][tuple(e2)] = c
    return [MPoly(f.dom, f.n, t) for t in out]


def _det_bareiss(rows):
    """Determinant of a square matrix of MPoly entries (fraction-free)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    dom = rows[0][0].dom
    nvars = rows[0][0].n
    one = MPoly.const(dom, nvars, dom.one)
    a = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot is None:
                return MPoly(dom, nvars)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                q = num.exact_div(prev)
                if q is None:  # pragma: no cover - Bareiss divisions are exact
                    raise ArithmeticError("inexact Bareiss division")
                a[i][j] = q
            a[i][k] = MPoly(dom, nvars)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f: MPoly, g: MPoly, var) -> MPoly:
    """res_var(f, g) as a polynomial with `var` eliminated."""
    if f.is_zero():
        raise ValueError("resultant of the zero polynomial")
    dom, n = f.dom, f.n
    m, k = f.deg_in(var), g.deg_in(var)
    if g.is_zero():
        return MPoly(dom, n)
    fc = coeff_list(f, var)
    gc = coeff_list(g, var)
    if m == 0 and k == 0:
        return MPoly.const(dom, n, dom.one)
    if k == 0:
        return gc[0] ** m
    if m == 0:
        return fc[0] ** k
    size = m + k
    zero = MPoly(dom, n)
    rows = []
    for i in range(k):
        row = [zero] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return _det_bareiss(rows)


def discriminant(f: MPoly, var) -> MPoly:
    """disc_var(f) under the package convention; errors when deg_var(f) < 1."""
    d = f.deg_in(var)
    if d < 1:
        raise ValueError("discriminant needs degree at least 1 in the variable")
    fp = f.derivative(var)
    dom, n = f.dom, f.n
    if fp.is_zero():
        return MPoly(dom, n)
    res = resultant(f, fp, var)
    lc = coeff_list(f, var)[-1]
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    if sign < 0:
        res = -res
    out = res.exact_div(lc)
    if out is None:  # pragma: no cover - lc always divides the resultant
        raise ArithmeticError("leading coefficient does not divide the resultant")
    return out
