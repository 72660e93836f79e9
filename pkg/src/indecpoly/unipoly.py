"""Dense univariate polynomial arithmetic over an exact coefficient domain.

Polynomials are plain lists of domain elements in ascending degree with no
trailing zeros; [] is the zero polynomial. The domain object (a finite field
from .fields, or the rational/integer domains there) supplies the element
operations, so these functions never touch representation details.
"""

from __future__ import annotations


def normalize(dom, c: list) -> list:
    out = list(c)
    while out and out[-1] == dom.zero:
        out.pop()
    return out


def degree(c: list) -> int:
    return len(c) - 1


def is_zero(c: list) -> bool:
    return not c


def constant(dom, a) -> list:
    return [] if a == dom.zero else [a]


def add(dom, a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = dom.add(out[i], v)
    return normalize(dom, out)


def sub(dom, a: list, b: list) -> list:
    out = list(a) + [dom.zero] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = dom.sub(out[i], v)
    return normalize(dom, out)


def neg(dom, a: list) -> list:
    return [dom.neg(v) for v in a]


def scale(dom, a: list, c) -> list:
    if c == dom.zero:
        return []
    return normalize(dom, [dom.mul(v, c) for v in a])


def mul(dom, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [dom.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == dom.zero:
            continue
        for j, bj in enumerate(b):
            if bj == dom.zero:
                continue
            out[i + j] = dom.add(out[i + j], dom.mul(ai, bj))
    return normalize(dom, out)


def mul_trunc(dom, a: list, b: list, k: int) -> list:
    """Product modulo x^k."""
    out = [dom.zero] * min(k, max(len(a) + len(b) - 1, 0))
    for i, ai in enumerate(a):
        if i >= k or ai == dom.zero:
            continue
        for j, bj in enumerate(b):
            if i + j >= k:
                break
            if bj == dom.zero:
                continue
            out[i + j] = dom.add(out[i + j], dom.mul(ai, bj))
    return normalize(dom, out)


def pow_trunc(dom, a: list, e: int, k: int) -> list:
    out = [dom.one]
    base = [v for v in a[:k]]
    while e:
        if e & 1:
            out = mul_trunc(dom, out, base, k)
        e >>= 1
        if e:
            base = mul_trunc(dom, base, base, k)
    return out


def divmod_poly(dom, a: list, b: list):
    """Quotient and remainder; the divisor's leading coefficient is inverted."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(a) < len(b):
        return [], list(a)
    inv_lc = dom.inv(b[-1])
    rem = list(a)
    db = len(b) - 1
    quot = [dom.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c == dom.zero:
            continue
        q = dom.mul(c, inv_lc)
        quot[i - db] = q
        for j in range(db + 1):
            rem[i - db + j] = dom.sub(rem[i - db + j], dom.mul(q, b[j]))
    return normalize(dom, quot), normalize(dom, rem)


def mod(dom, a: list, b: list) -> list:
    return divmod_poly(dom, a, b)[1]


def monic(dom, a: list) -> list:
    if not a:
        return []
    if a[-1] == dom.one:
        return list(a)
    return scale(dom, a, dom.inv(a[-1]))


def gcd(dom, a: list, b: list) -> list:
    """Monic gcd via the Euclidean algorithm; gcd(0, 0) is an error."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = list(a), list(b)
    while b:
        a, b = b, mod(dom, a, b)
    return monic(dom, a)


def xgcd(dom, a: list, b: list):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [dom.one], []
    t0, t1 = [], [dom.one]
    while r1:
        q, r = divmod_poly(dom, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(dom, s0, mul(dom, q, s1))
        t0, t1 = t1, sub(dom, t0, mul(dom, q, t1))
    if not r0:
        raise ValueError("xgcd(0, 0) is undefined")
    c = dom.inv(r0[-1])
    return scale(dom, r0, c), scale(dom, s0, c), scale(dom, t0, c)


def pow_mod(dom, a: list, e: int, m: list) -> list:
    out = [dom.one]
    base = mod(dom, a, m)
    while e:
        if e & 1:
            out = mod(dom, mul(dom, out, base), m)
        e >>= 1
        if e:
            base = mod(dom, mul(dom, base, base), m)
    return out


def evaluate(dom, a: list, x):
    acc = dom.zero
    for c in reversed(a):
        acc = dom.add(dom.mul(acc, x), c)
    return acc


def derivative(dom, a: list) -> list:
    out = []
    for i in range(1, len(a)):
        c = a[i]
        m = dom.mul(c, dom.from_int(i))
        out.append(m)
    return normalize(dom, out)


def compose(dom, outer: list, inner: list) -> list:
    """outer(inner) by Horner."""
    acc: list = []
    for c in reversed(outer):
        acc = add(dom, mul(dom, acc, inner), constant(dom, c))
    return acc


def shift(dom, a: list, c) -> list:
    """a(x + c)."""
    return compose(dom, a, [c, dom.one])


def is_irreducible_finite(field, f: list) -> bool:
    """Irreducibility over a finite field via the Frobenius criterion:
    x^(q^n) = x mod f and gcd(x^(q^(n/l)) - x, f) = 1 for prime l | n."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    q = field.q
    x = [field.zero, field.one]
    from .arith import factorint

    for ell in factorint(n):
        h = pow_mod(field, x, q ** (n // ell), f)
        g = sub(field, h, x)
        if not g:
            return False
        if degree(gcd(field, g, f)) > 0:
            return False
    h = pow_mod(field, x, q ** n, f)
    return sub(field, h, x) == []
