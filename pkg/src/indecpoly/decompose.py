"""Functional decomposition F = u(H) and its normalized form.

A normalized inner polynomial is monic under graded-lex and has zero
constant term; composing with the affine adjustment of the outer polynomial
turns any decomposition into a normalized one with the same composite.

The decomposability conventions differ by arity and both are exposed:

* n >= 2 variables: any outer degree >= 2 counts, inner degree 1 allowed;
* one variable: both the outer and the inner degree must be >= 2.

Search strategy per outer degree e with inner degree m = d/e: the top form
of the inner polynomial is forced (it is the unique monic e-th root of the
input's top form), lower parts follow by exact form division when e is
invertible in the field, and in wild characteristic (p | e) the lower parts
are enumerated under a state-space guard.  One variable uses the classical
approximate-root computation in the tame case with the same guarded
enumeration as fallback.  The outer polynomial is recovered by repeated
division, so a returned pair recomposes to the input by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import unipoly
from .arith import divisors, integer_nth_root
from .fields import GuardExceeded
from .mpoly import MPoly, glex_key, monomials_upto

DEFAULT_GUARD = 1 << 24


@dataclass
class Decomposition:
    """outer(inner) = source; inner is normalized (monic, zero constant)."""

    outer: MPoly  # univariate
    inner: MPoly

    def recompose(self) -> MPoly:
        return compose(self.outer, self.inner)

    def check(self, source: MPoly):
        if self.outer.degree() < 2:
            raise ValueError("outer degree must be at least 2")
        if self.inner.is_constant():
            raise ValueError("inner polynomial must be nonconstant")
        if self.recompose() != source:
            raise ValueError("decomposition does not recompose to the source")


def compose(u: MPoly, H: MPoly) -> MPoly:
    """u(H) for univariate u, by Horner over the coefficient list."""
    if u.n != 1:
        raise ValueError("outer polynomial must be univariate")
    dom = H.dom
    coeffs = u.to_dense()
    acc = MPoly(dom, H.n)
    for c in reversed(coeffs):
        acc = acc * H
        if c != dom.zero:
            acc = acc + MPoly.const(dom, H.n, c)
    return acc


def normalize(u: MPoly, H: MPoly) -> Decomposition:
    """The normalized decomposition with the same composite as u(H)."""
    if u.n != 1 or u.degree() < 2:
        raise ValueError("outer polynomial must be univariate of degree >= 2")
    if H.is_constant() or H.is_zero():
        raise ValueError("inner polynomial must be nonconstant")
    dom = H.dom
    a = H.leading()[1]
    b = H.constant_term()
    H2 = (H - MPoly.const(dom, H.n, b)).scale(dom.inv(a))
    # u2(t) = u(a t + b)
    t = MPoly.variable(dom, 1, 0)
    affine = t.scale(a) + MPoly.const(dom, 1, b)
    u2 = compose(u, affine)
    return Decomposition(u2, H2)


# --------------------------------------------------------------------------
# e-th roots of polynomials over perfect fields (and over the rationals)
# --------------------------------------------------------------------------

def _coeff_eth_root(dom, c, e):
    """Any z with z^e = c, or None. Over F_q found via root enumeration of
    z^e - c; over the rationals via integer root extraction."""
    if c == dom.one:
        return dom.one
    if getattr(dom, "is_finite", False):
        from .factoring import uni_roots

        f = [dom.neg(c)] + [dom.zero] * (e - 1) + [dom.one]
        roots = uni_roots(dom, f)
        return roots[0] if roots else None
    frac = Fraction(c)
    num = integer_nth_root(abs(frac.numerator), e)
    den = integer_nth_root(frac.denominator, e)
    if num is None or den is None:
        return None
    if frac < 0:
        if e % 2 == 0:
            return None
        num = -num
    return Fraction(num, den)


def poly_eth_root(G: MPoly, e: int):
    """The monic-normalized e-th root of G, or None when no root exists."""
    if e == 1:
        return G
    if G.is_zero():
        return G
    dom = G.dom
    p = getattr(dom, "char", 0)
    while p and e % p == 0:
        from .factoring import _pth_root_mpoly

        G = _pth_root_mpoly(G)
        if G is None:
            return None
        e //= p
    if e == 1:
        return G
    lead_e, lead_c = G.leading()
    if any(k % e for k in lead_e):
        return None
    z = _coeff_eth_root(dom, lead_c, e)
    if z is None:
        return None
    root_lead = tuple(k // e for k in lead_e)
    R = MPoly(dom, G.n, {root_lead: z})
    # Newton-style term recovery: each correction term is strictly smaller
    ez = dom.mul(dom.from_int(e), dom.pow(z, e - 1))
    ez_inv = dom.inv(ez)
    last_key = glex_key(root_lead)
    budget = len(G.terms) * e + G.degree() + 8
    for _ in range(budget):
        rem = G - R ** e
        if rem.is_zero():
            return R
        re, rc = rem.leading()
        te = tuple(a - (e - 1) * b for a, b in zip(re, root_lead))
        if any(k < 0 for k in te):
            return None
        k = glex_key(te)
        if k >= last_key:
            return None
        last_key = k
        R = R + MPoly(dom, G.n, {te: dom.mul(rc, ez_inv)})
    return None


# --------------------------------------------------------------------------
# multivariate decomposition (n >= 2; also valid over the rationals)
# --------------------------------------------------------------------------

def _extract_outer(F: MPoly, H: MPoly, e: int, powers=None):
    """Outer coefficient list with F = sum u_i H^i and deg u = e, or None."""
    dom = F.dom
    m = H.degree()
    if powers is None:
        powers = [MPoly.const(dom, F.n, dom.one)]
        for _ in range(e):
            powers.append(powers[-1] * H)
    u = [None] * (e + 1)
    lead_H = H.leading()[0]
    r = F
    while not r.is_zero():
        k = r.degree()
        if k % m:
            return None
        i = k // m
        if i > e or u[i] is not None:
            return None
        re, rc = r.leading()
        if re != tuple(i * a for a in lead_H):
            return None
        ui = dom.div(rc, dom.pow(H.leading()[1], i))
        u[i] = ui
        r = r - powers[i].scale(ui)
        if not r.is_zero() and r.degree() >= k and r.leading()[0] == re:
            return None  # pragma: no cover - leading term always cancels
    if u[e] is None:
        return None
    return [c if c is not None else dom.zero for c in u]


def _tame_inner(F: MPoly, Hm: MPoly, e: int, m: int, c):
    """Forced lower homogeneous parts of the inner polynomial (e invertible)."""
    dom = F.dom
    W = Hm ** (e - 1)
    W = W.scale(dom.from_int(e))
    H = Hm
    c_inv = dom.inv(c)
    for j in range(1, m):
        target = F.homogeneous_part(F.degree() - j).scale(c_inv) - (H ** e).homogeneous_part(
            F.degree() - j
        )
        if target.is_zero():
            continue
        part = target.exact_div(W)
        if part is None or (not part.is_zero() and part.degree() != m - j):
            return None
        H = H + part
    return H


def _iter_lower_parts(dom, n, m):
    """All coefficient assignments on the monomials of degree 1..m-1."""
    monos = [e for e in monomials_upto(n, m - 1) if 0 < sum(e)]
    q = dom.q
    idx = [0] * len(monos)
    while True:
        terms = {}
        for e, i in zip(monos, idx):
            if i:
                terms[e] = dom.element(i)
        yield MPoly(dom, n, terms)
        j = len(idx) - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < q:
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return


def decompose_multi(F: MPoly, e: int, guard=DEFAULT_GUARD):
    """The normalized decomposition of F with outer degree e, or None.

    In tame characteristic the inner polynomial is forced degree by degree,
    so the result is the unique one; in wild characteristic (p | e) the
    forced top form is completed by a guarded enumeration of lower parts and
    the canonically first inner polynomial wins.
    """
    if F.is_zero() or F.is_constant():
        raise ValueError("cannot decompose a constant")
    d = F.degree()
    if e < 2 or d % e:
        raise ValueError(f"outer degree {e} must be >= 2 and divide {d}")
    dom = F.dom
    m = d // e
    c = F.leading()[1]
    top = F.leading_form().scale(dom.inv(c))
    Hm = poly_eth_root(top, e)
    if Hm is None:
        return None
    p = getattr(dom, "char", 0)
    candidates = []
    if p == 0 or e % p:
        H = _tame_inner(F, Hm, e, m, c)
        if H is None:
            return None
        candidates = [H]
    else:
        if m == 1:
            candidates = [Hm]
        else:
            space = dom.q ** (len(monomials_upto(F.n, m - 1)) - 1)
            if space > guard:
                raise GuardExceeded(
                    f"inner-part enumeration of size {space} exceeds guard {guard}"
                )
            candidates = (Hm + low for low in _iter_lower_parts(dom, F.n, m))
    for H in candidates:
        u = _extract_outer(F, H, e)
        if u is not None:
            return Decomposition(MPoly.from_dense(dom, u, 1), H)
    return None


def is_indecomposable_multi(F: MPoly, guard=DEFAULT_GUARD) -> bool:
    """No decomposition u(H) with deg u >= 2 (inner degree 1 counts)."""
    if F.is_zero() or F.is_constant():
        raise ValueError("indecomposability is undefined for constants")
    d = F.degree()
    for e in divisors(d):
        if e < 2:
            continue
        if decompose_multi(F, e, guard) is not None:
            return False
    return True


def iter_normalized_inner(field, n, m):
    """All normalized polynomials of exact degree m: monic leading term under
    graded-lex and zero constant term (exhaustive search helper)."""
    monos = [e for e in monomials_upto(n, m) if sum(e) > 0]
    q = field.q
    idx = [0] * len(monos)
    while True:
        terms = {}
        for e, i in zip(monos, idx):
            if i:
                terms[e] = field.element(i)
        H = MPoly(field, n, terms)
        if H.degree() == m and H.leading()[1] == field.one:
            yield H
        j = len(idx) - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < q:
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return


# --------------------------------------------------------------------------
# one variable (inner degree must be >= 2 too)
# --------------------------------------------------------------------------

def _approx_root_dense(dom, f, r, s):
    """Monic w of degree s with deg(f - w^r) < (r-1)s, for monic f, r
    invertible in the domain."""
    d = r * s
    w = [dom.zero] * s + [dom.one]
    r_el = dom.from_int(r)
    r_inv = dom.inv(r_el)
    for j in range(1, s + 1):
        pw = unipoly.pow_trunc(dom, list(reversed(w)), r, j + 1)  # series at infinity
        have = pw[j] if len(pw) > j else dom.zero
        want = f[d - j] if d - j < len(f) else dom.zero
        delta = dom.sub(want, have)
        w[s - j] = dom.mul(delta, r_inv)
    return w


def _extract_outer_dense(dom, f, v, r):
    """Coefficients [c_0..c_r] with f = sum c_i v^i, all constants, or None."""
    out = []
    cur = list(f)
    for _ in range(r + 1):
        cur, rem = unipoly.divmod_poly(dom, cur, v)
        if unipoly.degree(rem) > 0:
            return None
        out.append(rem[0] if rem else dom.zero)
        if not cur:
            break
    if cur:
        return None
    out += [dom.zero] * (r + 1 - len(out))
    if out[r] == dom.zero:
        return None
    return out


def decompose_uni_dense(dom, f, r, guard=DEFAULT_GUARD):
    """(outer coeffs, normalized inner coeffs) with outer degree r, or None."""
    d = unipoly.degree(f)
    s = d // r
    a = f[-1]
    fm = unipoly.monic(dom, f)
    p = getattr(dom, "char", 0)
    if p == 0 or r % p:
        w = _approx_root_dense(dom, fm, r, s)
        v = list(w)
        v[0] = dom.zero
        u = _extract_outer_dense(dom, fm, v, r)
        if u is None:
            return None
        return unipoly.scale(dom, u, a), v
    if dom.q ** (s - 1) > guard:
        raise GuardExceeded(
            f"inner enumeration of size {dom.q ** (s - 1)} exceeds guard {guard}"
        )
    idx = [0] * (s - 1)
    while True:
        v = [dom.zero] + [dom.element(i) for i in idx] + [dom.one]
        u = _extract_outer_dense(dom, fm, v, r)
        if u is not None:
            return unipoly.scale(dom, u, a), v
        j = len(idx) - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < dom.q:
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return None


def decompose_uni(f: MPoly, r: int, guard=DEFAULT_GUARD):
    """Normalized one-variable decomposition with outer degree r, or None.

    Requires r >= 2 and cofactor degree d/r >= 2 (degree-one inner
    polynomials do not count in one variable)."""
    if f.n != 1:
        raise ValueError("expected a univariate polynomial")
    d = f.degree()
    if d < 1:
        raise ValueError("cannot decompose a constant")
    if r < 2 or d % r or d // r < 2:
        raise ValueError(f"invalid degree split: need r >= 2 and {d}/r >= 2")
    dom = f.dom
    res = decompose_uni_dense(dom, f.to_dense(), r, guard)
    if res is None:
        return None
    u, v = res
    dec = Decomposition(MPoly.from_dense(dom, u, 1), MPoly.from_dense(dom, v, 1))
    dec.check(f)
    return dec


def is_indecomposable_uni(f: MPoly, guard=DEFAULT_GUARD) -> bool:
    """One-variable indecomposability: no split with both degrees >= 2."""
    if f.n != 1:
        raise ValueError("expected a univariate polynomial")
    d = f.degree()
    if d < 1:
        raise ValueError("indecomposability is undefined for constants")
    for r in divisors(d):
        if r < 2 or d // r < 2:
            continue
        if decompose_uni_dense(f.dom, f.to_dense(), r, guard) is not None:
            return False
    return True


# --------------------------------------------------------------------------
# p-th powers and Dickson polynomials
# --------------------------------------------------------------------------

def is_pth_power(F: MPoly):
    """The p-th root of F over F_q when every exponent is a multiple of the
    characteristic (the coefficients follow since the field is perfect);
    None otherwise."""
    if not getattr(F.dom, "is_finite", False):
        raise ValueError("p-th power detection needs a finite field")
    if F.is_zero():
        return F
    from .factoring import _pth_root_mpoly

    return _pth_root_mpoly(F)


def dickson(field, m: int, a) -> MPoly:
    """Dickson polynomial D_m(x, a): D_0 = 2, D_1 = x,
    D_{m+1} = x D_m - a D_{m-1}."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    two = field.add(field.one, field.one)
    prev = [two]
    cur = [field.zero, field.one]
    if m == 0:
        return MPoly.from_dense(field, prev, 1)
    for _ in range(m - 1):
        nxt = unipoly.sub(
            field,
            unipoly.mul(field, [field.zero, field.one], cur),
            unipoly.scale(field, prev, a),
        )
        prev, cur = cur, nxt
    return MPoly.from_dense(field, cur, 1)
