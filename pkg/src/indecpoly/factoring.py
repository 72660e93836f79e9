"""Polynomial factorization and irreducibility over finite fields.

Univariate factorization is Cantor-Zassenhaus (squarefree split with p-th
root peeling, distinct-degree, then deterministic-seeded equal-degree
splitting), so identical inputs always produce identical outputs.

Bivariate factorization has two engines:

* an exhaustive divisor search, trying every monic candidate of total degree
  up to half the input in canonical graded-lex order.  This is the reference
  engine; it is used whenever the candidate space is small and it guards
  itself against blowup.
* a lifting engine for larger fields: make the input monic in y by a shear,
  factor a squarefree specialization, lift the factors x-adically past the
  total degree, and recombine subsets by trial division.

Both normalize factors the same way (monic under graded-lex, sorted), and the
test suite pins them against each other, so the fast engine may stand in for
the reference wherever the latter would exceed its guard.

Absolute irreducibility and the count of irreducible factors over the
algebraic closure reduce to conjugate-orbit sizes: an irreducible polynomial
over F_q splits over the closure into r conjugate factors of equal degree
with r dividing deg, and r is found by extension-field splitting, after a
cheap screen (degrees of irreducible factors of smooth specializations are
always multiples of r).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import unipoly
from .arith import divisors, factorint
from .fields import GuardExceeded, embedding, finite_field, projection
from .mpoly import MPoly, count_monomials, monomials_upto

DEFAULT_GUARD = 1 << 24
SEARCH_LIMIT = 4000


# --------------------------------------------------------------------------
# univariate factorization (dense coefficient lists)
# --------------------------------------------------------------------------

def uni_sqfree(field, f):
    """Squarefree decomposition [(g_i, m_i)] of a monic f, p-th powers peeled."""
    out = []
    if unipoly.degree(f) < 1:
        return out
    fp = unipoly.derivative(field, f)
    if not fp:
        # f = h(x^p); over a perfect field h's coefficient roots give f = r^p
        root = _pth_root_dense(field, f)
        for g, m in uni_sqfree(field, root):
            out.append((g, m * field.p))
        return out
    g = unipoly.gcd(field, f, fp)
    w = unipoly.divmod_poly(field, f, g)[0]
    i = 1
    while unipoly.degree(w) > 0:
        y = unipoly.gcd(field, w, g)
        z = unipoly.divmod_poly(field, w, y)[0]
        if unipoly.degree(z) > 0:
            out.append((z, i))
        w = y
        g = unipoly.divmod_poly(field, g, y)[0]
        i += 1
    if unipoly.degree(g) > 0:
        for h, m in uni_sqfree(field, g):
            out.append((h, m))
    return out


def _pth_root_dense(field, f):
    p = field.p
    out = [field.zero] * (unipoly.degree(f) // p + 1)
    for i, c in enumerate(f):
        if c == field.zero:
            continue
        if i % p:
            raise ValueError("not a p-th power")
        out[i // p] = field.pth_root(c)
    return unipoly.normalize(field, out)


def _distinct_degree(field, f):
    """[(product of irreducibles of degree d, d)] for monic squarefree f."""
    out = []
    q = field.q
    x = [field.zero, field.one]
    h = list(x)
    d = 0
    rest = list(f)
    while unipoly.degree(rest) >= 2 * (d + 1):
        d += 1
        h = unipoly.pow_mod(field, h, q, rest)
        g = unipoly.gcd(field, unipoly.sub(field, h, x), rest)
        if unipoly.degree(g) > 0:
            out.append((g, d))
            rest = unipoly.divmod_poly(field, rest, g)[0]
            h = unipoly.mod(field, h, rest)
    if unipoly.degree(rest) > 0:
        out.append((rest, unipoly.degree(rest)))
    return out


def _equal_degree(field, f, d):
    """Split monic squarefree f, all of whose factors have degree d."""
    n = unipoly.degree(f)
    if n == d:
        return [f]
    q = field.q
    pieces = []
    stack = [f]
    trial = 0
    while stack:
        g = stack.pop()
        if unipoly.degree(g) == d:
            pieces.append(g)
            continue
        split = None
        while split is None:
            trial += 1
            if trial > 10000:  # pragma: no cover
                raise RuntimeError("equal-degree splitting stalled")
            rng = random.Random(0x5EED + trial)
            u = [field.element(rng.randrange(q)) for _ in range(unipoly.degree(g))]
            u = unipoly.normalize(field, u)
            if unipoly.degree(u) < 1:
                continue
            if field.p == 2:
                acc = unipoly.mod(field, u, g)
                t = acc
                e2 = d * (q.bit_length() - 1)
                for _ in range(e2 - 1):
                    t = unipoly.pow_mod(field, t, 2, g)
                    acc = unipoly.add(field, acc, t)
                h = acc
            else:
                h = unipoly.pow_mod(field, u, (q ** d - 1) // 2, g)
                h = unipoly.sub(field, h, [field.one])
            if not h:
                continue
            w = unipoly.gcd(field, h, g)
            dw = unipoly.degree(w)
            if 0 < dw < unipoly.degree(g):
                split = (w, unipoly.divmod_poly(field, g, w)[0])
        stack.extend(split)
    return pieces


def uni_factor(field, f):
    """(unit, [(monic factor, multiplicity)]) with a canonical sorted order."""
    f = unipoly.normalize(field, list(f))
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    unit = f[-1]
    fm = unipoly.monic(field, f)
    factors = []
    for g, m in uni_sqfree(field, fm):
        for h, d in _distinct_degree(field, g):
            for piece in _equal_degree(field, h, d):
                factors.append((tuple(piece), m))
    factors.sort(key=lambda t: (len(t[0]), tuple(map(field.index, t[0]))))
    return unit, factors


def uni_roots(field, f):
    """Roots in the coefficient field, sorted by element index, no repeats."""
    _, factors = uni_factor(field, f)
    roots = [field.neg(g[0]) for g, _ in factors if len(g) == 2]
    return sorted(set(roots), key=field.index)


def squarefree_part(field, f):
    """Product of the distinct monic irreducible factors of f (dense form)."""
    f = unipoly.normalize(field, list(f))
    if unipoly.degree(f) < 1:
        raise ValueError("squarefree part needs a nonconstant polynomial")
    out = [field.one]
    for g, _m in uni_sqfree(field, unipoly.monic(field, f)):
        out = unipoly.mul(field, out, g)
    return out


def is_irreducible_uni(field, f):
    return unipoly.is_irreducible_finite(field, unipoly.normalize(field, list(f)))


def minimal_polynomial(a, big, sub):
    """Minimal polynomial over `sub` of an element of `big`, as a dense list
    of `sub` elements (sub embedded in big along the canonical embedding)."""
    qs = sub.q
    orbit = [a]
    cur = big.pow(a, qs)
    while cur != a:
        orbit.append(cur)
        cur = big.pow(cur, qs)
    poly = [big.one]
    for r in orbit:
        poly = unipoly.mul(big, poly, [big.neg(r), big.one])
    proj = projection(sub, big)
    out = []
    for c in poly:
        v = proj(c)
        if v is None:  # pragma: no cover - orbit products are sub-rational
            raise ArithmeticError("minimal polynomial coefficient outside subfield")
        out.append(v)
    return out


# --------------------------------------------------------------------------
# bivariate factorization
# --------------------------------------------------------------------------

@dataclass
class Factorization:
    """unit * prod(factor^multiplicity); factors monic, canonically sorted."""

    dom: object
    unit: object
    factors: list

    def expand(self) -> MPoly:
        n = self.factors[0][0].n if self.factors else 2
        acc = MPoly.const(self.dom, n, self.unit)
        for g, m in self.factors:
            acc = acc * g ** m
        return acc

    def total_multiplicity(self):
        return sum(m for _, m in self.factors)


def _normalize_factor(g: MPoly) -> MPoly:
    return g.monic()


def _sorted_factors(field, factors):
    def keyfn(item):
        g, m = item
        terms = tuple(sorted(((e, field.index(c)) for e, c in g.terms.items())))
        return (g.degree(), len(g.terms), terms, m)

    return sorted(factors, key=keyfn)


def search_space_size(q, d):
    """Candidate count of the exhaustive divisor search up to degree d//2."""
    total = 0
    for delta in range(1, d // 2 + 1):
        below = count_monomials(2, delta) - 1
        total += (delta + 1) * q ** below
    return total


def _iter_monic_candidates(field, delta):
    """All monic bivariate polynomials of exact total degree delta, canonical
    order: leading monomial descending, then lower coefficients by index."""
    monos = monomials_upto(2, delta)
    tops = [e for e in monos if sum(e) == delta]
    q = field.q
    for lead_pos, lead in enumerate(tops):
        lower = monos[lead_pos + 1 :]
        idx = [0] * len(lower)
        while True:
            terms = {lead: field.one}
            for e, i in zip(lower, idx):
                if i:
                    terms[e] = field.element(i)
            yield MPoly(field, 2, terms)
            j = len(idx) - 1
            while j >= 0:
                idx[j] += 1
                if idx[j] < q:
                    break
                idx[j] = 0
                j -= 1
            if j < 0:
                break


def _find_divisor_search(F: MPoly, guard):
    """Smallest (canonical order) nonconstant proper monic divisor, or None."""
    field = F.dom
    d = F.degree()
    if search_space_size(field.q, d) > guard:
        raise GuardExceeded(
            f"divisor search space for degree {d} over GF({field.q}) exceeds guard {guard}"
        )
    for delta in range(1, d // 2 + 1):
        for cand in _iter_monic_candidates(field, delta):
            quo = F.exact_div(cand)
            if quo is not None:
                return cand, quo
    return None


def _factor_search(F: MPoly, guard):
    found = _find_divisor_search(F, guard)
    if found is None:
        return [(_normalize_factor(F), 1)]
    g, h = found
    return _merge_factor_lists(_factor_search(g, guard), _factor_search(h, guard))


def _merge_factor_lists(a, b):
    out = {}
    order = []
    for g, m in list(a) + list(b):
        k = g.key()
        if k not in out:
            order.append(k)
            out[k] = [g, 0]
        out[k][1] += m
    return [(out[k][0], out[k][1]) for k in order]


# -- helpers between MPoly and y-major dense form ---------------------------

def _to_yx(F: MPoly):
    """List over y-degree of dense x-coefficient lists."""
    field = F.dom
    dy = F.deg_in(1)
    dx = F.deg_in(0)
    out = [[field.zero] * (dx + 1) for _ in range(dy + 1)]
    for (i, j), c in F.terms.items():
        out[j][i] = c
    return [unipoly.normalize(field, row) for row in out]


def _from_yx(field, rows):
    terms = {}
    for j, row in enumerate(rows):
        for i, c in enumerate(row):
            if c != field.zero:
                terms[(i, j)] = c
    return MPoly(field, 2, terms)


def _y_content(field, F: MPoly):
    """gcd in F_q[x] of the y-coefficients (the content of F in F_q[x][y])."""
    rows = _to_yx(F)
    cont = []
    for row in rows:
        if not row:
            continue
        cont = row if not cont else unipoly.gcd(field, cont, row)
        if unipoly.degree(cont) == 0:
            break
    return unipoly.monic(field, cont)


def _pth_root_mpoly(F: MPoly):
    field = F.dom
    p = field.p
    terms = {}
    for e, c in F.terms.items():
        if any(k % p for k in e):
            return None
        terms[tuple(k // p for k in e)] = field.pth_root(c)
    return MPoly(field, F.n, terms)


def _prem_y(field, A: MPoly, B: MPoly):
    """Pseudo-remainder of A by B with respect to y (variable 1)."""
    db = B.deg_in(1)
    lb = _ycoeff(field, B, db)
    R = A
    while not R.is_zero() and R.deg_in(1) >= db:
        dr = R.deg_in(1)
        lr = _ycoeff(field, R, dr)
        ymon = MPoly(field, 2, {(0, dr - db): field.one})
        R = R * lb - B * ymon * lr
    return R


def _ycoeff(field, F: MPoly, j):
    terms = {}
    for (i, k), c in F.terms.items():
        if k == j:
            terms[(i, 0)] = c
    return MPoly(field, 2, terms)


def _y_primitive_part(field, F: MPoly):
    cont = _y_content(field, F)
    if unipoly.degree(cont) <= 0:
        return F
    contp = MPoly.from_dense(field, cont, 2, 0)
    return F.exact_div(contp)


def bivar_gcd(F: MPoly, G: MPoly) -> MPoly:
    """Monic gcd in F_q[x, y] via a primitive remainder sequence in y."""
    field = F.dom
    if F.is_zero():
        return G.monic() if not G.is_zero() else G
    if G.is_zero():
        return F.monic()
    if F.deg_in(1) == 0 and G.deg_in(1) == 0:
        a = unipoly.gcd(field, _to_yx(F)[0], _to_yx(G)[0])
        return MPoly.from_dense(field, a, 2, 0)
    if F.deg_in(1) < G.deg_in(1):
        F, G = G, F
    ca = _y_content(field, F)
    cb = _y_content(field, G)
    cont = unipoly.gcd(field, ca, cb) if ca and cb else [field.one]
    A = _y_primitive_part(field, F)
    B = _y_primitive_part(field, G)
    while not B.is_zero() and B.deg_in(1) > 0:
        R = _prem_y(field, A, B)
        A, B = B, (_y_primitive_part(field, R) if not R.is_zero() else R)
    if not B.is_zero():
        # nonzero constant-in-y remainder: the y-parts are coprime
        g = MPoly.from_dense(field, cont, 2, 0)
    else:
        g = MPoly.from_dense(field, cont, 2, 0) * _y_primitive_part(field, A)
    return g.monic()


# -- the lifting engine ------------------------------------------------------

def _shear_options(field, F: MPoly):
    """(transposed, shear constant) pairs making the y^D coefficient nonzero."""
    D = F.degree()
    top = F.leading_form()
    opts = []
    for transposed in (False, True):
        T = top.swap_vars(0, 1) if transposed else top
        for i in range(field.q):
            c = field.element(i)
            # coefficient of y^D after x -> x + c*y is top(c, 1)
            val = T.evaluate([c, field.one])
            if val != field.zero:
                opts.append((transposed, c))
    return opts


def _poly_divmod_y(field, A_rows, B_rows):
    """Division in (F_q[x])[y] by a divisor monic in y. Rows are x-dense lists."""
    A = [list(r) for r in A_rows]
    while A and not A[-1]:
        A.pop()
    db = len(B_rows) - 1
    if db < 0:
        raise ZeroDivisionError
    quot = [[] for _ in range(max(len(A) - db, 0))]
    while len(A) - 1 >= db:
        da = len(A) - 1
        c = A[-1]
        quot[da - db] = c
        for j in range(db + 1):
            A[da - db + j] = unipoly.sub(field, A[da - db + j], unipoly.mul(field, c, B_rows[j]))
        while A and not A[-1]:
            A.pop()
    return quot, A


def _lift_pair(field, T_rows, g0, h0, K):
    """Hensel-lift T = G*H from (g0, h0) at x=0 to precision x^K.

    T_rows: y-major x-dense, monic in y; g0, h0: coprime monic y-univariate.
    Returns (G_rows, H_rows) with T = G*H mod x^K, G monic of deg g0.
    """
    one, A, B = unipoly.xgcd(field, g0, h0)
    assert unipoly.degree(one) == 0
    G = [[c] if c != field.zero else [] for c in g0]
    H = [[c] if c != field.zero else [] for c in h0]
    for m in range(1, K):
        prod = _yx_mul(field, G, H, K)
        e = []
        for j in range(len(T_rows)):
            t = T_rows[j] if j < len(T_rows) else []
            p = prod[j] if j < len(prod) else []
            dcoef = unipoly.sub(field, t, p)
            e.append(dcoef[m] if len(dcoef) > m else field.zero)
        e = unipoly.normalize(field, e)
        if not e:
            continue
        u = unipoly.mod(field, unipoly.mul(field, B, e), g0)
        v_num = unipoly.sub(field, e, unipoly.mul(field, u, h0))
        v, rem = unipoly.divmod_poly(field, v_num, g0)
        assert not rem
        for j, c in enumerate(u):
            if c == field.zero:
                continue
            row = G[j]
            row.extend([field.zero] * (m + 1 - len(row)))
            row[m] = field.add(row[m], c)
        for j, c in enumerate(v):
            if c == field.zero:
                continue
            while len(H) <= j:
                H.append([])
            row = H[j]
            row.extend([field.zero] * (m + 1 - len(row)))
            row[m] = field.add(row[m], c)
    return G, H


def _yx_mul(field, A, B, K):
    """Product of y-major x-dense polys, x-truncated below x^K."""
    out = [[] for _ in range(len(A) + len(B) - 1)]
    for i, a in enumerate(A):
        if not a:
            continue
        for j, b in enumerate(B):
            if not b:
                continue
            out[i + j] = unipoly.add(field, out[i + j], unipoly.mul_trunc(field, a, b, K))
    return out


def _multilift(field, T_rows, locals_, K):
    if len(locals_) == 1:
        return [[r[:K] for r in T_rows]]
    g0 = locals_[0]
    h0 = [field.one]
    for g in locals_[1:]:
        h0 = unipoly.mul(field, h0, g)
    G, H = _lift_pair(field, T_rows, g0, h0, K)
    return [G] + _multilift(field, H, locals_[1:], K)


def _factor_lift(S: MPoly, guard, depth=0):
    """Factor a squarefree primitive S (deg >= 1 in both variables) by lifting."""
    field = S.dom
    D = S.degree()
    for transposed, c in _shear_options(field, S):
        W = S.swap_vars(0, 1) if transposed else S
        W = W.shear(0, 1, c)
        c0 = W.coeff((0, D))
        Wm = W.scale(field.inv(c0))
        rows = _to_yx(Wm)
        # specialization with a squarefree full-degree fiber
        for i in range(field.q):
            x0 = field.element(i)
            fib = unipoly.normalize(field, [unipoly.evaluate(field, r, x0) for r in rows])
            if unipoly.degree(fib) != D:
                continue  # monic in y, cannot happen; kept for safety
            fibp = unipoly.derivative(field, fib)
            if not fibp or unipoly.degree(unipoly.gcd(field, fib, fibp)) > 0:
                continue
            parts = _factor_lift_at(field, Wm, x0, fib, D)
            out = []
            for P in parts:
                Q = P.shear(0, 1, field.neg(c))
                if transposed:
                    Q = Q.swap_vars(0, 1)
                out.append((_normalize_factor(Q), 1))
            return out
    return _factor_by_extension(S, guard, depth)


def _factor_lift_at(field, Wm, x0, fib, D):
    """Lift/recombine at a good specialization; None signals 'try another'."""
    unit, locs = uni_factor(field, fib)
    local = [list(g) for g, _ in locs]
    if len(local) == 1:
        return [Wm]
    T = Wm.shift_var(0, x0) if x0 != field.zero else Wm
    K = D + 1
    T_rows = _to_yx(T)
    lifted = _multilift(field, T_rows, local, K)
    # subset recombination by trial division
    result = []
    pool = list(range(len(lifted)))
    cur_rows = T_rows
    size = 1
    while pool and size <= len(pool):
        hit = False
        for subset in combinations(pool, size):
            cand = [[field.one]]
            for j in subset:
                cand = _yx_mul(field, cand, lifted[j], K)
            quot, rem = _poly_divmod_y(field, cur_rows, cand)
            if any(r for r in rem):
                continue
            result.append(_from_yx(field, cand))
            pool = [j for j in pool if j not in subset]
            cur_rows = quot
            hit = True
            break
        if not hit:
            size += 1
    if len(cur_rows) - 1 >= 1:
        result.append(_from_yx(field, cur_rows))
    # undo the x-shift here so callers see factors of Wm
    if x0 != field.zero:
        result = [P.shift_var(0, field.neg(x0)) for P in result]
    return result


def _factor_by_extension(S: MPoly, guard, depth):
    """Factor over a small extension and descend by Frobenius orbit products."""
    field = S.dom
    if depth >= 2:
        # last resort: the reference engine, whatever the cost bound says
        return _factor_search(S, guard)
    for j in (2, 3):
        E = finite_field(field.p, field.k * j)
        emb = embedding(field, E)
        proj = projection(field, E)
        SE = S.map_coeffs(emb, E)
        parts = _factor_rec(SE, "auto", guard, depth + 1)
        # group factors into Frobenius orbits over the base field
        q = field.q
        remaining = [g for g, m in parts for _ in range(m)]
        out = []
        while remaining:
            g = remaining.pop(0)
            orbit = [g]
            cur = g.map_coeffs(lambda a: E.pow(a, q), E).monic()
            while cur != g:
                if cur in remaining:
                    remaining.remove(cur)
                orbit.append(cur)
                cur = cur.map_coeffs(lambda a: E.pow(a, q), E).monic()
            prod = orbit[0]
            for h in orbit[1:]:
                prod = prod * h
            down = {}
            ok = True
            for e, cc in prod.terms.items():
                v = proj(cc)
                if v is None:
                    ok = False
                    break
                down[e] = v
            if not ok:
                break
            out.append(MPoly(field, 2, down).monic())
        else:
            merged = {}
            order = []
            for g in out:
                k = g.key()
                if k not in merged:
                    order.append(k)
                    merged[k] = [g, 0]
                merged[k][1] += 1
            return [(merged[k][0], merged[k][1]) for k in order]
    return _factor_search(S, guard)  # pragma: no cover


# -- full recursive factorization --------------------------------------------

def _factor_rec(F: MPoly, method, guard, depth=0):
    field = F.dom
    if F.is_constant():
        return []
    # univariate contents and univariate inputs
    if F.deg_in(1) == 0:
        unit, fs = uni_factor(field, _to_yx(F)[0])
        return [(MPoly.from_dense(field, list(g), 2, 0), m) for g, m in fs]
    if F.deg_in(0) == 0:
        col = [field.zero] * (F.deg_in(1) + 1)
        for (i, j), c in F.terms.items():
            col[j] = c
        unit, fs = uni_factor(field, col)
        return [(MPoly.from_dense(field, list(g), 2, 1), m) for g, m in fs]
    cont = _y_content(field, F)
    if unipoly.degree(cont) > 0:
        contp = MPoly.from_dense(field, cont, 2, 0)
        rest = F.exact_div(contp)
        return _merge_factor_lists(
            _factor_rec(contp, method, guard, depth), _factor_rec(rest, method, guard, depth)
        )
    xcont = _x_content(field, F)
    if unipoly.degree(xcont) > 0:
        contp = MPoly.from_dense(field, xcont, 2, 1)
        rest = F.exact_div(contp)
        return _merge_factor_lists(
            _factor_rec(contp, method, guard, depth), _factor_rec(rest, method, guard, depth)
        )
    root = _pth_root_mpoly(F)
    if root is not None:
        inner = _factor_rec(root, method, guard, depth)
        return [(g, m * field.p) for g, m in inner]
    Fy = F.derivative(1)
    Fx = F.derivative(0)
    if Fy.is_zero() and Fx.is_zero():  # pragma: no cover - handled by p-th root
        raise ArithmeticError("unreachable: constant derivative pair")
    if Fy.is_zero():
        flipped = _factor_rec(F.swap_vars(0, 1), method, guard, depth)
        return [(g.swap_vars(0, 1).monic(), m) for g, m in flipped]
    G = bivar_gcd(F, Fy)
    S = F.exact_div(G).monic()
    if method == "search" or (
        method == "auto" and search_space_size(field.q, S.degree()) <= SEARCH_LIMIT
    ):
        parts = _factor_search(S, guard) if S.degree() >= 1 else []
    else:
        parts = _factor_lift(S, guard, depth) if S.degree() >= 1 else []
    if G.is_constant():
        return parts
    return _merge_factor_lists(parts, _factor_rec(G, method, guard, depth))


def _x_content(field, F: MPoly):
    cols = {}
    for (i, j), c in F.terms.items():
        cols.setdefault(i, {})[j] = c
    cont = []
    for i, col in cols.items():
        row = [field.zero] * (max(col) + 1)
        for j, c in col.items():
            row[j] = c
        row = unipoly.normalize(field, row)
        cont = row if not cont else unipoly.gcd(field, cont, row)
        if unipoly.degree(cont) == 0:
            break
    return unipoly.monic(field, cont)


def bivar_factor(F: MPoly, method="auto", guard=DEFAULT_GUARD) -> Factorization:
    """Complete factorization over the coefficient field.

    method: "auto" picks the engine by search-space size, "search" forces the
    exhaustive reference engine, "lift" forces the lifting engine.
    """
    if F.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    field = F.dom
    if F.n != 2:
        raise ValueError("bivariate factorization expects two variables")
    if F.is_constant():
        return Factorization(field, F.constant_term(), [])
    if method not in ("auto", "search", "lift"):
        raise ValueError(f"unknown method {method!r}")
    factors = _factor_rec(F, method, guard)
    factors = _sorted_factors(field, factors)
    prod = MPoly.const(field, 2, field.one)
    for g, m in factors:
        prod = prod * g ** m
    unit = field.div(F.leading()[1], prod.leading()[1])
    return Factorization(field, unit, factors)


def bivar_irreducible(F: MPoly, method="auto", guard=DEFAULT_GUARD) -> bool:
    """No factorization G*H with both parts nonconstant over the base field."""
    if F.is_constant():
        raise ValueError("irreducibility is undefined for constants")
    if F.degree() == 1:
        return True
    fac = bivar_factor(F, method=method, guard=guard)
    return fac.total_multiplicity() == 1


def conjugate_split_count(G: MPoly, guard=DEFAULT_GUARD) -> int:
    """Number of absolutely irreducible conjugate factors of an irreducible G."""
    field = G.dom
    delta = G.degree()
    if delta <= 1:
        return 1
    if G.deg_in(0) == 0 or G.deg_in(1) == 0:
        # univariate: an irreducible of degree d splits into d conjugate roots
        return delta
    cands = [r for r in divisors(delta) if r > 1]
    # screen: factor degrees of squarefree specializations are multiples of
    # the orbit size, so a gcd of 1 proves absolute irreducibility
    if field.q <= (1 << 16):
        evidence = 0
        for transposed in (False, True):
            P = G.swap_vars(0, 1) if transposed else G
            rows = _to_yx(P)
            good = 0
            for i in range(min(field.q, 64)):
                x0 = field.element(i)
                fib = unipoly.normalize(field, [unipoly.evaluate(field, r, x0) for r in rows])
                if unipoly.degree(fib) < 1:
                    continue
                fibp = unipoly.derivative(field, fib)
                if not fibp or unipoly.degree(unipoly.gcd(field, fib, fibp)) > 0:
                    continue
                _, fs = uni_factor(field, fib)
                for g, _m in fs:
                    evidence = _gcd2(evidence, len(g) - 1)
                good += 1
                if evidence == 1:
                    return 1
                if good >= 4:
                    break
        if evidence:
            cands = [r for r in cands if evidence % r == 0]
            if not cands:
                return 1
    # exact phase: split over prime-degree extensions, recurse on one factor
    r_total = 1
    cur = G
    curfield = field
    while True:
        dc = cur.degree()
        if dc == 1:
            break
        did = False
        for ell in sorted(factorint(dc)):
            E = finite_field(curfield.p, curfield.k * ell)
            emb = embedding(curfield, E)
            fac = _factor_rec(cur.map_coeffs(emb, E), "auto", guard)
            if sum(m for _, m in fac) > 1:
                fac = _sorted_factors(E, fac)
                cur = fac[0][0]
                curfield = E
                r_total *= ell
                did = True
                break
        if not did:
            break
    return r_total


def _gcd2(a, b):
    while b:
        a, b = b, a % b
    return a


def absolutely_irreducible(F: MPoly, guard=DEFAULT_GUARD) -> bool:
    """Irreducible over every finite extension (hence over the closure)."""
    if F.is_constant():
        raise ValueError("irreducibility is undefined for constants")
    if F.degree() == 1:
        return True
    fac = bivar_factor(F, guard=guard)
    if fac.total_multiplicity() > 1:
        return False
    return conjugate_split_count(fac.factors[0][0], guard) == 1


def n_bar_factors(F: MPoly, guard=DEFAULT_GUARD) -> int:
    """Number of distinct irreducible factors over the algebraic closure."""
    if F.is_constant():
        raise ValueError("factor count is undefined for constants")
    fac = bivar_factor(F, guard=guard)
    return sum(conjugate_split_count(g, guard) for g, _ in fac.factors)
