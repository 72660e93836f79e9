"""Sparse multivariate polynomials over an exact coefficient domain.

A polynomial is a map from exponent tuples to nonzero coefficients, plus the
variable count and the owning domain. The monomial order used everywhere
(leading terms, canonical printing, divisor enumeration) is graded
lexicographic: higher total degree wins, ties break lexicographically on the
exponent tuple with the first variable strongest. Values are immutable by
convention; every operation returns a fresh polynomial.
"""

from __future__ import annotations

from math import comb


def glex_key(e):
    return (sum(e), e)


class MPoly:
    __slots__ = ("dom", "n", "terms")

    def __init__(self, dom, n, terms=None):
        self.dom = dom
        self.n = n
        clean = {}
        if terms:
            z = dom.zero
            for e, c in terms.items():
                if type(c) is int:
                    c = dom.from_int(c)  # convenience for literal coefficients
                if c != z:
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, dom, n):
        return cls(dom, n)

    @classmethod
    def const(cls, dom, n, c):
        return cls(dom, n, {(0,) * n: c})

    @classmethod
    def variable(cls, dom, n, i):
        e = [0] * n
        e[i] = 1
        return cls(dom, n, {tuple(e): dom.one})

    @classmethod
    def from_dense(cls, dom, coeffs, n=1, var=0):
        terms = {}
        for i, c in enumerate(coeffs):
            if c != dom.zero:
                e = [0] * n
                e[var] = i
                terms[tuple(e)] = c
        return cls(dom, n, terms)

    def to_dense(self, var=0):
        """Coefficient list in `var`; every other variable must be absent."""
        out = [self.dom.zero] * (self.deg_in(var) + 1 if self.terms else 0)
        for e, c in self.terms.items():
            if any(x for i, x in enumerate(e) if i != var):
                raise ValueError("polynomial is not univariate in that variable")
            out[e[var]] = c
        return out

    # -- basic structure ---------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def deg_in(self, var):
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=glex_key)
        return e, self.terms[e]

    def leading_coeff(self):
        return self.leading()[1]

    def leading_form(self):
        """Sum of the monomials of maximal total degree."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading form")
        d = self.degree()
        return MPoly(self.dom, self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def homogeneous_part(self, d):
        return MPoly(self.dom, self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def constant_term(self):
        return self.terms.get((0,) * self.n, self.dom.zero)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.dom.zero)

    def key(self):
        return (self.dom.key(), self.n, tuple(sorted(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        dom = self.dom
        for e, c in other.terms.items():
            s = dom.add(out.get(e, dom.zero), c)
            if s == dom.zero:
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly(dom, self.n, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        dom = self.dom
        for e, c in other.terms.items():
            s = dom.sub(out.get(e, dom.zero), c)
            if s == dom.zero:
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly(dom, self.n, out)

    def __neg__(self):
        dom = self.dom
        return MPoly(dom, self.n, {e: dom.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        dom = self.dom
        out = {}
        zero = dom.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = dom.add(out.get(e, zero), dom.mul(c1, c2))
                if s == zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MPoly(dom, self.n, out)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.const(self.dom, self.n, self.dom.one)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale(self, c):
        dom = self.dom
        if c == dom.zero:
            return MPoly(dom, self.n)
        return MPoly(dom, self.n, {e: dom.mul(v, c) for e, v in self.terms.items()})

    def monic(self):
        """Scale so the graded-lex leading coefficient is one."""
        _, lc = self.leading()
        if lc == self.dom.one:
            return self
        return self.scale(self.dom.inv(lc))

    def _check(self, other):
        if self.n != other.n or self.dom.key() != other.dom.key():
            raise ValueError("operands live in different polynomial rings")

    # -- calculus and substitution ------------------------------------------
    def derivative(self, var):
        dom = self.dom
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            m = dom.mul(c, dom.from_int(k))
            if m == dom.zero:
                continue
            e2 = list(e)
            e2[var] = k - 1
            e2 = tuple(e2)
            out[e2] = dom.add(out.get(e2, dom.zero), m)
        return MPoly(dom, self.n, {e: c for e, c in out.items() if c != dom.zero})

    def evaluate(self, values):
        """Full evaluation at a point (list of domain elements)."""
        dom = self.dom
        acc = dom.zero
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t = dom.mul(t, dom.pow(v, k))
            acc = dom.add(acc, t)
        return acc

    def subst_const(self, var, value):
        """Substitute a domain element for one variable."""
        dom = self.dom
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                c = dom.mul(c, dom.pow(value, k))
                if c == dom.zero:
                    continue
            e2 = list(e)
            e2[var] = 0
            e2 = tuple(e2)
            s = dom.add(out.get(e2, dom.zero), c)
            if s == dom.zero:
                out.pop(e2, None)
            else:
                out[e2] = s
        return MPoly(dom, self.n, out)

    def subst_poly(self, var, poly):
        """Substitute a polynomial (same ring) for one variable."""
        self._check(poly)
        dom = self.dom
        # group by the exponent of var, Horner over the grouped pieces
        groups = {}
        for e, c in self.terms.items():
            k = e[var]
            e2 = list(e)
            e2[var] = 0
            groups.setdefault(k, {})[tuple(e2)] = c
        kmax = max(groups) if groups else 0
        acc = MPoly(dom, self.n)
        for k in range(kmax, -1, -1):
            acc = acc * poly
            if k in groups:
                acc = acc + MPoly(dom, self.n, groups[k])
        return acc

    def shift_var(self, var, c):
        """x_var -> x_var + c for a domain element c."""
        if c == self.dom.zero:
            return self
        x = MPoly.variable(self.dom, self.n, var)
        return self.subst_poly(var, x + MPoly.const(self.dom, self.n, c))

    def shear(self, var, other_var, c):
        """x_var -> x_var + c * x_other."""
        if c == self.dom.zero:
            return self
        x = MPoly.variable(self.dom, self.n, var)
        y = MPoly.variable(self.dom, self.n, other_var)
        return self.subst_poly(var, x + y.scale(c))

    def swap_vars(self, i, j):
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i], e2[j] = e2[j], e2[i]
            out[tuple(e2)] = c
        return MPoly(self.dom, self.n, out)

    # -- coefficient maps ----------------------------------------------------
    def map_coeffs(self, fn, dom2):
        out = {}
        z = dom2.zero
        for e, c in self.terms.items():
            v = fn(c)
            if v != z:
                out[e] = v
        return MPoly(dom2, self.n, out)

    def reduce_mod(self, field):
        """Coefficient-wise reduction of an integer polynomial into F_p^k."""
        return self.map_coeffs(field.from_int, field)

    def lift_vars(self, n2, positions=None):
        """Re-embed into a ring with n2 >= n variables."""
        if positions is None:
            positions = list(range(self.n))
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * n2
            for i, k in enumerate(e):
                e2[positions[i]] = k
            out[tuple(e2)] = c
        return MPoly(self.dom, n2, out)

    def drop_var(self, var):
        """Remove a variable that never occurs."""
        if self.deg_in(var) > 0:
            raise ValueError("variable occurs in the polynomial")
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(x for i, x in enumerate(e) if i != var)
            out[e2] = c
        return MPoly(self.dom, self.n - 1, out)

    # -- division ------------------------------------------------------------
    def exact_div(self, g):
        """Exact quotient self / g, or None when g does not divide self."""
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        dom = self.dom
        if self.is_zero():
            return self
        ge, gc = g.leading()
        rem = dict(self.terms)
        out = {}
        while rem:
            e = max(rem, key=glex_key)
            diff = tuple(a - b for a, b in zip(e, ge))
            if any(d < 0 for d in diff):
                return None
            c = dom.exact_div(rem[e], gc)
            if c is None:
                return None
            out[diff] = c
            for e2, c2 in g.terms.items():
                t = tuple(a + b for a, b in zip(diff, e2))
                s = dom.sub(rem.get(t, dom.zero), dom.mul(c, c2))
                if s == dom.zero:
                    rem.pop(t, None)
                else:
                    rem[t] = s
        return MPoly(dom, self.n, out)

    # -- printing ------------------------------------------------------------
    def format(self, var_names=None) -> str:
        return format_poly(self, var_names)

    def __repr__(self):
        return f"MPoly({self.format()!r})"


def default_var_names(n):
    if n == 1:
        return ("x",)
    if n == 2:
        return ("x", "y")
    return tuple(f"x{i + 1}" for i in range(n))


def _format_coeff(dom, c):
    s = dom.format_element(c) if hasattr(dom, "format_element") else str(c)
    if " " in s or "+" in s[1:]:
        s = f"({s})"  # multi-term field elements need grouping
    return s


def format_poly(f: MPoly, var_names=None) -> str:
    """Canonical text: graded-lex descending terms, explicit '*' products."""
    if f.is_zero():
        return "0"
    names = var_names or default_var_names(f.n)
    dom = f.dom
    parts = []
    for e in sorted(f.terms, key=glex_key, reverse=True):
        c = f.terms[e]
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        neg = False
        if not getattr(dom, "is_finite", False):
            if (isinstance(c, int) or hasattr(c, "denominator")) and c < 0:
                neg = True
                c = -c
        cs = _format_coeff(dom, c)
        if factors:
            body = "*".join(factors) if cs in ("1",) else "*".join([cs] + factors)
        else:
            body = cs
        parts.append((neg, body))
    first_neg, first_body = parts[0]
    text = ("-" if first_neg else "") + first_body
    for neg, body in parts[1:]:
        text += (" - " if neg else " + ") + body
    return text


def monomials_upto(n, d):
    """Exponent tuples of total degree <= d, graded-lex descending."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for k in range(remaining, -1, -1):
            rec(prefix + (k,), remaining - k, slots - 1)

    for total in range(d, -1, -1):
        rec((), total, n)
    # rec enumerates each total-degree block with x-first descending, which
    # matches graded-lex descending within the block
    return out


def count_monomials(n, d):
    """Number of exponent tuples with total degree <= d."""
    return comb(n + d, n)
