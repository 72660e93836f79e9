"""Exact coefficient domains: finite fields F_{p^k}, rationals, integers.

Field elements are plain data so they stay hashable and cheap in hot loops:
prime-field elements are ints in range(p); extension elements are length-k
tuples (a0, ..., a_{k-1}) meaning a0 + a1*t + ... relative to the field's
modulus. All arithmetic goes through the owning field object.

Extension moduli are chosen deterministically: the first monic irreducible
of degree k when candidates t^k + a_{k-1} t^{k-1} + ... + a_0 are ordered by
the tuple (a_{k-1}, ..., a_0). Fields of size up to ZECH_LIMIT build
discrete-log tables on demand, which makes multiplicative work O(1).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import unipoly
from .arith import factorint, is_prime

ZECH_LIMIT = 1 << 16

_FIELD_CACHE: dict[tuple[int, int], "FiniteField"] = {}


class GuardExceeded(RuntimeError):
    """A brute-force state space exceeded its configured guard."""


class FiniteField:
    """Common interface of prime and extension fields (see subclasses)."""

    is_finite = True
    is_field = True

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def key(self):
        return ("gf", self.p, self.k)

    def elements(self):
        return (self.element(i) for i in range(self.q))

    def exact_div(self, a, b):
        return self.div(a, b)

    def nonzero_elements(self):
        return (self.element(i) for i in range(1, self.q))

    def pth_root(self, a):
        """The unique r with r^p = a; Frobenius is bijective on F_q."""
        return self.pow(a, self.q // self.p)

    def frobenius(self, a):
        return self.pow(a, self.p)


class PrimeField(FiniteField):
    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.k = 1
        self.q = p
        self.char = p
        self.zero = 0
        self.one = 1
        self.modulus = None

    def from_int(self, n):
        return n % self.p

    def element(self, i):
        if not 0 <= i < self.p:
            raise ValueError("element index out of range")
        return i

    def index(self, a):
        return a

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def format_element(self, a):
        return str(a)


class ExtensionField(FiniteField):
    def __init__(self, p, k, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 2:
            raise ValueError("extension degree must be at least 2")
        self.p = p
        self.k = k
        self.q = p ** k
        self.char = p
        self.base = prime_field(p)
        if modulus is None:
            modulus = _default_modulus(self.base, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not unipoly.is_irreducible_finite(self.base, list(modulus)):
                raise ValueError("modulus is reducible")
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self._exp = None  # Zech tables, built lazily
        self._log = None

    # -- representation helpers -------------------------------------------
    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def element(self, i):
        if not 0 <= i < self.q:
            raise ValueError("element index out of range")
        digits = []
        for _ in range(self.k):
            digits.append(i % self.p)
            i //= self.p
        return tuple(digits)

    def index(self, a):
        out = 0
        for c in reversed(a):
            out = out * self.p + c
        return out

    def generator(self):
        self._ensure_tables()
        if self._exp is not None:
            return self._exp[1]
        return self._find_generator()

    # -- arithmetic --------------------------------------------------------
    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul_basic(self, a, b):
        base = self.base
        prod = unipoly.mul(base, list(a), list(b))
        rem = unipoly.mod(base, prod, list(self.modulus))
        rem += [0] * (self.k - len(rem))
        return tuple(rem)

    def mul(self, a, b):
        log = self._log
        if log is None:
            return self._mul_basic(a, b)
        la = log.get(a)
        if la is None:
            return self.zero
        lb = log.get(b)
        if lb is None:
            return self.zero
        return self._exp[(la + lb) % (self.q - 1)]

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        log = self._log
        if log is not None:
            return self._exp[-log[a] % (self.q - 1)]
        g, s, _ = unipoly.xgcd(
            self.base, unipoly.normalize(self.base, list(a)), list(self.modulus)
        )
        if unipoly.degree(g) != 0:
            raise ZeroDivisionError("element not invertible")
        s = unipoly.scale(self.base, s, self.base.inv(g[0]))
        s += [0] * (self.k - len(s))
        return tuple(s[: self.k])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        log = self._log
        if log is not None:
            if a == self.zero:
                if n == 0:
                    return self.one
                return self.zero
            return self._exp[(log[a] * n) % (self.q - 1)]
        out = self.one
        base = a
        while n:
            if n & 1:
                out = self._mul_basic(out, base)
            n >>= 1
            if n:
                base = self._mul_basic(base, base)
        return out

    def format_element(self, a):
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = a[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}t" if i == 1 else f"{head}t^{i}")
        return " + ".join(terms) if terms else "0"

    # -- Zech tables -------------------------------------------------------
    def _find_generator(self):
        order_factors = list(factorint(self.q - 1))
        for i in range(2, self.q):
            g = self.element(i)
            if g == self.zero:
                continue
            if all(
                self.pow(g, (self.q - 1) // ell) != self.one
                for ell in order_factors
            ):
                return g
        raise RuntimeError("no generator found")  # pragma: no cover

    def _ensure_tables(self):
        if self._exp is not None or self.q > ZECH_LIMIT:
            return
        g = self._find_generator()
        exp = [self.one] * (self.q - 1)
        cur = self.one
        for i in range(1, self.q - 1):
            cur = self._mul_basic(cur, g)
            exp[i] = cur
        self._exp = exp
        self._log = {a: i for i, a in enumerate(exp)}


def prime_field(p) -> PrimeField:
    f = _FIELD_CACHE.get((p, 1))
    if f is None:
        f = PrimeField(p)
        _FIELD_CACHE[(p, 1)] = f
    return f


def finite_field(p, k=1) -> FiniteField:
    """The field with p^k elements; instances are shared and cached.

    Rejects non-prime p. Extension moduli are deterministic, so two calls
    with the same (p, k) agree element-for-element.
    """
    if k < 1:
        raise ValueError("extension degree must be at least 1")
    f = _FIELD_CACHE.get((p, k))
    if f is None:
        if k == 1:
            f = PrimeField(p)
        else:
            f = ExtensionField(p, k)
            f._ensure_tables()
        _FIELD_CACHE[(p, k)] = f
    return f


def field_from_order(q) -> FiniteField:
    """The field of order q for a prime power q."""
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = fac.items()
    return finite_field(p, k)


def _default_modulus(base, k):
    for tail in itertools.product(range(base.p), repeat=k):
        # tail is (a_{k-1}, ..., a_0); candidates ascend in that order
        cand = list(reversed(tail)) + [1]
        if unipoly.is_irreducible_finite(base, cand):
            return tuple(cand)
    raise RuntimeError("no irreducible modulus found")  # pragma: no cover


# --------------------------------------------------------------------------
# embeddings between finite fields of the same characteristic
# --------------------------------------------------------------------------

_EMBED_CACHE: dict[tuple, tuple] = {}


def _subfield_root(dst, coeffs):
    """Deterministic smallest root in dst of a polynomial with prime-subfield
    coefficients that splits completely in dst."""
    f = [dst.from_int(c) for c in coeffs]
    f = unipoly.normalize(dst, f)
    roots = []
    stack = [unipoly.monic(dst, f)]
    while stack:
        g = stack.pop()
        d = unipoly.degree(g)
        if d == 0:
            continue
        if d == 1:
            roots.append(dst.neg(g[0]))
            continue
        stack.extend(_split_completely_split(dst, g))
    return min(roots, key=dst.index)


def _split_completely_split(dst, g):
    """Split a monic squarefree polynomial that splits in dst into two
    nontrivial monic factors (Cantor-Zassenhaus with a deterministic sweep)."""
    import random

    q = dst.q
    dg = unipoly.degree(g)
    for trial in range(1, 200):
        rng = random.Random(0xD1CE + trial)
        u = [dst.element(rng.randrange(q)) for _ in range(max(dg, 2))]
        u = unipoly.normalize(dst, u)
        if unipoly.degree(u) < 1:
            continue
        if dst.p == 2:
            # trace map over F_2
            acc = unipoly.mod(dst, u, g)
            t = acc
            e2 = q.bit_length() - 1
            for _ in range(e2 - 1):
                t = unipoly.pow_mod(dst, t, 2, g)
                acc = unipoly.add(dst, acc, t)
            h = acc
        else:
            h = unipoly.pow_mod(dst, u, (q - 1) // 2, g)
            h = unipoly.sub(dst, h, [dst.one])
        if not h:
            continue
        d = unipoly.gcd(dst, h, g)
        dd = unipoly.degree(d)
        if 0 < dd < unipoly.degree(g):
            return [d, unipoly.divmod_poly(dst, g, d)[0]]
    raise RuntimeError("splitting failed")  # pragma: no cover


def embedding(src: FiniteField, dst: FiniteField):
    """A ring embedding src -> dst as a callable; src.k must divide dst.k."""
    if src.p != dst.p or dst.k % src.k != 0:
        raise ValueError("incompatible fields")
    key = ("emb", src.p, src.k, dst.k)
    cached = _EMBED_CACHE.get(key)
    if cached is not None:
        return cached[0]
    if src.k == 1:
        fn = dst.from_int
        _EMBED_CACHE[key] = (fn, None)
        return fn
    if src.k == dst.k:
        same = lambda a: a  # noqa: E731 - identity on the shared representation
        _EMBED_CACHE[key] = (same, [src.element(0)])
        return same
    root = _subfield_root(dst, src.modulus)
    powers = [dst.one]
    for _ in range(src.k - 1):
        powers.append(dst.mul(powers[-1], root))

    def fn(a, _powers=powers, _dst=dst):
        acc = _dst.zero
        for c, w in zip(a, _powers):
            if c:
                acc = _dst.add(acc, _dst.mul(_dst.from_int(c), w))
        return acc

    _EMBED_CACHE[key] = (fn, powers)
    return fn


def projection(src: FiniteField, dst: FiniteField):
    """Partial inverse of embedding(src, dst): dst element -> src element or
    None when the element is outside the embedded copy of src."""
    if src.p != dst.p or dst.k % src.k != 0:
        raise ValueError("incompatible fields")
    key = ("proj", src.p, src.k, dst.k)
    cached = _EMBED_CACHE.get(key)
    if cached is not None:
        return cached
    embedding(src, dst)  # ensure the power basis exists
    if src.k == 1:
        def fn(a, _dst=dst, _src=src):
            if _dst.k == 1:
                return a
            if any(a[1:]):
                return None
            return a[0]
        _EMBED_CACHE[key] = fn
        return fn
    if src.k == dst.k:
        fn = lambda a: a  # noqa: E731
        _EMBED_CACHE[key] = fn
        return fn
    powers = _EMBED_CACHE[("emb", src.p, src.k, dst.k)][1]
    p = src.p
    K, k = dst.k, src.k
    cols = [list(w) for w in powers]

    def fn(a, _cols=cols, _p=p, _K=K, _k=k, _src=src):
        mat = [[_cols[j][i] for j in range(_k)] + [a[i]] for i in range(_K)]
        piv = []
        r = 0
        for c in range(_k):
            sel = None
            for i in range(r, _K):
                if mat[i][c] % _p:
                    sel = i
                    break
            if sel is None:
                return None  # embedding matrix has full rank; unreachable
            mat[r], mat[sel] = mat[sel], mat[r]
            inv = pow(mat[r][c], -1, _p)
            mat[r] = [(v * inv) % _p for v in mat[r]]
            for i in range(_K):
                if i != r and mat[i][c] % _p:
                    f = mat[i][c]
                    mat[i] = [(x - f * y) % _p for x, y in zip(mat[i], mat[r])]
            piv.append(c)
            r += 1
        for i in range(r, _K):
            if mat[i][_k] % _p:
                return None
        v = [0] * _k
        for i, c in enumerate(piv):
            v[c] = mat[i][_k] % _p
        return tuple(v)

    _EMBED_CACHE[key] = fn
    return fn


# --------------------------------------------------------------------------
# rationals and integers as coefficient domains
# --------------------------------------------------------------------------

class RationalDomain:
    """Exact rationals (fractions.Fraction elements)."""

    char = 0
    is_finite = False
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def key(self):
        return ("qq",)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def exact_div(self, a, b):
        return self.div(a, b)

    def pow(self, a, n):
        return a ** n

    def format_element(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"


class IntegerDomain:
    """The ring of integers (plain int elements); division is exact-or-None."""

    char = 0
    is_finite = False
    is_field = False
    zero = 0
    one = 1

    def key(self):
        return ("zz",)

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            return None
        return q

    def pow(self, a, n):
        return a ** n

    def format_element(self, a):
        return str(a)

    def __repr__(self):
        return "ZZ"


QQ = RationalDomain()
ZZ = IntegerDomain()
