"""Exact counting of (in)decomposable polynomials of degree d over F_q.

Three routes that must agree:

* closed forms for the polynomial count N_d, for decomposable counts when d
  has at most two prime factors, and bound data otherwise;
* the induction formula I_d = N_d - sum over proper divisors d' of
  q^(d/d' - 1) * I_{d'}, seeded with I_1 = q(q^n - 1) (n >= 2 only: the
  one-variable convention does not partition the decomposables);
* exhaustive enumeration: scan every polynomial of exact degree d and
  classify it with the decomposition engine.

Counts are exact big integers; every ratio or bound check is done in
Fraction arithmetic.  Enumeration supports disjoint index-range partitions
whose partial reports merge by addition, which is also the multiprocess
hot path of the command line front end.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .arith import big_omega, divisors, factorint
from .decompose import DEFAULT_GUARD, decompose_multi, decompose_uni_dense
from .fields import GuardExceeded, field_from_order
from .mpoly import MPoly, monomials_upto


def guard_from_env(default=DEFAULT_GUARD):
    v = os.environ.get("SPEC_GUARD")
    return int(v) if v else default


@dataclass
class CensusReport:
    q: int
    n: int
    d: int
    total: int
    indecomposable: int
    decomposable: int
    method: str  # "closed" | "recursion" | "enumeration"

    def to_json(self) -> str:
        return json.dumps(
            {
                "q": self.q,
                "n": self.n,
                "d": self.d,
                "N": str(self.total),
                "I": str(self.indecomposable),
                "D": str(self.decomposable),
                "method": self.method,
            },
            sort_keys=True,
        )


def count_total(q, n, d) -> int:
    """Number of polynomials of exact degree d in n variables over F_q."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return (q ** comb(n + d - 1, n - 1) - 1) * q ** comb(n + d - 1, n)


def count_recursive(q, n, d) -> CensusReport:
    """Indecomposable/decomposable counts by the divisor recursion (n >= 2)."""
    if n < 2:
        raise ValueError("the divisor recursion needs n >= 2; one-variable "
                         "splits overlap and do not partition")
    memo: dict[int, int] = {}

    def indec(m):
        if m == 1:
            return q * (q ** n - 1)
        if m not in memo:
            memo[m] = count_total(q, n, m) - sum(
                q ** (m // dd - 1) * indec(dd) for dd in divisors(m) if dd < m
            )
        return memo[m]

    total = count_total(q, n, d)
    ind = indec(d)
    return CensusReport(q, n, d, total, ind, total - ind, "recursion")


def count_closed_small(q, n, d):
    """Closed-form decomposable count for d with at most two prime factors
    (counted with multiplicity); None otherwise."""
    if n < 2:
        raise ValueError("closed forms here are for n >= 2")
    fac = factorint(d) if d > 1 else {}
    omega = sum(fac.values())
    if d == 1 or omega > 2:
        return None
    unit = q ** n - 1
    if omega == 1:
        return q ** d * unit
    (primes_list) = sorted(fac)
    if len(primes_list) == 1:
        p = primes_list[0]  # d = p^2
        return q ** (p - 1) * count_total(q, n, p) + (q ** d - q ** (2 * p - 1)) * unit
    p, pp = primes_list  # d = p * p', p < p'
    return (
        q ** (p - 1) * count_total(q, n, pp)
        + q ** (pp - 1) * count_total(q, n, p)
        + (q ** d - 2 * q ** (p + pp - 1)) * unit
    )


def b_of(d) -> int:
    return (d + 1) * (d + 2) // 2


@dataclass
class BoundsReportN2:
    q: int
    d: int
    alpha: Fraction
    beta: Fraction
    ratio: Fraction
    holds: bool


def bounds_check_n2(q, d) -> BoundsReportN2:
    """|D_d/N_d - alpha_d| <= alpha_d * beta_d for n = 2 and d with at least
    three prime factors, checked in exact rational arithmetic."""
    if big_omega(d) < 3:
        raise ValueError("bound statement needs at least three prime factors")
    ell = min(factorint(d))
    alpha = Fraction(q ** (ell - 1 + b_of(d // ell)), q ** b_of(d))
    beta = Fraction(d, q ** (d // ell))
    rep = count_recursive(q, 2, d)
    ratio = Fraction(rep.decomposable, rep.total)
    holds = abs(ratio - alpha) <= alpha * beta
    return BoundsReportN2(q, d, alpha, beta, ratio, holds)


def bd_lemma_check(d_max) -> bool:
    """Integer inequalities behind the n = 2 bound, for every qualifying
    d <= d_max.  With ell, ell' the two smallest divisors > 1 and ell'' the
    smallest divisor > 1 of d/ell:

      (1) b(d/ell') + ell' >= b(d/lam) + lam  for divisors ell' <= lam < d
      (2) b(d/ell) + ell - d/ell >= b(d/ell') + ell'
      (3) b(d/ell) + 1 - d/ell >= b(d/(ell*ell'')) + ell''

    Inequality (1) is false at lam = d whenever ell' is composite (d = 8 is
    the smallest case), so lam ranges over the proper divisors only.
    """
    if d_max < 8:
        raise ValueError("need d_max >= 8")
    for d in range(8, d_max + 1):
        if big_omega(d) < 3:
            continue
        ds = divisors(d)
        ell, ellp = ds[1], ds[2]
        ell2 = divisors(d // ell)[1]
        for lam in ds:
            if ellp <= lam < d:
                if b_of(d // ellp) + ellp < b_of(d // lam) + lam:
                    return False
        if b_of(d // ell) + ell - d // ell < b_of(d // ellp) + ellp:
            return False
        if b_of(d // ell) + 1 - d // ell < b_of(d // (ell * ell2)) + ell2:
            return False
    return True


@dataclass
class UniCount:
    """One-variable counts under gcd(q, d) = 1: exact where a closed form
    exists, sandwich bounds otherwise."""

    q: int
    d: int
    total: int
    exact: int | None
    lower: int
    upper: int
    alpha: Fraction | None
    method: str


def count_uni(q, d) -> UniCount:
    if gcd(q, d) != 1:
        raise ValueError("one-variable counting here assumes gcd(q, d) = 1")
    if d < 1:
        raise ValueError("need d >= 1")
    total = (q - 1) * q ** d
    fac = factorint(d) if d > 1 else {}
    omega = sum(fac.values())
    if omega <= 1:
        return UniCount(q, d, total, 0, 0, 0, None, "closed")
    if omega == 2:
        ps = sorted(fac)
        if len(ps) == 1:
            p = ps[0]  # d = p^2: the two splits coincide and pairs are unique
            exact = (q - 1) * q ** (2 * p - 1)
            return UniCount(q, d, total, exact, exact, exact, None, "closed")
        p, pp = ps  # d = p p'
        upper = 2 * (q - 1) * q ** (p + pp - 1)
        lower = max(upper - q ** 5, 0)
        return UniCount(q, d, total, None, lower, upper, None, "bounds")
    ds = divisors(d)
    ell, ellp = ds[1], ds[2]
    alpha = Fraction(2, q ** (d - ell - d // ell + 1))
    # bounds proved by the split-pair estimates: upper from summing all
    # splits, lower from the two extreme splits minus their overlap
    upper_f = Fraction(q - 1, q) * q ** (ell + d // ell) * (
        2 + Fraction(d - 2, q ** (ell + d // ell - ellp - d // ellp))
    )
    lower_f = 2 * Fraction(q - 1, q) * q ** (ell + d // ell) * (
        1 - Fraction(2 * d, ell) / q ** (d // ell - d // ell ** 2 - ell + 1)
    )
    lower = max(_ceil_frac(lower_f), 0)
    upper = _floor_frac(upper_f)
    return UniCount(q, d, total, None, lower, upper, alpha, "bounds")


def _ceil_frac(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


def _floor_frac(f: Fraction) -> int:
    return f.numerator // f.denominator


def trend_table(q, n, d_max):
    """[(d, 1 - I_d/N_d)] by the recursion, exact Fractions."""
    out = []
    for d in range(1, d_max + 1):
        rep = count_recursive(q, n, d)
        out.append((d, Fraction(rep.decomposable, rep.total)))
    return out


# --------------------------------------------------------------------------
# exhaustive enumeration
# --------------------------------------------------------------------------

def scan_space(q, n, d) -> int:
    """Number of coefficient tuples visited by a full scan (degree <= d)."""
    return q ** comb(n + d, n)


def enumerate_census(q, n, d, guard=None, part=None) -> CensusReport:
    """Scan every polynomial of exact degree d and classify it.

    part = (lo, hi) restricts the scan to a slice of the coefficient-tuple
    index space [0, q^M); partial reports over a disjoint cover of that
    space merge by addition (merge_reports).
    """
    if guard is None:
        guard = guard_from_env()
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    space = scan_space(q, n, d)
    if space > guard:
        raise GuardExceeded(f"scan space {space} exceeds guard {guard}")
    field = field_from_order(q)
    lo, hi = (0, space) if part is None else part
    if not (0 <= lo <= hi <= space):
        raise ValueError("bad partition range")
    if n == 1:
        dec, ind = _scan_uni(field, d, lo, hi, guard)
    else:
        dec, ind = _scan_multi(field, n, d, lo, hi, guard)
    return CensusReport(q, n, d, dec + ind, ind, dec, "enumeration")


def _scan_uni(field, d, lo, hi, guard):
    q = field.q
    splits = [r for r in divisors(d) if r >= 2 and d // r >= 2]
    elems = [field.element(i) for i in range(q)]
    dec = ind = 0
    it = itertools.product(range(q), repeat=d + 1)
    for digits in itertools.islice(it, lo, hi):
        if digits[0] == 0:  # digits are (lead, ..., const)
            continue
        f = [elems[c] for c in reversed(digits)]
        for r in splits:
            if decompose_uni_dense(field, f, r, guard) is not None:
                dec += 1
                break
        else:
            ind += 1
    return dec, ind


def _scan_multi(field, n, d, lo, hi, guard):
    q = field.q
    monos = monomials_upto(n, d)
    ntop = sum(1 for e in monos if sum(e) == d)
    splits = [e for e in divisors(d) if e >= 2]
    elems = [field.element(i) for i in range(q)]
    dec = ind = 0
    it = itertools.product(range(q), repeat=len(monos))
    for digits in itertools.islice(it, lo, hi):
        if not any(digits[:ntop]):
            continue
        P = MPoly(field, n, {e: elems[c] for e, c in zip(monos, digits) if c})
        for e in splits:
            if decompose_multi(P, e, guard) is not None:
                dec += 1
                break
        else:
            ind += 1
    return dec, ind


def merge_reports(reports) -> CensusReport:
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    first = reports[0]
    if any((r.q, r.n, r.d) != (first.q, first.n, first.d) for r in reports):
        raise ValueError("reports describe different censuses")
    return CensusReport(
        first.q,
        first.n,
        first.d,
        sum(r.total for r in reports),
        sum(r.indecomposable for r in reports),
        sum(r.decomposable for r in reports),
        "enumeration",
    )


def partition_ranges(q, n, d, jobs):
    """Split the scan index space into `jobs` contiguous ranges."""
    space = scan_space(q, n, d)
    jobs = max(1, min(jobs, space))
    step = -(-space // jobs)
    return [(i, min(i + step, space)) for i in range(0, space, step)]


def _census_worker(args):
    q, n, d, lo, hi, guard = args
    rep = enumerate_census(q, n, d, guard=guard, part=(lo, hi))
    return rep.total, rep.indecomposable, rep.decomposable


def enumerate_census_parallel(q, n, d, jobs, guard=None) -> CensusReport:
    """Partitioned scan over a process pool; output independent of `jobs`."""
    if guard is None:
        guard = guard_from_env()
    ranges = partition_ranges(q, n, d, jobs)
    if jobs <= 1 or len(ranges) <= 1:
        return enumerate_census(q, n, d, guard=guard)
    space = scan_space(q, n, d)
    if space > guard:
        raise GuardExceeded(f"scan space {space} exceeds guard {guard}")
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_census_worker, [(q, n, d, lo, hi, guard) for lo, hi in ranges]))
    return CensusReport(
        q,
        n,
        d,
        sum(t for t, _, _ in parts),
        sum(i for _, i, _ in parts),
        sum(dd for _, _, dd in parts),
        "enumeration",
    )


def good_uni_splits(q, d):
    """Convenience for reporting: the (outer, inner) degree splits of d."""
    return [(r, d // r) for r in divisors(d) if r >= 2 and d // r >= 2]
