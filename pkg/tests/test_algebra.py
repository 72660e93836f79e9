"""Ring-level properties of the polynomial layer: dense univariate helpers,
the sparse multivariate type, gcds, resultants and discriminants."""

import random
from fractions import Fraction

import pytest

from indecpoly import unipoly
from indecpoly.fields import QQ, ZZ, finite_field
from indecpoly.mpoly import MPoly, monomials_upto
from indecpoly.resultants import discriminant, resultant


def rand_dense(rng, field, d):
    return unipoly.normalize(field, [field.element(rng.randrange(field.q)) for _ in range(d + 1)])


def rand_mpoly(rng, field, n, d, density=0.7):
    terms = {}
    for e in monomials_upto(n, d):
        if rng.random() < density:
            c = rng.randrange(field.q)
            if c:
                terms[e] = field.element(c)
    return MPoly(field, n, terms)


def test_divmod_reconstruction_randomized():
    rng = random.Random(1)
    for q in (2, 3, 5, 9):
        F = finite_field(*((q, 1) if q != 9 else (3, 2)))
        for _ in range(40):
            a = rand_dense(rng, F, rng.randrange(1, 8))
            b = rand_dense(rng, F, rng.randrange(1, 5))
            if not b:
                continue
            qt, r = unipoly.divmod_poly(F, a, b)
            assert unipoly.add(F, unipoly.mul(F, qt, b), r) == a
            assert unipoly.degree(r) < unipoly.degree(b)


def test_distributivity_mpoly_randomized():
    rng = random.Random(2)
    F = finite_field(3)
    for _ in range(30):
        f = rand_mpoly(rng, F, 2, 3)
        g = rand_mpoly(rng, F, 2, 3)
        h = rand_mpoly(rng, F, 2, 2)
        assert (f + g) * h == f * h + g * h


def test_gcd_monic_and_divides():
    rng = random.Random(3)
    F = finite_field(5)
    for _ in range(40):
        a = rand_dense(rng, F, rng.randrange(1, 7))
        b = rand_dense(rng, F, rng.randrange(1, 7))
        if not a or not b:
            continue
        g = unipoly.gcd(F, a, b)
        assert g[-1] == F.one
        assert unipoly.divmod_poly(F, a, g)[1] == []
        assert unipoly.divmod_poly(F, b, g)[1] == []


def test_gcd_scaling_by_monic_common_factor():
    rng = random.Random(4)
    F = finite_field(5)
    for _ in range(25):
        a = rand_dense(rng, F, rng.randrange(1, 5))
        b = rand_dense(rng, F, rng.randrange(1, 5))
        h = unipoly.monic(F, rand_dense(rng, F, rng.randrange(1, 4)))
        if not a or not b or unipoly.degree(h) < 1:
            continue
        g1 = unipoly.gcd(F, unipoly.mul(F, a, h), unipoly.mul(F, b, h))
        g2 = unipoly.mul(F, unipoly.gcd(F, a, b), h)
        assert g1 == unipoly.monic(F, g2)


def test_gcd_zero_pair_rejected():
    with pytest.raises(ValueError):
        unipoly.gcd(finite_field(3), [], [])


def test_gcd_generic_vs_special_pair():
    # gcd(l, l+1) = 1 over the rationals, but gcd(l, l) = l
    one = unipoly.gcd(QQ, [Fraction(0), Fraction(1)], [Fraction(1), Fraction(1)])
    assert one == [Fraction(1)]
    same = unipoly.gcd(QQ, [Fraction(0), Fraction(1)], [Fraction(0), Fraction(1)])
    assert same == [Fraction(0), Fraction(1)]


def test_poly_gcd_spec_examples():
    F5 = finite_field(5)
    # gcd(x^2 - 1, x - 1) = x - 1
    g = unipoly.gcd(F5, [4, 0, 1], [4, 1])
    assert g == [4, 1]


def test_resultant_vanishes_iff_common_factor():
    rng = random.Random(5)
    F = finite_field(7)
    for _ in range(40):
        a = rand_dense(rng, F, rng.randrange(1, 5))
        b = rand_dense(rng, F, rng.randrange(1, 5))
        if unipoly.degree(a) < 1 or unipoly.degree(b) < 1:
            continue
        res = resultant(MPoly.from_dense(F, a), MPoly.from_dense(F, b), 0)
        has_common = unipoly.degree(unipoly.gcd(F, a, b)) >= 1
        assert res.is_zero() == has_common


def test_discriminant_golden_values():
    # disc_y(y^2 + c) = -4c with c the first variable
    f = MPoly(ZZ, 2, {(0, 2): 1, (1, 0): 1})
    assert discriminant(f, 1) == MPoly(ZZ, 2, {(1, 0): -4})
    # disc_x(x^3 - l) = -27 l^2
    g = MPoly(ZZ, 2, {(3, 0): 1, (0, 1): -1})
    assert discriminant(g, 0) == MPoly(ZZ, 2, {(0, 2): -27})
    # degree 1: empty product convention
    h = MPoly(ZZ, 2, {(1, 0): 1, (0, 1): -1})
    assert discriminant(h, 0) == MPoly.const(ZZ, 2, 1)
    with pytest.raises(ValueError):
        discriminant(MPoly.const(ZZ, 2, 5), 0)


def test_reduction_mod_p_is_ring_morphism():
    rng = random.Random(6)
    F5 = finite_field(5)
    for _ in range(25):
        f = MPoly(ZZ, 2, {e: rng.randrange(-20, 20) for e in monomials_upto(2, 3)})
        g = MPoly(ZZ, 2, {e: rng.randrange(-20, 20) for e in monomials_upto(2, 3)})
        assert (f * g).reduce_mod(F5) == f.reduce_mod(F5) * g.reduce_mod(F5)
        assert (f + g).reduce_mod(F5) == f.reduce_mod(F5) + g.reduce_mod(F5)


def test_leading_form():
    F = MPoly(ZZ, 2, {(0, 2): 1, (3, 0): 1})
    assert F.leading_form() == MPoly(ZZ, 2, {(3, 0): 1})
    hom = MPoly(ZZ, 2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert hom.leading_form() == hom
    const = MPoly.const(ZZ, 2, 5)
    assert const.leading_form() == const
    with pytest.raises(ValueError):
        MPoly(ZZ, 2).leading_form()


def test_exact_division_and_failure():
    F = finite_field(3)
    a = rand_mpoly(random.Random(7), F, 2, 2)
    b = rand_mpoly(random.Random(8), F, 2, 2)
    if a.is_zero() or b.is_zero():
        pytest.skip("degenerate sample")
    prod = a * b
    if not a.is_zero():
        assert prod.exact_div(a) == b
    c = prod + MPoly.const(F, 2, F.one)
    if not a.is_constant():
        assert c.exact_div(a) is None


def test_squarefree_decomposition_univariate():
    from indecpoly.factoring import uni_sqfree

    rng = random.Random(9)
    for q, p, k in [(2, 2, 1), (3, 3, 1), (4, 2, 2), (9, 3, 2)]:
        F = finite_field(p, k)
        for _ in range(15):
            parts = []
            f = [F.one]
            for mult in (1, 2, 3):
                g = unipoly.monic(F, rand_dense(rng, F, rng.randrange(1, 3)))
                if unipoly.degree(g) < 1:
                    continue
                for _i in range(mult):
                    f = unipoly.mul(F, f, g)
                parts.append((g, mult))
            if unipoly.degree(f) < 1:
                continue
            recon = [F.one]
            for g, m in uni_sqfree(F, f):
                assert unipoly.degree(unipoly.gcd(F, g, unipoly.derivative(F, g))) == 0 or \
                    unipoly.derivative(F, g) == []
                for _i in range(m):
                    recon = unipoly.mul(F, recon, g)
            assert recon == f
