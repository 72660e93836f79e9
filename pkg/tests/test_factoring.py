import random

import pytest

from indecpoly import unipoly
from indecpoly.fields import finite_field
from indecpoly.mpoly import MPoly, monomials_upto
from indecpoly.factoring import (absolutely_irreducible, bivar_factor, bivar_irreducible,
                                 conjugate_split_count, n_bar_factors, uni_factor,
                                 uni_roots)


def P(field, terms):
    return MPoly(field, 2, {e: field.from_int(c) for e, c in terms.items()})


F2, F3, F5 = finite_field(2), finite_field(3), finite_field(5)


# -- univariate ----------------------------------------------------------

def test_uni_factor_examples():
    unit, fs = uni_factor(F5, [4, 0, 1])  # x^2 - 1
    assert unit == 1
    assert fs == [((1, 1), 1), ((4, 1), 1)]
    unit, fs = uni_factor(F3, [1, 0, 1])  # x^2 + 1 irreducible
    assert fs == [((1, 0, 1), 1)]
    unit, fs = uni_factor(F2, [0, 0, 0, 1])  # x^3
    assert fs == [((0, 1), 3)]


def test_uni_factor_product_identity_randomized():
    rng = random.Random(21)
    for q, p, k in [(2, 2, 1), (3, 3, 1), (5, 5, 1), (4, 2, 2), (9, 3, 2)]:
        F = finite_field(p, k)
        for _ in range(25):
            f = unipoly.normalize(
                F, [F.element(rng.randrange(q)) for _ in range(rng.randrange(2, 9))]
            )
            if unipoly.degree(f) < 1:
                continue
            unit, fs = uni_factor(F, f)
            recon = [unit]
            for g, m in fs:
                for _i in range(m):
                    recon = unipoly.mul(F, recon, list(g))
                assert unipoly.is_irreducible_finite(F, list(g))
            assert recon == f


def test_uni_roots():
    assert uni_roots(F5, [4, 0, 1]) == [1, 4]
    assert uni_roots(F3, [1, 0, 1]) == []


def test_squarefree_part():
    from indecpoly.factoring import squarefree_part

    # (x)^3 (x+1) over F_2 -> x(x+1) = x^2 + x
    f = unipoly.mul(F2, [0, 0, 0, 1], [1, 1])
    assert squarefree_part(F2, f) == [0, 1, 1]
    # x^p over F_3
    assert squarefree_part(F3, [0, 0, 0, 1]) == [0, 1]


# -- bivariate reference values -----------------------------------------

def test_bivar_irreducible_examples():
    assert not bivar_irreducible(P(F2, {(1, 1): 1}))           # x*y
    assert bivar_irreducible(P(F3, {(2, 0): 1, (0, 2): 1}))    # x^2+y^2 over F_3
    assert not bivar_irreducible(P(F5, {(2, 0): 1, (0, 2): 1}))
    fac = bivar_factor(P(F5, {(2, 0): 1, (0, 2): 1}))
    keys = sorted(g.format() for g, _ in fac.factors)
    assert keys == ["x + 2*y", "x + 3*y"]
    with pytest.raises(ValueError):
        bivar_irreducible(MPoly.const(F2, 2, F2.one))


def test_absolutely_irreducible_examples():
    assert absolutely_irreducible(P(F2, {(1, 0): 1, (0, 1): 1}))       # degree 1
    assert not absolutely_irreducible(P(F3, {(2, 0): 1, (0, 2): 1}))   # splits over F_9
    assert absolutely_irreducible(P(F3, {(0, 2): 1, (1, 0): 2}))       # y^2 - x
    assert absolutely_irreducible(P(F5, {(0, 2): 1, (3, 0): 1}))       # y^2 + x^3


def test_absolute_irreducibility_matches_extension_sweep():
    # oracle: irreducible over F_{q^e} for every e up to the degree
    rng = random.Random(22)
    from indecpoly.fields import embedding

    for p in (2, 3):
        F = finite_field(p)
        checked = 0
        while checked < 15:
            terms = {e: rng.randrange(p) for e in monomials_upto(2, 3)}
            G = MPoly(F, 2, {e: F.element(c) for e, c in terms.items() if c})
            if G.is_zero() or G.is_constant():
                continue
            checked += 1
            d = G.degree()
            sweep = True
            for e in range(1, d + 1):
                E = finite_field(p, e)
                emb = embedding(F, E)
                GE = G.map_coeffs(emb, E)
                if not bivar_irreducible(GE, method="search"):
                    sweep = False
                    break
            assert absolutely_irreducible(G) == sweep


def test_absolute_implies_plain_irreducibility():
    rng = random.Random(27)
    witnessed = False
    done = 0
    while done < 15:
        terms = {e: rng.randrange(3) for e in monomials_upto(2, 3)}
        G = MPoly(F3, 2, {e: F3.element(c) for e, c in terms.items() if c})
        if G.is_zero() or G.is_constant():
            continue
        done += 1
        if absolutely_irreducible(G):
            assert bivar_irreducible(G)
    # the converse fails: x^2 + y^2 over F_3
    w = P(F3, {(2, 0): 1, (0, 2): 1})
    assert bivar_irreducible(w) and not absolutely_irreducible(w)
    witnessed = True
    assert witnessed


def test_n_bar_examples():
    assert n_bar_factors(P(F2, {(1, 1): 1})) == 2                 # x*y
    assert n_bar_factors(P(F3, {(2, 0): 1, (0, 2): 1})) == 2      # conjugate pair
    s = P(F3, {(1, 0): 1, (0, 1): 1})
    assert n_bar_factors(s * s) == 1                               # one distinct factor


def test_n_bar_affine_invariance():
    rng = random.Random(23)
    F = F3
    done = 0
    while done < 10:
        terms = {e: rng.randrange(3) for e in monomials_upto(2, 3)}
        G = MPoly(F, 2, {e: F.element(c) for e, c in terms.items() if c})
        if G.is_zero() or G.is_constant():
            continue
        a, b, c = rng.randrange(1, 3), rng.randrange(3), rng.randrange(3)
        ap, bp, cp = rng.randrange(3), rng.randrange(1, 3), rng.randrange(3)
        if (a * bp - b * ap) % 3 == 0:
            continue
        x = MPoly.variable(F, 2, 0)
        y = MPoly.variable(F, 2, 1)
        X = x.scale(F.element(a)) + y.scale(F.element(b)) + MPoly.const(F, 2, F.element(c))
        Y = x.scale(F.element(ap)) + y.scale(F.element(bp)) + MPoly.const(F, 2, F.element(cp))
        H = G.subst_poly(0, X).subst_poly(1, Y)
        # substitute into a fresh copy to avoid ordering effects
        G2 = G.subst_poly(0, X)
        G2 = G2.subst_poly(1, Y)
        if H.is_constant():
            continue
        assert n_bar_factors(G) == n_bar_factors(H)
        done += 1


def test_n_bar_at_most_degree():
    rng = random.Random(24)
    done = 0
    while done < 12:
        terms = {e: rng.randrange(2) for e in monomials_upto(2, 4)}
        G = MPoly(F2, 2, {e: F2.element(c) for e, c in terms.items() if c})
        if G.is_zero() or G.is_constant():
            continue
        assert n_bar_factors(G) <= G.degree()
        done += 1


def test_engines_agree_and_products_reconstruct():
    rng = random.Random(25)
    for p, k in [(2, 1), (3, 1), (2, 2)]:
        F = finite_field(p, k)
        done = 0
        while done < 20:
            terms = {e: rng.randrange(F.q) for e in monomials_upto(2, rng.choice([2, 3, 4]))}
            G = MPoly(F, 2, {e: F.element(c) for e, c in terms.items() if c})
            if G.is_zero() or G.is_constant():
                continue
            done += 1
            fs = bivar_factor(G, method="search")
            fl = bivar_factor(G, method="lift")
            assert fs.unit == fl.unit
            assert [(g.key(), m) for g, m in fs.factors] == [
                (g.key(), m) for g, m in fl.factors
            ]
            assert fs.expand() == G
            for g, _m in fs.factors:
                assert bivar_irreducible(g, method="search")


def test_conjugate_split_count_pure_univariate_factor():
    # an irreducible quadratic in x alone splits into two conjugate lines
    G = MPoly(F3, 2, {(2, 0): 1, (0, 0): 1})
    assert conjugate_split_count(G) == 2


def test_lift_engine_no_shear_direction_uses_extension_descent():
    # the top form x*y*(x+y) vanishes in every direction over F_2, so the
    # lifting engine cannot make these monic and must descend from F_4
    x = MPoly.variable(F2, 2, 0)
    y = MPoly.variable(F2, 2, 1)
    one = MPoly.const(F2, 2, F2.one)
    for G in [
        (x * y + one) * (x + y + one),
        (x * y + x + one) * (x + y + one),
        (x * (x + y) + one) * (y + one),
        x * x * y + x * y * y + one,
    ]:
        fs = bivar_factor(G, method="search")
        fl = bivar_factor(G, method="lift")
        assert [(g.key(), m) for g, m in fs.factors] == [(g.key(), m) for g, m in fl.factors]
        assert fl.expand() == G


def test_conjugate_split_count_matches_extension_factor_counts():
    # oracle: the orbit size equals the largest number of distinct factors
    # over the extensions up to the degree
    from indecpoly.fields import embedding

    rng = random.Random(26)
    for p, k in [(2, 1), (3, 1), (2, 2)]:
        F = finite_field(p, k)
        done = 0
        while done < 8:
            terms = {e: rng.randrange(F.q) for e in monomials_upto(2, 3)}
            G = MPoly(F, 2, {e: F.element(c) for e, c in terms.items() if c})
            if G.is_zero() or G.is_constant():
                continue
            fac = bivar_factor(G)
            if fac.total_multiplicity() != 1:
                continue
            done += 1
            best = 1
            for e in range(2, G.degree() + 1):
                E = finite_field(p, k * e)
                emb = embedding(F, E)
                fe = bivar_factor(G.map_coeffs(emb, E))
                best = max(best, len(fe.factors))
            assert conjugate_split_count(G) == best, G.format()


def test_factor_over_larger_field_via_lift():
    # forces the lifting engine: search space over F_27 is above the cutoff
    F27 = finite_field(3, 3)
    from indecpoly.fields import embedding

    emb = embedding(F3, F27)
    G = P(F3, {(2, 0): 1, (0, 2): 1}).map_coeffs(emb, F27)
    fac = bivar_factor(G)
    assert fac.total_multiplicity() == 1  # stays irreducible over F_27 (odd ext)
    F9 = finite_field(3, 2)
    emb9 = embedding(F3, F9)
    G9 = P(F3, {(2, 0): 1, (0, 2): 1}).map_coeffs(emb9, F9)
    fac9 = bivar_factor(G9)
    assert fac9.total_multiplicity() == 2
    assert fac9.expand() == G9
