from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from facilidyn.checks import random_poly
from facilidyn.polyalg import Poly, RootInterval, certified_roots, count_distinct_real_roots, discriminant_sequence, prem, \
    real_roots, refine_root, revise, root_bound, sign_list, sturm_isolate, sturm_sequence, substitute_reciprocal_square, \
    to_rat

x = sp.Symbol('x')
F = Fraction


def to_sympy(p: Poly) -> sp.Poly:
    if p.is_zero:
        return sp.Poly(0, x)
    return sp.Poly([sp.Rational(c.numerator, c.denominator) for c in p.descending()], x)


def test_prem_identity():
    f = Poly([1, 1, 0, 3])
    g = Poly([1, 0, 2])
    m, q, r = prem(f, g)
    assert m == 4
    assert q == Poly([0, 6])
    assert r == Poly([4, -2])
    assert m * f == q * g + r


def test_prem_lower_degree():
    m, q, r = prem(Poly([1, 2]), Poly([1, 0, 1]))
    assert m == 1 and q.is_zero and r == Poly([1, 2])


def test_prem_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        prem(Poly([1, 1]), Poly())


def test_prem_matches_sympy():
    rng = np.random.default_rng(3)
    for _ in range(20):
        f, g = random_poly(rng), random_poly(rng, max_degree=4)
        _, _, r = prem(f, g)
        expected = sp.prem(to_sympy(f).as_expr(), to_sympy(g).as_expr(), x)
        assert sp.expand(to_sympy(r).as_expr() - expected) == 0


def test_sturm_sequence():
    f = Poly.from_descending([1, -2, 3, -5])
    chain = sturm_sequence(f)
    assert len(chain) == 4
    assert chain[-1].degree == 0
    assert len(sturm_isolate(f)) == 1


@pytest.mark.parametrize('coeffs, expected', [
    ([1, 0, 1], 0),
    ([-2, 0, 1], 2),
    ([4, 0, -5, 0, 1], 4),
    ([2, -3, 0, 1], 2),
    ([-5, 3, -2, 1], 1),
    ([1, 0, 0, 0, 0, 0, 1], 0),
])
def test_count_distinct_real_roots(coeffs, expected):
    p = Poly(coeffs)
    assert count_distinct_real_roots(p) == expected
    assert len(sturm_isolate(p)) == expected


def test_count_matches_sympy():
    rng = np.random.default_rng(7)
    for _ in range(50):
        p = random_poly(rng)
        expected = len(sp.real_roots(to_sympy(p).sqf_part()))
        assert count_distinct_real_roots(p) == expected
        assert len(sturm_isolate(p)) == expected


def test_zero_polynomial():
    with pytest.raises(ValueError):
        count_distinct_real_roots(Poly())
    with pytest.raises(ValueError):
        sturm_isolate(Poly())
    assert count_distinct_real_roots(Poly([3])) == 0


@pytest.mark.parametrize('coeffs, expected', [
    ([-2, 0, 1], [2, 8]),
    ([1, 0, 1], [2, -4]),
    ([1, -2, 1], [2, 0]),
])
def test_discriminant_sequence(coeffs, expected):
    # for a monic quadratic the last entry is the discriminant
    assert discriminant_sequence(Poly(coeffs)) == expected


def test_revise():
    assert revise((1, 0, 0, 1)) == (1, -1, -1, 1)
    assert revise((1, 0, -1, 0)) == (1, -1, -1, 0)
    assert revise((-1, 0, 0, 0, 1)) == (-1, 1, 1, -1, 1)
    assert revise((1, 1, -1)) == (1, 1, -1)


def test_sign_list_repeated_root():
    # (x - 1)**2 (x + 2)
    sl = sign_list(Poly([2, -3, 0, 1]))
    assert sl.num_real_roots == 2
    assert 0 in sl.signs


def test_root_bound():
    assert root_bound(Poly([-2, 0, 1])) == 3
    p = Poly([-6, 11, -6, 1])
    assert all(abs(r) < root_bound(p) for r in (1, 2, 3))


def test_isolate_on_domain():
    p = Poly([-6, 11, -6, 1])
    ivs = sturm_isolate(p, (F(3, 2), 4))
    assert len(ivs) == 2
    assert ivs[0].lo < 2 < ivs[0].hi
    assert ivs[1].lo < 3 < ivs[1].hi


def test_refine_root():
    iv = refine_root(Poly([-2, 0, 1]), (1, 2), F(1, 2 ** 30))
    assert iv.width <= F(1, 2 ** 30)
    assert iv.lo ** 2 < 2 < iv.hi ** 2
    with pytest.raises(ValueError):
        refine_root(Poly([-2, 0, 1]), (2, 3), F(1, 100))


def test_refine_exact_root():
    iv = refine_root(Poly([-1, 1]), RootInterval(F(1), F(1)), F(1, 10))
    assert iv.exact and iv.lo == 1


def test_substitute_reciprocal_square():
    # k - 1/4 has its root in (0, 1); the substituted polynomial (3 - x**2)/4 has two
    assert substitute_reciprocal_square(Poly([F(-1, 4), 1]), 1) == Poly([F(3, 4), 0, F(-1, 4)])
    assert substitute_reciprocal_square(Poly([0, 1]), 1) == Poly([1])
    # k - 2 has no root in (0, 1)
    assert count_distinct_real_roots(substitute_reciprocal_square(Poly([-2, 1]), 1)) == 0


def test_poly_arithmetic():
    p = Poly([1, 2, 3])
    assert p.derivative() == Poly([2, 6])
    assert p.shift(1) == Poly([6, 8, 3])
    assert (p * Poly([0, 1])).degree == 3
    assert p(F(1, 2)) == F(11, 4)
    assert p(0.5) == pytest.approx(2.75)
    assert Poly([2, 4]).content() == 2
    assert Poly([F(1, 2), F(1, 3)]).primitive() == Poly([3, 2])
    assert Poly([2, 4]).monic() == Poly([F(1, 2), 1])
    q, r = divmod(Poly([-1, 0, 1]), Poly([-1, 1]))
    assert q == Poly([1, 1]) and r.is_zero


def test_poly_json():
    p = Poly([F(1, 3), -2, 0, F(5, 7)])
    assert p.to_json() == ['1/3', '-2/1', '0/1', '5/7']
    assert Poly.from_json(p.to_json()) == p


def test_to_rat():
    assert to_rat('3/4') == F(3, 4)
    assert to_rat(0.5) == F(1, 2)
    assert to_rat(sp.Rational(2, 3)) == F(2, 3)
    with pytest.raises(TypeError):
        to_rat(True)


def test_prem_identity_on_random_pairs():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        f, g = random_poly(rng), random_poly(rng, max_degree=5)
        m, q, r = prem(f, g)
        assert m == g.lc ** max(f.degree - g.degree + 1, 0)
        assert m * f == q * g + r
        assert r.is_zero or r.degree < g.degree


@pytest.mark.parametrize('signs', [
    (1, 0, 0, 1),
    (1, 0, -1, 0),
    (-1, 0, 0, 0, 1),
    (0, 0, 1, 0, 1, 0),
    (1, 0, 0, 0, 0, -1, 0, 1),
    (0, 0, 0),
])
def test_revise_is_idempotent(signs):
    once = revise(signs)
    assert revise(once) == once
    assert len(once) == len(signs)


def test_isolated_intervals_are_disjoint():
    rng = np.random.default_rng(5)
    width = F(1, 2 ** 12)
    for _ in range(50):
        p = random_poly(rng) * random_poly(rng, max_degree=3)
        ivs = sturm_isolate(p, width=width)
        assert len(ivs) == count_distinct_real_roots(p)
        assert all(iv.width <= width for iv in ivs)
        assert all(a.hi <= b.lo and a != b for a, b in zip(ivs, ivs[1:]))


def test_scalar_division():
    p = Poly([2, 4, 6])
    assert p / 2 == Poly([1, 2, 3])
    assert p / F(2, 3) == Poly([3, 6, 9])
    assert p / Poly([2]) == Poly([1, 2, 3])
    with pytest.raises(TypeError):
        p / Poly([0, 1])
    with pytest.raises(ZeroDivisionError):
        p / 0


def test_certified_roots():
    p = Poly([-6, 11, -6, 1])
    assert certified_roots(p, (0, 4)) == pytest.approx([1, 2, 3], abs=1e-12)
    assert certified_roots(p, (F(3, 2), 4)) == pytest.approx([2, 3], abs=1e-12)
    assert certified_roots(Poly([1, 0, 1]), (-5, 5)) == []
    # (x - 1)**2 (x + 2) has a double root the certificate cannot separate
    assert certified_roots(Poly([2, -3, 0, 1]), (0, 3)) is None


def test_certified_roots_agree_with_bisection():
    rng = np.random.default_rng(7)
    certified = 0
    for _ in range(100):
        p = random_poly(rng)
        roots = certified_roots(p, (-10, 10))
        if roots is None:
            continue
        certified += 1
        assert roots == pytest.approx(real_roots(p, (-10, 10)), abs=1e-9)
    assert certified > 50
