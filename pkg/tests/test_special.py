from fractions import Fraction

import pytest

from supercong.arith import RangeError, rational_mod
from supercong.special import (
    FORM_4P_X2_27Y2,
    FORM_P_X2_3Y2,
    FORM_P_X2_4Y2,
    NotRepresentable,
    bernoulli_mod_p,
    bernoulli_poly_mod_p,
    euler_number_mod_p,
    euler_numbers_mod_p,
    represent_form,
)

# independent exact-rational oracle for the modular recurrences
def _bernoulli_exact(n):
    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        c = 1
        for j in range(m):
            acc += c * b[j]
            c = c * (m + 1 - j) // (j + 1)
        b.append(-acc / (m + 1))
    return b


def _euler_exact(n):
    e = [Fraction(1)] + [Fraction(0)] * n
    for m in range(2, n + 1, 2):
        acc = Fraction(0)
        c = 1
        for j in range(0, m, 2):
            acc += c * e[j]
            c = c * (m - j) * (m - j - 1) // ((j + 1) * (j + 2))
        e[m] = -acc
    return e


def test_bernoulli_frozen():
    assert bernoulli_mod_p(5, 2)[2] == 1  # B_2 = 1/6
    assert bernoulli_mod_p(7, 4)[4] == 3  # B_4 = -1/30
    assert bernoulli_poly_mod_p(3, Fraction(1, 3), 5) == 3


def test_bernoulli_vs_exact():
    for p in (17, 19, 97):
        got = bernoulli_mod_p(p, 12)
        exact = _bernoulli_exact(12)
        assert got == [rational_mod(b, p, p) for b in exact]


def test_bernoulli_range():
    assert len(bernoulli_mod_p(7, 5)) == 6  # n <= p-2 allowed
    with pytest.raises(RangeError):
        bernoulli_mod_p(7, 6)


def test_euler_frozen_and_exact():
    assert euler_number_mod_p(4, 7) == 5  # E_4 = 5
    assert euler_number_mod_p(3, 7) == 0
    for p in (17, 19, 97):
        got = euler_numbers_mod_p(p, 12)
        exact = _euler_exact(12)
        assert got == [rational_mod(e, p, p) for e in exact]
    with pytest.raises(RangeError):
        euler_number_mod_p(15, 7)


def test_represent_form_examples():
    rep = represent_form(7, FORM_4P_X2_27Y2, (3, 1))
    assert (rep.x, rep.y) == (1, 1)
    rep = represent_form(7, FORM_P_X2_3Y2, (3, 1))
    assert (rep.x, abs(rep.y)) == (-2, 1)
    rep = represent_form(13, FORM_P_X2_4Y2, (4, 1))
    assert (rep.x, abs(rep.y)) == (-3, 1)


def test_represent_form_consistency():
    from supercong.arith import primes_in
    for p in primes_in(5, 200):
        if p % 3 == 1:
            r = represent_form(p, FORM_4P_X2_27Y2, (3, 2))
            assert r.x**2 + 27 * r.y**2 == 4 * p and r.x % 3 == 2
            r = represent_form(p, FORM_P_X2_3Y2, (3, 1))
            assert r.x**2 + 3 * r.y**2 == p and r.x % 3 == 1
        if p % 4 == 1:
            r = represent_form(p, FORM_P_X2_4Y2, (4, 1))
            assert r.x**2 + 4 * r.y**2 == p and r.x % 4 == 1


def test_not_representable():
    with pytest.raises(NotRepresentable):
        represent_form(5, FORM_P_X2_3Y2, (3, 1))  # 5 = 2 (mod 3)
