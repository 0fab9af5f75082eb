import random
from fractions import Fraction
from math import comb

import pytest

from supercong.arith import Modulus, NotPAdic, rational_mod
from supercong.hyperseries import (
    BinomialFactor,
    BinomialSumSpec,
    DivisionByZero,
    SeriesSpec,
    pFq,
    pochhammer_shift_check,
    truncated_pFq_exact,
    truncated_pFq_padic,
    weighted_binomial_sum,
    weighted_binomial_sum_exact,
)


def test_series_spec_validation():
    with pytest.raises(ValueError):
        SeriesSpec((Fraction(1),), (Fraction(1),), Fraction(1), 3)
    with pytest.raises(ValueError):
        pFq([1, 2], [1], 1, -1)


def test_exact_matches_binomial_form():
    # (1/3)_k (2/3)_k / (1)_k k! = C(2k,k) C(3k,k) / 27^k, so z=9/8 gives /24^k
    p = 13
    s = pFq([Fraction(1, 3), Fraction(2, 3)], [1], Fraction(9, 8), p - 1)
    direct = sum(Fraction(comb(2 * k, k) * comb(3 * k, k), 24**k) for k in range(p))
    assert truncated_pFq_exact(s) == direct


def test_padic_matches_exact():
    p = 11
    m = Modulus(p, 3)
    for spec in (
        pFq([Fraction(1, 2), Fraction(1, 2)], [1], 1, p - 1),
        pFq([Fraction(1, 4), Fraction(3, 4), Fraction(1, 2)], [1, 1], Fraction(4, 3), p - 1),
        pFq([Fraction(2, 3)], [], 2, p - 1),
    ):
        ex = truncated_pFq_exact(spec)
        assert truncated_pFq_padic(spec, m).value == rational_mod(ex, m.pk, p)


def test_padic_rejects_bad_parameters():
    m = Modulus(5, 2)
    with pytest.raises(NotPAdic):
        truncated_pFq_padic(pFq([Fraction(1, 5)], [], 1, 4), m)


def test_negative_upper_terminates_before_lower_zero():
    # upper -n kills the series at k = n+1; the lower zero beyond is never hit
    s = pFq([-3, Fraction(1, 2)], [-6], 2, 10)
    v = truncated_pFq_exact(s)
    assert v == truncated_pFq_exact(pFq([-3, Fraction(1, 2)], [-6], 2, 3))


def test_lower_zero_raises():
    with pytest.raises(DivisionByZero):
        truncated_pFq_exact(pFq([Fraction(1, 2), 5], [-2], 1, 8))


def test_weighted_binomial_sum_matches_exact():
    rng = random.Random(11)
    p = 13
    m = Modulus(p, 3)
    factor_pool = [
        BinomialFactor(2, 1),
        BinomialFactor(3, 1),
        BinomialFactor(4, 2),
        BinomialFactor(4, 2, 1),
    ]
    for _ in range(40):
        factors = tuple(rng.sample(factor_pool, rng.randint(1, 3)))
        base = rng.choice([24, 48, -216, 72, 16, -144])
        wn = tuple(rng.randint(-3, 3) for _ in range(rng.randint(1, 2)))
        if not any(wn):
            wn = (1,)
        wd = rng.choice([(1,), (1, 1)])
        spec = BinomialSumSpec(wn, wd, factors, base, p - 1)
        exact = weighted_binomial_sum_exact(spec)
        pa = weighted_binomial_sum(spec, m)
        if exact == 0:
            assert pa.exact_zero or pa.unit is None or pa.valuation >= 3
            continue
        v = exact.numerator
        val = 0
        while v % p == 0:
            v //= p
            val += 1
        exp = min(3, val + pa.prec) if pa.unit is not None else 0
        if pa.unit is not None and pa.valuation >= 0 and pa.valuation + pa.prec >= 2:
            assert pa.residue_mod(2) == rational_mod(exact, p * p, p)


def test_weighted_sum_catalan_boundary():
    # weight 1/(k+1) hits valuation -1 at k = p-1; the tracked result is still
    # accurate mod p^2
    p = 13
    m = Modulus(p, 3)
    spec = BinomialSumSpec((1,), (1, 1), (BinomialFactor(2, 1), BinomialFactor(3, 1)),
                           24, p - 1)
    exact = weighted_binomial_sum_exact(spec)
    pa = weighted_binomial_sum(spec, m)
    assert pa.residue_mod(2) == rational_mod(exact, p * p, p)


def test_weighted_sum_base_divisible_rejected():
    with pytest.raises(NotPAdic):
        weighted_binomial_sum(
            BinomialSumSpec((1,), (1,), (BinomialFactor(2, 1),), 25, 4), Modulus(5, 2)
        )


def test_weighted_sum_k_min():
    p = 11
    spec = BinomialSumSpec((1,), (1,), (BinomialFactor(2, 1), BinomialFactor(2, 1)),
                           16, p - 1, k_min=(p + 1) // 2)
    exact = sum(Fraction(comb(2 * k, k) ** 2, 16**k) for k in range((p + 1) // 2, p))
    assert weighted_binomial_sum_exact(spec) == exact


def test_pochhammer_shift():
    m = Modulus(13, 2)
    rep = pochhammer_shift_check(Fraction(1, 3), Fraction(2, 5), 4, m)
    assert rep.checked == 4 and rep.failures == 0 and not rep.skipped
    rep = pochhammer_shift_check(Fraction(1, 3), Fraction(2, 5), 20, m)
    assert rep.skipped and "alpha" in rep.skip_reason
    rep = pochhammer_shift_check(Fraction(1, 13), Fraction(1), 3, m)
    assert rep.skipped
