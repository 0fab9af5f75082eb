from fractions import Fraction

import pytest

from supercong.arith import Modulus, NotPAdic, least_nonneg_residue
from supercong.padic_gamma import (
    GammaContext,
    derive_rng,
    gamma_derivative_at_zero,
    gamma_identity_suite,
    gamma_p,
    gamma_p_of_int,
    teichmuller,
)


def _direct_gamma(n, p, pk):
    prod = 1
    for j in range(1, n):
        if j % p:
            prod = prod * j % pk
    return prod if n % 2 == 0 else -prod % pk


def test_gamma_small_values():
    ctx = GammaContext(Modulus(7, 2))
    assert gamma_p_of_int(0, ctx).value == 1
    assert gamma_p_of_int(1, ctx).value == 49 - 1
    for n in range(0, 60):
        assert gamma_p_of_int(n, ctx).value == _direct_gamma(n, 7, 49)


def test_gamma_frozen():
    assert gamma_p(Fraction(1, 2), GammaContext(Modulus(5, 2))).value == 18
    assert gamma_p(Fraction(1, 2), GammaContext(Modulus(7, 2))).value == 48
    assert gamma_p(Fraction(1, 2), GammaContext(Modulus(13, 2))).value == 99


def test_gamma_rejects_non_padic():
    with pytest.raises(NotPAdic):
        gamma_p(Fraction(1, 7), GammaContext(Modulus(7, 2)))


def test_derivative_at_zero():
    # negated Wilson quotients; 5 and 13 are Wilson primes, so 0 there
    assert gamma_derivative_at_zero(GammaContext(Modulus(5, 2))) == 0
    assert gamma_derivative_at_zero(GammaContext(Modulus(13, 2))) == 0
    assert gamma_derivative_at_zero(GammaContext(Modulus(7, 2))) == 2
    w = gamma_derivative_at_zero(GammaContext(Modulus(11, 2)))
    import math
    assert (-w) % 11 == (math.factorial(10) + 1) // 11 % 11


def test_reflection_spot():
    p = 11
    ctx = GammaContext(Modulus(p, 2))
    for x in (Fraction(1, 3), Fraction(2, 5), Fraction(7, 4)):
        lhs = gamma_p(x, ctx).value * gamma_p(1 - x, ctx).value % 121
        assert lhs == (-1) ** (p - least_nonneg_residue(-x, p)) % 121


def test_teichmuller():
    for p in (5, 7, 13):
        pk = p**3
        for a in (2, 3, p - 1):
            w = teichmuller(a, p, pk)
            assert w % p == a % p
            assert pow(w, p - 1, pk) == 1


def test_identity_suite_passes():
    for p in (5, 7, 11, 97):
        for k in (1, 2, 3):
            rep = gamma_identity_suite(p, k, samples=10, seed=3)
            assert rep.passed, [
                (r.name, r.first_counterexample) for r in rep.identities if r.failures
            ]
    names = {r.name for r in gamma_identity_suite(7, 2, 5, 0).identities}
    assert names == {"reflection", "functional_equation", "gauss_multiplication",
                     "expansion"}


def test_derive_rng_deterministic():
    a = derive_rng(42, "x", 7).random()
    b = derive_rng(42, "x", 7).random()
    c = derive_rng(42, "x", 11).random()
    assert a == b != c
