"""Bernoulli numbers/polynomials mod p, Euler numbers mod p, and
representations of primes by the three quadratic forms used in the
congruence registry."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arith import NotPAdic, RangeError, rational_mod


class NotRepresentable(ValueError):
    """The prime admits no representation by the requested form."""


class NormalizationConflict(RuntimeError):
    """Neither +x nor -x satisfies the sign normalization (internal error)."""


def bernoulli_mod_p(p: int, n_max: int) -> list[int]:
    """B_0 .. B_{n_max} mod p via sum_{j<=n} C(n+1, j) B_j = 0.

    All B_n with n <= p-2 are p-integral (von Staudt-Clausen: only indices
    divisible by p-1 fail), so n_max <= p-2 is allowed.
    """
    if n_max > p - 2:
        raise RangeError(f"B_n mod {p} requires n <= {p - 2}, got {n_max}")
    bern = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        # row of C(n+1, j) for j = 0..n, built multiplicatively
        c = 1
        acc = 0
        for j in range(n):
            acc = (acc + c * bern[j]) % p
            c = c * (n + 1 - j) % p * pow(j + 1, -1, p) % p
        # c is now C(n+1, n) = n+1
        bern[n] = -acc * pow(n + 1, -1, p) % p
    return bern


def bernoulli_poly_mod_p(n: int, x: Fraction, p: int) -> int:
    """B_n(x) = sum_j C(n, j) B_j x^(n-j) reduced mod p."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPAdic(f"{x} is not a {p}-adic integer")
    bern = bernoulli_mod_p(p, n)
    xm = rational_mod(x, p, p)
    acc = 0
    c = 1
    power = pow(xm, n, p)
    xinv = pow(xm, -1, p) if xm else 0
    for j in range(n + 1):
        acc = (acc + c * bern[j] % p * power) % p
        c = c * (n - j) % p * pow(j + 1, -1, p) % p
        if xm:
            power = power * xinv % p
        else:
            power = 1 if j == n - 1 else 0
    return acc


def euler_numbers_mod_p(p: int, n_max: int) -> list[int]:
    """E_0 .. E_{n_max} mod p (odd indices are 0) via
    sum_{j even, j<=n} C(n, j) E_j = 0 for even n >= 2."""
    eul = [0] * (n_max + 1)
    eul[0] = 1
    inv = [0, 1] + [pow(i, -1, p) for i in range(2, n_max + 2)]
    for n in range(2, n_max + 1, 2):
        # C(n, j) for even j, built by stepping j -> j+2
        c = 1
        acc = 0
        for j in range(0, n, 2):
            acc = (acc + c * eul[j]) % p
            c = c * (n - j) % p * (n - j - 1) % p * inv[j + 1] % p * inv[j + 2] % p
        eul[n] = -acc % p
    return eul


def euler_number_mod_p(n: int, p: int) -> int:
    """E_n mod p; odd n gives 0 (matching the sech expansion)."""
    if n < 0 or n > p - 3:
        raise RangeError(f"E_n mod {p} requires 0 <= n <= {p - 3}, got {n}")
    if n % 2:
        return 0
    return euler_numbers_mod_p(p, n)[n]


FORM_4P_X2_27Y2 = "4p=x^2+27y^2"
FORM_P_X2_3Y2 = "p=x^2+3y^2"
FORM_P_X2_4Y2 = "p=x^2+4y^2"

_FORM_PARAMS = {
    # form -> (multiplier of p, coefficient of y^2)
    FORM_4P_X2_27Y2: (4, 27),
    FORM_P_X2_3Y2: (1, 3),
    FORM_P_X2_4Y2: (1, 4),
}


@dataclass(frozen=True)
class QuadFormRep:
    form: str
    p: int
    x: int
    y: int
    normalization: tuple[int, int]  # (modulus, residue) applied to x

    def __post_init__(self):
        mult, coeff = _FORM_PARAMS[self.form]
        assert mult * self.p == self.x**2 + coeff * self.y**2
        mod, res = self.normalization
        assert self.x % mod == res % mod


def represent_form(p: int, form: str, normalization: tuple[int, int]) -> QuadFormRep:
    """Find (x, y) with the form equation and x in the requested residue class.

    Deterministic bounded search over y; O(sqrt(p)).  y is returned
    nonnegative; exactly one of +-x meets the normalization for these forms.
    """
    mult, coeff = _FORM_PARAMS[form]
    target = mult * p
    mod, res = normalization
    for y in range(isqrt(target // coeff) + 1):
        rest = target - coeff * y * y
        x = isqrt(rest)
        if x * x == rest:
            for cand in (x, -x):
                if cand % mod == res % mod:
                    return QuadFormRep(form, p, cand, y, normalization)
            raise NormalizationConflict(
                f"neither +-{x} is {res} mod {mod} for p={p}, {form}"
            )
    raise NotRepresentable(f"{p} has no representation by {form}")
