"""Exact arithmetic foundation: residues mod p^k and valuation-tracked p-adics.

Everything downstream (Gamma values, truncated hypergeometric sums, the
congruence registry) reduces to the primitives here.  All functions are pure;
the precomputed tables are immutable after construction and safe to share
across worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


class NotInvertible(ArithmeticError):
    """Attempt to invert an element divisible by p."""


class NotPAdic(ArithmeticError):
    """A rational argument lies outside Z_p (p divides its denominator)."""


class PrecisionLoss(ArithmeticError):
    """An operation would report more p-adic digits than the operands carry."""


class RangeError(ValueError):
    """Argument outside the admissible range of an operation."""


# Deterministic Miller-Rabin witness set, valid for all n < 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2^64."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n >= 1 << 64:
        raise RangeError(f"primality is only deterministic below 2^64, got {n}")
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def padic_valuation(n: int, p: int) -> int:
    """Exponent of p in n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class Modulus:
    """A prime-power modulus p^k with p > 3 prime and k in {1, 2, 3}."""

    p: int
    k: int
    pk: int = field(init=False)

    def __post_init__(self):
        if self.p <= 3 or not is_prime(self.p):
            raise ValueError(f"modulus prime must be a prime > 3, got {self.p}")
        if self.k not in (1, 2, 3):
            raise ValueError(f"modulus exponent must be 1, 2 or 3, got {self.k}")
        object.__setattr__(self, "pk", self.p**self.k)


@dataclass(frozen=True)
class Residue:
    """A congruence class modulo p^k, stored as its least nonnegative member."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.pk:
            object.__setattr__(self, "value", self.value % self.modulus.pk)

    def _check(self, other: "Residue"):
        if other.modulus != self.modulus:
            raise ValueError("mixed moduli in residue arithmetic")

    def __add__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value + other.value) % self.modulus.pk, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value - other.value) % self.modulus.pk, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.value * other.value % self.modulus.pk, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value % self.modulus.pk, self.modulus)

    def inverse(self) -> "Residue":
        return mod_inverse(self.value, self.modulus)

    def __int__(self) -> int:
        return self.value


def mod_inverse(a: int, m: Modulus) -> Residue:
    """Inverse of a modulo p^k; raises NotInvertible when p divides a."""
    if a % m.p == 0:
        raise NotInvertible(f"{a} is divisible by {m.p}")
    return Residue(pow(a, -1, m.pk), m)


def _jacobi(a: int, n: int) -> int:
    # Standard binary Jacobi symbol; n odd positive.
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p; 0 when p | a."""
    if a % p == 0:
        return 0
    return _jacobi(a, p)


def least_nonneg_residue(alpha: Fraction, p: int) -> int:
    """The unique r in {0, ..., p-1} with r = alpha (mod p)."""
    alpha = Fraction(alpha)
    if alpha.denominator % p == 0:
        raise NotPAdic(f"{alpha} is not a {p}-adic integer")
    return alpha.numerator * pow(alpha.denominator, -1, p) % p


def rational_mod(q: Fraction, pk: int, p: int) -> int:
    """Reduce a p-adically integral rational modulo p^k."""
    q = Fraction(q)
    if q.denominator % p == 0:
        raise NotPAdic(f"{q} is not a {p}-adic integer")
    return q.numerator * pow(q.denominator, -1, pk) % pk


def fermat_quotient(a: int, p: int) -> int:
    """q_p(a) = (a^(p-1) - 1)/p reduced mod p; requires p not dividing a."""
    if a % p == 0:
        raise NotInvertible(f"{p} divides {a}")
    return (pow(a, p - 1, p * p) - 1) // p % p


def harmonic_number_mod(n: int, m: Modulus) -> Residue:
    """H_n = sum_{k<=n} 1/k reduced modulo p^k.

    Every index k <= n must be coprime to p (otherwise 1/k is not p-integral).
    """
    if n >= m.p * m.p:
        raise RangeError(f"harmonic index {n} too large for p={m.p}")
    total = 0
    pk = m.pk
    for k in range(1, n + 1):
        if k % m.p == 0:
            raise NotInvertible(f"1/{k} is not {m.p}-integral")
        total = (total + pow(k, -1, pk)) % pk
    return Residue(total, m)


@dataclass(frozen=True)
class PadicApprox:
    """A p-adic number p^valuation * unit with a tracked unit precision.

    The represented value is congruent to p^valuation * unit modulo
    p^(valuation + prec).  ``unit`` is coprime to p, or None with prec == 0
    when only the divisibility bound v_p(value) >= valuation is known.
    Exact zero is a distinguished state (conceptually infinite valuation).
    """

    valuation: int
    unit: int | None
    prec: int
    modulus: Modulus
    exact_zero: bool = False

    @classmethod
    def zero(cls, m: Modulus) -> "PadicApprox":
        return cls(0, None, 0, m, exact_zero=True)

    @classmethod
    def divisible(cls, valuation: int, m: Modulus) -> "PadicApprox":
        """Only v_p(value) >= valuation is known."""
        return cls(valuation, None, 0, m)

    @classmethod
    def from_int(cls, n: int, m: Modulus) -> "PadicApprox":
        if n == 0:
            return cls.zero(m)
        v = padic_valuation(n, m.p)
        return cls(v, (n // m.p**v) % m.pk, m.k, m)

    @classmethod
    def from_fraction(cls, q: Fraction, m: Modulus) -> "PadicApprox":
        q = Fraction(q)
        if q == 0:
            return cls.zero(m)
        vn = padic_valuation(q.numerator, m.p) if q.numerator % m.p == 0 else 0
        vd = padic_valuation(q.denominator, m.p) if q.denominator % m.p == 0 else 0
        num = abs(q.numerator) // m.p**vn * (1 if q.numerator > 0 else -1)
        den = q.denominator // m.p**vd
        unit = num * pow(den, -1, m.pk) % m.pk
        return cls(vn - vd, unit, m.k, m)

    def __mul__(self, other: "PadicApprox") -> "PadicApprox":
        m = self.modulus
        if self.exact_zero or other.exact_zero:
            return PadicApprox.zero(m)
        prec = min(self.prec, other.prec)
        if prec == 0:
            return PadicApprox.divisible(self.valuation + other.valuation, m)
        unit = self.unit * other.unit % m.p**prec
        return PadicApprox(self.valuation + other.valuation, unit, prec, m)

    def inverse(self) -> "PadicApprox":
        if self.exact_zero:
            raise NotInvertible("exact zero has no inverse")
        if self.prec == 0:
            raise PrecisionLoss("cannot invert a value with unknown unit")
        m = self.modulus
        return PadicApprox(
            -self.valuation, pow(self.unit, -1, m.p**self.prec), self.prec, m
        )

    def __neg__(self) -> "PadicApprox":
        if self.exact_zero or self.prec == 0:
            return self
        return PadicApprox(
            self.valuation,
            -self.unit % self.modulus.p**self.prec,
            self.prec,
            self.modulus,
        )

    def __add__(self, other: "PadicApprox") -> "PadicApprox":
        m = self.modulus
        if self.exact_zero:
            return other
        if other.exact_zero:
            return self
        p = m.p
        # Absolute precision of the sum: min over operands of val + prec.
        abs_prec = min(self.valuation + self.prec, other.valuation + other.prec)
        vmin = min(self.valuation, other.valuation)
        digits = abs_prec - vmin
        if digits <= 0:
            raise PrecisionLoss("sum carries no certified p-adic digits")
        mod = p**digits
        c = 0
        if self.prec:
            c += self.unit * p ** (self.valuation - vmin)
        if other.prec:
            c += other.unit * p ** (other.valuation - vmin)
        c %= mod
        if c == 0:
            return PadicApprox.divisible(abs_prec, m)
        e = padic_valuation(c, p)
        return PadicApprox(vmin + e, (c // p**e) % p ** (digits - e), digits - e, m)

    def __sub__(self, other: "PadicApprox") -> "PadicApprox":
        return self + (-other)

    def residue_mod(self, exponent: int) -> int:
        """The value modulo p^exponent, if the tracked precision supports it."""
        m = self.modulus
        if self.exact_zero:
            return 0
        if self.valuation >= exponent:
            return 0
        if self.valuation < 0 or self.valuation + self.prec < exponent:
            raise PrecisionLoss(
                f"value known mod p^{self.valuation + self.prec}, "
                f"requested mod p^{exponent}"
            )
        return self.unit * m.p**self.valuation % m.p**exponent


def factorial_padic(n: int, m: Modulus) -> PadicApprox:
    """n! as p^v * u with u the p-free part of n! reduced mod p^k."""
    p, pk = m.p, m.pk
    v = 0
    q = n
    while q:
        q //= p
        v += q
    u = 1
    for i in range(2, n + 1):
        if i % p:
            u = u * i % pk
        else:
            j = i // p
            while j % p == 0:
                j //= p
            u = u * j % pk
    return PadicApprox(v, u, m.k, m)


def binomial_padic(n: int, r: int, m: Modulus) -> PadicApprox:
    """C(n, r) as a PadicApprox; exact zero outside 0 <= r <= n."""
    if r < 0 or r > n:
        return PadicApprox.zero(m)
    return factorial_padic(n, m) * factorial_padic(r, m).inverse() * factorial_padic(
        n - r, m
    ).inverse()


def pochhammer_padic(alpha: Fraction, j: int, m: Modulus) -> PadicApprox:
    """Rising factorial (alpha)_j = alpha (alpha+1) ... (alpha+j-1)."""
    alpha = Fraction(alpha)
    if alpha.denominator % m.p == 0:
        raise NotPAdic(f"{alpha} is not a {m.p}-adic integer")
    a, b = alpha.numerator, alpha.denominator
    p, pk = m.p, m.pk
    v = 0
    u = 1
    for i in range(j):
        num = a + b * i
        if num == 0:
            return PadicApprox.zero(m)
        e = 0
        while num % p == 0:
            num //= p
            e += 1
        v += e
        u = u * num % pk
    u = u * pow(pow(b, j, pk), -1, pk) % pk
    return PadicApprox(v, u, m.k, m)


class FactorialTable:
    """Per-prime prefix tables of p-free factorial parts mod p^k.

    Amortizes binomial-coefficient evaluation across a whole truncated sum:
    after an O(n_max) build, each factorial or binomial costs O(1).
    """

    def __init__(self, m: Modulus, n_max: int):
        self.modulus = m
        self.n_max = n_max
        p, pk = m.p, m.pk
        unit = [1] * (n_max + 1)
        val = [0] * (n_max + 1)
        u = 1
        v = 0
        for i in range(1, n_max + 1):
            j = i
            while j % p == 0:
                j //= p
                v += 1
            u = u * j % pk
            unit[i] = u
            val[i] = v
        self.unit = unit
        self.val = val
        self.inv_unit = _batch_inverse(unit, pk)
        # Inverses of 1..n_max with their own p-parts stripped.
        small = min(n_max, 4 * p)
        self.inv_small = [0] * (small + 1)
        for i in range(1, small + 1):
            j = i
            while j % p == 0:
                j //= p
            self.inv_small[i] = pow(j, -1, pk)

    def factorial(self, n: int) -> tuple[int, int]:
        """(valuation, p-free unit mod p^k) of n!."""
        return self.val[n], self.unit[n]

    def binomial(self, n: int, r: int) -> tuple[int, int]:
        """(valuation, p-free unit mod p^k) of C(n, r); unit 0 encodes zero."""
        if r < 0 or r > n:
            return 0, 0
        pk = self.modulus.pk
        v = self.val[n] - self.val[r] - self.val[n - r]
        u = self.unit[n] * self.inv_unit[r] % pk * self.inv_unit[n - r] % pk
        return v, u

    def binomial_padic(self, n: int, r: int) -> PadicApprox:
        v, u = self.binomial(n, r)
        if u == 0:
            return PadicApprox.zero(self.modulus)
        return PadicApprox(v, u, self.modulus.k, self.modulus)


def _batch_inverse(values: list[int], pk: int) -> list[int]:
    # Montgomery trick: one modular inversion for the whole list.
    n = len(values)
    prefix = [1] * (n + 1)
    for i, v in enumerate(values):
        prefix[i + 1] = prefix[i] * v % pk
    inv = pow(prefix[n], -1, pk)
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = inv * prefix[i] % pk
        inv = inv * values[i] % pk
    return out
