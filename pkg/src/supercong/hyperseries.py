"""Truncated hypergeometric series and binomial-weighted sums.

Two evaluation routes exist on purpose: a fast p-adic path working with
valuation-tracked units mod p^k, and an exact big-rational path used as the
oracle and by the identity verifier.  Terms are updated incrementally via the
term ratio; numerator zero checks come before denominator zero checks so that
vanishing upper parameters silently terminate a sum instead of tripping over a
lower-parameter zero the series never reaches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    FactorialTable,
    Modulus,
    NotPAdic,
    PadicApprox,
    PrecisionLoss,
    Residue,
)


class DivisionByZero(ZeroDivisionError):
    """A lower Pochhammer vanished at an index where the term is nonzero."""

    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(message)


@dataclass(frozen=True)
class SeriesSpec:
    """A truncated (r+1)F_r: upper parameters, lower parameters, argument z,
    truncation index n (the sum runs k = 0..n)."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction
    truncation: int

    def __post_init__(self):
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError("need exactly one more upper than lower parameter")
        if self.truncation < 0:
            raise ValueError("truncation must be nonnegative")


def pFq(upper, lower, z, truncation) -> SeriesSpec:
    """Convenience constructor coercing arguments to Fractions."""
    return SeriesSpec(
        tuple(Fraction(a) for a in upper),
        tuple(Fraction(b) for b in lower),
        Fraction(z),
        truncation,
    )


def truncated_pFq_exact(spec: SeriesSpec) -> Fraction:
    """Exact rational value of the truncated sum."""
    total = Fraction(1)
    term = Fraction(1)
    for k in range(spec.truncation):
        num = Fraction(1)
        for a in spec.upper:
            num *= a + k
        if num == 0:
            break  # all remaining terms vanish
        den = Fraction(k + 1)
        for b in spec.lower:
            den *= b + k
        if den == 0:
            raise DivisionByZero(
                k + 1, f"lower parameter hit zero at k={k + 1} with nonzero term"
            )
        term = term * num * spec.z / den
        total += term
    return total


def truncated_pFq_padic(spec: SeriesSpec, m: Modulus) -> Residue:
    """The truncated sum reduced mod p^k, via valuation-tracked term updates.

    Requires all parameters and z in Z_p and every term p-integral; a term
    with negative valuation raises PrecisionLoss.
    """
    p, pk = m.p, m.pk
    for q in (*spec.upper, *spec.lower, spec.z):
        if q.denominator % p == 0:
            raise NotPAdic(f"{q} is not a {p}-adic integer")
    zn, zd = spec.z.numerator, spec.z.denominator
    vz = 0
    if zn:
        while zn % p == 0:
            zn //= p
            vz += 1
    zd_inv = pow(zd % pk, -1, pk)
    up = [(a.numerator, a.denominator) for a in spec.upper]
    lo = [(b.numerator, b.denominator) for b in spec.lower]
    const_inv = 1
    for _, bd in lo:
        const_inv = const_inv * bd % pk
    for an, ad in up:
        const_inv = const_inv * pow(ad % pk, -1, pk) % pk
    total = 1  # k = 0 term
    val, unit = 0, 1
    for k in range(spec.truncation):
        if spec.z == 0:
            break
        num_unit = zn % pk
        num_val = vz
        zero = False
        for an, ad in up:
            f = an + ad * k
            if f == 0:
                zero = True
                break
            while f % p == 0:
                f //= p
                num_val += 1
            num_unit = num_unit * f % pk
        if zero:
            break
        den_unit = zd
        den_val = 0
        f = k + 1
        while f % p == 0:
            f //= p
            den_val += 1
        den_unit = den_unit * f
        for bn, bd in lo:
            f = bn + bd * k
            if f == 0:
                raise DivisionByZero(
                    k + 1, f"lower parameter hit zero at k={k + 1} with nonzero term"
                )
            while f % p == 0:
                f //= p
                den_val += 1
            den_unit = den_unit * f % pk
        val += num_val - den_val
        unit = unit * num_unit % pk * pow(den_unit % pk, -1, pk) % pk * const_inv % pk
        if val < 0:
            raise PrecisionLoss(
                f"term at k={k + 1} has negative p-adic valuation {val}"
            )
        if val < m.k:
            total = (total + unit * p**val) % pk
    return Residue(total, m)


@dataclass(frozen=True)
class BinomialFactor:
    """One factor C(row*k, col*k + shift) of a binomial-weighted summand."""

    row: int
    col: int
    shift: int = 0


@dataclass(frozen=True)
class BinomialSumSpec:
    """sum_k weight(k) * prod_i C(row_i k, col_i k + shift_i) / base^k for
    k = k_min..truncation, with weight(k) a ratio of (at most quadratic)
    integer-coefficient polynomials."""

    weight_num: tuple[int, ...]  # coefficients, constant term first
    weight_den: tuple[int, ...]
    factors: tuple[BinomialFactor, ...]
    base: int
    truncation: int
    k_min: int = 0


def _poly(coeffs: tuple[int, ...], k: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


def weighted_binomial_sum(
    spec: BinomialSumSpec, m: Modulus, table: FactorialTable | None = None
) -> PadicApprox:
    """Exact p-adic value of the sum, with honest valuation/precision tracking.

    Individual terms may carry positive or negative p-valuation (the latter
    from weight denominators such as k+1 at k = p-1); the accumulator keeps
    k significant digits above the smallest term valuation seen.
    """
    p, pk, kk = m.p, m.pk, m.k
    if spec.base % p == 0:
        raise NotPAdic(f"base {spec.base} is divisible by {p}")
    if table is None:
        max_arg = max(
            (abs(f.row) * spec.truncation + abs(f.shift) for f in spec.factors),
            default=0,
        )
        table = FactorialTable(m, max_arg + 1)
    base_unit = spec.base % pk
    base_sign = 1
    if spec.base < 0:
        base_unit = (-spec.base) % pk
        base_sign = -1
    inv_base = pow(base_unit, -1, pk)

    acc = 0  # accumulated units, scaled by p^vbase
    vbase = 0
    have_term = False
    inv_bk = pow(inv_base, spec.k_min, pk)
    sign_k = base_sign**spec.k_min
    for k in range(spec.k_min, spec.truncation + 1):
        v = 0
        u = 1
        zero = False
        for f in spec.factors:
            fv, fu = table.binomial(f.row * k, f.col * k + f.shift)
            if fu == 0:
                zero = True
                break
            v += fv
            u = u * fu % pk
        if not zero:
            wn = _poly(spec.weight_num, k)
            wd = _poly(spec.weight_den, k)
            if wd == 0:
                raise DivisionByZero(k, f"weight denominator vanished at k={k}")
            if wn == 0:
                zero = True
        if not zero:
            while wn % p == 0:
                wn //= p
                v += 1
            while wd % p == 0:
                wd //= p
                v -= 1
            u = u * (wn % pk) % pk * pow(wd % pk, -1, pk) % pk * inv_bk % pk
            if sign_k < 0:
                u = -u % pk
            if not have_term:
                vbase = v
                have_term = True
            if v < vbase:
                shift = vbase - v
                acc = acc * p**shift % pk if shift < kk else 0
                vbase = v
            rel = v - vbase
            if rel < kk:
                acc = (acc + u * p**rel) % pk
        inv_bk = inv_bk * inv_base % pk
        sign_k = sign_k * base_sign
    if not have_term:
        return PadicApprox.zero(m)
    if acc == 0:
        return PadicApprox.divisible(vbase + kk, m)
    e = 0
    while acc % p == 0:
        acc //= p
        e += 1
    return PadicApprox(vbase + e, acc % p ** (kk - e), kk - e, m)


def weighted_binomial_sum_exact(spec: BinomialSumSpec) -> Fraction:
    """Exact-rational oracle for the same sum."""
    from math import comb

    total = Fraction(0)
    for k in range(spec.k_min, spec.truncation + 1):
        prod = 1
        for f in spec.factors:
            top = f.row * k
            bot = f.col * k + f.shift
            if bot < 0 or bot > top:
                prod = 0
                break
            prod *= comb(top, bot)
        if prod == 0:
            continue
        wd = _poly(spec.weight_den, k)
        if wd == 0:
            raise DivisionByZero(k, f"weight denominator vanished at k={k}")
        total += (
            Fraction(_poly(spec.weight_num, k), wd)
            * prod
            / Fraction(spec.base) ** k
        )
    return total


@dataclass
class ShiftCheckReport:
    alpha: Fraction
    t: Fraction
    p: int
    checked: int = 0
    failures: int = 0
    skipped: bool = False
    skip_reason: str | None = None
    first_failure_k: int | None = None


def pochhammer_shift_check(
    alpha: Fraction, t: Fraction, k_max: int, m: Modulus
) -> ShiftCheckReport:
    """Verify (alpha + t p)_k = (alpha)_k (1 + t p sum_{j<k} 1/(alpha+j))
    mod p^2 for all k <= k_max.

    Skipped (not failed) when some alpha + j is divisible by p, since the
    derivative sum then leaves Z_p.
    """
    alpha, t = Fraction(alpha), Fraction(t)
    p = m.p
    pk = p * p
    report = ShiftCheckReport(alpha=alpha, t=t, p=p)
    if alpha.denominator % p == 0 or t.denominator % p == 0:
        report.skipped = True
        report.skip_reason = "alpha or t outside Z_p"
        return report
    for j in range(k_max):
        num = alpha.numerator + alpha.denominator * j
        if num % p == 0:
            report.skipped = True
            report.skip_reason = f"p | alpha + {j}"
            return report

    def red(q: Fraction) -> int:
        return q.numerator * pow(q.denominator, -1, pk) % pk

    lhs_poch = Fraction(1)
    rhs_poch = Fraction(1)
    deriv = Fraction(0)
    shifted = alpha + t * p
    for k in range(1, k_max + 1):
        lhs_poch *= shifted + (k - 1)
        rhs_poch *= alpha + (k - 1)
        deriv += 1 / (alpha + (k - 1))
        lhs = red(lhs_poch)
        rhs = red(rhs_poch) * (1 + red(t) * p * red(deriv)) % pk
        report.checked += 1
        if lhs != rhs:
            report.failures += 1
            if report.first_failure_k is None:
                report.first_failure_k = k
    return report
