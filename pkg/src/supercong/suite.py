"""Congruence case registry and execution engine.

Each case packages one congruence: an applicability predicate on the prime, a
stated modulus exponent, and an evaluator producing both sides as residues.
Sampled cases (universally quantified over p-adic integers) draw 25
deterministic small-denominator rationals per prime and report the number of
failing samples on both sides, so a clean run serializes as "0" = "0".
"""

from __future__ import annotations

import fnmatch
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .arith import (
    FactorialTable,
    Modulus,
    NotInvertible,
    PrecisionLoss,
    fermat_quotient,
    least_nonneg_residue,
    legendre_symbol,
    primes_in,
    rational_mod,
)
from .hyperseries import (
    BinomialFactor,
    BinomialSumSpec,
    pFq,
    truncated_pFq_padic,
    weighted_binomial_sum,
)
from .padic_gamma import _sample_rationals, derive_rng
from .special import (
    FORM_4P_X2_27Y2,
    FORM_P_X2_3Y2,
    FORM_P_X2_4Y2,
    bernoulli_poly_mod_p,
    euler_number_mod_p,
    represent_form,
)

VERSION = "0.1.0"
SAMPLES_PER_CASE = 25


class SkipCase(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


@dataclass(frozen=True)
class CongruenceCase:
    id: str
    status: str  # theorem | corollary | remark | conjecture
    exponent: int
    description: str
    needs: frozenset = frozenset()


@dataclass(frozen=True)
class CaseResult:
    case: str
    p: int
    exp: int
    lhs: str
    rhs: str
    passed: bool
    skipped_reason: str | None = None
    note: str | None = None


@dataclass
class Report:
    results: list[CaseResult] = field(default_factory=list)
    seed: int = 0

    @property
    def summary(self) -> dict:
        skipped = sum(1 for r in self.results if r.skipped_reason is not None)
        passed = sum(1 for r in self.results if r.skipped_reason is None and r.passed)
        failed = len(self.results) - skipped - passed
        return {
            "total": len(self.results),
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
            "seed": self.seed,
            "version": VERSION,
        }

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0


class PrimeContext:
    """Per-prime shared state: modulus p^3 and a factorial table covering every
    binomial argument up to 4(p-1), plus memoized sum evaluations."""

    def __init__(self, p: int, seed: int):
        self.p = p
        self.seed = seed
        self.m3 = Modulus(p, 3)
        self.m2 = Modulus(p, 2)
        self.table = FactorialTable(self.m3, 4 * (p - 1) + 1)
        self._sums: dict = {}

    def bsum(self, exp, wn, wd, factors, base, k_hi=None, k_min=0) -> int:
        """Residue mod p^exp of sum_{k=k_min}^{k_hi} w(k) prod C(.,.) / base^k."""
        k_hi = self.p - 1 if k_hi is None else k_hi
        key = (wn, wd, factors, base, k_hi, k_min)
        pa = self._sums.get(key)
        if pa is None:
            spec = BinomialSumSpec(wn, wd, factors, base, k_hi, k_min)
            pa = weighted_binomial_sum(spec, self.m3, self.table)
            self._sums[key] = pa
        return pa.residue_mod(exp)

    def binom(self, n: int, r: int, exp: int) -> int:
        v, u = self.table.binomial(n, r)
        if u == 0:
            return 0
        return u * self.p**v % self.p**exp if v < exp else 0

    def legendre(self, a: int) -> int:
        return legendre_symbol(a, self.p)


_C21 = (BinomialFactor(2, 1),)
_C21_31 = (BinomialFactor(2, 1), BinomialFactor(3, 1))
_C21_42 = (BinomialFactor(2, 1), BinomialFactor(4, 2))
_C42S1_21 = (BinomialFactor(4, 2, 1), BinomialFactor(2, 1))
_C21SQ = (BinomialFactor(2, 1), BinomialFactor(2, 1))
_C21SQ_31 = (BinomialFactor(2, 1), BinomialFactor(2, 1), BinomialFactor(3, 1))
_C21SQ_42 = (BinomialFactor(2, 1), BinomialFactor(2, 1), BinomialFactor(4, 2))
_C21SQ_41 = (BinomialFactor(2, 1), BinomialFactor(2, 1), BinomialFactor(4, 1))
_ONE = (1,)


def _sign_pm1(p: int, sym: int) -> int:
    # (-1)^((p-1)/2) etc. fed from a Legendre value
    return sym


# ---------------------------------------------------------------------------
# evaluators: (ctx, exp) -> (lhs_residue, rhs_residue, note)


def _mortenson(num: Fraction, disc: int):
    def ev(ctx: PrimeContext, exp: int):
        p = ctx.p
        m = Modulus(p, exp)
        lhs = truncated_pFq_padic(pFq([num, 1 - num], [1], 1, p - 1), m).value
        return lhs, ctx.legendre(disc) % m.pk, None

    return ev


def _sun_e1(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = ctx.bsum(exp, _ONE, _ONE, _C21SQ, 16, k_hi=(p - 1) // 2)
    e = euler_number_mod_p(p - 3, p)
    rhs = ((-1) ** ((p - 1) // 2) + p * p * e) % pk
    return lhs, rhs, None


def _sun_e2(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = ctx.bsum(exp, _ONE, _ONE, _C21SQ, 16, k_min=(p + 1) // 2)
    rhs = -2 * p * p * euler_number_mod_p(p - 3, p) % pk
    return lhs, rhs, None


def _zhsun_uni(ctx: PrimeContext, exp: int):
    p = ctx.p
    m = Modulus(p, exp)
    rng = derive_rng(ctx.seed, "ZHSUN-UNI", p)
    bad = 0
    for alpha in _sample_rationals(rng, p, SAMPLES_PER_CASE):
        lhs = truncated_pFq_padic(pFq([alpha, 1 - alpha], [1], 1, p - 1), m).value
        rhs = (-1) ** least_nonneg_residue(-alpha, p) % m.pk
        if lhs != rhs:
            bad += 1
    return bad, 0, None


def _clausen(ctx: PrimeContext, exp: int):
    p = ctx.p
    m = Modulus(p, exp)
    rng = derive_rng(ctx.seed, "CLAUSEN", p)
    alphas = _sample_rationals(rng, p, SAMPLES_PER_CASE)
    zs = _sample_rationals(rng, p, SAMPLES_PER_CASE)
    bad = 0
    for alpha, z in zip(alphas, zs):
        f = truncated_pFq_padic(pFq([alpha, 1 - alpha], [1], z, p - 1), m).value
        rhs = truncated_pFq_padic(
            pFq([alpha, 1 - alpha, Fraction(1, 2)], [1, 1], 4 * z * (1 - z), p - 1), m
        ).value
        if f * f % m.pk != rhs:
            bad += 1
    return bad, 0, None


def _thm_1f0(ctx: PrimeContext, exp: int):
    p = ctx.p
    m = Modulus(p, exp)
    pk = m.pk
    rng = derive_rng(ctx.seed, "THM-1F0", p)
    bad = 0
    accepted = 0
    attempts = 0
    while accepted < SAMPLES_PER_CASE and attempts < 40 * SAMPLES_PER_CASE:
        attempts += 1
        x = _sample_rationals(rng, p, 1)[0]
        t = _sample_rationals(rng, p, 1)[0]
        a = least_nonneg_residue(-x, p)
        s = (x + a) / p
        if s.denominator % p == 0 or least_nonneg_residue(s, p) == 0:
            continue  # theorem requires p not dividing s
        accepted += 1
        lhs = truncated_pFq_padic(pFq([x], [], t, p - 1), m).value
        u = rational_mod(1 - t, pk, p)
        sm = rational_mod(s, pk, p)
        tm = rational_mod(t, pk, p)
        rhs = pow(u, a, pk) * (1 + sm - sm * pow(u, p, pk) - sm * pow(tm, p, pk)) % pk
        u1 = u % p
        sigma = 0
        for k in range(1, a + 1):
            sigma = (sigma + pow(u1, a - k, p) * pow(k, -1, p)) % p
        rhs = (rhs - sm * tm * p * sigma) % pk
        if lhs != rhs:
            bad += 1
    if accepted < SAMPLES_PER_CASE:
        raise SkipCase("could not draw enough samples with p not dividing s")
    return bad, 0, None


def _mt_sqrt(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    rng = derive_rng(ctx.seed, "MT-SQRT", p)
    # C(1/2, k) for k = 0, 1, 2: enough for exponents up to 3
    half_binom = [Fraction(1), Fraction(1, 2), Fraction(-1, 8)]
    bad = 0
    for _ in range(SAMPLES_PER_CASE):
        a = rng.randint(2, 10**6)
        if a % p == 0:
            continue
        lhs = pow(a, (p - 1) // 2, pk)
        pq = (pow(a, p - 1, pk) - 1) % pk  # p*q_p(a) = a^(p-1) - 1
        acc = 0
        for k in range(exp):
            acc = (acc + rational_mod(half_binom[k], pk, p) * pow(pq, k, pk)) % pk
        rhs = ctx.legendre(a) * acc % pk
        if lhs != rhs:
            bad += 1
    return bad, 0, None


def _thm_48(ctx: PrimeContext, exp: int):
    lhs = ctx.bsum(exp, _ONE, _ONE, _C42S1_21, 48)
    return lhs, 0, None


def _conj_48_b3(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = ctx.bsum(exp, _ONE, _ONE, _C42S1_21, 48)
    b = bernoulli_poly_mod_p(p - 2, Fraction(1, 3), p)
    rhs = rational_mod(Fraction(5, 12), pk, p) * p * p * b % pk
    return lhs, rhs, None


def _conj_48_dual(ctx: PrimeContext, exp: int):
    # negative-valuation summands: exact big-rational path, then reduce
    p = ctx.p
    pk = p**exp
    total = Fraction(0)
    for k in range(1, p):
        total += Fraction(48**k, k * (2 * k - 1) * comb(4 * k, 2 * k) * comb(2 * k, k))
    lhs = rational_mod(p * p * total, pk, p)
    chi3 = 1 if p % 3 == 1 else -1  # (p/3)
    rhs = (4 * chi3 + 4 * p) % pk
    return lhs, rhs, None


def _s24(ctx, exp):
    return ctx.bsum(exp, _ONE, _ONE, _C21_31, 24)


def _thm_m1(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = _s24(ctx, exp)
    if p % 3 == 1:
        rhs = ctx.binom((2 * p - 2) // 3, (p - 1) // 3, exp)
    else:
        b = ctx.binom((2 * p + 2) // 3, (p + 1) // 3, exp)
        rhs = p * pow(b, -1, pk) % pk
    return lhs, rhs, None


def _thm_m1p(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = ctx.bsum(exp, (1, 1), _ONE, _C21_31, 24)
    if p % 3 == 1:
        b = ctx.binom((2 * p - 2) // 3, (p - 1) // 3, exp)
        rhs = p * pow(b, -1, pk) % pk
    else:
        rhs = -(p + 1) * ctx.binom((2 * p + 2) // 3, (p + 1) // 3, exp) % pk
    return lhs, rhs, None


def _cor_den(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = ctx.bsum(exp, _ONE, (1, 1), _C21_31, 24)
    eps = 1 if p % 3 == 1 else -1  # (p/3)
    rhs = ctx.binom(2 * (p - eps) // 3, (p - eps) // 3, exp) * pow(2, -1, pk) % pk
    return lhs, rhs, None


def _cor_x(ctx: PrimeContext, exp: int):
    p = ctx.p
    if p % 3 != 1:
        raise SkipCase("p != 1 (mod 3)")
    pk = p**exp
    lhs = ctx.bsum(exp, (2, 1), _ONE, _C21_31, 24)
    rep = represent_form(p, FORM_4P_X2_27Y2, (3, 2))
    return lhs, rep.x % pk, None


def _rem_m1_216(ctx: PrimeContext, exp: int):
    pk = ctx.p**exp
    lhs = _s24(ctx, exp)
    chi3 = 1 if ctx.p % 3 == 1 else -1  # (p/3)
    rhs = chi3 * ctx.bsum(exp, _ONE, _ONE, _C21_31, -216) % pk
    return lhs, rhs, None


def _rem_sun13(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    bad = 0
    for mm in (24, 48, 72, -216):
        lhs = ctx.bsum(exp, _ONE, (1, 1), _C21_31, mm)
        tail = ctx.bsum(exp, (0, 1), _ONE, _C21_31, mm)
        rhs = (p + rational_mod(Fraction(mm - 27, 6), pk, p) * tail) % pk
        if lhs != rhs:
            bad += 1
    return bad, 0, None


def _sq_192(ctx: PrimeContext, exp: int):
    pk = ctx.p**exp
    lhs = _s24(ctx, exp) ** 2 % pk
    rhs = ctx.bsum(exp, _ONE, _ONE, _C21SQ_31, -192)
    return lhs, rhs, None


def _cor_192(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = ctx.bsum(exp, _ONE, _ONE, _C21SQ_31, -192)
    if p % 3 == 1:
        rep = represent_form(p, FORM_4P_X2_27Y2, (3, 1))
        rhs = (rep.x * rep.x - 2 * p) % pk
    else:
        rhs = 0
    return lhs, rhs, None


def _cor_1f0d(ctx: PrimeContext, exp: int):
    p = ctx.p
    m = Modulus(p, exp)
    a = truncated_pFq_padic(pFq([Fraction(1, 3)], [], 2, p - 1), m).value
    b = truncated_pFq_padic(pFq([Fraction(2, 3)], [], 2, p - 1), m).value
    return (a - b) % m.pk, (pow(2, p, m.pk) - 2) % m.pk, None


def _s48b(ctx, exp):
    return ctx.bsum(exp, _ONE, _ONE, _C21_42, 48)


def _thm_s48(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    q2, q3 = fermat_quotient(2, p), fermat_quotient(3, p)
    bad = 0
    if p % 3 == 1:
        b = ctx.binom((p - 1) // 2, (p - 1) // 6, exp)
        corr = (1 + p * (2 * q2 * pow(3, -1, p) - 3 * q3 * pow(4, -1, p))) % pk
        ok1 = _s48b(ctx, exp) == b * corr % pk
        ok2 = ctx.bsum(exp, (1, 2), _ONE, _C21_42, 48) == p * pow(b, -1, pk) % pk
    else:
        b = ctx.binom((p + 1) // 2, (p + 1) // 6, exp)
        ok1 = _s48b(ctx, exp) == 3 * p * pow(2 * b, -1, pk) % pk
        corr = (
            -rational_mod(Fraction(2, 3), pk, p)
            - rational_mod(Fraction(2, 3), pk, p) * p
            - p * (4 * q2 * pow(9, -1, p) % p)
            + p * (q3 * pow(2, -1, p) % p)
        ) % pk
        ok2 = ctx.bsum(exp, (1, 2), _ONE, _C21_42, 48) == b * corr % pk
    bad = (0 if ok1 else 1) + (0 if ok2 else 1)
    return bad, 0, None


def _conj_s1(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    bad = 0
    if p % 3 == 1:
        rep = represent_form(p, FORM_P_X2_3Y2, (3, 1))
        x = rep.x
        rhs1 = rational_mod(2 * x - Fraction(p, 2 * x), pk, p)
        if _s48b(ctx, exp) != rhs1:
            bad += 1
        if ctx.bsum(exp, (1, 1), _ONE, _C21_42, 48) != x % pk:
            bad += 1
    else:
        b = ctx.binom((p + 1) // 2, (p + 1) // 6, exp)
        if _s48b(ctx, exp) != 3 * p * pow(2 * b, -1, pk) % pk:
            bad += 1
    return bad, 0, None


def _rem_bew_48(ctx: PrimeContext, exp: int):
    p = ctx.p
    if p % 3 != 1:
        raise SkipCase("p != 1 (mod 6)")
    pk = p**exp
    rep = represent_form(p, FORM_P_X2_3Y2, (3, 1))
    x = rep.x
    q2, q3 = fermat_quotient(2, p), fermat_quotient(3, p)
    lhs = ctx.binom((p - 1) // 2, (p - 1) // 6, exp)
    corr = (1 - p * (2 * q2 * pow(3, -1, p) % p) + p * (3 * q3 * pow(4, -1, p) % p)) % pk
    rhs = rational_mod(2 * x - Fraction(p, 2 * x), pk, p) * corr % pk
    return lhs, rhs, None


def _sq_144(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = _s48b(ctx, exp) ** 2 % pk
    rhs = ctx.bsum(exp, _ONE, _ONE, _C21SQ_42, -144)
    note = None
    if p < 100:
        printed = ctx.bsum(exp, _ONE, _ONE, _C21SQ_41, -144)
        note = f"printed C(4k,k) variant {'matches' if printed == lhs else 'differs'}"
    return lhs, rhs, note


def _cor_144(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = ctx.bsum(exp, _ONE, _ONE, _C21SQ_42, -144)
    if p % 3 == 1:
        rep = represent_form(p, FORM_P_X2_3Y2, (3, 1))
        rhs = (4 * rep.x * rep.x - 2 * p) % pk
    else:
        rhs = 0
    return lhs, rhs, None


def _s72(ctx, exp):
    return ctx.bsum(exp, _ONE, _ONE, _C21_42, 72)


def _thm_s72(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    q2 = fermat_quotient(2, p)
    e6 = ctx.legendre(6)
    bad = 0
    if p % 4 == 1:
        b = ctx.binom((p - 1) // 2, (p - 1) // 4, exp)
        corr = (1 - p * (q2 * pow(2, -1, p) % p)) % pk
        ok1 = _s72(ctx, exp) == e6 * b * corr % pk
        ok2 = ctx.bsum(exp, (-1, 2), _ONE, _C21_42, 72) == -e6 * p * pow(b, -1, pk) % pk
    else:
        b = ctx.binom((p + 1) // 2, (p + 1) // 4, exp)
        ok1 = _s72(ctx, exp) == 2 * p * e6 * pow(3 * b, -1, pk) % pk
        corr = (
            rational_mod(Fraction(3, 2), pk, p)
            + rational_mod(Fraction(3, 2), pk, p) * p
            - p * (3 * q2 * pow(4, -1, p) % p)
        ) % pk
        ok2 = ctx.bsum(exp, (-1, 2), _ONE, _C21_42, 72) == e6 * b * corr % pk
    bad = (0 if ok1 else 1) + (0 if ok2 else 1)
    return bad, 0, None


def _conj_s2(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    e6 = ctx.legendre(6)
    bad = 0
    if p % 4 == 1:
        rep = represent_form(p, FORM_P_X2_4Y2, (4, 1))
        x = rep.x
        if _s72(ctx, exp) != e6 * rational_mod(2 * x - Fraction(p, 2 * x), pk, p) % pk:
            bad += 1
        if ctx.bsum(exp, (1, -1), _ONE, _C21_42, 72) != e6 * x % pk:
            bad += 1
    else:
        b = ctx.binom((p + 1) // 2, (p + 1) // 4, exp)
        if _s72(ctx, exp) != 2 * p * e6 * pow(3 * b, -1, pk) % pk:
            bad += 1
    return bad, 0, None


def _rem_bew_72(ctx: PrimeContext, exp: int):
    p = ctx.p
    if p % 4 != 1:
        raise SkipCase("p != 1 (mod 4)")
    pk = p**exp
    rep = represent_form(p, FORM_P_X2_4Y2, (4, 1))
    x = rep.x
    q2 = fermat_quotient(2, p)
    lhs = ctx.binom((p - 1) // 2, (p - 1) // 4, exp)
    corr = (1 + p * (q2 * pow(2, -1, p) % p)) % pk
    # the p/(2x) reading; the 1/(2x) variant fails every prime (see note)
    rhs = rational_mod(2 * x - Fraction(p, 2 * x), pk, p) * corr % pk
    note = None
    if p < 100:
        alt = rational_mod(2 * x - Fraction(1, 2 * x), pk, p) * corr % pk
        note = f"1/(2x) variant {'matches' if alt == lhs else 'differs'}"
    return lhs, rhs, note


def _sq_648(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = _s72(ctx, exp) ** 2 % pk
    rhs = ctx.bsum(exp, _ONE, _ONE, _C21SQ_42, 648)
    note = None
    if p < 100:
        printed = ctx.bsum(exp, _ONE, _ONE, _C21SQ_41, 648)
        note = f"printed C(4k,k) variant {'matches' if printed == lhs else 'differs'}"
    return lhs, rhs, note


def _cor_648(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    lhs = ctx.bsum(exp, _ONE, _ONE, _C21SQ_42, 648)
    if p % 4 == 1:
        rep = represent_form(p, FORM_P_X2_4Y2, (4, 1))
        rhs = (4 * rep.x * rep.x - 2 * p) % pk
    else:
        rhs = 0
    return lhs, rhs, None


def _wolst(ctx: PrimeContext, exp: int):
    p = ctx.p
    pk = p**exp
    total = 0
    for k in range(1, p):
        total = (total + pow(k, -1, pk)) % pk
    return total, 0, None


_EVALUATORS = {
    "MORT-1": _mortenson(Fraction(1, 2), -1),
    "MORT-2": _mortenson(Fraction(1, 3), -3),
    "MORT-3": _mortenson(Fraction(1, 4), -2),
    "MORT-4": _mortenson(Fraction(1, 6), -1),
    "SUN-E1": _sun_e1,
    "SUN-E2": _sun_e2,
    "ZHSUN-UNI": _zhsun_uni,
    "THM-48": _thm_48,
    "CONJ-48-B3": _conj_48_b3,
    "CONJ-48-DUAL": _conj_48_dual,
    "THM-M1": _thm_m1,
    "REM-M1-216": _rem_m1_216,
    "CLAUSEN": _clausen,
    "SQ-192": _sq_192,
    "COR-192": _cor_192,
    "THM-M1P": _thm_m1p,
    "COR-DEN": _cor_den,
    "COR-X": _cor_x,
    "REM-SUN13": _rem_sun13,
    "THM-1F0": _thm_1f0,
    "COR-1F0D": _cor_1f0d,
    "CONJ-S1": _conj_s1,
    "THM-S48": _thm_s48,
    "COR-144": _cor_144,
    "SQ-144": _sq_144,
    "CONJ-S2": _conj_s2,
    "THM-S72": _thm_s72,
    "SQ-648": _sq_648,
    "COR-648": _cor_648,
    "WOLST": _wolst,
    "REM-BEW-48": _rem_bew_48,
    "REM-BEW-72": _rem_bew_72,
    "MT-SQRT": _mt_sqrt,
}

_CASES = [
    CongruenceCase("MORT-1", "theorem", 2, "2F1[1/2,1/2;1|1]_{p-1} = (-1/p) mod p^2"),
    CongruenceCase("MORT-2", "theorem", 2, "2F1[1/3,2/3;1|1]_{p-1} = (-3/p) mod p^2"),
    CongruenceCase("MORT-3", "theorem", 2, "2F1[1/4,3/4;1|1]_{p-1} = (-2/p) mod p^2"),
    CongruenceCase("MORT-4", "theorem", 2, "2F1[1/6,5/6;1|1]_{p-1} = (-1/p) mod p^2"),
    CongruenceCase("SUN-E1", "theorem", 3,
                   "sum_{k<=(p-1)/2} C(2k,k)^2/16^k = (-1)^((p-1)/2) + p^2 E_{p-3}",
                   frozenset({"euler"})),
    CongruenceCase("SUN-E2", "theorem", 3,
                   "sum_{p/2<k<p} C(2k,k)^2/16^k = -2 p^2 E_{p-3}", frozenset({"euler"})),
    CongruenceCase("ZHSUN-UNI", "theorem", 2,
                   "2F1[a,1-a;1|1]_{p-1} = (-1)^<-a>_p, sampled a",
                   frozenset({"sampling"})),
    CongruenceCase("THM-48", "theorem", 2, "sum C(4k,2k+1)C(2k,k)/48^k = 0 mod p^2"),
    CongruenceCase("CONJ-48-B3", "conjecture", 3,
                   "sum C(4k,2k+1)C(2k,k)/48^k = (5/12)p^2 B_{p-2}(1/3) mod p^3",
                   frozenset({"bernoulli"})),
    CongruenceCase("CONJ-48-DUAL", "conjecture", 2,
                   "p^2 sum_{k>=1} 48^k/(k(2k-1)C(4k,2k)C(2k,k)) = 4(p/3)+4p mod p^2"),
    CongruenceCase("THM-M1", "theorem", 2,
                   "sum C(2k,k)C(3k,k)/24^k = central binomial branch mod p^2"),
    CongruenceCase("REM-M1-216", "remark", 2,
                   "sum C(2k,k)C(3k,k)/24^k = (p/3) sum C(2k,k)C(3k,k)/(-216)^k"),
    CongruenceCase("CLAUSEN", "theorem", 2,
                   "(2F1[a,1-a;1|z])^2 = 3F2[a,1-a,1/2;1,1|4z(1-z)], sampled a,z",
                   frozenset({"sampling"})),
    CongruenceCase("SQ-192", "theorem", 2,
                   "(sum C(2k,k)C(3k,k)/24^k)^2 = sum C(2k,k)^2 C(3k,k)/(-192)^k"),
    CongruenceCase("COR-192", "corollary", 2,
                   "sum C(2k,k)^2 C(3k,k)/(-192)^k = x^2-2p or 0 (4p=x^2+27y^2)",
                   frozenset({"quadratic-form"})),
    CongruenceCase("THM-M1P", "theorem", 2,
                   "sum (k+1)C(3k,k)C(2k,k)/24^k = companion branch mod p^2"),
    CongruenceCase("COR-DEN", "corollary", 1,
                   "sum C(2k,k)C(3k,k)/((k+1)24^k) = (1/2)C(2m/3,m/3), m=p-(p/3), mod p"),
    CongruenceCase("COR-X", "corollary", 2,
                   "sum (k+2)C(2k,k)C(3k,k)/24^k = x (4p=x^2+27y^2, x=2 mod 3)",
                   frozenset({"quadratic-form"})),
    CongruenceCase("REM-SUN13", "remark", 2,
                   "Catalan-weighted m^k relation for m in {24,48,72,-216}"),
    CongruenceCase("THM-1F0", "theorem", 2,
                   "1F0[x|t]_{p-1} expansion mod p^2, sampled x,t with p not dividing s",
                   frozenset({"sampling"})),
    CongruenceCase("COR-1F0D", "corollary", 2,
                   "1F0[1/3|2]_{p-1} - 1F0[2/3|2]_{p-1} = 2^p-2 mod p^2"),
    CongruenceCase("CONJ-S1", "conjecture", 2,
                   "sum C(2k,k)C(4k,2k)/48^k branches via p=x^2+3y^2",
                   frozenset({"quadratic-form"})),
    CongruenceCase("THM-S48", "theorem", 2,
                   "48^k sums via C((p+-1)/2,(p+-1)/6) with Fermat-quotient corrections"),
    CongruenceCase("COR-144", "corollary", 2,
                   "sum C(2k,k)^2 C(4k,2k)/(-144)^k = 4x^2-2p or 0 (p=x^2+3y^2)",
                   frozenset({"quadratic-form"})),
    CongruenceCase("SQ-144", "theorem", 2,
                   "(sum C(4k,2k)C(2k,k)/48^k)^2 = sum C(2k,k)^2 C(4k,2k)/(-144)^k"),
    CongruenceCase("CONJ-S2", "conjecture", 2,
                   "sum C(2k,k)C(4k,2k)/72^k branches via p=x^2+4y^2",
                   frozenset({"quadratic-form"})),
    CongruenceCase("THM-S72", "theorem", 2,
                   "72^k sums via C((p+-1)/2,(p+-1)/4) with Fermat-quotient corrections"),
    CongruenceCase("SQ-648", "theorem", 2,
                   "(sum C(4k,2k)C(2k,k)/72^k)^2 = sum C(2k,k)^2 C(4k,2k)/648^k"),
    CongruenceCase("COR-648", "corollary", 2,
                   "sum C(2k,k)^2 C(4k,2k)/648^k = 4x^2-2p or 0 (p=x^2+4y^2)",
                   frozenset({"quadratic-form"})),
    CongruenceCase("WOLST", "theorem", 2, "H_{p-1} = 0 mod p^2"),
    CongruenceCase("REM-BEW-48", "remark", 2,
                   "C((p-1)/2,(p-1)/6) = (2x-p/(2x))(1-(2p/3)q_2+(3p/4)q_3)",
                   frozenset({"quadratic-form"})),
    CongruenceCase("REM-BEW-72", "remark", 2,
                   "C((p-1)/2,(p-1)/4) = (2x-p/(2x))(1+(p/2)q_2)",
                   frozenset({"quadratic-form"})),
    CongruenceCase("MT-SQRT", "theorem", 2,
                   "a^((p-1)/2) = (a/p) sum_k C(1/2,k)(p q_p(a))^k mod p^n, sampled a",
                   frozenset({"sampling"})),
]


def registry() -> list[CongruenceCase]:
    return list(_CASES)


_CASE_BY_ID = {c.id: c for c in _CASES}

_SAMPLED = {"ZHSUN-UNI", "CLAUSEN", "THM-1F0", "MT-SQRT", "REM-SUN13",
            "THM-S48", "THM-S72", "CONJ-S1", "CONJ-S2"}


def evaluate_case(
    case: CongruenceCase, p: int, seed: int,
    exp_override: int | None = None, ctx: PrimeContext | None = None,
) -> CaseResult:
    exp = exp_override if exp_override is not None else case.exponent
    if ctx is None:
        ctx = PrimeContext(p, seed)
    note = None
    if exp_override is not None and exp_override != case.exponent:
        note = "exploratory exponent"
    try:
        lhs, rhs, ev_note = _EVALUATORS[case.id](ctx, exp)
    except SkipCase as e:
        return CaseResult(case.id, p, exp, "", "", True, e.reason, note)
    except (PrecisionLoss, NotInvertible) as e:
        return CaseResult(
            case.id, p, exp, "", "", True, f"not evaluable at exponent {exp}: {e}", note
        )
    except Exception as e:  # surfaced, never silently dropped
        return CaseResult(case.id, p, exp, "", "", False, None, f"error: {e!r}")
    if ev_note:
        note = ev_note if note is None else f"{note}; {ev_note}"
    return CaseResult(case.id, p, exp, str(lhs), str(rhs), lhs == rhs, None, note)


def match_cases(patterns: list[str] | None, statuses: list[str] | None = None):
    out = []
    for c in _CASES:
        if patterns and not any(fnmatch.fnmatchcase(c.id, pat) for pat in patterns):
            continue
        if statuses and c.status not in statuses:
            continue
        out.append(c)
    return out


def _run_prime(args) -> list[CaseResult]:
    case_ids, p, seed, exp_override = args
    ctx = PrimeContext(p, seed)
    return [
        evaluate_case(_CASE_BY_ID[cid], p, seed, exp_override, ctx)
        for cid in case_ids
    ]


def run_suite(
    patterns: list[str] | None,
    p_min: int,
    p_max: int,
    exp_override: int | None = None,
    jobs: int = 1,
    seed: int = 0,
    statuses: list[str] | None = None,
    flip_case: str | None = None,
) -> Report:
    """Evaluate every (selected case, prime in [p_min, p_max)) pair.

    The report ordering (case id, then p) and every residue string are
    independent of the worker count.
    """
    cases = match_cases(patterns, statuses)
    case_ids = [c.id for c in cases]
    primes = primes_in(p_min, p_max - 1)
    work = [(case_ids, p, seed, exp_override) for p in primes]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_prime, work, chunksize=8))
    else:
        chunks = [_run_prime(w) for w in work]
    results = [r for chunk in chunks for r in chunk]
    results.sort(key=lambda r: (r.case, r.p))
    if flip_case is not None:
        # debug hook for exit-code tests: invert the first matching comparison
        for i, r in enumerate(results):
            if r.case == flip_case and r.skipped_reason is None:
                results[i] = CaseResult(
                    r.case, r.p, r.exp, r.lhs, r.rhs, not r.passed, None, "flipped"
                )
                break
    return Report(results=results, seed=seed)
