"""Morita's p-adic Gamma function mod p^k and its structural identities.

Gamma_p(n) = (-1)^n * prod_{1<=j<n, p∤j} j extends 1-Lipschitz-continuously to
Z_p, so a rational argument x in Z_p is evaluated at its integer representative
modulo p^k.  The identity suite exercises reflection, the functional equation,
Gauss multiplication and the first-order expansion at random points.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    Modulus,
    NotPAdic,
    Residue,
    factorial_padic,
    fermat_quotient,
    least_nonneg_residue,
    rational_mod,
)

# Above this many table entries, fall back to direct O(n) products per call.
DEFAULT_TABLE_BUDGET = 2**31


class GammaContext:
    """Immutable per-(p, k) evaluation context with an optional prefix table."""

    def __init__(self, modulus: Modulus, table_budget: int = DEFAULT_TABLE_BUDGET):
        self.modulus = modulus
        p, pk = modulus.p, modulus.pk
        self.table: list[int] | None = None
        if pk <= table_budget:
            table = [1] * (pk + 1)
            prod = 1
            for n in range(1, pk + 1):
                j = n - 1
                if j >= 1 and j % p:
                    prod = prod * j % pk
                table[n] = prod if n % 2 == 0 else pk - prod
            table[0] = 1
            self.table = table

    def _harmonic_mod_p(self, n: int) -> int:
        p = self.modulus.p
        total = 0
        for k in range(1, n + 1):
            total = (total + pow(k, -1, p)) % p
        return total


def gamma_p_of_int(n: int, ctx: GammaContext) -> Residue:
    """Gamma_p at a nonnegative integer; Gamma_p(0) = 1."""
    m = ctx.modulus
    if ctx.table is not None and n <= m.pk:
        return Residue(ctx.table[n], m)
    p, pk = m.p, m.pk
    prod = 1
    for j in range(1, n):
        if j % p:
            prod = prod * j % pk
    return Residue(prod if n % 2 == 0 else -prod % pk, m)


def gamma_p(x: Fraction | int, ctx: GammaContext) -> Residue:
    """Gamma_p at a rational x in Z_p, via its representative mod p^k."""
    m = ctx.modulus
    n = rational_mod(Fraction(x), m.pk, m.p)
    return gamma_p_of_int(n, ctx)


def gamma_derivative_at_zero(ctx: GammaContext) -> int:
    """Gamma_p'(0) mod p: the negated Wilson quotient -((p-1)! + 1)/p."""
    m = ctx.modulus
    p = m.p
    fact = factorial_padic(p - 1, Modulus(p, 2)).residue_mod(2)
    return -((fact + 1) // p) % p


@dataclass
class IdentityResult:
    name: str
    checked: int = 0
    failures: int = 0
    first_counterexample: str | None = None

    def record(self, ok: bool, detail: str):
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = detail


@dataclass
class SuiteReport:
    p: int
    k: int
    identities: list[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.failures == 0 for r in self.identities)


def _sample_rationals(rng: random.Random, p: int, count: int) -> list[Fraction]:
    # Small-denominator rationals in Z_p (denominator coprime to p).
    out = []
    while len(out) < count:
        den = rng.randint(1, 12)
        if den % p == 0:
            continue
        num = rng.randint(-6 * den, 6 * den)
        out.append(Fraction(num, den))
    return out


def derive_rng(seed: int, *tags) -> random.Random:
    """Deterministic per-(seed, tags) RNG, stable across processes."""
    material = ":".join([str(seed), *map(str, tags)]).encode()
    digest = hashlib.sha256(material).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def gamma_identity_suite(p: int, k: int, samples: int, seed: int) -> SuiteReport:
    """Check the four Gamma_p identities at pseudorandom points of Z_p."""
    m = Modulus(p, k)
    ctx = GammaContext(m)
    pk = m.pk
    rng = derive_rng(seed, "gamma-suite", p, k)
    report = SuiteReport(p=p, k=k)

    reflection = IdentityResult("reflection")
    functional = IdentityResult("functional_equation")
    gauss = IdentityResult("gauss_multiplication")
    expansion = IdentityResult("expansion")

    for x in _sample_rationals(rng, p, samples):
        # (i) reflection: Gamma_p(x) Gamma_p(1-x) = (-1)^(p - <-x>_p)
        lhs = gamma_p(x, ctx).value * gamma_p(1 - x, ctx).value % pk
        rhs = (-1) ** (p - least_nonneg_residue(-x, p)) % pk
        reflection.record(lhs == rhs, f"x={x}: {lhs} != {rhs}")

        # (ii) functional equation: Gamma_p(x+1)/Gamma_p(x) = -x or -1
        lhs = gamma_p(x + 1, ctx).value
        if least_nonneg_residue(x, p) == 0:
            rhs = -gamma_p(x, ctx).value % pk
        else:
            rhs = -rational_mod(x, pk, p) * gamma_p(x, ctx).value % pk
        functional.record(lhs == rhs, f"x={x}: {lhs} != {rhs}")

        # (iii) Gauss multiplication for m' in {2, 3, 4, 6}
        for mult in (2, 3, 4, 6):
            _check_gauss(ctx, x, mult, gauss)

    if k >= 2:
        # first-order expansion: a mod-p^2 statement, compared mod p^2 even
        # when the context carries more digits
        p2 = p * p
        gprime = gamma_derivative_at_zero(ctx)
        pairs = list(
            zip(_sample_rationals(rng, p, samples), _sample_rationals(rng, p, samples))
        )
        for alpha, t in pairs:
            if alpha == 0 and t == 1:
                # This point is where Gamma_p'(0) itself was read off; testing
                # it would be circular.
                continue
            a = least_nonneg_residue(-alpha, p)
            h = ctx._harmonic_mod_p(p - 1 - a)
            lhs = gamma_p(alpha + t * p, ctx).value % p2
            factor = (1 + rational_mod(t, p2, p) * p * (gprime + h)) % p2
            rhs = gamma_p(alpha, ctx).value * factor % p2
            expansion.record(lhs == rhs, f"alpha={alpha}, t={t}: {lhs} != {rhs}")

    report.identities = [reflection, functional, gauss, expansion]
    return report


def teichmuller(a: int, p: int, pk: int) -> int:
    """The Teichmuller representative of a mod p^k: the (p-1)th root of unity
    congruent to a mod p."""
    x = a % pk
    for _ in range(8):  # p^8 digits of convergence, far beyond k <= 3
        x = pow(x, p, pk)
    return x


def padic_power_of_unit_one(base: int, e: Fraction, m: Modulus) -> int:
    """base^e mod p^k for base = 1 (mod p) and a p-adic integer exponent e."""
    p, pk = m.p, m.pk
    z = base - 1
    res = 1 + rational_mod(e, pk, p) * z
    if m.k >= 3:
        res += rational_mod(e * (e - 1) / 2, pk, p) * z * z
    return res % pk


def _check_gauss(ctx: GammaContext, x: Fraction, mult: int, result: IdentityResult):
    """Gauss multiplication with exponent e = ((1-p)*mult*x + <-mult*x>_p)/p.

    mult^e is multivalued for a p-adic exponent; the well-defined reading that
    makes the identity hold at every x in Z_p is the Teichmuller split
    omega(mult)^<-mult*x>_p * <mult>^e, where <mult> = mult/omega(mult) = 1
    (mod p) admits an honest p-adic power.
    """
    m = ctx.modulus
    p, pk = m.p, m.pk
    alpha = mult * x
    a = least_nonneg_residue(-alpha, p)
    e = (Fraction(1 - p) * alpha + a) / p
    lhs = 1
    for j in range(mult):
        lhs = lhs * gamma_p(x + Fraction(j, mult), ctx).value % pk
    core = gamma_p(alpha, ctx).value
    for j in range(mult):
        core = core * gamma_p(Fraction(j, mult), ctx).value % pk
    om = teichmuller(mult, p, pk)
    unit_one = mult * pow(om, -1, pk) % pk
    factor = pow(om, a, pk) * padic_power_of_unit_one(unit_one, e, m) % pk
    ok = lhs == core * factor % pk
    result.record(ok, f"x={x}, m={mult}")
