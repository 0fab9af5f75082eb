"""Finite hypergeometric identities, their telescoping recurrences, and the
high-precision numeric check of the infinite series conjecture.

Every right-hand side that is printed as a Gamma quotient is handled as a
first-order ratio r(n) with RHS(n+1) = r(n) RHS(n), anchored at a base value
that is itself the directly summed LHS at n = 0.  This keeps the whole module
in exact rationals: the Gamma constants are irrational in isolation but the
full right side never is.
"""

from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .hyperseries import DivisionByZero


class PrecisionUnreachable(RuntimeError):
    """Tail bounds cannot certify the requested digits within the caps."""


# ---------------------------------------------------------------------------
# finite sums


def _hyp_sum(
    n: int,
    upper2: Fraction,
    lower: Fraction,
    z: Fraction,
    weight: Callable[[int, int], Fraction] | None = None,
) -> Fraction:
    """sum_{k=0}^n w(n,k) (-n)_k (upper2)_k / ((1)_k (lower)_k) z^k.

    The numerator zero check runs first: once (-n + k)(upper2 + k) = 0 every
    later term vanishes, so a lower Pochhammer zero beyond that point is never
    reached.  A lower zero at a live term is a registration bug.
    """
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        total += (weight(n, k) if weight else Fraction(1)) * term
        num = (-n + k) * (upper2 + k)
        if num == 0:
            break
        den = (k + 1) * (lower + k)
        if den == 0:
            raise DivisionByZero(k + 1, f"lower Pochhammer vanished at n={n}, k={k + 1}")
        term = term * num * z / den
    return total


@dataclass(frozen=True)
class Variant:
    """One concrete summand/RHS pair; families with a delta parameter hold two."""

    label: str
    lhs: Callable[[int], Fraction]
    rhs_base: Fraction
    ratio: Callable[[int], Fraction]


@dataclass(frozen=True)
class IdentityFamily:
    id: str
    description: str
    variants: tuple[Variant, ...]


def _f(n: int, d: int = 1) -> Fraction:
    return Fraction(n, d)


_Z43 = Fraction(4, 3)
_Z98 = Fraction(9, 8)
_Z89 = Fraction(8, 9)


def _s_variant(d: int) -> Variant:
    return Variant(
        f"delta={d}",
        lambda n: _hyp_sum(
            n,
            Fraction(1 - 2 * d, 2) - n,
            Fraction(-4 * n - 2 * d),
            _Z43,
            lambda n, k: Fraction(4 * n + 2 * d - k + 1, 2 * n + d + k + 1),
        ),
        Fraction(1) if d == 0 else Fraction(3, 2),
        lambda n: Fraction(
            9 * (2 * n + d + 1) * (2 * n + d + 2),
            4 * (4 * n + 2 * d + 1) * (4 * n + 2 * d + 3),
        ),
    )


FAMILIES: dict[str, IdentityFamily] = {
    f.id: f
    for f in [
        IdentityFamily(
            "S",
            "balanced 3F2-type sum at z=4/3 with delta in {0,1}",
            (_s_variant(0), _s_variant(1)),
        ),
        IdentityFamily(
            "F",
            "2F1[-n, 1/3-n; -3n | 9/8] = (1/2)_n / (2^n (1/3)_n)",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(n, _f(1, 3) - n, _f(-3 * n), _Z98),
                    Fraction(1),
                    lambda n: Fraction(3 * (2 * n + 1), 4 * (3 * n + 1)),
                ),
            ),
        ),
        IdentityFamily(
            "G",
            "2F1[-n, -1/3-n; -3n-1 | 9/8] = (5/6)_n / (2^n (2/3)_n)",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(n, _f(-1, 3) - n, _f(-3 * n - 1), _Z98),
                    Fraction(1),
                    lambda n: Fraction(6 * n + 5, 4 * (3 * n + 2)),
                ),
            ),
        ),
        IdentityFamily(
            "J",
            "(3n+k+2)-weighted sum at z=9/8",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(
                        n, _f(1, 3) - n, _f(-3 * n), _Z98,
                        lambda n, k: Fraction(3 * n + k + 2),
                    ),
                    Fraction(2),
                    lambda n: Fraction(6 * n + 7, 4 * (3 * n + 1)),
                ),
            ),
        ),
        IdentityFamily(
            "K",
            "(3n+k+3)-weighted sum at z=9/8",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(
                        n, _f(-1, 3) - n, _f(-3 * n - 1), _Z98,
                        lambda n, k: Fraction(3 * n + k + 3),
                    ),
                    Fraction(3),
                    lambda n: Fraction(3 * (2 * n + 3), 4 * (3 * n + 2)),
                ),
            ),
        ),
        IdentityFamily(
            "Q43-1",
            "2F1[-n, 1/2-n; -4n | 4/3] = (9/16)^n (2/3)_{2n} / (1/2)_{2n}",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(n, _f(1, 2) - n, _f(-4 * n), _Z43),
                    Fraction(1),
                    lambda n: Fraction(
                        (3 * n + 1) * (6 * n + 5), 2 * (4 * n + 1) * (4 * n + 3)
                    ),
                ),
            ),
        ),
        IdentityFamily(
            "Q43-2",
            "2F1[-n, -1/2-n; -4n-2 | 4/3] = (3/4)^{2n+1} (2/3)_{2n+1} / (1/2)_{2n+1}",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(n, _f(-1, 2) - n, _f(-4 * n - 2), _Z43),
                    Fraction(1),
                    lambda n: Fraction(
                        (6 * n + 5) * (3 * n + 4), 2 * (4 * n + 3) * (4 * n + 5)
                    ),
                ),
            ),
        ),
        IdentityFamily(
            "Q43-3",
            "(2n+k+1)-weighted sum at z=4/3 = 3^{2n+1} (1/3)_{2n+1} / (16^n (1/2)_{2n})",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(
                        n, _f(1, 2) - n, _f(-4 * n), _Z43,
                        lambda n, k: Fraction(2 * n + k + 1),
                    ),
                    Fraction(1),
                    lambda n: Fraction(
                        (3 * n + 2) * (6 * n + 7), 2 * (4 * n + 1) * (4 * n + 3)
                    ),
                ),
            ),
        ),
        IdentityFamily(
            "Q43-4",
            "(2n+k+2)-weighted sum at z=4/3 = 9^{n+1} (1/3)_{2n+2} / (4^{2n+1} (1/2)_{2n+1})",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(
                        n, _f(-1, 2) - n, _f(-4 * n - 2), _Z43,
                        lambda n, k: Fraction(2 * n + k + 2),
                    ),
                    Fraction(2),
                    lambda n: Fraction(
                        (6 * n + 7) * (3 * n + 5), 2 * (4 * n + 3) * (4 * n + 5)
                    ),
                ),
            ),
        ),
        IdentityFamily(
            "Q89-1",
            "2F1[-n, 1/2-n; -4n | 8/9]",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(n, _f(1, 2) - n, _f(-4 * n), _Z89),
                    Fraction(1),
                    lambda n: Fraction(
                        4 * (3 * n + 1) * (3 * n + 2), 3 * (4 * n + 1) * (4 * n + 3)
                    ),
                ),
            ),
        ),
        IdentityFamily(
            "Q89-2",
            "2F1[-n, -1/2-n; -4n-2 | 8/9]",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(n, _f(-1, 2) - n, _f(-4 * n - 2), _Z89),
                    Fraction(1),
                    lambda n: Fraction(
                        (6 * n + 5) * (6 * n + 7), 3 * (4 * n + 3) * (4 * n + 5)
                    ),
                ),
            ),
        ),
        IdentityFamily(
            "Q89-3",
            "(10n-k+3)-weighted sum at z=8/9",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(
                        n, _f(1, 2) - n, _f(-4 * n), _Z89,
                        lambda n, k: Fraction(10 * n - k + 3),
                    ),
                    Fraction(3),
                    lambda n: Fraction(
                        (6 * n + 5) * (6 * n + 7), 3 * (4 * n + 1) * (4 * n + 3)
                    ),
                ),
            ),
        ),
        IdentityFamily(
            "Q89-4",
            "(10n-k+8)-weighted sum at z=8/9",
            (
                Variant(
                    "",
                    lambda n: _hyp_sum(
                        n, _f(-1, 2) - n, _f(-4 * n - 2), _Z89,
                        lambda n, k: Fraction(10 * n - k + 8),
                    ),
                    Fraction(8),
                    lambda n: Fraction(
                        4 * (3 * n + 4) * (3 * n + 5), 3 * (4 * n + 3) * (4 * n + 5)
                    ),
                ),
            ),
        ),
    ]
}


@dataclass
class FamilyReport:
    id: str
    checked: int = 0
    failures: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, detail: str):
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail

    @property
    def passed(self) -> bool:
        return self.failures == 0


def match_families(patterns: list[str] | None) -> list[str]:
    ids = list(FAMILIES)
    if not patterns:
        return ids
    out = [i for i in ids if any(fnmatch.fnmatchcase(i, pat) for pat in patterns)]
    return out


def verify_identity_family(family_id: str, n_max: int) -> FamilyReport:
    """Direct-summation LHS against ratio-built RHS for every n <= n_max."""
    fam = FAMILIES[family_id]
    report = FamilyReport(family_id)
    for var in fam.variants:
        rhs = var.rhs_base
        for n in range(n_max + 1):
            lhs = var.lhs(n)
            report.record(
                lhs == rhs, f"{family_id}{' ' + var.label if var.label else ''} n={n}"
            )
            rhs *= var.ratio(n)
    return report


# (id, variant index, c0(n), c1(n)) with c0(n) L(n) + c1(n) L(n+1) = 0
_RECURRENCES: list[tuple[str, int, Callable[[int], int], Callable[[int], int]]] = [
    ("S", 0, lambda n: 9 * (n + 1) * (2 * n + 1),
     lambda n: -2 * (4 * n + 1) * (4 * n + 3)),
    ("S", 1, lambda n: 9 * (n + 1) * (2 * n + 3),
     lambda n: -2 * (4 * n + 3) * (4 * n + 5)),
    ("F", 0, lambda n: -3 * (2 * n + 1), lambda n: 4 * (3 * n + 1)),
    ("G", 0, lambda n: -(6 * n + 5), lambda n: 4 * (3 * n + 2)),
    ("J", 0, lambda n: 6 * n + 7, lambda n: -4 * (3 * n + 1)),
    ("K", 0, lambda n: 3 * (2 * n + 3), lambda n: -4 * (3 * n + 2)),
]


def _harmonic_lhs(n: int, t: Fraction) -> Fraction:
    """sum_{k=0}^n (-n)_k/(1)_k t^k H_k."""
    total = Fraction(0)
    term = Fraction(1)
    h = Fraction(0)
    for k in range(n + 1):
        total += term * h
        if k == n:
            break
        term = term * (-n + k) * t / (k + 1)
        h += Fraction(1, k + 1)
    return total


def verify_recurrences(n_max: int, ids: list[str] | None = None) -> list[FamilyReport]:
    """Check every claimed telescoping recurrence against directly summed
    left sides; the harmonic family gets the inhomogeneous second-order
    recurrence in t, at 5 rational t points per n."""
    reports = []
    for fam_id, vi, c0, c1 in _RECURRENCES:
        if ids is not None and fam_id not in ids:
            continue
        var = FAMILIES[fam_id].variants[vi]
        label = f"{fam_id}{':' + var.label if var.label else ''}"
        report = FamilyReport(label)
        prev = var.lhs(0)
        for n in range(n_max):
            cur = var.lhs(n + 1)
            ok = c0(n) * prev + c1(n) * cur == 0
            report.record(ok, f"{label} n={n}")
            prev = cur
        reports.append(report)
    if ids is None or "H" in ids:
        report = FamilyReport("H:recurrence")
        ts = [Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-1), Fraction(5, 3)]
        for t in ts:
            vals = [_harmonic_lhs(n, t) for n in range(n_max + 2)]
            for n in range(n_max):
                lhs = (
                    (n + 1) * (t - 1) ** 2 * vals[n]
                    + (2 * n + 3) * (t - 1) * vals[n + 1]
                    + (n + 2) * vals[n + 2]
                )
                report.record(lhs == -t, f"H n={n} t={t}")
        reports.append(report)
    return reports


def harmonic_sum_identity_check(n_max: int, t_samples=None) -> FamilyReport:
    """sum_k (-n)_k/(1)_k t^k H_k = (1-t)^n H_n - sum_{k=1}^n (1-t)^{n-k}/k.

    Both sides are degree-<=n polynomials in t, so n+1 distinct sample points
    per n prove the identity; at least 5 are always used.
    """
    report = FamilyReport("H")
    h = [Fraction(0)]
    for k in range(1, n_max + 1):
        h.append(h[-1] + Fraction(1, k))
    for n in range(n_max + 1):
        count = max(n + 1, 5)
        ts = t_samples if t_samples is not None else [
            Fraction(j - 1) for j in range(count)
        ]
        for t in ts:
            lhs = _harmonic_lhs(n, t)
            u = 1 - t
            rhs = u**n * h[n]
            pw = Fraction(1)
            for k in range(n, 0, -1):
                rhs -= pw / k
                pw *= u
            report.record(lhs == rhs, f"n={n} t={t}")
    return report


# ---------------------------------------------------------------------------
# numeric series check


@dataclass
class NumericReport:
    digits: int
    lhs: Fraction = Fraction(0)
    rhs: Fraction = Fraction(0)
    lhs_tail_bound: Fraction = Fraction(0)
    rhs_remainder_bound: Fraction = Fraction(0)
    terms_used: int = 0
    passed: bool = False

    @property
    def difference(self) -> Fraction:
        return abs(self.lhs - self.rhs)

    @property
    def certified_bound(self) -> Fraction:
        return self.difference + self.lhs_tail_bound + self.rhs_remainder_bound


def _series_ratio(k: int) -> Fraction:
    # t_{k+1}/t_k for t_k = 48^k / (k (2k-1) C(4k,2k) C(2k,k))
    return Fraction(
        12 * k * (2 * k - 1) * (k + 1), (4 * k + 1) * (2 * k + 1) * (4 * k + 3)
    )


def _ratio_certificate() -> None:
    # 4*den(k) - 5*num(k) must have nonnegative coefficients, proving the
    # term ratio stays <= 4/5 for k >= 0 and hence tail(K) <= 4 t_K.
    num = [0, -60, 60, 120]  # 5 * 12k(2k-1)(k+1), constant term first
    den = [12, 88, 192, 128]  # 4 * (4k+1)(2k+1)(4k+3)
    diff = [d - n for d, n in zip(den, num)]
    if any(c < 0 for c in diff):
        raise PrecisionUnreachable("geometric tail certificate failed")


def _bernoulli_exact(n_max: int) -> list[Fraction]:
    bern = [Fraction(1)] + [Fraction(0)] * n_max
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        c = 1
        for j in range(n):
            acc += c * bern[j]
            c = c * (n + 1 - j) // (j + 1)
        bern[n] = -acc / (n + 1)
    return bern


def _hurwitz_zeta2(a: Fraction, n_cut: int, m_order: int, bern: list[Fraction]):
    """(zeta(2, a), remainder bound) by Euler-Maclaurin with exact rationals.

    For f(x) = (x+a)^-2 the correction terms are B_{2j} (N+a)^{-2j-1} and the
    remainder is bounded by |B_{2M+2}| (N+a)^{-2M-3} (f completely monotone).
    """
    total = Fraction(0)
    for n in range(n_cut):
        total += 1 / (n + a) ** 2
    na = n_cut + a
    total += 1 / na + Fraction(1, 2) / na**2
    for j in range(1, m_order + 1):
        total += bern[2 * j] / na ** (2 * j + 1)
    bound = abs(bern[2 * m_order + 2]) / na ** (2 * m_order + 3)
    return total, bound


def series_numeric_check(digits: int, term_cap: int = 5000) -> NumericReport:
    """Certify agreement of the two sides of the series conjecture to the
    requested number of decimal digits, entirely in exact rationals."""
    if digits > 60:
        raise PrecisionUnreachable("digits capped at 60")
    report = NumericReport(digits=digits)
    target = Fraction(1, 10**digits)

    _ratio_certificate()
    lhs = Fraction(0)
    term = Fraction(4)  # k = 1 term: 48 / (1 * 1 * C(4,2) * C(2,1))
    k = 1
    while 4 * term >= target / 4:
        lhs += term
        term *= _series_ratio(k)
        k += 1
        if k > term_cap:
            raise PrecisionUnreachable(f"series tail not below target by k={term_cap}")
    lhs += term
    report.lhs = lhs
    report.lhs_tail_bound = 4 * term * _series_ratio(k)
    report.terms_used = k

    # RHS = (15/2) sum_{k>=1} chi_3(k)/k^2 = (5/6)(zeta(2,1/3) - zeta(2,2/3))
    m_order = digits // 2 + 4
    bern = _bernoulli_exact(2 * m_order + 2)
    for n_cut in (50, 100, 200, 400):
        z1, b1 = _hurwitz_zeta2(Fraction(1, 3), n_cut, m_order, bern)
        z2, b2 = _hurwitz_zeta2(Fraction(2, 3), n_cut, m_order, bern)
        rbound = Fraction(5, 6) * (b1 + b2)
        if rbound < target / 4:
            break
    else:
        raise PrecisionUnreachable("integral remainder not below target")
    report.rhs = Fraction(5, 6) * (z1 - z2)
    report.rhs_remainder_bound = rbound
    report.passed = report.certified_bound < target
    return report


def decimal_str(q: Fraction, places: int) -> str:
    """Plain fixed-point rendering, truncated toward zero."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = q.numerator * 10**places // q.denominator
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{str(frac).zfill(places)}"
