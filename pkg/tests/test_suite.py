from fractions import Fraction

from supercong.suite import (
    PrimeContext,
    evaluate_case,
    match_cases,
    registry,
    run_suite,
)


def _case(cid):
    return next(c for c in registry() if c.id == cid)


def test_registry_shape():
    cases = registry()
    assert len(cases) >= 25
    ids = [c.id for c in cases]
    assert len(ids) == len(set(ids))
    assert {c.status for c in cases} <= {"theorem", "corollary", "remark", "conjecture"}
    assert all(c.exponent in (1, 2, 3) for c in cases)


def test_match_cases():
    assert [c.id for c in match_cases(["MORT-*"])] == [
        "MORT-1", "MORT-2", "MORT-3", "MORT-4"
    ]
    conj = match_cases(None, statuses=["conjecture"])
    assert {c.id for c in conj} == {"CONJ-48-B3", "CONJ-48-DUAL", "CONJ-S1", "CONJ-S2"}
    assert match_cases(["ZZZ"]) == []


def test_spot_values():
    # frozen residues, hand-checked against direct rational summation
    r = evaluate_case(_case("THM-M1"), 7, seed=0)
    assert r.passed and r.lhs == "6"
    r = evaluate_case(_case("THM-M1"), 5, seed=0)
    assert r.passed and r.lhs == "5"
    r = evaluate_case(_case("COR-X"), 7, seed=0)
    assert r.passed and r.lhs == "48"  # x = -1 = 48 mod 49
    r = evaluate_case(_case("CONJ-48-DUAL"), 5, seed=0)
    assert r.passed and r.rhs == "16"  # 4(5/3) + 4*5 = -4+20


def test_skip_reasons():
    r = evaluate_case(_case("COR-X"), 5, seed=0)
    assert r.skipped_reason == "p != 1 (mod 3)"
    r = evaluate_case(_case("REM-BEW-72"), 7, seed=0)
    assert r.skipped_reason == "p != 1 (mod 4)"


def test_small_range_all_pass():
    rep = run_suite(None, 5, 60, jobs=1, seed=0)
    assert rep.summary["failed"] == 0
    assert rep.summary["passed"] > 0
    assert rep.ok


def test_jobs_determinism():
    a = run_suite(["MORT-*", "THM-M1", "WOLST"], 5, 80, jobs=1, seed=3)
    b = run_suite(["MORT-*", "THM-M1", "WOLST"], 5, 80, jobs=4, seed=3)
    assert a.results == b.results
    assert a.summary == b.summary


def test_consistency_square_vs_minus192():
    # (sum/24^k)^2 and sum/(-192)^k must agree residue-by-residue
    rep = run_suite(["THM-M1", "SQ-192"], 5, 120, jobs=1, seed=0)
    assert rep.summary["failed"] == 0
    by = {}
    for r in rep.results:
        by.setdefault(r.p, {})[r.case] = r
    for p, d in by.items():
        pk = p * p
        assert int(d["THM-M1"].lhs) ** 2 % pk == int(d["SQ-192"].rhs) % pk


def test_scaling_cross_check():
    # the 48^k theorem, its conjecture refinement, and the binomial expansion
    # remark must pass jointly on the same primes
    rep = run_suite(["THM-S48", "CONJ-S1", "REM-BEW-48"], 5, 150, jobs=1, seed=0)
    assert rep.summary["failed"] == 0


def test_exploratory_exponent():
    # THM-M1 is a mod-p^2 statement; mod p^3 it honestly fails and is reported
    r = evaluate_case(_case("THM-M1"), 13, seed=0, exp_override=3)
    assert r.note == "exploratory exponent"
    assert not r.passed
    r = evaluate_case(_case("WOLST"), 13, seed=0, exp_override=1)
    assert r.passed and r.note == "exploratory exponent"


def test_flip_case_hook():
    rep = run_suite(["WOLST"], 5, 30, flip_case="WOLST")
    assert rep.summary["failed"] == 1
    flipped = [r for r in rep.results if r.note == "flipped"]
    assert len(flipped) == 1 and not flipped[0].passed


def test_sampled_case_serialization():
    r = evaluate_case(_case("ZHSUN-UNI"), 11, seed=0)
    assert (r.lhs, r.rhs) == ("0", "0") and r.passed


def test_printed_variant_notes():
    r = evaluate_case(_case("SQ-144"), 13, seed=0)
    assert r.note == "printed C(4k,k) variant differs"
    r = evaluate_case(_case("REM-BEW-72"), 13, seed=0)
    assert r.note == "1/(2x) variant differs"


def test_prime_context_binom():
    ctx = PrimeContext(11, 0)
    from math import comb
    assert ctx.binom(10, 4, 2) == comb(10, 4) % 121
    assert ctx.binom(22, 11, 2) == comb(22, 11) % 121
