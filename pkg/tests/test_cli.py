import json

import pytest

from supercong.cli import main


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "WOLST" in out and "CONJ-48-B3" in out


def test_verify_exit_zero(capsys):
    rc = main(["verify", "--cases", "WOLST,MORT-*", "--primes", "5:40",
               "--format", "json"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary["failed"] == 0
    rows = [json.loads(ln) for ln in lines[:-1]]
    assert all(set(r) == {"case", "p", "exp", "lhs", "rhs", "pass",
                          "skipped_reason"} for r in rows)
    assert summary["total"] == len(rows)


def test_verify_exit_one_on_failure(capsys):
    rc = main(["verify", "--cases", "WOLST", "--primes", "5:30",
               "--debug-flip-case", "WOLST"])
    assert rc == 1


def test_verify_bad_range(capsys):
    assert main(["verify", "--primes", "3:4"]) == 2
    assert main(["verify", "--primes", "10:10"]) == 2
    assert main(["verify", "--primes", "oops"]) == 2


def test_verify_bad_format():
    assert main(["verify", "--primes", "5:30", "--format", "yaml"]) == 2


def test_conjectures_advisory(capsys):
    rc = main(["verify", "--cases", "CONJ-48-DUAL", "--primes", "5:30",
               "--debug-flip-case", "CONJ-48-DUAL", "--conjectures-advisory"])
    assert rc == 0
    rc = main(["verify", "--cases", "CONJ-48-DUAL", "--primes", "5:30",
               "--debug-flip-case", "CONJ-48-DUAL"])
    assert rc == 1


def test_report_files_byte_identical(tmp_path, capsys):
    f1 = tmp_path / "a.json"
    f2 = tmp_path / "b.json"
    args = ["verify", "--cases", "THM-M1,SQ-192,WOLST", "--primes", "5:80",
            "--format", "json", "--seed", "5"]
    assert main(args + ["--jobs", "1", "--report", str(f1)]) == 0
    assert main(args + ["--jobs", "2", "--report", str(f2)]) == 0
    capsys.readouterr()
    assert f1.read_bytes() == f2.read_bytes()


def test_report_unwritable(capsys):
    rc = main(["verify", "--cases", "WOLST", "--primes", "5:10",
               "--report", "/nonexistent-dir/x.json", "--format", "json"])
    assert rc == 2


def test_table_format(capsys):
    rc = main(["verify", "--cases", "COR-X", "--primes", "5:20"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "skip" in out  # p = 2 mod 3 rows
    assert out.strip().splitlines()[-1].startswith("total ")


def test_identities_cmd(capsys):
    assert main(["identities", "--max-n", "8"]) == 0
    out = capsys.readouterr().out
    assert "recurrence" in out and "FAIL" not in out


def test_series_cmd(capsys):
    assert main(["series", "--digits", "12"]) == 0
    out = capsys.readouterr().out
    assert "certified" in out
    assert main(["series", "--digits", "99"]) == 1


def test_selftest_cmd(capsys):
    assert main(["selftest", "--p-max", "30", "--samples", "5"]) == 0
    assert "selftest: ok" in capsys.readouterr().out
