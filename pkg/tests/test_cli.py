"""Command-line behavior: outputs, formats, exit codes."""

from __future__ import annotations

import json

import pytest

from dfv.cli import EXIT_DIFF, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_complexity_values(capsys):
    code, out, _ = run(capsys, "complexity", "--family", "E8", "--p", "a1", "--q", "a1")
    assert code == EXIT_OK and out.strip() == "2"
    code, out, _ = run(capsys, "complexity", "--family", "SL", "--n", "4", "--p", "2,2", "--q", "2,2")
    assert code == EXIT_OK and out.strip() == "0"
    code, out, _ = run(capsys, "complexity", "--family", "E6", "--p", "a1", "--q", "a5")
    assert code == EXIT_OK and out.strip() == "0"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "complexity", "--family", "SL", "--p", "2,2", "--q", "2,2")
    assert code == EXIT_USAGE and "required" in err
    code, _, _ = run(capsys, "complexity", "--family", "XX", "--p", "1", "--q", "1")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "complexity", "--family", "SO", "--n", "9", "--p", "4,1,4'", "--q", "4,1,4")
    assert code == EXIT_USAGE and "stroke" in err


def test_verify_tables_success(capsys):
    code, out, _ = run(capsys, "verify-tables", "--family", "G2")
    assert code == EXIT_OK and "reproduced exactly" in out
    code, out, _ = run(capsys, "verify-tables", "--family", "SL", "--n", "4..5")
    assert code == EXIT_OK
    assert out.count("reproduced exactly") == 2


def test_classify_stream_json(capsys):
    code, out, _ = run(capsys, "classify", "--family", "SO", "--n", "7", "--cmax", "1", "--format", "json")
    assert code == EXIT_OK
    records = [json.loads(line) for line in out.splitlines()]
    assert records and all(
        set(rec) == {"family", "n", "p", "q", "p_stroke", "q_stroke", "complexity"}
        for rec in records
    )
    assert all(rec["complexity"] in (0, 1) for rec in records)


def test_decompose_example1(capsys):
    code, out, _ = run(capsys, "decompose", "example1", "--l", "2", "--p", "1", "--q", "1")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 2


def test_decompose_example2(capsys):
    code, out, _ = run(
        capsys, "decompose", "example2", "--q1", "3", "--q2", "3", "--q3", "3",
        "--m", "1,1,0", "--format", "json",
    )
    assert code == EXIT_OK
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 4 and all(r["multiplicity"] == 1 for r in recs)


def test_oracle_and_methods(capsys):
    for method in ("peel", "reflection"):
        code, out, _ = run(
            capsys, "oracle", "--family", "Sp", "--n", "4",
            "--lam", "1,0", "--mu", "0,1", "--method", method, "--format", "tsv",
        )
        assert code == EXIT_OK
        assert out.splitlines()[0] == "weight\tmultiplicity"
        assert len(out.splitlines()) == 3


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "--family", "Sp", "--n", "4")
    assert code == EXIT_OK and "0 disagreements" in out


def test_determinism(capsys):
    a = run(capsys, "classify", "--family", "Sp", "--n", "8", "--format", "json")
    b = run(capsys, "classify", "--family", "Sp", "--n", "8", "--format", "json")
    assert a == b
