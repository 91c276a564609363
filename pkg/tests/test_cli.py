"""End-to-end CLI behavior: output formats, exit codes, stream separation.

Exit code contract: 0 success (classify: isomorphic, verify: all families
pass), 1 negative verdict or failed check, 2 usage errors.  Text goes to
stdout, diagnostics to stderr.
"""

import dataclasses
import json
import re
from fractions import Fraction

import pytest

from dbalg.cli import main
from dbalg.derived import algebra_from_dict, build_algebra
from dbalg.supermatrix import SuperShape

F = Fraction


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_pairs(text: str) -> dict:
    pairs = {}
    for line in text.splitlines():
        key, value = re.split(r"\s{2,}", line, maxsplit=1)
        pairs[key] = value
    return pairs


# ---------------------------------------------------------------------------
# info


def test_info_text_report(capsys):
    code, out, err = run(capsys, ["info", "5", "6", "2"])
    assert code == 0
    pairs = parse_pairs(out)
    assert pairs["algebra"] == "gl(5|6) corner, generator rank 2"
    assert pairs["dim total"] == "30"
    assert pairs["dim levi"] == "3  [sl(2)]"
    assert pairs["dim radical"] == "27"
    assert pairs["dim center"] == "12"
    assert pairs["abelian"] == "no"
    assert pairs["solvable"] == "no"
    assert err == ""


def test_info_json_report(capsys):
    code, out, _ = run(capsys, ["info", "7", "7", "5", "--format", "json"])
    assert code == 0
    record = json.loads(out)
    assert record == {
        "m": 7, "n": 7, "r": 5,
        "dim_total": 49, "dim_levi": 24, "dim_radical": 25, "dim_center": 4,
        "is_abelian": False, "is_solvable": False, "levi_type": "sl(5)",
    }


def test_info_rejects_bad_rank(capsys):
    code, out, err = run(capsys, ["info", "5", "6", "9"])
    assert code == 2
    assert out == ""
    assert "dbalg: error:" in err
    assert "run 'dbalg --help' for usage" in err


def test_info_rejects_bad_shape(capsys):
    code, _, err = run(capsys, ["info", "0", "2", "0"])
    assert code == 2
    assert "dbalg: error:" in err


def test_info_figure_side_channel(capsys, tmp_path):
    target = tmp_path / "roles.png"
    code, out, err = run(capsys, ["info", "3", "2", "1", "--figure", str(target)])
    assert code == 0
    assert parse_pairs(out)["dim total"] == "6"
    assert f"figure written to {target}" in err
    data = target.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"


# ---------------------------------------------------------------------------
# classify


def test_classify_isomorphic_pair(capsys):
    code, out, _ = run(capsys, ["classify", "2", "3", "1", "3", "2", "1"])
    assert code == 0
    pairs = parse_pairs(out)
    assert pairs["verdict"] == "ISOMORPHIC"
    assert pairs["witness"] == "flip (F_i_j -> -F_j_i)"


def test_classify_negative_pair(capsys):
    code, out, _ = run(capsys, ["classify", "5", "6", "2", "10", "3", "2"])
    assert code == 1
    pairs = parse_pairs(out)
    assert pairs["verdict"] == "NOT ISOMORPHIC"
    assert pairs["separator"] == "dim_center: 12 vs 8"


def test_classify_json_isomorphic(capsys):
    code, out, _ = run(
        capsys, ["classify", "5", "6", "2", "6", "5", "2", "--format", "json"]
    )
    assert code == 0
    record = json.loads(out)
    assert record["left"] == {"m": 5, "n": 6, "r": 2}
    assert record["right"] == {"m": 6, "n": 5, "r": 2}
    assert record["isomorphic"] is True
    assert record["witness_kind"] == "flip"
    assert record["separator"] is None
    matrix = record["witness_matrix"]
    assert len(matrix) == 30 and len(matrix[0]) == 30
    values = {entry for row in matrix for entry in row}
    assert values == {"0/1", "-1/1"}


def test_classify_json_negative(capsys):
    code, out, _ = run(
        capsys, ["classify", "2", "2", "0", "2", "2", "1", "--format", "json"]
    )
    assert code == 1
    record = json.loads(out)
    assert record["isomorphic"] is False
    assert record["witness_matrix"] is None
    assert record["separator"] == {
        "invariant": "abelian", "left_value": True, "right_value": False,
    }
    assert record["note"]


def test_classify_rejects_bad_rank(capsys):
    code, _, err = run(capsys, ["classify", "2", "2", "5", "2", "2", "1"])
    assert code == 2
    assert "dbalg: error:" in err


# ---------------------------------------------------------------------------
# constants


def test_constants_text_exact(capsys):
    code, out, _ = run(capsys, ["constants", "2", "2", "1"])
    assert code == 0
    assert out == (
        "gl(2|2) corner, generator rank 1: dim 4\n"
        "basis  F_1_1 F_1_2 F_2_1 F_2_2\n"
        "[F_1_1, F_1_2]  =  +1 F_1_2\n"
        "[F_1_1, F_2_1]  =  -1 F_2_1\n"
        "[F_1_2, F_2_1]  =  -1 F_2_2\n"
    )


def test_constants_text_abelian(capsys):
    code, out, _ = run(capsys, ["constants", "2", "2", "0"])
    assert code == 0
    assert "all brackets vanish (abelian)" in out


def test_constants_json_round_trip(capsys):
    code, out, _ = run(capsys, ["constants", "3", "3", "2", "--format", "json"])
    assert code == 0
    rebuilt = algebra_from_dict(json.loads(out))
    reference = build_algebra(SuperShape(3, 3), 2)
    assert rebuilt.table == dict(reference.table)
    assert rebuilt.basis_labels == reference.basis_labels


# ---------------------------------------------------------------------------
# verify


def test_verify_trivial_sweep_passes(capsys, monkeypatch):
    monkeypatch.delenv("DB_SEED", raising=False)
    code, out, _ = run(capsys, ["verify", "--max-dim", "1"])
    assert code == 0
    last = out.strip().splitlines()[-1]
    assert last.startswith("OK  ")
    assert "across 10 families" in last


def test_verify_json_families(capsys, monkeypatch):
    monkeypatch.delenv("DB_SEED", raising=False)
    code, out, _ = run(capsys, ["verify", "--max-dim", "1", "--format", "json"])
    assert code == 0
    families = json.loads(out)
    assert len(families) == 10
    assert all(entry["passed"] for entry in families)
    assert all(entry["failures"] == [] for entry in families)


def test_verify_rejects_bad_max_dim(capsys):
    code, _, err = run(capsys, ["verify", "--max-dim", "0"])
    assert code == 2
    assert "--max-dim must be >= 1" in err


def test_verify_rejects_non_integer_seed(capsys, monkeypatch):
    monkeypatch.setenv("DB_SEED", "abc")
    code, _, err = run(capsys, ["verify", "--max-dim", "1"])
    assert code == 2
    assert "DB_SEED" in err


def test_verify_accepts_seed_override(capsys, monkeypatch):
    monkeypatch.setenv("DB_SEED", "7")
    code, out, _ = run(capsys, ["verify", "--max-dim", "1"])
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("OK")


def test_verify_flags_corrupted_table(capsys, monkeypatch):
    # Tamper with one structure constant behind the sweep's back: the
    # closed-form/raw cross-check families must catch it and flip the exit code.
    monkeypatch.delenv("DB_SEED", raising=False)
    real = build_algebra

    def tampered(shape, r):
        algebra = real(shape, r)
        if (shape, r) == (SuperShape(2, 2), 1):
            table = dict(algebra.table)
            table[(0, 1)] = ((1, F(1)), (2, F(1)))
            return dataclasses.replace(algebra, table=table)
        return algebra

    monkeypatch.setattr("dbalg.sweep.build_algebra", tampered)
    code, out, _ = run(capsys, ["verify", "--max-dim", "2"])
    assert code == 1
    last = out.strip().splitlines()[-1]
    assert last.startswith("FAILED")
    assert "counterexample" in out


# ---------------------------------------------------------------------------
# argument plumbing


def test_no_subcommand_is_a_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_unknown_subcommand_is_a_usage_error(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_non_integer_argument_is_a_usage_error(capsys):
    assert main(["info", "two", "2", "1"]) == 2
    capsys.readouterr()


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "info" in out and "classify" in out and "constants" in out and "verify" in out
