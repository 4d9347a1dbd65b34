"""CLI tests run the command functions in process and check the payloads,
the exit-code contract, and determinism; one subprocess smoke test covers the
real entry point."""

import csv
import io
import json
import subprocess
import sys

from heckeflag import cli
from heckeflag.hecke import HeckeAlgebra


def run_json(argv):
    result = cli.run(argv)
    assert result.status == "ok", result.diagnostics
    return json.loads(result.payload)


# ---------------------------------------------------------------------------
# nconst


def test_nconst_a1_quadratic():
    doc = run_json(["nconst", "--type", "A1", "--w", "1", "--wp", "1", "--format", "json"])
    assert doc == [
        {"w": [1], "wp": [1], "wpp": [], "N": [0, 1]},
        {"w": [1], "wp": [1], "wpp": [1], "N": [-1, 1]},
    ]


def test_nconst_a2_example():
    doc = run_json(["nconst", "--type", "A2", "--w", "1,2", "--wp", "2", "--format", "json"])
    assert doc == [
        {"w": [1, 2], "wp": [2], "wpp": [1], "N": [0, 1]},
        {"w": [1, 2], "wp": [2], "wpp": [1, 2], "N": [-1, 1]},
    ]


def test_nconst_identity_unit():
    doc = run_json(["nconst", "--type", "A2", "--w", "", "--wp", "2,1", "--format", "json"])
    assert doc == [{"w": [], "wp": [2, 1], "wpp": [2, 1], "N": [1]}]


def test_nconst_csv():
    result = cli.run(["nconst", "--type", "A1", "--w", "1", "--wp", "1", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(result.payload)))
    assert rows == [["w", "wp", "wpp", "N"], ["1", "1", "", "0,1"], ["1", "1", "1", "-1,1"]]


def test_nconst_parse_error():
    result = cli.run(["nconst", "--type", "A2", "--w", "one", "--wp", ""])
    assert result.status == "error"
    assert result.exit_code == 1
    assert result.payload == ""
    assert result.diagnostics


# ---------------------------------------------------------------------------
# eset


def test_eset_i24():
    doc = run_json(["eset", "--type", "I2(4)", "--w", "1,2", "--format", "json"])
    assert doc["members"] == [{"z": [1, 2, 1, 2], "N": [1, -2, 1], "deg": 2}]
    assert doc["d"] == 2
    assert doc["e_prime"] == [[1, 2, 1, 2]]
    assert doc["truncation"] is None


def test_eset_infinite_with_bound():
    doc = run_json(
        ["eset", "--type", "I2(inf)", "--w", "1,2", "--max-len", "12", "--format", "json"]
    )
    assert doc["members"] == []
    assert doc["truncation"] == 12
    assert doc["d"] is None


def test_eset_infinite_missing_bound_is_error():
    result = cli.run(["eset", "--type", "I2(inf)", "--w", "1,2"])
    assert result.status == "error"
    assert result.exit_code == 1


def test_eset_identity_full_group():
    doc = run_json(["eset", "--type", "A2", "--w", "", "--format", "json"])
    assert len(doc["members"]) == 6


# ---------------------------------------------------------------------------
# trace


def test_trace_values():
    doc = run_json(["trace", "--type", "A1", "--w", "1", "--format", "json"])
    assert doc["trace"] == [-1, 1]
    assert doc["value"] is None
    doc = run_json(["trace", "--type", "A1", "--w", "1", "--at", "-1", "--format", "json"])
    assert doc["value"] == -2
    doc = run_json(["trace", "--type", "A2", "--w", "", "--at", "5", "--format", "json"])
    assert doc["value"] == 6


def test_trace_infinite_is_error():
    result = cli.run(["trace", "--type", "I2(inf)", "--w", "1"])
    assert result.status == "error"


def test_trace_agrees_with_nconst_rows_a2():
    # sum of diagonal structure constants evaluated at n equals the trace value
    system_doc = run_json(["trace", "--type", "A2", "--w", "1,2", "--at", "7", "--format", "json"])
    total = 0
    from heckeflag.coxeter import build_system
    a2 = build_system("A2")
    for z in a2.elements:
        rows = run_json(
            ["nconst", "--type", "A2", "--w", "1,2", "--wp", ",".join(map(str, z.word)),
             "--format", "json"]
        )
        for row in rows:
            if row["wpp"] == list(z.word):
                poly = row["N"]
                total += sum(c * 7**k for k, c in enumerate(poly))
    assert total == system_doc["value"]


# ---------------------------------------------------------------------------
# verify


def test_verify_dihedral_ok():
    result = cli.run(["verify", "dihedral"])
    assert result.status == "ok"
    assert result.exit_code == 0
    assert "0 mismatches" in result.payload


def test_verify_flags_ok():
    result = cli.run(["verify", "flags", "--n", "2", "--q", "3"])
    assert result.status == "ok"


def test_verify_suite_flag_spelling():
    result = cli.run(["verify", "--suite", "dihedral"])
    assert result.status == "ok"


def test_verify_unknown_suite():
    result = cli.run(["verify", "everything"])
    assert result.status == "error"
    assert result.exit_code == 1


def test_verify_missing_suite():
    result = cli.run(["verify"])
    assert result.status == "error"


def test_verify_flags_csv_schema():
    result = cli.run(["verify", "flags", "--n", "2", "--q", "3", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(result.payload)))
    assert rows[0] == ["n", "q", "w", "z", "observed", "predicted", "match"]
    assert all(row[6] == "1" for row in rows[1:])
    assert any(row[3] == "total" for row in rows[1:])


def test_verify_detects_mismatches(monkeypatch):
    # breaking the predictions must flip the status and the exit code
    original = HeckeAlgebra.structure_constant

    def wrong(self, w, wp, wpp):
        return original(self, w, wp, wpp) + 1

    monkeypatch.setattr(HeckeAlgebra, "structure_constant", wrong)
    result = cli.run(["verify", "flags", "--n", "2", "--q", "3"])
    assert result.status == "verification_failed"
    assert result.exit_code == 2
    assert "MISMATCH" in result.payload
    assert result.diagnostics


def test_exit_code_contract():
    assert cli.CommandResult("ok").exit_code == 0
    assert cli.CommandResult("verification_failed").exit_code == 2
    assert cli.CommandResult("error").exit_code == 1


# ---------------------------------------------------------------------------
# determinism and entry point


def test_payloads_are_deterministic():
    for argv in (
        ["nconst", "--type", "A3", "--w", "1,2,3", "--wp", "2,1", "--format", "json"],
        ["eset", "--type", "I2(6)", "--w", "1,2", "--format", "csv"],
        ["verify", "dihedral", "--format", "csv"],
    ):
        assert cli.run(argv).payload == cli.run(argv).payload


def test_main_writes_payload_to_stdout(capsys):
    code = cli.main(["trace", "--type", "A1", "--w", "1", "--at", "-1"])
    out, err = capsys.readouterr()
    assert code == 0
    assert "-2" in out
    assert err == ""


def test_main_writes_diagnostics_to_stderr(capsys):
    code = cli.main(["trace", "--type", "I2(inf)", "--w", "1"])
    out, err = capsys.readouterr()
    assert code == 1
    assert out == ""
    assert "finite" in err


def test_subprocess_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "heckeflag", "trace", "--type", "A1", "--w", "1",
         "--at", "-1", "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == -2
