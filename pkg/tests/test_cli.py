import json
import subprocess
import sys

import pytest

from graphsemigroups import cli
from graphsemigroups import sweep as sw


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCommands:
    def test_genus(self, capsys):
        code, out, _ = run(capsys, "genus", "--gen", "wheel:4")
        assert code == 0 and "4" in out

    def test_laplacian_json(self, capsys):
        code, out, _ = run(capsys, "laplacian", "--gen", "path:2", "--format", "json")
        assert code == 0
        assert json.loads(out)["laplacian"] == [[1, -1], [-1, 1]]

    def test_rank_json(self, capsys):
        code, out, _ = run(capsys, "rank", "--gen", "wheel:4", "--divisor", "P:4", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and payload["rank"] == 1
        assert sum(payload["obstruction"]) == 2

    def test_reduce(self, capsys):
        code, out, _ = run(capsys, "reduce", "--gen", "cycle:4", "--divisor", "2,0,-1,0", "--format", "json")
        assert code == 0 and json.loads(out)["reduced"] == [0, 0, 1, 0]

    def test_jacobian(self, capsys):
        code, out, _ = run(capsys, "jacobian", "--gen", "complete:4", "--format", "json")
        assert json.loads(out) == {"factors": [4, 4], "order": 16, "base_vertex": 0}

    def test_connectivity(self, capsys):
        code, out, _ = run(capsys, "connectivity", "--gen", "bridged:triangle,triangle", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and payload["edge_connectivity"] == 1 and 0 in payload["cut_vertices"]

    def test_semigroups_schema(self, capsys):
        code, out, _ = run(capsys, "semigroups", "--gen", "complete:4", "--vertex", "P", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert set(payload) == {"graph", "vertex", "B", "hf", "hr", "hred", "checks"}
        assert payload["hf"]["gaps"] == [1, 2, 5]

    def test_semigroups_table(self, capsys):
        code, out, _ = run(capsys, "semigroups", "--gen", "bridged:triangle,triangle")
        assert code == 0 and "Hf" in out and "Hr" in out

    def test_edges_round_trip(self, capsys, tmp_path):
        path = tmp_path / "w.txt"
        assert cli.main(["edges", "--gen", "wheel:4", "--out", str(path)]) == 0
        code, out, _ = run(capsys, "genus", "--input", str(path), "--format", "json")
        assert code == 0 and json.loads(out)["genus"] == 4

    def test_output_is_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for p in (a, b):
            cli.main(["semigroups", "--gen", "wheel:4", "--format", "json", "--out", str(p)])
        assert a.read_bytes() == b.read_bytes()


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["genus", "--gen", "nope:3"],
            ["genus"],
            ["rank", "--gen", "cycle:4", "--divisor", "1,2"],
            ["rank", "--gen", "cycle:4", "--vertex", "9", "--divisor", "P:1"],
            ["reduce", "--gen", "cycle:4", "--divisor", "1,0,0,0", "--base", "7"],
            ["genus", "--input", "/nonexistent/file"],
            ["sweep", "--n", "6..4"],
        ],
    )
    def test_input_errors(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and "error" in err

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "semigroups", "--gen", "complete:5", "--cap", "10")
        assert code == 3 and "cap" in err.lower()

    def test_disconnected_input(self, capsys, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("4\n0 1\n2 3\n")
        code, _, _ = run(capsys, "genus", "--input", str(path))
        assert code == 2


class TestSweep:
    def test_jsonl_and_summary(self, capsys, tmp_path):
        out = tmp_path / "s.jsonl"
        code, _, err = run(capsys, "sweep", "--n", "4..5", "--count", "5", "--seed", "3", "--out", str(out))
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 5
        for line in lines:
            rec = json.loads(line)
            assert set(rec) >= {"graph", "vertices", "status", "violations", "skipped"}
            assert rec["status"] == "ok"
        summary = json.loads((tmp_path / "s.jsonl.summary.json").read_text())
        assert summary["graphs"] == 5 and summary["violation_count"] == 0
        assert "0 Hr-not-in-Hf" in err

    def test_deterministic(self, capsys, tmp_path):
        paths = [tmp_path / "a.jsonl", tmp_path / "b.jsonl"]
        for p in paths:
            cli.main(["sweep", "--n", "4..5", "--count", "4", "--seed", "11", "--out", str(p)])
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_jobs_do_not_change_output(self):
        serial = list(sw.conjecture_sweep("random-connected", 4, (4, 5), seed=2))
        parallel = list(sw.conjecture_sweep("random-connected", 4, (4, 5), seed=2, jobs=2))
        assert serial == parallel

    def test_families(self):
        assert len(sw.family_instances("trees", 0, (2, 6), 0)) == 1 + 1 + 2 + 3 + 6
        assert [f.graph.n for f in sw.family_instances("wheels", 0, (5, 6), 0)] == [5, 6]
        with pytest.raises(ValueError):
            sw.family_instances("nope", 1, (4, 4), 0)

    def test_parse_range(self):
        assert sw.parse_range("4..6") == (4, 6) and sw.parse_range("5") == (5, 5)

    def test_cap_is_recorded_not_raised(self):
        rec = sw.run_unit(sw.SweepUnit(0, sw.family_instances("complete", 0, (5, 5), 0)[0], None, 10, 10))
        assert rec["vertices"] == [] and len(rec["skipped"]) == 5


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "graphsemigroups.cli", "genus", "--gen", "cycle:5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "1" in proc.stdout
