import json

import pytest

from p3game.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestSolve:
    def test_path3_vector(self, tmp_path, capsys):
        f = write(tmp_path, "p3.txt", "0 1\n1 2\n")
        code, out, _ = run_cli(capsys, "solve", "--graph", f, "--engine", "oracle")
        assert code == 0
        data = json.loads(out)
        assert (data["grundy"], data["winner"], data["bestMoves"]) == (1, "first", [1])

    def test_edge_vector(self, tmp_path, capsys):
        f = write(tmp_path, "k2.txt", "0 1\n")
        code, out, _ = run_cli(capsys, "solve", "--graph", f)
        data = json.loads(out)
        assert code == 0 and data["grundy"] == 0 and data["winner"] == "second"

    def test_engines_agree_exit_zero(self, tmp_path, capsys):
        f = write(tmp_path, "lad.txt", "")
        code, out, _ = run_cli(capsys, "gen", "ladder", "3")
        (tmp_path / "lad.txt").write_text(out)
        code, out, _ = run_cli(capsys, "solve", "--graph", f, "--engine", "both")
        assert code == 0
        data = json.loads(out)
        assert data["engine"] == "both" and "oracleStats" in data

    def test_playground_option(self, tmp_path, capsys):
        f = write(tmp_path, "p4.txt", "0 1\n1 2\n2 3\n")
        code, out, _ = run_cli(capsys, "solve", "--graph", f, "--playground", "1,2")
        assert code == 0 and json.loads(out)["grundy"] == 0

    def test_invalid_playground_names_the_violation(self, tmp_path, capsys):
        f = write(tmp_path, "p4.txt", "0 1\n1 2\n2 3\n")
        code, _, err = run_cli(capsys, "solve", "--graph", f, "--playground", "0,3")
        assert code == 1 and "disconnected" in err
        f = write(tmp_path, "c4.txt", "0 1\n1 2\n2 3\n0 3\n")
        code, _, err = run_cli(capsys, "solve", "--graph", f, "--playground", "0,1,2")
        assert code == 1 and "two neighbors" in err

    def test_missing_file_is_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "solve", "--graph", "/no/such/file")
        assert code == 1 and "error:" in err

    def test_usage_error_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["solve"])  # --graph missing
        assert exc.value.code == 2

    def test_deterministic_output_modulo_timing(self, tmp_path, capsys):
        f = write(tmp_path, "p4.txt", "0 1\n1 2\n2 3\n")
        outs = []
        for _ in range(2):
            _, out, _ = run_cli(capsys, "analyze", "--graph", f)
            data = json.loads(out)
            data["stats"].pop("ms", None)
            outs.append(json.dumps(data, sort_keys=True))
        assert outs[0] == outs[1]

    def test_budget_env_respected(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("P3_BUDGET", "2")
        code, out, _ = run_cli(capsys, "gen", "ladder", "5")
        f = write(tmp_path, "lad5.txt", out)
        code, _, err = run_cli(capsys, "solve", "--graph", f)
        assert code == 1 and "budget" in err


class TestAnalyze:
    def test_moves_listed(self, tmp_path, capsys):
        f = write(tmp_path, "p3.txt", "0 1\n1 2\n")
        code, out, _ = run_cli(capsys, "analyze", "--graph", f, "--engine", "oracle")
        data = json.loads(out)
        assert code == 0
        by_vertex = {m["vertex"]: m for m in data["moves"]}
        assert by_vertex[1]["winning"] is True
        assert by_vertex[0]["winning"] is False


class TestGen:
    def test_gen_parses_back(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "ladder", "3")
        assert code == 0
        from p3game import parse_graph
        g = parse_graph(out)
        assert (g.n, g.m) == (6, 7)

    def test_gen_seed_determinism(self, capsys):
        _, a, _ = run_cli(capsys, "gen", "random_tree", "9", "--seed", "4")
        _, b, _ = run_cli(capsys, "gen", "random_tree", "9", "--seed", "4")
        _, c, _ = run_cli(capsys, "gen", "random_tree", "9", "--seed", "5")
        assert a == b and a != c

    def test_single_vertex_round_trips(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "path", "1")
        from p3game import parse_graph
        assert code == 0 and parse_graph(out).n == 1


class TestEnumerate:
    def test_stream_is_json_lines(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--what", "chordal-bipartite", "--n", "4")
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 3
        assert all(row["n"] == 4 for row in rows)


class TestGameGraph:
    def test_json_export(self, tmp_path, capsys):
        f = write(tmp_path, "k2.txt", "0 1\n")
        code, out, _ = run_cli(capsys, "gamegraph", "--graph", f, "--json")
        data = json.loads(out)
        assert code == 0 and data["variant"] == "ordinary"
        assert len(data["nodes"]) == 4

    def test_dot_export(self, tmp_path, capsys):
        f = write(tmp_path, "k2.txt", "0 1\n")
        code, out, _ = run_cli(capsys, "gamegraph", "--graph", f, "--dot")
        assert code == 0 and out.startswith("digraph")

    def test_augmented_variant(self, tmp_path, capsys):
        f = write(tmp_path, "c4.txt", "0 1\n1 2\n2 3\n0 3\n")
        code, out, _ = run_cli(capsys, "gamegraph", "--graph", f,
                               "--variant", "augmented")
        data = json.loads(out)
        assert data["variant"] == "augmented-normal-play"


class TestClaimsCommand:
    def test_single_claim_with_report_file(self, tmp_path, capsys):
        out_file = tmp_path / "report.json"
        code, out, err = run_cli(capsys, "claims", "run", "--claim", "CL5",
                                 "--max-n", "3", "--out", str(out_file))
        assert code == 0  # CL5 fails, but failing is its documented verdict
        line = json.loads(out.splitlines()[0])
        assert line["claimId"] == "CL5" and line["verdict"] == "FAIL"
        assert not line["regression"]
        report = json.loads(out_file.read_text())
        assert report["schema"] == "p3report-v1"
        assert "CL5" in err  # the summary table goes to stderr


class TestSelftest:
    def test_selftest_green(self, capsys):
        code, out, _ = run_cli(capsys, "selftest")
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert all(row["pass"] for row in rows)
        assert {row["check"] for row in rows} >= {"single-vertex", "edge", "path3",
                                                  "path4", "cycle4"}


class TestInstalledScript:
    def test_console_entry_point(self, tmp_path):
        import subprocess
        import sys
        f = tmp_path / "p3.txt"
        f.write_text("0 1\n1 2\n")
        proc = subprocess.run(
            [sys.executable, "-m", "p3game.cli", "solve", "--graph", str(f)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["grundy"] == 1

    def test_stdin_pipe(self):
        import subprocess
        import sys
        gen = subprocess.run([sys.executable, "-m", "p3game.cli", "gen", "ladder", "4"],
                             capture_output=True, text=True)
        solve = subprocess.run(
            [sys.executable, "-m", "p3game.cli", "solve", "--graph", "-", "--engine", "both"],
            input=gen.stdout, capture_output=True, text=True)
        assert solve.returncode == 0
        assert "grundy" in solve.stdout
