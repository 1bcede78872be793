import json
import shutil
import subprocess

import pytest

from fanramsey import Graph, find_fan, read_graph, write_graph
from fanramsey.cli import main


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestConstruct:
    def test_star_fan_payload(self, capsys):
        code, data = run_json(capsys, ["construct", "star-fan",
                                       "--m", "10", "--n", "5"])
        assert code == 0
        assert data["params"]["a"] == 7
        assert data["params"]["b"] == 2
        assert data["params"]["sigma"] == 3
        assert data["params"]["N"] == 18
        assert data["bound_implied"] == "R(K_{1,10}, F_5) >= 19"
        assert len(data["red_edges"]) > 0

    def test_special_payload(self, capsys):
        code, data = run_json(capsys, ["construct", "star-fan-special",
                                       "--n", "5"])
        assert code == 0
        assert data["params"]["m"] == 10 and data["params"]["N"] == 18

    def test_chromatic_payload(self, capsys):
        code, data = run_json(capsys, ["construct", "chromatic", "--n", "2"])
        assert code == 0
        assert data["N"] == 8
        assert data["bound_implied"] == "R(F_2) >= 9"

    def test_turan_payload(self, capsys):
        code, data = run_json(capsys, ["construct", "turan",
                                       "--n", "20", "--k", "3"])
        assert code == 0
        assert data["edges"] == 102
        assert len(data["edge_list"]) == 102

    def test_turan_out_file(self, capsys, tmp_path):
        path = tmp_path / "t.el"
        code = main(["construct", "turan", "--n", "12", "--k", "3",
                     "--out", str(path)])
        assert code == 0
        g = read_graph(path)
        assert g.n == 12 and find_fan(g, 3) is None

    def test_degenerate_range_exits_2(self, capsys):
        assert main(["construct", "star-fan", "--m", "4", "--n", "3"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_m_exits_2(self, capsys):
        assert main(["construct", "star-fan", "--n", "5"]) == 2

    def test_text_output(self, capsys):
        code = main(["construct", "star-fan", "--m", "10", "--n", "5",
                     "--out", "/dev/null"])
        assert code == 0
        out = capsys.readouterr().out
        assert "a=7 b=2 sigma=3" in out
        assert "R(K_{1,10}, F_5) >= 19" in out


class TestVerify:
    @pytest.fixture()
    def witness_path(self, tmp_path, capsys):
        path = tmp_path / "w.el"
        assert main(["construct", "star-fan", "--m", "10", "--n", "5",
                     "--out", str(path)]) == 0
        capsys.readouterr()
        return str(path)

    def test_star_fan_holds(self, capsys, witness_path, tmp_path):
        code, data = run_json(capsys, ["verify", witness_path,
                                       "--m", "10", "--n", "5"])
        assert code == 0
        assert data["bound_implied"] == "R(K_{1,10}, F_5) >= 19"
        assert all(c["holds"] for c in data["claims"])

    def test_failing_claims_exit_1(self, capsys, witness_path):
        code, data = run_json(capsys, ["verify", witness_path,
                                       "--m", "2", "--n", "5"])
        assert code == 1
        assert data["bound_implied"] is None

    def test_fan_fan_mode(self, capsys, tmp_path):
        path = tmp_path / "c.el"
        main(["construct", "chromatic", "--n", "2", "--out", str(path)])
        capsys.readouterr()
        code, data = run_json(capsys, ["verify", str(path), "--n", "2"])
        assert code == 0
        assert data["kind"] == "fan-fan"

    def test_missing_file_exits_3(self, capsys):
        assert main(["verify", "/nonexistent/file.el", "--n", "2"]) == 3

    def test_malformed_file_exits_3(self, capsys, tmp_path):
        bad = tmp_path / "bad.el"
        bad.write_text("1 2\nbroken line here\n")
        assert main(["verify", str(bad), "--n", "2"]) == 3


class TestDecompose:
    def test_path_three(self, capsys, tmp_path):
        path = tmp_path / "p3.el"
        write_graph(Graph(3, [(0, 1), (1, 2)]), path)
        code, data = run_json(capsys, ["decompose", str(path)])
        assert code == 0
        assert data == {"A": [1], "C": [], "D": [[0], [2]],
                        "p": 2, "deficiency": 1, "nu": 1}

    def test_text_lines(self, capsys, tmp_path):
        path = tmp_path / "p3.el"
        write_graph(Graph(3, [(0, 1), (1, 2)]), path)
        assert main(["decompose", str(path)]) == 0
        out = capsys.readouterr().out
        assert "nu = 1, deficiency = 1, p = 2" in out
        assert "D_2 = [2]" in out


class TestRealize:
    def test_pair_mode(self, capsys):
        code, data = run_json(capsys, ["realize", "--x", "1,1", "--y", "2"])
        assert code == 0
        assert data["bigraphic"] is True
        assert data["edges"] == [[0, 2], [1, 2]]
        assert data["left"] == [0, 1] and data["right"] == [2]

    def test_pair_mode_rejection(self, capsys):
        code, data = run_json(capsys, ["realize", "--x", "2,2", "--y", "4"])
        assert code == 1
        assert data["bigraphic"] is False
        assert "dominance" in data["reason"]

    def test_interval_mode(self, capsys):
        code, data = run_json(capsys, ["realize", "--a", "7", "--b", "2",
                                       "--c", "2", "--d", "4", "--sigma", "3"])
        assert code == 0
        assert sorted(data["degrees"][:7]) == [1, 1, 1, 1, 1, 1, 2]
        assert data["degrees"][7:] == [4, 4]

    def test_interval_window_violation_exits_2(self, capsys):
        assert main(["realize", "--a", "2", "--b", "2", "--c", "0",
                     "--d", "4", "--sigma", "2"]) == 2

    def test_mode_confusion_exits_2(self, capsys):
        assert main(["realize", "--x", "1", "--a", "1", "--b", "1",
                     "--c", "0", "--d", "0", "--sigma", "0"]) == 2
        assert main(["realize"]) == 2

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "g.el"
        code = main(["realize", "--x", "1,1", "--y", "2", "--out", str(path)])
        assert code == 0
        assert read_graph(path).edge_count() == 2


class TestFanFind:
    def test_file_mode_found(self, capsys, tmp_path):
        path = tmp_path / "g.el"
        g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
        write_graph(g, path)
        code, data = run_json(capsys, ["fan-find", str(path), "--k", "2"])
        assert code == 0
        assert data["found"] is True
        assert data["witness"]["center"] == 0

    def test_file_mode_absent(self, capsys, tmp_path):
        path = tmp_path / "g.el"
        write_graph(Graph(4, [(0, 1), (1, 2), (2, 3)]), path)
        code, data = run_json(capsys, ["fan-find", str(path), "--k", "1"])
        assert code == 0
        assert data == {"found": False, "k": 1}

    def test_file_mode_needs_k(self, capsys, tmp_path):
        path = tmp_path / "g.el"
        write_graph(Graph(3, []), path)
        assert main(["fan-find", str(path)]) == 2

    def test_trial_mode_all_found(self, capsys):
        code, data = run_json(capsys, ["fan-find", "--n", "2",
                                       "--trials", "25", "--seed", "7"])
        assert code == 0
        assert data["found"] == data["trials"] == 25
        assert data["seed"] == 7

    def test_trial_mode_deterministic(self, capsys):
        argv = ["fan-find", "--n", "3", "--trials", "10", "--seed", "41"]
        _, first = run_json(capsys, argv)
        _, second = run_json(capsys, argv)
        assert first == second

    def test_trial_mode_default_seed(self, capsys):
        code, data = run_json(capsys, ["fan-find", "--n", "2", "--trials", "5"])
        assert code == 0
        assert data["seed"] == 2024

    def test_trial_mode_needs_args(self, capsys):
        assert main(["fan-find", "--n", "2"]) == 2


class TestSearch:
    def test_known_value(self, capsys):
        code, data = run_json(capsys, ["search", "star", "2", "fan", "2",
                                       "--cap", "9"])
        assert code == 0
        assert data["value"] == 5
        assert data["statement"] == "R(K_{1,2}, F_2) = 5"

    def test_cap_reported(self, capsys):
        code, data = run_json(capsys, ["search", "fan", "2", "fan", "2",
                                       "--cap", "8"])
        assert code == 0
        assert data["value"] is None and data["lower"] == 9

    def test_over_cap_exits_2(self, capsys):
        assert main(["search", "fan", "2", "fan", "2", "--cap", "9"]) == 2

    def test_workers_flag_matches_serial(self, capsys):
        _, serial = run_json(capsys, ["search", "fan", "1", "fan", "1",
                                      "--cap", "8", "--workers", "1"])
        _, parallel = run_json(capsys, ["search", "fan", "1", "fan", "1",
                                        "--cap", "8", "--workers", "3"])
        assert serial == parallel

    def test_workers_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("FANRAMSEY_WORKERS", "2")
        _, data = run_json(capsys, ["search", "star", "1", "fan", "2",
                                    "--cap", "9"])
        assert data["value"] == 5


class TestFormula:
    def test_star_fan(self, capsys):
        code, data = run_json(capsys, ["formula", "star-fan",
                                       "--m", "10", "--n", "5"])
        assert code == 0
        assert data["regime"] == "n < m < n(n-1)"
        assert data["lower"] == pytest.approx(15.6602540378)

    def test_fan_gate(self, capsys):
        code, data = run_json(capsys, ["formula", "fan",
                                       "--n", "10", "--epsilon", "1.0"])
        assert code == 0
        assert data["upper_valid"] is False
        assert "384" in data["notes"][0]

    def test_dirac(self, capsys):
        code, data = run_json(capsys, ["formula", "dirac",
                                       "--n", "100", "--k", "5"])
        assert code == 0
        assert data["case"] == 1 and data["threshold"] == 50.5

    def test_dirac_text_flags_theta(self, capsys):
        assert main(["formula", "dirac", "--n", "100", "--k", "20"]) == 0
        assert "additive constant" in capsys.readouterr().out

    def test_missing_args_exit_2(self, capsys):
        assert main(["formula", "star-fan", "--n", "5"]) == 2
        assert main(["formula", "fan", "--n", "5"]) == 2
        assert main(["formula", "dirac", "--n", "5"]) == 2

    def test_dirac_range_exits_2(self, capsys):
        assert main(["formula", "dirac", "--n", "10", "--k", "5"]) == 2


def test_console_script_installed():
    exe = shutil.which("fanramsey")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "formula", "star-fan", "--m", "1", "--n", "2",
                           "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lower"] == 5.0
