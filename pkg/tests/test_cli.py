import json

import pytest

from zipchow.cli import main
from zipchow.service.handlers import handle_graded
from zipchow.service.models import ReportModel, ReportRequest


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCommands:
    def test_present_text(self, capsys):
        code, out, _ = run(capsys, "present", "--group", "gl", "--h", "2", "--d", "1", "--p", "3")
        assert code == 0
        assert "2*t1 + 2*t2" in out
        assert "8*t1*t2" in out

    def test_picard_json_exact_bytes(self, capsys):
        code, out, _ = run(
            capsys, "picard", "--group", "gl", "--h", "3", "--d", "0", "--p", "3",
            "--format", "json",
        )
        assert code == 0
        assert out == '{"free_rank":0,"torsion":[2]}\n'

    def test_qdim_text(self, capsys):
        code, out, _ = run(
            capsys, "qdim", "--group", "sp", "--n", "1", "--parabolic", "borel", "--q", "2"
        )
        assert code == 0
        assert out == "2\n"

    def test_orbits(self, capsys):
        code, out, _ = run(
            capsys, "orbits", "--group", "gl", "--h", "4", "--composition", "2,2"
        )
        assert code == 0
        assert out == "6\n"

    def test_graded_text_chain_format(self, capsys):
        code, out, _ = run(
            capsys, "graded", "--group", "gl", "--h", "2", "--d", "1", "--p", "3",
            "--max-degree", "2",
        )
        assert code == 0
        assert "degree 2: Z/2 + Z/2 + Z/8" in out

    def test_fzip(self, capsys):
        code, out, _ = run(
            capsys, "fzip", "--composition", "1,1,1", "--p", "3", "--format", "json"
        )
        assert code == 0
        body = json.loads(out)
        assert body["picard"] == {"free_rank": 2, "torsion": [2]}
        assert body["rational_dimension"] == 6

    def test_fzip_support_labels(self, capsys):
        code, out, _ = run(
            capsys, "fzip", "--composition", "1,1", "--support", "0,1", "--p", "3",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["datum"]["support"] == [0, 1]
        code, _, err = run(
            capsys, "fzip", "--composition", "1,1", "--support", "1,0", "--p", "3"
        )
        assert code == 2
        assert "--support" in err

    def test_bt(self, capsys):
        code, out, _ = run(
            capsys, "bt", "--h", "2", "--d", "1", "--level", "4", "--p", "3",
            "--max-degree", "1", "--format", "json",
        )
        assert code == 0
        body = json.loads(out)
        assert body["graded"][1] == {"degree": 1, "free_rank": 1, "torsion": [2]}

    def test_m11_text(self, capsys):
        code, out, _ = run(capsys, "m11", "--p", "5")
        assert code == 0
        assert "compatible: true" in out
        code, out, _ = run(capsys, "m11", "--p", "3")
        assert code == 0
        assert "compatible: false" in out

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "picard", "--group", "gl", "--h", "2", "--d", "1", "--p", "3",
            "--format", "json", "--output", str(target),
        )
        assert code == 0
        assert out == ""
        assert target.read_text() == '{"free_rank":1,"torsion":[2]}\n'


class TestExitCodes:
    def test_q_one_is_validation_error(self, capsys):
        code, out, err = run(
            capsys, "qdim", "--group", "gl", "--h", "2", "--d", "1", "--q", "1"
        )
        assert code == 2
        assert out == ""
        assert err.splitlines() == ["error: --q: quotient not finite-dimensional for q = 1"]

    def test_missing_q(self, capsys):
        code, _, err = run(capsys, "picard", "--group", "gl", "--h", "2", "--d", "1")
        assert code == 2
        assert "--q" in err

    def test_conflicting_levi_flags(self, capsys):
        code, _, err = run(
            capsys, "picard", "--group", "gl", "--h", "2", "--d", "1",
            "--composition", "1,1", "--p", "3",
        )
        assert code == 2
        assert "--d" in err

    def test_bad_composition_string(self, capsys):
        code, _, err = run(
            capsys, "orbits", "--group", "gl", "--h", "2", "--composition", "1,x"
        )
        assert code == 2
        assert "--composition" in err

    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["explode"])
        assert exc.value.code == 2

    def test_matrix_cap_exits_3(self, capsys, monkeypatch):
        monkeypatch.setenv("ZIPCHOW_MATRIX_CAP", "1")
        code, _, err = run(
            capsys, "graded", "--group", "gl", "--h", "2", "--d", "1", "--p", "3"
        )
        assert code == 3
        assert "cap" in err


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["graded", "--group", "gl", "--h", "3", "--d", "1", "--p", "3", "--format", "json"],
            ["graded", "--group", "gl", "--h", "3", "--d", "1", "--p", "3"],
            ["present", "--group", "sp", "--n", "2", "--parabolic", "siegel", "--q", "2"],
            ["m11", "--p", "7", "--format", "json"],
        ],
    )
    def test_identical_invocations_identical_output(self, capsys, argv):
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_json_round_trip_equals_handler_model(self, capsys):
        _, out, _ = run(
            capsys, "graded", "--group", "gl", "--h", "2", "--d", "1", "--p", "3",
            "--max-degree", "2", "--format", "json",
        )
        parsed = ReportModel.model_validate_json(out)
        direct = handle_graded(ReportRequest(group="gl", h=2, d=1, p=3, max_degree=2))
        assert parsed == direct

    def test_separate_processes_identical_bytes(self):
        import subprocess
        import sys

        argv = [
            sys.executable, "-m", "zipchow.cli",
            "graded", "--group", "gl", "--h", "2", "--d", "1", "--p", "3",
            "--format", "json",
        ]
        first = subprocess.run(argv, capture_output=True, check=True)
        second = subprocess.run(argv, capture_output=True, check=True)
        assert first.stdout == second.stdout
        assert first.stdout.endswith(b"}\n")
