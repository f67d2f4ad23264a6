"""Command-line interface: exit codes, stable output, pipelines."""

import numpy as np
import pytest

from graphsep import decompose, format_decomposition, parse_graph
from graphsep.cli import main

M222_TEXT = "dims 2 2 2\ne 1 5\ne 2 6\ne 3 7\ne 4 8\n"
K2_TEXT = "dims 2 2\ne 1 2\n"
EMPTY_TEXT = "dims 2 2 2\n"
INTRA_TEXT = "dims 2 2 2\ne 1 2\n"
EDGE16_TEXT = "dims 2 2 2\ne 1 6\n"


@pytest.fixture
def workdir(tmp_path):
    (tmp_path / "m222.graph").write_text(M222_TEXT)
    (tmp_path / "k2.graph").write_text(K2_TEXT)
    (tmp_path / "empty.graph").write_text(EMPTY_TEXT)
    (tmp_path / "intra.graph").write_text(INTRA_TEXT)
    (tmp_path / "edge16.graph").write_text(EDGE16_TEXT)
    return tmp_path


class TestBuild:
    def test_q_matrix_golden(self, workdir, capsys):
        assert main(["build", str(workdir / "m222.graph"), "--matrix", "Q"]) == 0
        out = capsys.readouterr().out
        rows = [[int(x) for x in line.split()] for line in out.strip().splitlines()]
        eye4 = np.eye(4, dtype=int)
        assert np.array_equal(rows, np.block([[eye4, eye4], [eye4, eye4]]))

    def test_l_matrix_golden(self, workdir, capsys):
        assert main(["build", str(workdir / "k2.graph"), "--matrix", "L"]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert out[0].split() == ["1", "-1", "0", "0"]
        assert out[1].split() == ["-1", "1", "0", "0"]

    def test_rho_uses_17_digit_floats(self, workdir, capsys):
        assert main(["build", str(workdir / "m222.graph"), "--matrix", "rho_q"]) == 0
        out = capsys.readouterr().out
        assert "1.2500000000000000e-01" in out
        assert "-0." not in out

    def test_zero_trace_exit_2(self, workdir, capsys):
        code = main(["build", str(workdir / "empty.graph"), "--matrix", "rho_l"])
        assert code == 2
        assert "zero trace" in capsys.readouterr().err

    def test_parse_error_exit_4(self, tmp_path, capsys):
        bad = tmp_path / "bad.graph"
        bad.write_text("dims 2 2\ne 1 2\ne 1 2\n")
        assert main(["build", str(bad)]) == 4
        assert "line 3" in capsys.readouterr().err

    def test_missing_file_exit_4(self, tmp_path):
        assert main(["build", str(tmp_path / "nope.graph")]) == 4


class TestCheck:
    def test_partial_sym_true(self, workdir, capsys):
        code = main(
            ["check", str(workdir / "m222.graph"), "partial-sym", "--axis", "1", "--format", "kv"]
        )
        assert code == 0
        assert "holds=true" in capsys.readouterr().out

    def test_degree_sym_false_exit_1(self, workdir, capsys):
        code = main(
            ["check", str(workdir / "edge16.graph"), "degree-sym", "--format", "kv"]
        )
        assert code == 1
        out = capsys.readouterr().out
        assert "holds=false" in out
        assert "1:1->0" in out

    def test_theorem_conditions_kv(self, workdir, capsys):
        code = main(
            ["check", str(workdir / "m222.graph"), "theorem-conditions", "--format", "kv"]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "overall=true" in out
        assert "layer_degrees=1,1" in out

    def test_gtpt_identity(self, workdir):
        assert main(["check", str(workdir / "edge16.graph"), "gtpt-identity"]) == 0

    def test_usage_error_exit_4(self, workdir):
        assert main(["check", str(workdir / "m222.graph"), "no-such-property"]) == 4


class TestDecomposeVerify:
    def test_round_trip(self, workdir, capsys):
        dec_path = workdir / "out.dec"
        assert main(["decompose", str(workdir / "m222.graph"), str(dec_path)]) == 0
        out = capsys.readouterr().out
        assert "terms=4" in out
        assert "ppt_axis_3=pass" in out
        assert main(["verify", str(workdir / "m222.graph"), str(dec_path)]) == 0
        assert "verified=pass" in capsys.readouterr().out

    def test_precondition_exit_2(self, workdir, capsys):
        code = main(["decompose", str(workdir / "intra.graph"), str(workdir / "x.dec")])
        assert code == 2
        assert "intra-layer edge (1, 2)" in capsys.readouterr().err

    def test_tampered_file_fails_verify(self, workdir, capsys):
        dec_path = workdir / "out.dec"
        graph = parse_graph(M222_TEXT)
        dec_path.write_text(format_decomposition(decompose(graph)))
        text = dec_path.read_text()
        tampered = text.replace(
            "5.0000000000000000e-01", "5.0010000000000000e-01", 1
        )
        assert tampered != text
        dec_path.write_text(tampered)
        code = main(["verify", str(workdir / "m222.graph"), str(dec_path)])
        assert code == 1
        captured = capsys.readouterr()
        assert "verified=fail" in captured.out

    def test_verify_unreadable_record_exit_4(self, workdir, tmp_path):
        bad = tmp_path / "bad.dec"
        bad.write_text("not-a-decomposition\n")
        assert main(["verify", str(workdir / "m222.graph"), str(bad)]) == 4

    def test_verify_profile_mismatch_exit_2(self, workdir, capsys):
        dec_path = workdir / "out.dec"
        assert main(["decompose", str(workdir / "m222.graph"), str(dec_path)]) == 0
        capsys.readouterr()
        code = main(["verify", str(workdir / "k2.graph"), str(dec_path)])
        assert code == 2
        assert "profile" in capsys.readouterr().err


class TestGen:
    def test_gen_theorem_passes_check(self, tmp_path, capsys):
        out = tmp_path / "t.graph"
        assert main(["gen", "theorem", "--dims", "2,2,2", "--seed", "7", "-o", str(out)]) == 0
        assert main(["check", str(out), "theorem-conditions"]) == 0

    def test_gen_psym_passes_check(self, tmp_path):
        out = tmp_path / "p.graph"
        code = main(
            ["gen", "psym", "--dims", "2,3,2", "--seed", "1", "--budget", "6", "-o", str(out)]
        )
        assert code == 0
        assert main(["check", str(out), "partial-sym", "--axis", "1"]) == 0

    def test_gen_dsym_breaks_conditions(self, tmp_path):
        out = tmp_path / "d.graph"
        assert main(["gen", "dsym", "--dims", "2,2,2", "--seed", "3", "-o", str(out)]) == 0
        assert main(["check", str(out), "degree-sym"]) == 0
        assert main(["check", str(out), "theorem-conditions"]) == 1

    def test_gen_stdout_and_determinism(self, capsys):
        assert main(["gen", "theorem", "--dims", "2,2,2", "--seed", "2"]) == 0
        first = capsys.readouterr().out
        assert main(["gen", "theorem", "--dims", "2,2,2", "--seed", "2"]) == 0
        assert capsys.readouterr().out == first
        assert first.startswith("dims 2 2 2\n")

    def test_bad_dims_exit_4(self):
        assert main(["gen", "psym", "--dims", "2", "--seed", "0"]) == 4

    def test_pipeline_decompose_generated(self, tmp_path):
        graph_path = tmp_path / "g.graph"
        dec_path = tmp_path / "g.dec"
        for seed in (0, 1, 2):
            assert (
                main(["gen", "theorem", "--dims", "2,2,3", "--seed", str(seed), "-o", str(graph_path)])
                == 0
            )
            assert main(["decompose", str(graph_path), str(dec_path)]) == 0
            assert main(["verify", str(graph_path), str(dec_path)]) == 0


class TestEnvCap:
    def test_cap_override_allows_large_profile(self, tmp_path, monkeypatch, capsys):
        text = "dims 2 513\n" + "e 1 514\n"
        path = tmp_path / "wide.graph"
        path.write_text(text)
        assert main(["build", str(path), "--matrix", "A"]) == 4
        assert "exceeds the cap" in capsys.readouterr().err
        monkeypatch.setenv("GRAPHSEP_MAX_VERTICES", "2048")
        assert main(["build", str(path), "--matrix", "A"]) == 0
