"""Command-line behaviour: output shapes and exit codes."""

import io
import pathlib

import cckit
from cckit.cli import main

FIXTURES = str(pathlib.Path(cckit.__file__).parent / "fixtures")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(name):
    return f"{FIXTURES}/{name}"


def test_eval_answer_false_exits_one(capsys):
    code, out, _ = run(capsys, "eval", fx("annotated_demo.ccv"), "--input", "111")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "w0=0"
    assert lines[-1] == "answer=0"


def test_eval_true_exits_zero(capsys):
    code, out, _ = run(capsys, "eval", fx("const_demo.ccv"))
    assert code == 0
    assert out.splitlines() == ["w0=1", "w1=1", "w2=0", "answer=1"]


def test_eval_trace(capsys):
    code, out, _ = run(capsys, "eval", fx("const_demo.ccv"), "--trace")
    lines = out.splitlines()
    assert lines[0] == "step 0 011"
    assert lines[1] == "step 1 101"
    assert lines[2] == "step 2 110"
    assert "answer=1" in lines[-1]


def test_eval_tri(capsys, tmp_path):
    p = tmp_path / "t.ccv"
    p.write_text("CCV v1\nwires 2\nannot 0 x0\nannot 1 x1\ngate 0 1\noutput 1\n")
    code, out, _ = run(capsys, "eval", str(p), "--tri", "1*")
    assert code == 0
    assert out.splitlines() == ["w0=*", "w1=1", "answer=1"]
    code, out, _ = run(capsys, "eval", str(p), "--tri", "0*")
    assert code == 1
    assert out.splitlines()[-1] == "answer=*"


def test_eval_arity_error_exits_two(capsys):
    code, _, err = run(capsys, "eval", fx("annotated_demo.ccv"), "--input", "1")
    assert code == 2
    assert "error:" in err


def test_parse_error_exits_two(capsys, tmp_path):
    p = tmp_path / "broken.ccv"
    p.write_text("CCV v1\nwires 1\nannot 0 qq\noutput 0\n")
    code, _, err = run(capsys, "eval", str(p))
    assert code == 2
    assert "line 3" in err


def test_reduce_writes_output_and_sidecar(capsys, tmp_path):
    out = tmp_path / "down.ccv"
    code, _, _ = run(
        capsys, "reduce", "normalize-down", fx("annotated_demo.ccv"), str(out)
    )
    assert code == 0
    assert out.read_text().startswith("CCV v1\n")
    side = (tmp_path / "down.ccv.map").read_text().splitlines()
    assert all(len(line.split()) == 2 for line in side)
    assert side[0].startswith("w0 ")


def test_reduce_stdout_skips_sidecar(capsys):
    code, out, _ = run(capsys, "reduce", "dual", fx("const_demo.ccv"), "-")
    assert code == 0
    assert out.startswith("CCV v1\n")


def test_reduce_tri_lower_needs_input(capsys, tmp_path):
    p = tmp_path / "t.ccv"
    p.write_text("CCV v1\nwires 1\nannot 0 x0\noutput 0\n")
    code, out, _ = run(capsys, "reduce", "tri-lower", str(p), "-", "--input", "*")
    assert code == 0
    assert "wires 2" in out


def test_reduce_unknown_pass_exits_two(capsys):
    code, _, err = run(capsys, "reduce", "no-such-pass", fx("const_demo.ccv"), "-")
    assert code == 2
    assert "unknown pass" in err


def test_reduce_precondition_exits_two(capsys, tmp_path):
    # graph without the required designation
    p = tmp_path / "g.graph"
    p.write_text("GRAPH v1\nbottom 1\ntop 1\nedge 0 0\n")
    code, _, err = run(capsys, "reduce", "vlfmm-to-ccv", str(p), "-")
    assert code == 2


def test_reduce_universal_sidecar_holds_controls(capsys, tmp_path):
    out = tmp_path / "univ.ccv"
    code, _, _ = run(capsys, "reduce", "universal", fx("const_demo.ccv"), str(out))
    assert code == 0
    side = (tmp_path / "univ.ccv.map").read_text().splitlines()
    assert side and all(line.split()[1] in ("0", "1") for line in side)
    assert sum(int(line.split()[1]) for line in side) == 2


def test_reduce_marriage_pair(capsys, tmp_path):
    sm = tmp_path / "a.sm"
    sm.write_text("SM v1\nn 1\nman 0: 0\nwoman 0: 0\n")
    code, out, _ = run(
        capsys, "reduce", "mosm-to-ccv", str(sm), "-", "--pair", "0", "0"
    )
    assert code == 0
    assert out.startswith("CCV v1\n")


def test_lfmm_prints_matching_and_decides(capsys):
    code, out, _ = run(capsys, "lfmm", fx("greedy_demo.graph"))
    assert code == 0
    assert out.splitlines() == ["v0 w0", "v2 w2", "v3 w1"]
    code, out, _ = run(capsys, "lfmm", fx("edge_decision_demo.graph"))
    assert code == 0
    assert out.splitlines()[-1] == "answer=1"


def test_gs_plain_and_sections(capsys, tmp_path):
    sm = tmp_path / "b.sm"
    sm.write_text(
        "SM v1\nn 2\nman 0: 0 1\nman 1: 0 1\nwoman 0: 1 0\nwoman 1: 1 0\n"
    )
    code, out, _ = run(capsys, "gs", str(sm))
    assert code == 0
    assert out.splitlines() == ["m0 w1", "m1 w0"]
    for alg in ("2", "3", "4", "5", "6"):
        code, out, _ = run(capsys, "gs", str(sm), "--alg", alg)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "man-optimal:"
        assert "woman-optimal:" in lines
        assert lines[1:3] == ["m0 w1", "m1 w0"]


def test_reach_decides(capsys):
    code, out, _ = run(capsys, "reach", fx("reach_demo.digraph"), "--target", "4")
    assert code == 0 and out == "reachable=1\n"
    code, out, _ = run(
        capsys, "reach", fx("reach_demo.digraph"), "--target", "0", "--src", "3"
    )
    assert code == 1 and out == "reachable=0\n"


def test_reach_reads_stdin(capsys, monkeypatch):
    text = "DIGRAPH v1\nnodes 2\narc 0 1\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run(capsys, "reach", "-", "--target", "1")
    assert code == 0 and out == "reachable=1\n"


def test_verify_pass_line(capsys):
    code, out, _ = run(capsys, "verify", "golden-fixtures")
    assert code == 0
    assert out == "golden-fixtures: pass (9 cases)\n"


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2
    assert "no suite named" in err


def test_verify_failure_exits_one(capsys):
    from cckit import verify

    verify._flip_expected = True
    try:
        code, out, _ = run(capsys, "verify", "universal", "--cases", "2")
        assert code == 1
        assert "fail" in out and "CCV v1" in out
    finally:
        verify._flip_expected = False


def test_verify_output_is_deterministic(capsys):
    a = run(capsys, "verify", "sm-ladder", "--cases", "5", "--seed", "11")
    b = run(capsys, "verify", "sm-ladder", "--cases", "5", "--seed", "11")
    assert a == b


def test_usage_error_exits_two(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
