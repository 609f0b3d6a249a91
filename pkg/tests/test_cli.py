import json

import pytest

from altgt import yor
from altgt.cli import main
from altgt.scalars import I, Scalar
from test_verify import column_flip


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_syt(capsys):
    code, out, _ = run_cli(capsys, "syt", "2,1")
    assert code == 0
    assert out == "12/3\n13/2\n"


def test_syt_bad_shape(capsys):
    code, _, err = run_cli(capsys, "syt", "4,x")
    assert code == 2
    assert err == "error: invalid partition part 'x'\n"


def test_yor_text(capsys):
    code, out, _ = run_cli(capsys, "yor", "2,1", "--gen", "2")
    assert code == 0
    assert out == (
        "-1/2         1/2*sqrt(3)\n"
        "1/2*sqrt(3)  1/2\n"
    )


def test_yor_latex(capsys):
    code, out, _ = run_cli(capsys, "yor", "2,1", "--gen", "2", "--format", "latex")
    assert code == 0
    assert out == (
        "\\begin{pmatrix}\n"
        "-\\frac{1}{2} & \\frac{1}{2}\\sqrt{3} \\\\\n"
        "\\frac{1}{2}\\sqrt{3} & \\frac{1}{2}\n"
        "\\end{pmatrix}\n"
    )


def test_yor_json(capsys):
    code, out, _ = run_cli(capsys, "yor", "2,1", "--gen", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["shape"] == [2, 1]
    assert data["generator"] == 1
    assert data["basis"] == [[[1, 2], [3]], [[1, 3], [2]]]
    assert data["rows"][0][0] == Scalar.rational(1).to_json()
    assert data["rows"][1][1] == Scalar.rational(-1).to_json()


def test_yor_generator_out_of_range(capsys):
    code, _, err = run_cli(capsys, "yor", "2,1", "--gen", "3")
    assert code == 2
    assert err.startswith("error: generator 3 out of range 1..2")


def test_assoc_text(capsys):
    code, out, _ = run_cli(capsys, "assoc", "2,2")
    assert code == 0
    assert out == (
        "12/34  i   13/24\n"
        "13/24  -i  12/34\n"
    )


def test_assoc_json(capsys):
    code, out, _ = run_cli(capsys, "assoc", "2,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["tableau"] == [[1, 2], [3]]
    assert data[0]["conjugate"] == [[1, 3], [2]]
    assert data[0]["coeff"] == I.to_json()


def test_assoc_rejects_non_self_conjugate(capsys):
    code, _, err = run_cli(capsys, "assoc", "3,1")
    assert code == 2
    assert err == "error: shape 3,1 is not self-conjugate\n"


def test_bratteli_dot(capsys):
    code, out, _ = run_cli(capsys, "bratteli", "--max-n", "3")
    assert code == 0
    assert out.splitlines()[:9] == [
        "graph alternating {",
        "  rankdir=BT;",
        "  node [shape=box];",
        '  "2:2" [label="2"];',
        "  { rank=same; \"2:2\"; }",
        '  "3:3" [label="3"];',
        '  "3:2,1^+" [label="2,1^+", color=red, fontcolor=red];',
        '  "3:2,1^-" [label="2,1^-", color=green, fontcolor=green];',
        '  { rank=same; "3:3"; "3:2,1^+"; "3:2,1^-"; }',
    ]
    assert out.endswith("}\n")


def test_bratteli_json(capsys):
    code, out, _ = run_cli(capsys, "bratteli", "--max-n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["chain"] == "alternating"
    assert data["levels"]["4"] == ["4", "3,1", "2,2^+", "2,2^-"]
    assert ["4:2,2^+", "3:2,1^+"] in data["edges"]


def test_bratteli_symmetric_chain(capsys):
    code, out, _ = run_cli(capsys, "bratteli", "--chain", "symmetric", "--max-n", "3")
    assert code == 0
    assert out.startswith("graph symmetric {")
    assert '"3:2,1" -- "2:2";' in out


def test_paths(capsys):
    code, out, _ = run_cli(capsys, "paths", "4,1,1")
    assert code == 0
    assert out == (
        "2;3;4;4,1;4,1,1\t2\n"
        "2;3;3,1;4,1;4,1,1\t2\n"
        "2;3;3,1;3,1,1^+;4,1,1\t4\n"
        "2;3;3,1;3,1,1^-;4,1,1\t4\n"
        "2;2,1^+;3,1;4,1;4,1,1\t4\n"
        "2;2,1^+;3,1;3,1,1^+;4,1,1\t8\n"
        "2;2,1^+;3,1;3,1,1^-;4,1,1\t8\n"
        "2;2,1^-;3,1;4,1;4,1,1\t4\n"
        "2;2,1^-;3,1;3,1,1^+;4,1,1\t8\n"
        "2;2,1^-;3,1;3,1,1^-;4,1,1\t8\n"
    )


def test_gt_text(capsys):
    code, out, _ = run_cli(capsys, "gt", "2,1^+")
    assert code == 0
    assert out == "u[2;2,1^+] = (1)*v[12/3] + (i)*v[13/2]\n"


def test_gt_normalized(capsys):
    code, out, _ = run_cli(capsys, "gt", "2,1^-", "--normalize")
    assert code == 0
    assert out == "u[2;2,1^-] = (1/2*sqrt(2))*v[12/3] + (-1/2*i*sqrt(2))*v[13/2]\n"


def test_gt_latex(capsys):
    code, out, _ = run_cli(capsys, "gt", "2,1^+", "--format", "latex")
    assert code == 0
    assert out == "u_{(2),(2,1)^+} = v_{12,3} + i v_{13,2}\n"


def test_gt_json(capsys):
    code, out, _ = run_cli(capsys, "gt", "2,1^+", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 1
    assert data[0]["path"] == [
        {"partition": [2], "sign": None},
        {"partition": [2, 1], "sign": "+"},
    ]
    coeffs = {tuple(map(tuple, t["tableau"])): t["coeff"] for t in data[0]["terms"]}
    assert coeffs[((1, 3), (2,))] == I.to_json()


def test_gt_rejects_missing_sign(capsys):
    code, _, err = run_cli(capsys, "gt", "2,1")
    assert code == 2
    assert err == "error: self-conjugate partition 2,1 needs a sign\n"


def test_gt_rejects_unicode_sign(capsys):
    code, _, err = run_cli(capsys, "gt", "2,1^\u207a")
    assert code == 2
    assert err.startswith("error:")


def test_verify_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "PASS yor   shape 2"
    assert lines[5] == "PASS assoc shape 2,1"
    assert lines[-1] == "14 checks, 0 failures"


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "yor", "--max-n", "2",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert [c["subject"] for c in data["checks"]] == ["shape 2", "shape 1,1"]


def test_verify_skips_assoc_below_three(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "2")
    assert code == 0
    assert "assoc" not in out


def test_verify_assoc_needs_three(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "assoc", "--max-n", "2")
    assert code == 2
    assert "max_n must be at least 3" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(yor, "act_simple", column_flip)
    code, out, _ = run_cli(capsys, "verify", "--suite", "yor", "--max-n", "4")
    assert code == 1
    assert "FAIL yor   shape 2,1" in out


def test_argparse_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify"])  # missing required --max-n
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])  # missing subcommand
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2
    capsys.readouterr()


def test_deterministic_output(capsys):
    first = run_cli(capsys, "gt", "4,1,1")
    second = run_cli(capsys, "gt", "4,1,1")
    assert first == second
    first = run_cli(capsys, "bratteli", "--max-n", "6")
    second = run_cli(capsys, "bratteli", "--max-n", "6")
    assert first == second
