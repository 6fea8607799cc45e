import json

import pytest

from annular_tangles.cli import main
from annular_tangles.matchings import Matching


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "2", "--n", "1", "--json")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    for line in lines:
        obj = json.loads(line)
        assert Matching.from_json(obj).to_json() == obj


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "0", "--n", "1", "--text")
    assert code == 0
    assert out.splitlines() == ["+-  cups: 1-0  rays: -", "-+  cups: 0-1  rays: -"]


def test_extdim(capsys):
    assert run(capsys, "extdim", "--m", "2", "--n", "1", "--alpha", "+-++", "--beta", "+-++")[1] == "2\n"
    code, out, _ = run(capsys, "extdim", "--m", "0", "--n", "1", "--alpha", "+-", "--beta", "-+", "--poincare")
    assert (code, out) == (0, "2q\n")


def test_multiply(capsys):
    x = json.dumps({"alpha": "+-", "beta": "-+", "labels": ["Y1"]})
    y = json.dumps({"alpha": "-+", "beta": "+-", "labels": ["Y2"]})
    code, out, _ = run(capsys, "multiply", "--m", "0", "--n", "1", "--x", x, "--y", y, "--check-orders")
    assert code == 0
    assert [json.loads(s) for s in out.splitlines()] == [
        {"alpha": "+-", "beta": "+-", "labels": ["X"], "coeff": 1}
    ]


def test_check_pass_and_fail(capsys):
    code, out, _ = run(capsys, "check", "--m", "2", "--n", "1", "--suite", "unit")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "check", "--m", "0", "--n", "2", "--suite", "assoc")
    lines = [json.loads(s) for s in out.splitlines()]
    assert code == 1 and not lines[0]["passed"] and "counterexample" in lines[1]


def test_decat(capsys):
    code, out, _ = run(capsys, "decat", "--word", "tangle 0 -> 2: g1", "--m", "0")
    assert code == 0 and [json.loads(s) for s in out.splitlines()] == [[-1], [1]]


def test_verify_relations_small(capsys):
    code, out, _ = run(capsys, "verify-relations", "--max-size", "4", "--json")
    lines = [json.loads(s) for s in out.splitlines()]
    assert code == 0 and lines[-1] == {"satisfying_epsilon": [1, -1]}


@pytest.mark.parametrize("argv", [
    ["extdim", "--m", "2", "--n", "1", "--alpha", "+-", "--beta", "+-++"],
    ["decat", "--word", "tangle 0 -> 2: x1", "--m", "0"],
    ["multiply", "--m", "0", "--n", "1", "--x", "{", "--y", "{}"],
])
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--m", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--m", "-1", "--n", "1"])
    assert exc.value.code == 2
