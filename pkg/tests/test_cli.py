import json
import subprocess
import sys

import pytest

from invchern.chern import cpn_record
from invchern.cli import main
from invchern.partitions import GradedPolynomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lagrange_text(capsys):
    code, out, _ = run(capsys, "lagrange", "4")
    assert code == 0
    assert "14*t1^4" in out


def test_lagrange_json_roundtrip(capsys):
    code, out, _ = run(capsys, "lagrange", "4", "--json")
    data = json.loads(out)
    poly = GradedPolynomial.from_json(data)
    assert poly.coeff((2, 1, 1)) == -21
    assert poly.weight == 4


def test_var_renames(capsys):
    _, out, _ = run(capsys, "multinv", "2", "--var", "a")
    assert "a1^2" in out and "t1" not in out


def test_env_selects_json(capsys, monkeypatch):
    monkeypatch.setenv("INVCHERN_FORMAT", "json")
    code, out, _ = run(capsys, "bell", "5", "3")
    assert code == 0
    json.loads(out)


def test_faces_assoc(capsys):
    code, out, _ = run(capsys, "faces", "assoc", "4")
    assert code == 0
    assert "6x[3, 1] + 3x[2, 2]" in out
    lines = {l.split()[0]: l.split()[1] for l in out.splitlines()[2:6]}
    assert lines == {"3": "1", "2": "9", "1": "21", "0": "14"}


def test_divisibility_json(capsys):
    _, out, _ = run(capsys, "divisibility", "toric", "--json")
    assert json.loads(out)["divisible"] == [3, 4, 6, 12]


def test_decompose_record_file(capsys, tmp_path):
    path = tmp_path / "cp2.json"
    path.write_text(cpn_record(2).dumps())
    code, out, _ = run(capsys, "cobordism", "decompose", str(path), "--json")
    assert code == 0
    assert "theta" in out


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "5")
    assert code == 0
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [["lagrange", "13"], ["lagrange", "0"], ["faces", "perm", "20"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_unsafe_n_lifts_cap(capsys):
    code, _, _ = run(capsys, "multinv", "13", "--unsafe-n")
    assert code == 0


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_deterministic_output():
    cmd = [sys.executable, "-m", "invchern", "cobordism", "log", "6", "--json"]
    outs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1
