import json
import subprocess
import sys

import numpy as np
import pytest

from zpjoin.cli import main
from zpjoin.complexes import builtin_complex, complex_V
from zpjoin.files import (ComplexValidationError, ParseError, RangeError, ShapeError, dumps, load_complex, loads,
                          save_complex)
from zpjoin.gfp import PrimeField
from zpjoin.join import join

from oracles import tau_power

DATA = __import__("pathlib").Path(__file__).parent / "data"


def _doc(**over):
    doc = {"p": 3, "name": "x", "ranks": [1, 1], "boundaries": [[[[1, 2, 0]]]]}
    doc.update(over)
    return json.dumps(doc)


def test_golden_V_file():
    # tau = g^0 - g = (1, 2, 0); tau^2 = (1, 1, 1); -tau = (2, 1, 0) over F_3
    assert tau_power(2, 3) == [1, 1, 1]
    c = load_complex(DATA / "V_p3.json")
    v = complex_V(PrimeField(3))
    assert c.ranks == v.ranks
    assert all(np.array_equal(a, b) for a, b in zip(c.boundaries, v.boundaries))
    assert c.boundaries[1].tolist() == [[[1, 1, 1]], [[2, 1, 0]]]


def test_range_error():
    with pytest.raises(RangeError, match=r"boundaries\[0\]\[0\]\[0\]\[1\] = 3"):
        loads(_doc(boundaries=[[[[1, 3, 0]]]]))
    with pytest.raises(RangeError):
        loads(_doc(boundaries=[[[[1, -3, 0]]]]))


def test_empty_ranks():
    with pytest.raises(ComplexValidationError, match="ranks\\[0\\] >= 1 required"):
        loads(_doc(ranks=[], boundaries=[]))


def test_parse_and_shape_errors():
    with pytest.raises(ParseError):
        loads("{not json")
    with pytest.raises(ShapeError):
        loads(_doc(boundaries=[[[[1, 2]]]]))
    with pytest.raises(ShapeError):
        loads(_doc(ranks=[1, 2]))
    with pytest.raises(ShapeError):
        loads(json.dumps({"p": 3, "ranks": [1]}))
    with pytest.raises(RangeError):
        loads(_doc(p=4))


def test_validation_errors():
    with pytest.raises(ComplexValidationError, match="augmentation"):
        loads(_doc(boundaries=[[[[1, 0, 0]]]]))
    with pytest.raises(ComplexValidationError, match="degree 2"):
        loads(_doc(ranks=[1, 1, 1], boundaries=[[[[1, 2, 0]]], [[[1, 2, 0]]]]))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_roundtrip_builtins(tmp_path, p):
    for name, k in [("point_orbit", None), ("U", None), ("V", None)] + [("lens", k) for k in range(5)]:
        c = builtin_complex(name, p, k)
        path = tmp_path / f"{name}{k}.json"
        save_complex(c, path)
        text = path.read_text()
        assert text == dumps(c)
        assert dumps(load_complex(path)) == text
    j = join(builtin_complex("U", p), builtin_complex("V", p))
    assert dumps(loads(dumps(j))) == dumps(j)


def test_canonical_form_of_golden():
    raw = (DATA / "V_p3.json").read_text()
    canon = dumps(loads(raw))
    assert canon == dumps(loads(canon))
    assert " " not in canon and canon.endswith("\n")
    assert list(json.loads(canon)) == sorted(json.loads(canon))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_index(capsys):
    code, out, _ = run(capsys, "index", "--builtin", "U", "--p", "3")
    assert code == 0 and out.splitlines()[0] == "index 3"
    code, out, _ = run(capsys, "index", "--builtin", "lens", "--k", "4", "--p", "5", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["index"] == 5 and doc["hit_flags"] == [True] * 5


def test_cli_tensor(capsys):
    code, out, _ = run(capsys, "tensor", "--left", "1", "--right", "1", "--p", "3")
    assert code == 0 and out.strip() == "{1: 1, 3: 1}"
    code, out, _ = run(capsys, "tensor", "--left", "3", "--right", "1", "--p", "5", "--json")
    assert json.loads(out)["jordan_type"] == {"3": 1, "5": 1}


def test_cli_homology(capsys):
    code, out, _ = run(capsys, "homology", str(DATA / "V_p3.json"), "--json")
    assert code == 0
    assert json.loads(out)["jordan_types"] == [{"1": 1}, {"2": 1}, {"1": 1}]
    code, out, _ = run(capsys, "homology", "--builtin", "U", "--p", "3", "--orbit", "--json")
    assert json.loads(out)["orbit_dims"] == [1, 1, 1, 1]
    code, out, _ = run(capsys, "homology", "--builtin", "U", "--p", "5")
    assert code == 0 and out.splitlines()[3].startswith("H_3 = tau^3R")


def test_cli_join(tmp_path, capsys):
    out_path = tmp_path / "j.json"
    pt = tmp_path / "pt.json"
    save_complex(builtin_complex("point_orbit", 3), pt)
    code, _, _ = run(capsys, "join", str(DATA / "V_p3.json"), str(pt), "-o", str(out_path))
    assert code == 0
    code, out, _ = run(capsys, "index", str(out_path), "--json")
    assert json.loads(out)["index"] == 3


def test_cli_paper_and_random(capsys):
    code, out, _ = run(capsys, "paper", "--p", "3")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "random-check", "--p", "3", "--trials", "10", "--seed", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["seed"] == 3 and doc["outcomes"]["violation"] == 0


def test_cli_exit_codes(tmp_path, capsys):
    assert run(capsys, "index")[0] == 2
    assert run(capsys, "index", "--builtin", "lens", "--p", "3")[0] == 2
    assert run(capsys, "tensor", "--left", "9", "--right", "1", "--p", "3")[0] == 2
    assert run(capsys, "paper", "--p", "4")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    code, out, err = run(capsys, "index", str(tmp_path / "missing.json"))
    assert code == 3 and out == "" and err
    bad = tmp_path / "bad.json"
    bad.write_text(_doc(boundaries=[[[[1, 3, 0]]]]))
    code, out, err = run(capsys, "homology", str(bad), "--json")
    assert code == 3 and out == "" and "out of range" in err


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "zpjoin", "index", "--builtin", "V", "--p", "3"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.startswith("index 3")
