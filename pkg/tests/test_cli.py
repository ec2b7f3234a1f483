import json

import pytest

from icefock.cli import main
from icefock.coeff_ring import RingElem
from icefock.heisenberg import metaplectic_sf


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_llt_schur(capsys):
    code, out = run(capsys, "llt", "--n", "1", "--r", "1", "--lambda", "1")
    assert code == 0
    assert json.loads(out)["text"] == "z1"


def test_metaplectic_json(capsys):
    code, out = run(capsys, "metaplectic", "--n", "2", "--r", "2", "--lambda", "2,1", "--mu", "1")
    assert code == 0
    got = RingElem.from_json(json.loads(out)["value"])
    assert got == metaplectic_sf((2, 1), (1,), 2, 2).specialize_g()


def test_formal_g(capsys):
    code, out = run(capsys, "metaplectic", "--n", "2", "--r", "1", "--lambda", "2", "--g-spec", "formal")
    assert code == 0
    assert RingElem.from_json(json.loads(out)["value"]) == metaplectic_sf((2,), (), 1, 2)


def test_deterministic(capsys):
    a = run(capsys, "verify", "hat-table", "--n", "2")
    b = run(capsys, "verify", "hat-table", "--n", "2")
    assert a[0] == 0 and a == b


def test_csv(capsys):
    code, out = run(capsys, "hat-table", "--n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("n,case,row,label")


@pytest.mark.parametrize("argv", [
    ["llt", "--n", "0", "--lambda", "1"],
    ["llt", "--n", "2", "--lambda", "1,3"],
    ["verify", "no-such-suite"],
    ["bogus"],
    [],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        if main(argv) == 2:
            raise SystemExit(2)
    assert e.value.code == 2
