import json
import os

import numpy as np
import pytest

import uslev

DATA = os.environ.get("USLEV_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))

ORTHANT = {"kind": "orthant", "dim": 2, "sign": "nonneg"}
NONPOS = {"kind": "orthant", "dim": 2, "sign": "nonpos"}
F = np.array([[0, 3], [1, 1], [3, 0], [2, 2]], dtype=float)


def test_phi_values():
    a = uslev.make_set(NONPOS)
    v = uslev.phi(a, [1, 1], [-1, -1])
    assert v.is_real and v.value == -1.0
    assert uslev.phi(a, [1, 1], [-2, 0]).value == 0.0
    half = uslev.make_set({"kind": "halfspaces", "normals": [[0, 1]], "offsets": [0]})
    assert uslev.phi(half, [1, 0], [5, -1]).is_neg_inf
    nu = uslev.phi(half, [1, 0], [5, 1])
    assert nu.is_nu and nu.value is None and nu.kind == "nu"


def test_oracle_path():
    h = uslev.make_set({"kind": "oracle", "name": "hyperbola", "closed": True, "recession": [[-1, 0]]})
    assert uslev.phi(h, [-1, 0], [0, 2], oracle=True).value == pytest.approx(0.5, rel=1e-9)
    with pytest.raises(uslev.RefusalError):
        uslev.phi(h, [0, -1], [0, 2], oracle=True)


def test_sets_and_errors():
    s = uslev.make_set(json.dumps(ORTHANT))
    assert s.dim == 2
    assert s.contains([1, 2]) and not s.contains_core([0, 2])
    assert json.loads(s.to_json()) == ORTHANT
    with pytest.raises(uslev.InputError):
        uslev.make_set({"kind": "halfspaces", "normals": [[1, 0]], "offsets": [1, 2]})
    with pytest.raises(ValueError):
        uslev.phi(s, [1, 1, 1], [0, 0])


def test_norms():
    c = uslev.make_set(ORTHANT)
    assert uslev.order_unit_norm(c, [1, 1], [1, -2]) == pytest.approx(2.0)
    g = uslev.make_set({"kind": "shift", "offset": [1, 1], "base": NONPOS})
    assert uslev.minkowski(g, [0.5, -7]).value == pytest.approx(0.5, rel=1e-9)


def test_filters():
    d = uslev.make_set(ORTHANT)
    assert uslev.eff(F, d) == [0, 1, 2]
    assert uslev.eff(np.array([[0, 0], [0, 1]], dtype=float), d, weak=True) == [0, 1]
    assert uslev.min_points(F, d) == [0, 1, 2]


def test_drivers():
    d = uslev.make_set(ORTHANT)
    r = uslev.characterize(F, d, [1, 1])
    assert r["efficient"] == [0, 1, 2]
    r = uslev.reference_scalarize(F, d, [4, 4], [1, 1], d)
    assert r["argmin"] == [1]
    assert r["values"] == [-1, -3, -1, -2]
    r = uslev.bound_scalarize(F, d, [4, 4], "below")
    assert r["weakly_efficient"] == [0, 1, 2]
    r = uslev.norm_characterize(F, d, [-1, -1])
    assert r["weakly_efficient"] == [0, 1, 2]
    with pytest.raises(uslev.RefusalError):
        uslev.bound_scalarize(F, d, [3, 3], "below")
    r = uslev.separate(uslev.make_set(NONPOS), [1, 1], np.array([[-1.0, -1.0]]))
    assert r["verdict"] == "intersecting"


def test_cli_in_process():
    code, out, _ = uslev.run_cli(["phi", "--set", os.path.join(DATA, "nonpos_orthant.json"),
                                  "--k", "1,1", "--point", "-1,-1"])
    assert code == 0
    assert out == '{"class":"real","phi":-1.0}\n'
    code, _, err = uslev.run_cli(["phi", "--set", os.path.join(DATA, "mismatch.json"),
                                  "--k", "1,1", "--point", "0,0"])
    assert code == 2 and "/offsets" in err
