import math
import os
import sys

import pytest

build = os.environ.get("VARBOUND_BUILD_DIR")
if build:
    sys.path.insert(0, build)

np = pytest.importorskip("numpy")
vb = pytest.importorskip("varbound")

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def test_norms():
    assert vb.norm(SX, "schatten:2") == pytest.approx(math.sqrt(2), abs=1e-12)
    assert vb.norm(SX, "schatten:inf") == pytest.approx(1.0, abs=1e-12)
    assert vb.norm(np.eye(3), "kyfan:2") == pytest.approx(2.0, abs=1e-12)


def test_radius_of_pauli_z():
    r = vb.radius(SZ, "C")
    assert r["value"] == pytest.approx(1.0, abs=1e-8)
    assert abs(r["center"]) < 1e-6
    assert vb.max_variance(SZ) == pytest.approx(1.0, abs=1e-8)


def test_numerical_ranges():
    e12 = np.array([[0, 1], [0, 0]], dtype=complex)
    assert vb.numerical_radius(e12) == pytest.approx(0.5, abs=1e-9)
    value, center = vb.central_numerical_radius(e12)
    assert value == pytest.approx(0.5, abs=1e-6)
    c, r = vb.enclosing_circle([1, -1, 1j])
    assert r == pytest.approx(1.0, abs=1e-12)


def test_commutator_bounds():
    rep = vb.commutator_bounds(SX, SZ)
    assert rep["lhs"] == pytest.approx(2 * math.sqrt(2), abs=1e-12)
    assert all(b["holds"] for b in rep["bounds"])
    assert vb.commutator(SX, SZ).shape == (2, 2)


def test_search_and_verify():
    s = vb.search(2, 2, 2, dims=[2], trials=5, seed=3)
    assert s["best_ratio"] == math.sqrt(2)
    rep = vb.verify("scalar", trials=3, dim_max=4)
    assert all(c["fail"] == 0 for c in rep["checks"])


def test_errors():
    with pytest.raises(ValueError):
        vb.search(1, 4, 4)
    with pytest.raises(ValueError):
        vb.norm(np.zeros(3, dtype=complex))
