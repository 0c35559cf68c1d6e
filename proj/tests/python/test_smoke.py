import json

import pytest

import exls


def test_brackets():
    assert str(exls.bracket(exls.E510("d12"), exls.E510("d34"))) == "D5"
    assert str(exls.bracket(exls.K16("xi2"), exls.K16("eta2"))) == "-1"
    assert exls.bracket(exls.E44("dx1"), exls.E44("dx1")).is_zero()


def test_psi_roundtrip():
    a = exls.E16("t^2*Dt + x2*x3*dt")
    assert exls.psi_inverse(exls.psi(a)) == a
    assert exls.psi(exls.E16("d23*dt")) == exls.E510("d23")


def test_iota_and_Psi():
    f = exls.K16("xi2*xi3*eta4")
    assert str(exls.op_iota(f)) == "2*xi2*xi3*eta4"
    assert str(exls.Psi(exls.op_iota(f))) == "-r2*x4^2*dx1"


def test_weights():
    assert exls.weight_of(exls.v_r(2)) == (2, 0, 0, "-3")
    assert exls.annihilated_by_negative(exls.v_r(1))
    assert len(exls.enumerate_slice(1, 1)) == 20


def test_errors():
    with pytest.raises(exls.ParseError):
        exls.E510("x9*D1")
    with pytest.raises(exls.InvariantError):
        exls.E510("x1*D1")
    with pytest.raises(exls.HeadroomError):
        exls.op_A(exls.K16("t^3*xi2*xi3*xi4").truncated(5))


def test_verify_and_tables():
    rep = exls.verify("diesis")
    assert rep["passed"] == rep["attempted"] == 128
    rep = exls.verify("jacobi-k16", seed=7, trials=50)
    assert rep["failed"] == 0
    assert "thm-4-7" in exls.suite_names()
    rows = json.loads(exls.table("iota", "json"))["rows"]
    assert len(rows) == 18
