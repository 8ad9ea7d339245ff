import os
import subprocess

import pytest

import sepstar


def test_star_of_zbar_and_z():
    series = sepstar.star("zbar1", "z1", potential="flat", n=1, nu_order=2)
    assert [str(c) for c in series] == ["z1*zbar1", "1", "0"]
    assert series[0].order == 2


def test_jet_arithmetic():
    a = sepstar.Jet.parse("1 + z1*zbar1", 1, 6)
    inv = a.reciprocal()
    assert a * inv == sepstar.Jet.parse("1", 1, 6)
    assert str(sepstar.Jet.parse("z1^2*zbar1", 1, 5).partial("z1")) == "2*z1*zbar1"
    assert sepstar.coefficients(sepstar.builtin_potential("fubini-study", 1, 4)) == {
        "z1*zbar1": "1",
        "z1^2*zbar1^2": "-1/2",
    }


def test_geometry_and_curvature():
    geom = sepstar.Geometry("hyperbolic", 1, 8)
    assert str(geom.curvature(0, 0, 0, 0).at_origin()) == "-2"
    assert geom.metric_order == 6


def test_tensor_t_matches_closed_form():
    t = sepstar.tensor_t(potential="fubini-study", n=1, nu_order=4, jet_order=2)
    assert t == sepstar.closed_form_t(potential="fubini-study", n=1, jet_order=2)
    assert t["1"]["eta1*etabar1"] == "1"


def test_left_symbol():
    s = sepstar.left_symbol("zbar1^2", potential="flat", nu_order=2)
    assert s["1"] == {"zbar1*etabar1": "2"}
    assert s["2"] == {"etabar1^2": "1"}


def test_verify_report():
    report = sepstar.verify(potential="fubini-study", n=1, nu_order=3, seed=7, samples=1)
    assert report["passed"] is True
    assert {c["status"] for c in report["checks"]} == {"pass"}


def test_errors():
    with pytest.raises(ValueError, match="index 3 exceeds dimension 2"):
        sepstar.Jet.parse("z3", 2, 4)
    with pytest.raises(ArithmeticError):
        sepstar.Geometry("z1*zbar1", 2, 4)
    with pytest.raises(sepstar.OrderExhausted):
        sepstar.star("zbar1", "z1", potential="fubini-study", nu_order=4, jet_order=4, phi_order=5)


def test_run_command():
    code, out, err = sepstar.run_command(["tensor-t", "--nu-order", "1", "--at-origin"])
    assert code == 0 and err == ""
    code, _, err = sepstar.run_command(["star", "--f", "z2", "--g", "1"])
    assert code == 2 and "exceeds dimension" in err


@pytest.mark.skipif("SEPSTAR_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary():
    done = subprocess.run(
        [os.environ["SEPSTAR_CLI"], "verify", "--potential", "flat", "--n", "2", "--nu-order", "2"],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0, done.stderr
