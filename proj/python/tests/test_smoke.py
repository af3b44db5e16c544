import os

import pytest

import logder

SIX = "x^2*z+y^3+z^4"
DATA = os.environ.get("LOGDER_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_normalize_round_trip():
    assert logder.normalize("(x+y)^2 - x^2 - 2*x*y", ["x", "y"]) == "y^2"


def test_infer_weights():
    assert logder.infer_weights(SIX, ["x", "y", "z"]) == [9, 8, 6]
    assert logder.infer_weights("x+x^2", ["x"]) is None


def test_conic_derivations_and_chi():
    gens = logder.derivations("x^2+y^2", ["x", "y"], u=[1, 1], v=[0, 0])
    assert len(gens) == 2
    assert logder.chi("x^2+y^2", ["x", "y"]) == (2, 2)


def test_factored_monomial():
    gens = logder.derivations("", ["x", "y"], factors=[("x", 2), ("y", 3)])
    assert sorted(gens) == ["x^2*d_x", "y^3*d_y"]
    assert logder.saito(["x^2*d_x", "y^3*d_y"], "", ["x", "y"], factors=[("x", 2), ("y", 3)]) == ("IsBasis", "1")


def test_six_example_homogenized():
    shifts = logder.resolution_shifts(SIX, ["x", "y", "z"], homogenize=True)
    assert sorted(shifts[0]) == [1, 2, 3, 3]
    assert shifts[1] == [5]
    table = logder.betti(SIX, ["x", "y", "z"], homogenize=True)
    assert table == {(1, 0): 1, (2, 0): 1, (3, 0): 2, (4, 1): 1}
    assert logder.chi(SIX, ["x", "y", "z"], homogenize=True) == (4, 4)


def test_weighted_ring_series():
    assert logder.hilbert_series([1, 2]) == "1/((1-t)(1-t^2))"


def test_errors_are_value_errors():
    with pytest.raises(logder.LogderError):
        logder.derivations("x^2*y", ["x", "y"])
    with pytest.raises(ValueError):
        logder.normalize("x+", ["x"])


def test_run_reports():
    report = logder.run("verify", random=5, seed=1)
    assert report["schema"] == 1
    assert report["verdict"] == "pass"
    faulty = logder.run("verify", random=2, inject_fault=True)
    assert faulty["verdict"] == "fail"


def test_run_homogenize_psi():
    report = logder.run("homogenize", SIX, resolution=os.path.join(DATA, "psi_resolution.json"))
    assert report["results"]["verdict"] == "complex"
