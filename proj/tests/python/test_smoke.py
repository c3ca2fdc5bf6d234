import json
import os

import pytest

gwci = pytest.importorskip("gwci")

FIXTURES = os.environ.get("GWCI_FIXTURE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def load(name):
    with open(os.path.join(FIXTURES, name + ".json")) as f:
        return f.read()


def test_frame_basics():
    F = gwci.Frame(["x", "y", "z"], "lex", ["x^2+y*z", "y^3", "z^5"])
    assert F.dim == 30
    assert "x*y^2*z^4" in F.std_monomials()


def test_expand_round_trip():
    F = gwci.Frame(["x", "y", "z"], "lex", ["x^2+y*z", "y^3", "z^5"])
    e = F.expand("x^4*y^2+x^2*y^3*z")
    assert e == [([1, 1, 0], "-z"), ([2, 0, 0], "y^2")]
    assert F.reconstruct(e) == "x^4*y^2 + x^2*y^3*z"


def test_partials():
    F = gwci.Frame(["x", "y", "z"], "lex", ["x^2", "y^3", "z^5"])
    assert F.partial("x^2*y^8", 1) == "y^8"
    assert F.partial("x^2*y^8", 1, hatted=True) == "1/3*y^8"
    assert F.partial("x^2*y^8", 2, hatted=True) == "2/3*x^2*y^5"
    assert F.g_degree("x^2*y^8") == 3
    assert F.g_degree("x^2+y^3*z^5") is None


def test_generators_report():
    report = json.loads(gwci.generators(load("pure_powers_b"), 1))
    assert report["degree"] == 1
    assert len(report["generators"]) == 3
    assert report["generators"][0] == [
        {"dg": [1], "coeff": "1/3*y^8"},
        {"dg": [2], "coeff": "2/3*x^2*y^5"},
    ]
    assert report["verified"]["cycle"] is True
    assert report["verified"]["retract_match"] is True
    assert report["verified"]["sign"] == 1


def test_check_prop():
    assert gwci.check_prop(load("plane_powers"))["holds"] is True
    res = gwci.check_prop(load("pure_powers_b"))
    assert res["holds"] is False
    assert "witness" in res


def test_partial_ideal():
    basis = gwci.partial_ideal(load("plane_powers"))
    assert "y^6" in basis


def test_massey():
    assert gwci.massey_verify(load("pure_powers_b"), 4) is True


def test_errors():
    with pytest.raises(gwci.KernelError):
        gwci.Frame(["x", "y"], "lex", ["x^2"])
    with pytest.raises(gwci.KernelError):
        gwci.Frame(["x", "y"], "lex", ["x^2", "x^3"])
