import json

import pytest

import derham


def test_count_examples():
    assert derham.count("x^2 - z*y^2", vars="x,y,z") == 1
    assert derham.count("x^2 - y^2") == 2
    assert derham.count("x^2 + y^2") == 2


def test_factor_complete_and_partial():
    r = derham.factor("x^2 - y^2")
    assert r["factors"] == ["x - y", "x + y"]
    assert r["residual"] == "1"
    assert r["exit_code"] == 0

    p = derham.factor("x^2 + y^2")
    assert p["factors"] == []
    assert p["residual"] == "x^2 + y^2"
    assert p["complete"] is False
    assert p["exit_code"] == derham.EXIT_PARTIAL


def test_generic():
    assert derham.generic("x^2*y^2*z^2 + x", "x")["is_generic"] is True
    g = derham.generic("x^2*y^2*z^2 + x", "y")
    assert g["is_generic"] is False
    assert g["witness"] == ["x"]


def test_section():
    r = derham.section("x^2*y - x - z", vars=["x", "y", "z"], plane="0,0,0;1,0,0;0,1,0")
    assert r["count"] == 1
    assert r["section"]["section_count"] == 2


def test_errors():
    with pytest.raises(derham.CommandFailed) as info:
        derham.count("(x - y)^2*(x + 1)")
    assert info.value.exit_code == 3
    assert info.value.report["error"]["witness"] == "x - y"

    with pytest.raises(derham.CommandFailed) as info:
        derham.count("x + * y")
    assert info.value.exit_code == 2

    with pytest.raises(derham.ParseError):
        derham.normalize("x^-1")


def test_normalize_and_determinism():
    assert derham.normalize("(x + y)*(x - y)") == "x^2 - y^2"
    a = derham.run("factor", "(x*y + y*z + z*x)*(x - 2*y + 3*z - 1)", seed=5)
    b = derham.run("factor", "(x*y + y*z + z*x)*(x - 2*y + 3*z - 1)", seed=5)
    assert json.dumps(a) == json.dumps(b)
    assert a["certificate"] is True
