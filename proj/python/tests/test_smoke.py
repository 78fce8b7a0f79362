import pytest

import mapgerm

CUSP4 = "(x, y^4 + x*y)"
RIEGER = "(x, y^4 + x^2*y)"


def test_parse_round_trip():
    text, variables = mapgerm.parse(CUSP4)
    assert text == "(x, y^4+x*y)"
    assert variables == ["x", "y"]
    assert mapgerm.parse(text)[0] == text


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="column"):
        mapgerm.parse("(x, y^4 + 1)")


def test_codimensions():
    report = mapgerm.ke_codim("(y^4)")
    assert report["schema"] == mapgerm.SCHEMA_VERSION
    assert report["value"] == 3
    assert report["status"] == "certified"
    assert mapgerm.ae_codim(CUSP4)["value"] == 1
    assert mapgerm.nf(CUSP4)["value"] == 1


def test_opsu_and_unfoldings():
    assert mapgerm.opsu(RIEGER)["admits"] == "no"
    assert mapgerm.opsu(RIEGER)["nf_dimension"] == 2
    assert mapgerm.minimal_unfolding(CUSP4)["witness"] == "(x, y^4+x*y+u1*y^2, u1)"
    assert mapgerm.mather_unfolding(CUSP4)["value"] == 2


def test_exit_codes():
    assert mapgerm.run("ke-codim", "(x, 2y)")["exit_code"] == mapgerm.EXIT_ERROR
    assert mapgerm.ae_codim("(x, x*y^2)", max_degree=10)["exit_code"] == mapgerm.EXIT_INCONCLUSIVE
    assert mapgerm.run("no-such-command", CUSP4)["exit_code"] == mapgerm.EXIT_ERROR


def test_family_scan_is_deterministic():
    a = mapgerm.family_scan(p_values=[5], samples=1, seed=3)
    b = mapgerm.family_scan(p_values=[5], samples=1, seed=3)
    assert a == b
    assert a["exit_code"] == mapgerm.EXIT_SUCCESS


def test_text_rendering():
    report = mapgerm.ke_codim("(y^4)")
    code = report.pop("exit_code")
    assert "value: 3" in mapgerm.render_text(code, __import__("json").dumps(report))
