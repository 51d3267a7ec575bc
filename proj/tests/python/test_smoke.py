import pytest

import ouspec


def test_suites_listed():
    assert "spectral" in ouspec.registered_suites()


def test_check_fn():
    r = ouspec.check("fn", 3, trials=30)
    assert r["summary"]["failed"] == 0
    assert r["environment"]["version"] == ouspec.version


def test_spectral_fn_example():
    d = ouspec.spectral(ouspec.element("fn", 3, [2, 0, -1]), grid=[-0.5, 0.5], mesh=0.1)
    assert d["cover"]["data"] == [1, 0, 1]
    assert d["rickart"]["data"] == [0, 1, 0]
    assert d["bounds"] == [-1, 2]
    assert d["riemann"]["error"] <= 0.1


def test_decompose_jb():
    d = ouspec.decompose(ouspec.element("jb", 2, [1, 0, 0, -1]))
    assert d["pos"]["data"] == pytest.approx([1, 0, 0, 0])
    assert d["neg"]["data"] == pytest.approx([0, 0, 0, 1])


def test_l1_has_no_comparability():
    e = ouspec.element("censym", 2, [0.2, 0.3, 0.1], family={"family": "lp", "p": 1})
    with pytest.raises(ouspec.OuspecError) as info:
        ouspec.decompose(e)
    assert info.value.code == "ComparabilityUnavailable"


def test_cli_usage_error():
    rc, _, _ = ouspec.cli("check", "--model", "jb", "--dim", "-1")
    assert rc == 2
