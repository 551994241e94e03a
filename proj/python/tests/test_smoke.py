import cmath
import math

import mpmath
import pytest

import zrc

mpmath.mp.dps = 30


def rel(a, b):
    return abs(a - b) / abs(b)


def test_zeta_against_mpmath():
    for s in [2, 0.5 + 14j, -3.5 + 2j, 0.3 + 2.1j, 2.25 - 0.75j]:
        got = zrc.zeta(complex(s))
        want = complex(mpmath.zeta(mpmath.mpc(s)))
        assert rel(got["value"], want) < 1e-12
        assert got["abs_error_bound"] > 0


def test_zeta_special_values_and_errors():
    assert zrc.zeta(-4)["value"] == 0
    assert zrc.zeta(0)["value"] == -0.5
    assert zrc.zeta(-0.5 + 2j)["method"] == "reflected"
    with pytest.raises(zrc.PoleError):
        zrc.zeta(1)
    with pytest.raises(zrc.ZrcError):
        zrc.zeta(1)
    with pytest.raises(zrc.PrecisionError):
        zrc.choose_parameters(2, 1e-300)


def test_gamma_and_xi():
    z = 0.3 + 2j
    assert rel(zrc.cgamma(z), complex(mpmath.gamma(z))) < 1e-12
    assert abs(zrc.clog_gamma(-4.5 + 0.5j) - complex(mpmath.loggamma(-4.5 + 0.5j))) < 1e-12
    assert abs(zrc.xi(2) - math.pi / 6) < 1e-14
    assert rel(zrc.xi(0.3 + 2j), zrc.xi(0.7 - 2j)) < 1e-10


def test_em_raw_hand_value():
    assert abs(zrc.zeta_em_raw(2, 2, 1) - 79 / 48) < 1e-15


def test_catalogue_and_residuals():
    cat = zrc.catalogue()
    assert len(cat) == 25
    assert {e["id"] for e in cat if e["expected_verdict"] == "FAILS"} == {"EQ16_FALSE", "EQ90_PRINTED"}
    assert zrc.residual("EQ70", 0.3 + 2.1j)["residual_rel"] < 1e-8
    assert zrc.residual("EQ80", 0.3 + 0.2j, alpha=0.7)["residual_rel"] < 1e-8
    assert zrc.residual("EQ300", 0.4, n=2)["residual_rel"] < 1e-8
    assert zrc.residual("EQ16_FALSE", 0.3)["residual_rel"] > 0.1
    with pytest.raises(zrc.ParamError):
        zrc.residual("EQ80", 0.3)
    with pytest.raises(zrc.SingularityError):
        zrc.residual("EQ30", 3)
    ratio = zrc.residual("EQ380")["lhs"]
    assert abs(ratio + 1 / (4 * math.pi)) < 1e-16


def test_scan_and_tables():
    r = zrc.scan("EQ70", grid=[-2, 2, 1, -3, 3, 2, 0.25])
    assert r["verdict"] == "HOLDS"
    assert r["samples_evaluated"] == 20
    f = zrc.scan("EQ16_FALSE", grid=[-2, 2, 1, -3, 3, 2, 0.25])
    assert f["verdict"] == "FAILS"
    with pytest.raises(zrc.ConfigError):
        zrc.scan("EQ70", grid=[1, 0, 1, 0, 1, 1, 0])
    rows = zrc.half_integer_table("eq335", 12)
    assert len(rows) == 13
    assert all(row["rel_diff"] < 1e-9 for row in rows)
    signs = [row["direct_value"].real < 0 for row in rows[:4]]
    assert signs == [True, True, False, False]
    with pytest.raises(zrc.OverflowError):
        zrc.half_integer_table("eq310", 21)
