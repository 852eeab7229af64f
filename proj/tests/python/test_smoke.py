"""Smoke tests for the python bindings."""

import hgl
import pytest


def test_oracle_values():
    assert hgl.veronese_oracle(2, 7) == [1, 2, 4, 6, 9, 12]


def test_ideal_operations():
    R = hgl.Ring(["x", "y"])
    m = hgl.Ideal(R, ["x", "y"])
    m3 = m.power(3)
    assert m3.contains("x^2*y")
    assert not m3.contains("x^2")
    assert m3.quotient_length() == 6  # 1 + 2 + 3 standard monomials
    assert m.dim() == 0
    assert m.analytic_spread() == 2

    sat, idx = hgl.Ideal(R, ["x^2", "x*y"]).saturate(m)
    assert idx == 1
    assert sat.contains("x")


def test_quotient_length_infinite_is_none():
    R = hgl.Ring(["x", "y"])
    assert hgl.Ideal(R, ["x"]).quotient_length() is None


def test_veronese_ext_lengths():
    V = hgl.Ring(["U", "V", "W"], relation="V^2 - U*W")
    I = hgl.Ideal(V, ["U", "V"])
    free = hgl.Module.free(V, 1)
    for n, expected in [(2, 1), (3, 2), (4, 4)]:
        q = hgl.Module.quotient_by_ideal(I.power(n))
        assert hgl.ext_length(2, q, free) == expected
        assert hgl.h0m_length(I.power(n)) == expected


def test_tor_length_kodiyalam():
    R = hgl.Ring(["x", "y"])
    m = hgl.Ideal(R, ["x", "y"])
    k = hgl.Module.quotient_by_ideal(m)
    for n in (1, 2, 3):
        q = hgl.Module.quotient_by_ideal(m.power(n))
        assert hgl.tor_length(1, q, k) == n + 1


def test_fit_values():
    rep = hgl.fit_values(2, [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36], max_degree=2)
    assert rep is not None
    assert rep["period"] == 2
    assert rep["degree"] == 2
    assert rep["nlc"] == "1/2"
    assert not rep["nlc_is_integer"]
    formulas = {c["formula"] for c in rep["classes"]}
    assert formulas == {"1/4*n^2", "1/4*n^2 - 1/4"}


def test_scenario_report():
    assert "veronese-ext2" in hgl.builtin_scenarios()
    rep = hgl.scenario_report("kodiyalam-tor")
    lengths = [row["length"] for row in rep["sequence"]]
    assert lengths == [2, 3, 4, 5, 6, 7, 8, 9]
    assert rep["fit"]["degree"] == 1
    assert rep["audit"]["satisfied"]


def test_run_scenario_text():
    text = """
char 101
ring A vars x y
ideal m = x, y
module kk = coker 1x2 [ x, y ]
functor tor i=1 first=quotient(m^n) second=kk
range 1 8
"""
    rep = hgl.run_scenario(text)
    assert [row["length"] for row in rep["sequence"]] == [2, 3, 4, 5, 6, 7, 8, 9]


def test_parse_errors_surface_as_exceptions():
    with pytest.raises(Exception):
        hgl.run_scenario("ring A vars x\nfunctor ext i=1 first=quotient(J^n) second=A\nrange 1 4\n")
