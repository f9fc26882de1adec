import json
import pathlib

import pytest

import syzdepth

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_binomial_is_exact():
    assert syzdepth.binomial(23, 11) == 1352078
    assert syzdepth.binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320


def test_expansion():
    assert syzdepth.numerator_std(4, 1) == (1, [4, -6, 4, -1])
    assert syzdepth.expand_quotient(4, 1, 2, 4) == [4, 2, 4, 5]
    assert syzdepth.coeff_sum1(4, 1, 1, 1) == -2
    assert syzdepth.coeff_sum2(10, 2, 3, 1) == syzdepth.coeff_sum1(10, 2, 3, 1)


def test_hdepth():
    r = syzdepth.hdepth(23, 3)
    assert r["hdepth"] == 17
    assert r["min_u"] == 6
    assert r["witness_negative"]["witness_j"] == 3
    assert r["witness_negative"]["witness_coeff"] == "-3542"
    assert syzdepth.hdepth(23, 3, oracle=True)["hdepth"] == 17
    assert syzdepth.bound_upper(23, 3) == 18
    assert syzdepth.closed_form(23, 3) is None
    assert syzdepth.closed_form(9, 1) == 5
    with pytest.raises(ValueError):
        syzdepth.hdepth(3, 5)


def test_table():
    rows = syzdepth.depth_table(23, threads=2)
    loose = [(r["n"], r["k"]) for r in rows if r["k"] < r["n"] // 2 and not r["hbound_tight"]]
    assert loose == [(23, 3), (23, 4), (23, 5)]
    csv = syzdepth.table_csv(5)
    assert csv.splitlines()[0] == "n,k,hdepth,lower,upper,min_u,witness_j,closed_form_match,hbound_tight"


def test_decomposition_and_hooks():
    d = syzdepth.decompose(5, 2, "lex")
    assert len(d["pieces"]) == 15
    assert syzdepth.verify_hilbert_decomposition(d) == (True, "")
    hooks = json.loads((DATA / "m52_hooks.json").read_text())
    report = syzdepth.verify_stanley(d, hooks)
    assert report["accepted"] and report["certified_depth"] == 4
    hooks[0]["mu"], hooks[0]["generator"] = [1, 0, 0, 1, 0], [2, 3]
    report = syzdepth.verify_stanley(d, hooks)
    assert not report["accepted"]
    assert report["failing_degree"] == [1, 2, 3, 4]
    found = syzdepth.search_hooks(syzdepth.decompose(6, 3), budget=30)
    assert found is not None
    assert syzdepth.verify_stanley(syzdepth.decompose(6, 3), found)["certified_depth"] == 5


def test_koszul():
    assert syzdepth.boundary_squared_zero(5, 3)
    assert syzdepth.generic_rank([[1, 2], [1, 3], [2, 3]], 3) == 2


def test_asymptotics():
    assert syzdepth.solve_gamma(0.5)["gamma"] == 0.0
    s = syzdepth.solve_gamma(0.25)
    assert abs(s["residual"]) <= 1e-10
    assert 0 < s["gamma"] <= 0.25
    curve = syzdepth.gamma_curve(10, threads=2)
    assert curve == syzdepth.gamma_curve(10, threads=1)
    assert curve[-1]["beta"] == 0.5 and curve[-1]["gamma"] == 0.0
    value, half, _, _ = syzdepth.predict(1000, 2)
    assert half == 500.0 and value > half
