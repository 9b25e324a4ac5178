"""End-to-end smoke tests for the python wrapper."""

import pytest

import qha

DUAL = "field Q\nquiver {\n  vertex v;\n  arrow x: v -> v;\n}\nrelations {\n  x x;\n}\n"


def test_compute_family_dsl():
    r = qha.compute(qha.lambda_dsl(1, 1, 2, 1, "1", "Q"))
    assert r["dim_algebra"] == 36
    assert r["f2_count"] == 6
    assert r["f3_count"] == 8
    assert r["hh"] == {"hh0": 1, "hh1": 2, "hh2": 2}
    assert len(r["hh2_basis"]) == 2


def test_dims_totals():
    d = qha.dims(qha.gamma_star_dsl(4))
    assert d["total"] == 44
    assert len(d["per_vertex"]) == 6
    assert sum(d["per_vertex"].values()) == 44


def test_oracle_match():
    r = qha.oracle(DUAL)
    assert r["match"] is True
    assert r["bar"] == r["pipeline"]


def test_canonical_idempotent():
    dsl = qha.gamma_star_dsl(3)
    assert qha.canonical(dsl) == dsl
    assert qha.canonical(DUAL) == qha.canonical(qha.canonical(DUAL))


def test_deformation_builders():
    base = qha.dims(qha.gamma_star_dsl(3))
    deformed = qha.dims(qha.gamma_eta2_dsl(3, "1"))
    assert base["total"] == 29
    assert deformed["total"] == 29
    eta = qha.dims(qha.lambda_eta_dsl(1, 1, 2, 1, "1", "2"))
    assert eta["total"] == 36
    assert eta["per_vertex"]["v1"] == 8


def test_bad_input_raises():
    with pytest.raises(ValueError):
        qha.compute("not a presentation")
    with pytest.raises(ValueError):
        qha.lambda_dsl(1, 1, 3, 1)
