"""Smoke tests for the compiled extension: the bindings load, the core
operations agree with known values, and the JSON surfaces round-trip."""

import json
import os
import subprocess

import pytest

import tlgjs

DELTA = "5/2"


def test_catalan_counts():
    assert [tlgjs.catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert len(tlgjs.enumerate_nc_pairings(8)) == 14
    with pytest.raises(ValueError):
        tlgjs.enumerate_nc_pairings(3)


def test_zigzag_and_trace():
    for n in range(1, 4):
        lhs = tlgjs.compose(
            DELTA,
            tlgjs.tensor(tlgjs.Morphism.ev(n), tlgjs.Morphism.identity(n)),
            tlgjs.tensor(tlgjs.Morphism.identity(n), tlgjs.Morphism.coev(n)),
        )
        assert lhs == tlgjs.Morphism.identity(n)
    assert tlgjs.categorical_trace(DELTA, tlgjs.Morphism.identity(2), "left") == "25/4"


def test_jones_idempotent_norm():
    cupcap = tlgjs.compose(DELTA, tlgjs.Morphism.coev(1), tlgjs.Morphism.ev(1))
    e = cupcap.scaled("2/5")
    assert tlgjs.compose(DELTA, e, e) == e
    assert abs(tlgjs.operator_norm(DELTA, e, 2) - 1.0) < 1e-9

    eg = tlgjs.frobenius(e)
    estimates = tlgjs.moment_norm_estimates(DELTA, eg, 2, 64)
    assert estimates == sorted(estimates)
    assert estimates[-1] >= 0.97
    assert abs(tlgjs.ground_operator_norm(DELTA, eg, 2) - 1.0) < 1e-9


def test_graded_products():
    p1 = tlgjs.GradedElement.p(1)
    assert tlgjs.wedge(DELTA, p1, p1) == p1
    assert tlgjs.voiculescu_trace(DELTA, p1) == DELTA
    assert tlgjs.normalized_trace(DELTA, p1, 1) == "1"

    xi = tlgjs.GradedElement.term(1, 0, 1, tlgjs.Morphism.identity(1))
    prod = tlgjs.walker(DELTA, xi, tlgjs.star(xi))
    assert tlgjs.ground_expectation(prod) == tlgjs.GradedElement.unit().scaled(DELTA)


def test_fock_roundtrip():
    vac = tlgjs.FockVector.vacuum(4)
    xi = tlgjs.star(tlgjs.GradedElement.term(1, 0, 1, tlgjs.Morphism.identity(1)))
    v = tlgjs.create(DELTA, xi, vac)
    assert v.sector(1) == xi
    assert tlgjs.annihilate(DELTA, xi, vac) == tlgjs.FockVector(4)

    text = v.to_json(DELTA)
    assert tlgjs.FockVector.from_json(text) == v


def test_json_roundtrip_and_eval():
    p2 = tlgjs.GradedElement.p(2)
    text = p2.to_json(DELTA)
    assert tlgjs.GradedElement.from_json(text) == p2

    out = json.loads(tlgjs.evaluate_expression(json.dumps({"trace": {"lit": json.loads(text)}})))
    assert out == {"scalar": "25/4"}


def test_delta_gate():
    with pytest.raises(Exception):
        tlgjs.run_suites(delta="3/2", suites=["fock"])


def test_run_suites_deterministic():
    ok1, report1 = tlgjs.run_suites(suites=["fock"], include_timing=False)
    ok2, report2 = tlgjs.run_suites(suites=["fock"], include_timing=False)
    assert ok1 and ok2
    assert report1 == report2
    lines = [json.loads(line) for line in report1.strip().splitlines()]
    assert lines[0]["config"]["seed"] == 42
    assert "pimsner-relation" in [line.get("name") for line in lines]


def test_bimodule_inner_products():
    xi = tlgjs.GradedElement.term(1, 0, 1, tlgjs.Morphism.identity(1))
    ip = tlgjs.right_inner(DELTA, xi, xi, 0, 1)
    assert tlgjs.voiculescu_trace(DELTA, ip) == DELTA
    assert tlgjs.l2_inner(DELTA, xi, xi, 0, 1) == DELTA
    assert tlgjs.conjugate(tlgjs.conjugate(xi, 1), 1) == xi


def test_dimension_table():
    table = {(b, l, r): dim for b, l, r, dim in tlgjs.dimension_table(2)}
    assert table[(0, 1, 1)] == 1
    assert table[(2, 1, 1)] == 2
    assert table[(1, 0, 0)] == 0


def test_cli_available():
    cli = os.environ.get("TLGJS_CLI")
    if not cli:
        pytest.skip("TLGJS_CLI not set")
    out = subprocess.run([cli, "nc", "--points", "4"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["count"] == 2
