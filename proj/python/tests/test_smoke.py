"""Smoke tests for the python bindings."""

import json
import math
import os
import pathlib

import pytest

import syninfo


def xor_triple():
    bits = syninfo.JointPmf.uniform([2, 2])
    return bits.append_deterministic([0, 1, 1, 0], 2)


def test_gate_table_quantities():
    pmf = xor_triple()
    assert abs(syninfo.mutual_info(pmf, [0], [2])) <= 1e-12
    assert abs(syninfo.mutual_info(pmf, [1], [2])) <= 1e-12
    assert abs(syninfo.mutual_info(pmf, [0, 1], [2]) - 1.0) <= 1e-12
    assert abs(syninfo.entropy(pmf, [2]) - 1.0) <= 1e-12
    assert abs(syninfo.cond_entropy(pmf, [2], [0, 1])) <= 1e-12


def test_json_round_trip():
    pmf = syninfo.JointPmf.random([3, 2], 7)
    back = syninfo.JointPmf.from_json(pmf.to_json())
    assert back == pmf
    assert syninfo.JointPmf.from_csv(pmf.to_csv()) == pmf


def test_hypercube_parameters():
    pmf = syninfo.JointPmf.from_params([2, 2], [0.5, 0.5, 0.5])
    assert pmf.probs == pytest.approx([0.25] * 4, abs=0)
    again = syninfo.JointPmf.from_params([2, 2], pmf.to_params())
    assert again == pmf


def test_find_srv_and_synergy():
    cfg = syninfo.SearchConfig()
    cfg.seed = 11
    srv = syninfo.find_srv(syninfo.JointPmf.uniform([2, 2]), [0, 1], cfg)
    assert srv.succeeded
    assert srv.mi_with_x == pytest.approx(1.0, abs=0.05)

    est = syninfo.estimate_synergy(xor_triple(), [0, 1], [2], cfg)
    assert est.mid == pytest.approx(1.0, abs=0.05)
    assert est.lower <= est.mid <= est.upper

    assert syninfo.whole_minus_sum(xor_triple(), [0, 1], [2]) == pytest.approx(
        1.0, abs=1e-12
    )
    assert syninfo.srv_upper_bound(
        syninfo.JointPmf.uniform([2, 2]), [0, 1]
    ) == pytest.approx(1.0, abs=0)


def test_perturbations():
    pmf = syninfo.JointPmf.random([2, 2, 2], 3)
    perturbed, realized = syninfo.perturb_local(pmf, 0, 0.1, 5)
    assert realized == pytest.approx(0.1, abs=1e-9)
    assert sum(perturbed.probs) == pytest.approx(1.0, abs=1e-9)
    same, realized0 = syninfo.perturb_local(pmf, 0, 0.0, 5)
    assert realized0 == 0.0
    assert same == pmf


def test_decomposition_and_wyner():
    pmf = syninfo.JointPmf.uniform([2, 2, 2])
    cfg = syninfo.DecompositionConfig()
    cfg.perp_cardinality = 2
    cfg.par_cardinality = 2
    cfg.seed = 31
    res = syninfo.decompose(pmf, [0, 2], [0, 1], cfg)
    assert res.converged
    assert res.residuals.max_residual() <= 1e-3

    rep = json.loads(syninfo.wyner_condition_check(pmf, [0, 1], [0, 2], [0]))
    assert rep["applicable"] and rep["conclusions_hold"]

    scan = json.loads(syninfo.binary_impossibility_scan(0.5, 0.8, 11))
    assert scan["max_line_mi_perp_b"] <= 1e-12


def test_oracle_census():
    rep = json.loads(syninfo.three_bit_msrv_census())
    assert rep["found_three_xors"]
    assert len(rep["selected"]) >= 4
    assert rep["entropy_three_xors"] == pytest.approx(2.0, abs=1e-12)


def test_mood_median_test():
    res = syninfo.mood_median_test([1.0, 2.0, 3.0, 4.0], [1.0, 2.0, 3.0, 4.0])
    assert res.p_value > 0.99
    assert syninfo.chi_square_survival(4.0, 1) == pytest.approx(
        math.erfc(math.sqrt(2.0)), abs=1e-12
    )


def test_experiment_reports_validate_against_schema():
    jsonschema = pytest.importorskip("jsonschema")
    source = pathlib.Path(
        os.environ.get("SYNINFO_SOURCE_DIR", pathlib.Path(__file__).parents[2])
    )
    schema = json.loads(
        (source / "schemas" / "experiment_report.schema.json").read_text()
    )

    cfg = syninfo.SearchConfig()
    cfg.num_restarts = 2
    cfg.max_iters = 300
    fig2 = json.loads(syninfo.run_fig2(3, [2], 9, cfg))
    jsonschema.validate(fig2, schema)
    fig4 = json.loads(syninfo.run_fig4(3, 0.1, 2, 9, cfg))
    jsonschema.validate(fig4, schema)
    assert fig2["rows"][0]["trials"] == 3
    assert len(fig4["arms"]) == 4
