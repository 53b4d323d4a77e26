import json
import random

import pytest

from brauer_decomp.oracle.invariants import invariant_vector
from brauer_decomp.pipeline import certificate as cert
from brauer_decomp.pipeline import counts, exponent3, mt12
from brauer_decomp.pipeline.campaign import RunConfig, run_campaign, tignol_run
from brauer_decomp.pipeline.chain import BudgetExhausted, ChainWitness, find_or_verify_chain, verify_chain
from brauer_decomp.pipeline.specialize import Specialization, random_specialization

from conftest import FIELDS

F = FIELDS[19]


def test_counts_from_first_principles():
    assert counts.legendre(9, 3) == 4
    table = counts.counts_MT4()
    assert table["S9_order"] // table["sylow_order"] == 4480
    assert all(counts.verdicts(table).values())


def test_specialization_json_round_trip():
    sample = random_specialization(random.Random(3), F)
    again = Specialization.from_json(F, json.loads(json.dumps(sample.to_json())))
    assert again.presentation.to_json() == sample.presentation.to_json()


@pytest.fixture(scope="module")
def mt12_doc():
    sample = random_specialization(random.Random(1), F)
    res = mt12.run_mt12(sample)
    return json.loads(cert.dumps(mt12.to_certificate(res)))


def test_mt12_run_passes(mt12_doc):
    v = mt12_doc["verdicts"]
    assert mt12.passed(v)
    assert v["mt2_arity"] == [9, 9, 9, 3]
    assert all(all(s["checks"].values()) for s in mt12_doc["stages"])


def test_mt12_certificate_verifies_and_detects_tampering(mt12_doc):
    assert cert.verify(mt12_doc) == mt12_doc["verdicts"]
    bad = json.loads(json.dumps(mt12_doc))
    bad["stages"][1]["data"]["l"] = "1"
    with pytest.raises(cert.CertificateError) as exc:
        cert.verify(bad)
    assert exc.value.stage == "quadratic-L"


@pytest.fixture(scope="module")
def mt3_inst():
    return exponent3.random_instance(random.Random(2), F)


def test_mt3_branch(mt3_inst):
    res = exponent3.exponent3_branch(mt3_inst)
    v = exponent3.verdicts(res)
    assert exponent3.passed(v)
    assert v["count_L"] <= 16 and v["count_F"] <= 31
    doc = json.loads(cert.dumps(exponent3.to_certificate(res)))
    assert cert.verify(doc) == doc["verdicts"]


def test_chain_witness(mt3_inst):
    v = mt3_inst.values
    w = ChainWitness(v["x1"], v["x2"], v["x3"])
    assert all(verify_chain(v["a"], v["b"], v["gamma"], v["c"], w))
    assert find_or_verify_chain(v["a"], v["b"], v["gamma"], v["c"], witness=w) is w
    wrong = ChainWitness(v["x2"], v["x1"], v["x3"])
    if not all(verify_chain(v["a"], v["b"], v["gamma"], v["c"], wrong)):
        with pytest.raises(ValueError):
            find_or_verify_chain(v["a"], v["b"], v["gamma"], v["c"], witness=wrong)


def test_chain_search_budget_is_not_a_refutation(mt3_inst):
    v = mt3_inst.values
    try:
        w = find_or_verify_chain(v["a"], v["b"], v["gamma"], v["c"], budget=3, base_field=F)
    except BudgetExhausted:
        return
    assert all(verify_chain(v["a"], v["b"], v["gamma"], v["c"], w))


def test_tignol_cases():
    for i in range(5):
        w = exponent3.reverse_tignol_case(random.Random(100 + i), F)
        out = exponent3.tignol_decompose(w, check=False)
        assert len(out) <= 3 and set(out.degrees()) <= {3}
        lhs = exponent3.BrauerExpr.symbol(F, w.a, w.b, 9)
        assert invariant_vector(out) == invariant_vector(lhs)


def test_tignol_certificate_round_trip():
    o = tignol_run(RunConfig(seed=4), 0)
    assert o.status == "pass"
    assert cert.verify(json.loads(cert.dumps(o.doc))) == o.doc["verdicts"]


def test_campaign_is_deterministic_and_index_stable():
    cfg = RunConfig(seed=11, specializations=2, stages=("counts", "mt3", "tignol"))
    a = [cert.dumps(o.doc) for o in run_campaign(cfg)]
    b = [cert.dumps(o.doc) for o in run_campaign(cfg)]
    assert a == b
    # run i does not depend on how many runs the campaign has
    bigger = run_campaign(RunConfig(seed=11, specializations=3, stages=("tignol",)))
    assert cert.dumps(bigger[1].doc) == a[-1]


def test_config_validation():
    for bad in (RunConfig(q=17), RunConfig(q=361), RunConfig(specializations=0), RunConfig(chain_budget=-1), RunConfig(stages=("nope",))):
        with pytest.raises(ValueError):
            bad.validate()
