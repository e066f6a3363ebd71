import json
import math

import pytest

from refined_bohr import bounds, schur, verify
from refined_bohr.radii import THM5_A0_THRESHOLD, RadiusQuery

SCHEMA = ["theorem", "params", "trials", "seed", "order", "worst_margin", "failures", "elapsed_ms"]


def test_thmb_1000_trials():
    rep = verify.run("thmb", 1000, 42)
    assert rep.passed and rep.worst_margin >= -1e-9
    assert rep.order == 256 and rep.trials == 1000


def test_thm1_small_campaign():
    rep = verify.run(RadiusQuery("thm1-r", N=3), 500, 7)
    assert rep.passed
    assert rep.params()["N"] == 3


def test_thm5_filters_a0():
    rep = verify.run("thm5", 500, 11)
    assert rep.passed
    assert "a0_filter" in rep.params()
    q = RadiusQuery("thm5")
    for i in range(50):
        assert verify.draw(q, 11, i, 64).abs_a0 <= THM5_A0_THRESHOLD


def test_thm5_replay_outside_hypothesis_fails():
    f = schur.moebius(0.7, "-")
    rep = verify.run("thm5", 1, 0, functions=[f], r=1 / 3)
    assert not rep.passed
    fail = rep.failures[0].to_dict()
    assert fail["value_lower"] > 1 and fail["r"] == pytest.approx(1 / 3)
    assert fail["recipe"] == f.text()


def test_edge_runs_sit_on_radius():
    rep = verify.run("thmb", 200, 3, edge=True)
    assert rep.passed
    assert rep.worst_margin < 1e-2


def test_lemmas_1000():
    rep = verify.run_lemmas(1000, 42)
    assert rep.passed and rep.theorem_id == "lemmas"


def test_lemma4_identity_near_equality():
    rep = bounds.lemma4_sides(schur.identity(), 0.3, 1)
    assert abs(rep.margin) < 1e-12


def test_lemma2_moebius_near_equality():
    assert abs(bounds.lemma2_check(schur.moebius(0.9, "-"), 0.5).margin) < 1e-10


def test_determinism():
    a = verify.run("thm2", 100, 5).to_json()
    schur.sample.cache_clear()
    b = verify.run("thm2", 100, 5).to_json()
    assert a == b
    assert verify.run("thm2", 100, 6).to_json() != a


def test_failures_iff_negative_margin():
    for q in verify.default_campaign()[:10]:
        rep = verify.run(q, 50, 1, edge=True)
        assert rep.passed == (rep.worst_margin >= -verify.SLACK)


def test_json_schema():
    rep = verify.run(RadiusQuery("thm3", p=2, m=1), 20, 0)
    d = json.loads(rep.to_json())
    assert list(d) == SCHEMA
    assert d["elapsed_ms"] == 0 and d["params"]["p"] == 2
    assert "sampled" in d["params"]
    timed = rep.to_dict(timing=True)
    assert timed["elapsed_ms"] == rep.elapsed_ms


def test_default_order_env(monkeypatch):
    monkeypatch.setenv("BOHR_DEFAULT_ORDER", "64")
    assert verify.default_order() == 64
    monkeypatch.setenv("BOHR_DEFAULT_ORDER", "zero")
    with pytest.raises(ValueError):
        verify.default_order()


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify.run("thmb", 0, 0)
    with pytest.raises(ValueError):
        verify.run("thmb", 1, 0, functions=[])
    with pytest.raises(ValueError):
        verify.run("thm1-r", 1, 0)


def test_campaign_covers_every_variant():
    from refined_bohr.radii import Theorem

    assert {q.theorem for q in verify.default_campaign()} == set(Theorem)


def test_majorant_counts():
    rep = verify.run("thmb", 100, 2)
    assert 0 <= rep.majorant_certified <= 100
    assert math.isfinite(rep.worst_margin)
