import math

import numpy as np
import pytest

from refined_bohr import bounds, functionals as fn, schur
from refined_bohr.errors import DomainError

R_GRID = [0.05 * k for k in range(1, 10)]


def samples(n=60, seed=3):
    return [schur.sample(seed, schur.PROFILES[i % 3], 256, i) for i in range(n)]


def test_sgn():
    assert [bounds.sgn(t) for t in (0, 1, 5)] == [0, 1, 1]


def test_lemma1_rhs_values():
    assert bounds.lemma1_rhs(0, 0.5) == pytest.approx(0.5 / math.sqrt(0.75))
    assert bounds.lemma1_rhs(0.5, 0.5) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        bounds.lemma1_rhs(1.0, 0.5)


@pytest.mark.parametrize("a,r", [(0.5, 0.3), (0.9, 0.2), (0.4, 0.4)])
def test_lemma1_moebius_equality(a, r):
    rep = bounds.lemma1_check(schur.moebius(a, "-"), r)
    assert abs(rep.lhs.upper - (1 - a * a) * r / (1 - a * r)) < 1e-14
    assert abs(rep.margin) < 1e-12


def test_lemma2_examples():
    assert bounds.lemma2_rhs(0, 0.4) == pytest.approx(0.16)
    rep = bounds.lemma2_check(schur.identity(), 0.4)
    assert abs(rep.margin) < 1e-14
    for a in (0.3, 0.9):
        assert abs(bounds.lemma2_check(schur.moebius(a, "-"), 0.5).margin) < 1e-10
    with pytest.raises(DomainError):
        bounds.lemma2_rhs(0, 0.8)


def test_lemma2_random_positive_margin():
    for f in samples(30):
        assert bounds.lemma2_check(f, 0.6).holds


def test_lemma3_examples():
    a_rep, b_rep = bounds.lemma3_check(schur.moebius(0.6, "+"), 0)
    assert b_rep is None and abs(a_rep.margin) < 1e-15
    assert bounds.lemma3_check(schur.identity(), 0)[0].margin == pytest.approx(0.0)


def test_lemma3_random_blaschke():
    for i in range(40):
        f = schur.sample(11, "blaschke", 256, i)
        for n in range(6):
            a_rep, b_rep = bounds.lemma3_check(f, n)
            assert a_rep.holds
            assert b_rep is None or b_rep.holds


def test_lemma3_fixture_shapes():
    s = bounds.lemma3_fixture([0.4, 0.3], 1.0, "a", order=32)
    assert abs(s.coeffs[0] - 0.4) < 1e-15
    with pytest.raises(DomainError):
        bounds.lemma3_fixture([0.4], 0.5)
    with pytest.raises(DomainError):
        bounds.lemma3_fixture([0.4], 1.0, "b")


def test_lemma3_fixture_n0_is_moebius_equality():
    # n = 0, part (a): (a0 + eps z)/(1 + eps conj(a0) z) attains |a1| = 1 - |a0|^2
    s = bounds.lemma3_fixture([0.5], -1.0, "a", order=16)
    assert abs(abs(s.coeffs[1]) - 0.75) < 1e-14
    rep, _ = bounds.lemma3_check(s, 0)
    assert abs(rep.margin) < 1e-14


def test_lemma4_identity_equality_n1():
    r = 0.4
    rep = bounds.lemma4_sides(schur.identity(), r, 1)
    assert rep.lhs.upper == pytest.approx(0.4 + (1 + 0.4 / 0.6) * 0.16, abs=1e-15)
    assert rep.rhs.lower == pytest.approx(0.4 / 0.6, abs=1e-15)
    assert abs(rep.margin) < 1e-12


def test_lemma4_middle_term_at_n3():
    f = schur.moebius(0.5, "+")
    b = np.abs(f.coeffs)
    r = 0.3
    without = bounds.lemma4_lhs(b, r, 3).upper
    # t = 1: middle term |a1|^2 r^3 / (1-r) is included
    manual = (fn.bohr_sum(f, r, 3).upper + b[1] ** 2 * r**3 / (1 - r)
              + (1 / (1 + b[0]) + r / (1 - r)) * fn.sums.quadratic(b, r, 2).upper)
    assert without == pytest.approx(manual, rel=1e-14)


@pytest.mark.parametrize("a", [0.9, 0.99, 0.999])
def test_lemma4_moebius_margin_shrinks(a):
    r = 1 / (2 + a)
    rep = bounds.lemma4_sides(schur.moebius(a, "-"), r, 1)
    assert rep.holds and rep.margin < 1e-12


def test_lemma4_n1_matches_refined_bohr_minus_head():
    for f in samples(20):
        for r in (0.1, 0.3):
            lhs = bounds.lemma4_sides(f, r, 1).lhs.upper
            rb = fn.refined_bohr(f, r).upper - f.abs_a0
            assert abs(lhs - rb) < 1e-12


def test_lemma4_random_grid():
    for f in samples(40):
        for r in R_GRID:
            for N in range(1, 7):
                assert bounds.lemma4_sides(f, r, N).holds


def test_schwarz_pick():
    assert bounds.schwarz_pick_value(0, 0.3) == 0.3
    a, r = 0.4, 0.5
    f = schur.moebius(a, "+")
    v = fn.point_modulus(f, complex(r))
    assert v.upper == pytest.approx((r + a) / (1 + r * a), abs=1e-14)
    for f in samples(30):
        # near r = 0.9 the derivative tail (~K r^K/(1-r)^2) exceeds the slack
        for r in (0.2, 0.45, 0.7):
            val, der = bounds.schwarz_pick_check(f, r)
            assert val.holds and der.holds
