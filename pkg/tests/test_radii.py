import math

import numpy as np
import pytest

from refined_bohr import radii
from refined_bohr.errors import DomainError, MultipleRoots, NoRootInUnitInterval
from refined_bohr.radii import RadiusQuery, Theorem, radius, solve

A0_GRID = [round(0.1 * k, 1) for k in range(10)] + [0.99]


def test_printed_constants():
    assert radius("thm1-r", N=1) == pytest.approx(math.sqrt(5) - 2, abs=1e-12)
    assert radius("thm1-rsq", N=1) == pytest.approx(1 / 3, abs=1e-12)
    assert abs(radius("thm7-j") - 0.385795) < 1e-6
    assert radius("thmf") == pytest.approx((math.sqrt(17) - 3) / 4, abs=1e-12)
    assert radius("thm2", a0=0.0) == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-12)
    assert radius("cor2b", p=1) == pytest.approx((5 - math.sqrt(17)) / 2, abs=1e-12)


def test_closed_forms_satisfy_equations():
    cases = [
        RadiusQuery("thmb-modulus", a0=0.3), RadiusQuery("thm2", a0=0.4), RadiusQuery("cor1a", p=3, a0=0.2),
        RadiusQuery("cor2a", p=2, a0=0.6), RadiusQuery("cor2b", p=2), RadiusQuery("thm4-second", a0=0.5),
        RadiusQuery("thmf"), RadiusQuery("thm6-g"),
    ]
    for q in cases:
        res = solve(q)
        assert res.method == "closed-form"
        assert abs(radii.equation(q)(res.radius)) < 1e-13


@pytest.mark.parametrize("N", range(1, 11))
def test_rogosinski_radii_residual_and_order(N):
    r = solve(RadiusQuery("thm1-r", N=N))
    rs = solve(RadiusQuery("thm1-rsq", N=N))
    assert r.residual < 1e-13 and rs.residual < 1e-13
    assert r.root_count == rs.root_count == 1
    assert rs.radius > r.radius


def test_rogosinski_radii_increase():
    rn = [radius("thm1-r", N=N) for N in range(1, 11)]
    rsq = [radius("thm1-rsq", N=N) for N in range(1, 11)]
    assert np.all(np.diff(rn) > 0) and np.all(np.diff(rsq) > 0)


def test_background_rogosinski_shares_equation():
    assert radius("thmc-r", N=4) == radius("thm1-r", N=4)


def test_thm2_orderings():
    for a in A0_GRID:
        assert radius("thm2", a0=a) >= math.sqrt(5) - 2
        r = solve(RadiusQuery("thm2-sq", a0=a))
        assert r.root_count == 1
        assert 1 / 3 < r.radius < 1 / (2 + a)


def test_thm2_sq_note():
    assert "1-|a0|^2" in solve(RadiusQuery("thm2-sq", a0=0.5)).note


def test_thmd_double_root():
    res = solve(RadiusQuery("thmd", p=1, m=0))
    assert res.method == "double-root"
    assert res.radius == pytest.approx(1 / 3, abs=1e-10)


def test_thmd_maximal_root():
    res = solve(RadiusQuery("thmd", p=2, m=1))
    assert res.root_count == 2
    poly = radii.equation(RadiusQuery("thmd", p=2, m=1))
    assert abs(poly(res.radius)) < 1e-13
    xs = np.linspace(res.radius + 1e-6, 1, 2000)
    assert np.all(np.sign(poly(xs)) == np.sign(poly(xs[0])))


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("a", [0.0, 0.3, 0.7])
def test_thm3_m0_matches_cor1a(p, a):
    assert radius("thm3", p=p, m=0, a0=a) == pytest.approx((2 + a) ** (-1 / p), abs=1e-12)


def test_thm3_lower_bound():
    for p in (1, 2, 3):
        for m in range(p + 1):
            for a in np.linspace(0, 0.99, 25):
                assert radius("thm3", p=p, m=m, a0=float(a)) >= (2 + a) ** (-1 / p) - 1e-12


def test_cli_example_thm3():
    assert radius("thm3", p=2, m=0, a0=0.5) == pytest.approx(0.6324555320336759, abs=1e-12)


def test_alpha_minimum():
    grid = np.linspace(0, 0.999999, 100)
    vals = [2 / radii.alpha(a) for a in grid]
    assert min(vals) >= 0.6 - 1e-12
    assert 2 / radii.alpha(1 / 3) == pytest.approx(0.6, abs=1e-12)
    # the infimum sits at a = 1/3; the a -> 1 endpoint gives 1
    assert 2 / radii.alpha(1 - 1e-12) == pytest.approx(1.0, abs=1e-5)


def test_extremal_a_for_thmd():
    with pytest.raises(DomainError) as err:
        radii.extremal_a_for_thmD(1, 0)
    assert err.value.value == pytest.approx(1.0, abs=1e-6)
    for p, m in ((2, 1), (2, 2), (3, 1)):
        a = radii.extremal_a_for_thmD(p, m)
        assert 0 <= a < 1


def test_extremal_a_m0_is_boundary_for_all_p():
    for p in (1, 2, 3):
        with pytest.raises(DomainError):
            radii.extremal_a_for_thmD(p, 0)


def test_query_validation():
    with pytest.raises(ValueError):
        RadiusQuery("thm1-r").check()
    with pytest.raises(ValueError):
        RadiusQuery("thm7-j", N=2).check()
    with pytest.raises(ValueError):
        RadiusQuery("thm2").check()
    with pytest.raises(DomainError):
        RadiusQuery("thm3", p=2, m=3, a0=0.1).check()
    with pytest.raises(DomainError):
        RadiusQuery("thm2", a0=1.0).check()
    with pytest.raises(ValueError):
        Theorem.parse("thm99")


def test_aliases():
    assert Theorem.parse("thmb") is Theorem.THM_B
    assert Theorem.parse("thm4-lambda-first") is Theorem.THM4_FIRST
    assert Theorem.parse("THM7_J") is Theorem.THM7_J


def test_solver_errors():
    from numpy.polynomial import Polynomial

    roots, _ = radii.find_roots(Polynomial([1.0, 0.0, 1.0]))
    assert roots == []
    two, _ = radii.find_roots(Polynomial([0.06, -0.5, 1.0]))  # roots 0.2, 0.3
    assert two == pytest.approx([0.2, 0.3], abs=1e-14)
    assert issubclass(NoRootInUnitInterval, Exception) and issubclass(MultipleRoots, Exception)
