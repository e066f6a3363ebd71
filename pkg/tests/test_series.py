import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from refined_bohr import series as ser
from refined_bohr.errors import ZeroLeadingCoefficient
from refined_bohr.series import TaylorSeries

finite = st.floats(-2, 2, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)


def coeff_lists(min_size=1, max_size=12):
    return st.lists(cplx, min_size=min_size, max_size=max_size)


def long_division(num, den, order):
    """Schoolbook power-series division, independent of the filter-based path."""
    num = list(num) + [0j] * (order + 1 - len(num))
    den = list(den) + [0j] * (order + 1 - len(den))
    out = []
    for n in range(order + 1):
        acc = num[n] - sum(den[k] * out[n - k] for k in range(1, n + 1))
        out.append(acc / den[0])
    return np.array(out)


def test_add_cancels_and_identity():
    a = ser.from_coeffs([1, 1], order=4)
    b = ser.from_coeffs([1, -1], order=4)
    assert np.array_equal((a + b).coeffs, ser.constant(2, 4).coeffs)
    assert (a + ser.zero(4)).allclose(a, atol=0)
    half = ser.constant(0.5, 4) + ser.monomial(1, 4)
    assert np.array_equal(half.coeffs[:2], [0.5, 1])


def test_mul_examples():
    p = ser.mul(ser.from_coeffs([1, 1], 2), ser.from_coeffs([1, -1], 2))
    assert np.allclose(p.coeffs, [1, 0, -1])
    s = ser.from_coeffs([0.3, -1j, 2.5], 8)
    assert (s * ser.one(8)).allclose(s, atol=0)


def test_geometric_times_linear_is_one():
    a = 0.7
    prod = ser.geometric(a, 16) * ser.from_coeffs([1, -a], 16)
    assert np.allclose(prod.coeffs, ser.one(16).coeffs, atol=1e-15)


@given(coeff_lists(), coeff_lists())
@settings(max_examples=60, deadline=None)
def test_mul_matches_naive_cauchy(a, b):
    K = 10
    s, t = ser.from_coeffs(a, K), ser.from_coeffs(b, K)
    want = [sum(s.coeffs[k] * t.coeffs[n - k] for k in range(n + 1)) for n in range(K + 1)]
    assert np.allclose((s * t).coeffs, want, atol=1e-12)


def test_reciprocal_examples():
    a = 0.4
    r = ser.reciprocal(ser.from_coeffs([1, -a], 20))
    assert np.allclose(r.coeffs, a ** np.arange(21))
    assert np.array_equal(ser.reciprocal(ser.one(5)).coeffs, ser.one(5).coeffs)
    assert np.allclose(ser.reciprocal(ser.from_coeffs([2, 1], 2)).coeffs, [0.5, -0.25, 0.125])


def test_reciprocal_zero_head_raises():
    with pytest.raises(ZeroLeadingCoefficient):
        ser.reciprocal(ser.monomial(1, 4))
    with pytest.raises(ZeroDivisionError):
        ser.divide(ser.one(4), ser.zero(4))


@given(coeff_lists(), coeff_lists().filter(lambda c: abs(c[0]) > 0.5))
@settings(max_examples=60, deadline=None)
def test_divide_matches_long_division(num, den):
    K = 12
    got = ser.divide(ser.from_coeffs(num, K), ser.from_coeffs(den, K))
    want = long_division(num, den, K)
    assert np.allclose(got.coeffs, want, rtol=1e-9, atol=1e-9)


@given(coeff_lists().filter(lambda c: abs(c[0]) > 0.5))
@settings(max_examples=40, deadline=None)
def test_reciprocal_times_self_is_one(c):
    s = ser.from_coeffs(c, 10)
    assert np.allclose((s * ser.reciprocal(s)).coeffs, ser.one(10).coeffs, atol=1e-8)


def test_symmetrize_examples():
    g = ser.from_coeffs([0.2, 0.5, -0.1], 12)
    assert ser.symmetrize(g, 1, 0).allclose(g, atol=0)
    out = ser.symmetrize(ser.from_coeffs([1, 1], 8), 2, 1)
    assert np.allclose(out.coeffs, ser.from_coeffs([0, 1, 0, 1], 8).coeffs)


def test_symmetrize_moebius_matches_rational_pipeline():
    a, p, m, K = 0.6, 3, 2, 40
    g = TaylorSeries(np.r_[a, -(1 - a * a) * a ** np.arange(K)])
    got = ser.symmetrize(g, p, m)
    zp = ser.monomial(p, K)
    want = ser.shift((a - zp) / (1 - a * zp), m)
    assert got.allclose(want, atol=1e-13)


def test_derivative_examples():
    assert np.allclose(ser.derivative(ser.monomial(2, 5)).coeffs, ser.monomial(1, 4, 2.0).coeffs)
    assert not np.any(ser.derivative(ser.constant(3.0, 5)).coeffs)
    a, K = 0.5, 30
    phi = (a - ser.monomial(1, K)) / (1 - a * ser.monomial(1, K))
    # -(1-a^2)/(1-az)^2 = -(1-a^2) sum (n+1) a^n z^n
    want = -(1 - a * a) * (np.arange(K) + 1) * a ** np.arange(K)
    assert np.allclose(ser.derivative(phi).coeffs, want, atol=1e-12)


def test_evaluate_polynomial_is_exact():
    ev = ser.evaluate(ser.monomial(1, 5), 0.3, bound=0.0)
    assert ev.value == 0.3 and ev.tail == 0.0


def test_evaluate_geometric_within_tail():
    K = 50
    ev = ser.evaluate(ser.geometric(1.0, K), 0.5)
    assert 2 - 2 * 2.0**-49 <= ev.value.real <= 2
    assert abs(ev.value - 2) <= ev.tail + 1e-15


def test_evaluate_moebius_contains_closed_form():
    a = 0.5
    phi = (a - ser.monomial(1, 256)) / (1 - a * ser.monomial(1, 256))
    ev = ser.evaluate(phi, 0.2)
    assert abs(ev.value - 1 / 3) <= ev.tail + 1e-15


def test_tail_bound_formula_and_monotone():
    assert ser.tail_bound(10, 0.5, 2.0) == pytest.approx(2 * 0.5**11 / 0.5)
    assert ser.tail_bound(256, 0.5) < 1e-70
    assert ser.tail_bound(20, 0.9) > ser.tail_bound(40, 0.9)


def test_circle_matches_pointwise_horner():
    s = ser.from_coeffs([0.1, 0.5j, -0.3, 0.2], 16)
    ev = ser.evaluate_circle(s, 0.7, 64)
    pts = ser.circle_points(0.7, 64)
    assert np.allclose(ev.value, [ser.horner(s, z) for z in pts], atol=1e-14)


def test_series_is_immutable():
    s = ser.one(3)
    with pytest.raises(ValueError):
        s.coeffs[0] = 2
