"""Left-hand sides of the Bohr-type inequalities, as value enclosures.

Coefficient sums are computed from the truncated series with analytic tails
(see :mod:`refined_bohr.sums`).  Terms that depend on a point ``z`` --
``|f(z)|``, ``|f(z) - a_0|``, ``|f'(z)|`` -- accept

* a complex number or an array of them (the interval then encloses the
  maximum over those points),
* :class:`Circle` -- the equispaced θ-grid on ``|z| = r``,
* :class:`Worst` -- rigorous majorants valid for every ``|z| = r``
  (Schwarz-Pick for ``|f|``, coefficient sums for the others); the lower end
  is then only a trivial bound.

Symmetric variants take the *base* function ``g`` of ``f(z) = z^m g(z^p)``
and read ``b_n = a_{pn+m}`` straight from ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from . import series as ser
from . import sums
from .bounds import lemma4_lhs, schwarz_pick_value, sgn
from .intervals import ValueInterval
from .schur import SchurFunction

N_THETA = 128


@dataclass(frozen=True)
class Circle:
    """All grid points ``r e^{2 pi i j / n_theta}``."""

    radius: float
    n_theta: int = N_THETA


@dataclass(frozen=True)
class Worst:
    """Worst case over the whole circle ``|z| = radius``, via majorants."""

    radius: float


Point = Union[complex, float, np.ndarray, Circle, Worst]


def radius_of(z: Point) -> float:
    if isinstance(z, (Circle, Worst)):
        return float(z.radius)
    return float(np.max(np.abs(np.asarray(z))))


def _moduli(f: SchurFunction) -> np.ndarray:
    return np.abs(f.coeffs)


def _weight(b0: float, rho: float) -> float:
    return 1.0 / (1.0 + b0) + rho / (1.0 - rho)


# --- point terms -----------------------------------------------------------------


def _values(s: ser.TaylorSeries, z: Point, bound: float):
    """(|values|, tail, points) for a series at the requested points."""
    if isinstance(z, Circle):
        ev = ser.evaluate_circle(s, z.radius, z.n_theta, bound=bound)
        return np.abs(ev.value), ev.tail, ser.circle_points(z.radius, z.n_theta)
    pts = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    ev = ser.evaluate(s, pts, bound=bound)
    return np.abs(np.atleast_1d(ev.value)), ev.tail, pts


def _point_parts(f: SchurFunction, z: Point, kind: str):
    """Per-point (lower, upper) arrays for ``|f|``, ``|f - a0|`` or ``|f'|``, and the points."""
    if isinstance(z, Worst):
        r = z.radius
        b = _moduli(f)
        if kind == "f":
            hi = min(schwarz_pick_value(b[0], r), sums.linear(b, r).upper)
            lo = b[0]
        elif kind == "f-a0":
            hi = sums.linear(b, r, start=1).upper
            lo = 0.0
        else:
            hi = sums.derivative_linear(b, r).upper
            lo = b[1] if b.size > 1 else 0.0
        return np.array([lo]), np.array([hi]), np.array([complex(r)])
    if kind == "f":
        mod, tail, pts = _values(f.series, z, 1.0)
    elif kind == "f-a0":
        mod, tail, pts = _values(f.series - f.a0, z, 1.0)
    else:
        d = ser.derivative(f.series)
        mod, _, pts = _values(d, z, 0.0)
        tail = sums.derivative_tail(f.order, radius_of(z))
    return np.maximum(mod - tail, 0.0), mod + tail, pts


def _reduce(lo: np.ndarray, hi: np.ndarray, pts: np.ndarray) -> ValueInterval:
    k = int(np.argmax(hi))
    return ValueInterval(float(np.max(lo)), float(hi[k]), complex(pts[k]))


def point_modulus(f: SchurFunction, z: Point, power: int = 1) -> ValueInterval:
    """``|f(z)|^power``, enclosing the maximum if several points are given."""
    lo, hi, pts = _point_parts(f, z, "f")
    return _reduce(lo**power, hi**power, pts)


# --- coefficient functionals ---------------------------------------------------------


def bohr_sum(f: SchurFunction, r: float, start: int = 0) -> ValueInterval:
    """``sum_{n >= start} |a_n| r^n``."""
    return sums.linear(_moduli(f), r, start=start)


def refined_tail(f: SchurFunction, r: float, t: int = 0) -> ValueInterval:
    """``(1/(1+|a_0|) + r/(1-r)) * sum_{n >= t+1} |a_n|^2 r^(2n)``."""
    b = _moduli(f)
    return _weight(b[0], r) * sums.quadratic(b, r, start=t + 1)


def _head(b0: float, head: str) -> float:
    if head == "modulus":
        return b0
    if head == "square":
        return b0 * b0
    raise ValueError(f"head must be 'modulus' or 'square', got {head!r}")


def refined_bohr(f: SchurFunction, r: float, head: str = "modulus") -> ValueInterval:
    """``|a_0|^k + sum_{n>=1} |a_n| r^n + (1/(1+|a_0|) + r/(1-r)) sum_{n>=1} |a_n|^2 r^(2n)``.

    ``head='modulus'`` uses ``k = 1``, ``head='square'`` uses ``k = 2``.
    """
    b = _moduli(f)
    return _head(b[0], head) + bohr_sum(f, r, start=1) + refined_tail(f, r, 0)


def rogosinski(f: SchurFunction, z: Point, N: int = 1, power: int = 1, refined: bool = True) -> ValueInterval:
    """Refined Bohr-Rogosinski sum at ``|z| = r``.

    ``|f(z)|^power + sum_{n>=N} |a_n| r^n + sgn(t) sum_{n=1}^t |a_n|^2 r^N/(1-r)
    + (1/(1+|a_0|) + r/(1-r)) sum_{n>=t+1} |a_n|^2 r^(2n)`` with ``t = (N-1)//2``.
    With ``refined=False`` only the first two terms remain (the unrefined form).
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    r = radius_of(z)
    b = _moduli(f)
    coeff = lemma4_lhs(b, r, N) if refined else sums.linear(b, r, start=N)
    return point_modulus(f, z, power) + coeff


def rogosinski_middle(f: SchurFunction, r: float, N: int) -> float:
    """The ``sgn(t) sum_{n=1}^t |a_n|^2 r^N / (1-r)`` term on its own."""
    t = (N - 1) // 2
    b = _moduli(f)
    return sgn(t) * float(np.sum(b[1 : t + 1] ** 2)) * r**N / (1.0 - r)


# --- symmetric functions ----------------------------------------------------------------


def symmetric_bohr_sum(g: SchurFunction, p: int, m: int, r: float) -> ValueInterval:
    """``sum_n |a_{pn+m}| r^(pn+m) = r^m sum_n |b_n| (r^p)^n`` for ``f = z^m g(z^p)``."""
    _check_pm(p, m)
    return r**m * sums.linear(_moduli(g), r**p)


def symmetric_refined(g: SchurFunction, p: int, m: int, r: float, head: str = "modulus") -> ValueInterval:
    """``sum_n |a_{pn+m}| r^(pn+m) + (1/(1+|a_m|) + r^p/(1-r^p)) sum_{n>=1} |a_{pn+m}|^2 r^(2pn+m)``.

    Computed as ``r^m [ |b_0| + sum_{n>=1} |b_n| rho^n + w sum_{n>=1} |b_n|^2 rho^(2n) ]``
    with ``rho = r^p``.  ``head='square'`` replaces ``|b_0|`` by ``|b_0|^2``.
    """
    _check_pm(p, m)
    b = _moduli(g)
    rho = r**p
    inner = _head(b[0], head) + sums.linear(b, rho, start=1) + _weight(b[0], rho) * sums.quadratic(b, rho, start=1)
    return r**m * inner


def cor2_functional(g: SchurFunction, p: int, r: float, inner_start: int = 2) -> ValueInterval:
    """Functional for ``f(z) = z^p g(z^p)`` (so ``a_{pn} = b_{n-1}``).

    ``sum_{n>=1} |a_pn| r^(pn) + (1/(1+|a_p|) + r^p/(1-r^p)) sum_{n>=inner_start} |a_pn|^2 r^(p(2n-1))``.
    """
    if inner_start not in (1, 2):
        raise ValueError("inner_start must be 1 or 2")
    _check_pm(p, p)
    b = _moduli(g)
    rho = r**p
    # |a_pn| rho^n = rho |b_{n-1}| rho^(n-1);  |a_pn|^2 rho^(2n-1) = rho |b_k|^2 rho^(2k), k = n-1
    quad = sums.quadratic(b, rho, start=inner_start - 1)
    return rho * sums.linear(b, rho) + (_weight(b[0], rho) * rho) * quad


def _check_pm(p: int, m: int):
    if p < 1 or not 0 <= m <= p:
        raise ValueError(f"need p >= 1 and 0 <= m <= p, got p={p}, m={m}")


# --- area ---------------------------------------------------------------------------------


def area_sum(f: SchurFunction, r: float) -> ValueInterval:
    """``S_r / pi = sum_{n>=1} n |a_n|^2 r^(2n)``."""
    return sums.area(_moduli(f), r)


def area_refined(f: SchurFunction, r: float, lam: float, head: str = "modulus", refined: bool = True) -> ValueInterval:
    """Refined (or, with ``refined=False``, plain) Bohr sum plus ``lam * S_r/pi``."""
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    b = _moduli(f)
    if refined:
        base = refined_bohr(f, r, head)
    else:
        base = _head(b[0], head) + bohr_sum(f, r, start=1)
    return base + lam * area_sum(f, r)


# --- distance and derivative variants ---------------------------------------------------


def distance_refined(f: SchurFunction, z: Point, dist_power: int = 1, head: str = "modulus") -> ValueInterval:
    """``refined_bohr(f, r, head) + |f(z) - a_0|^dist_power``.

    ``dist_power=2, head='modulus'`` is F; ``dist_power=1`` gives G (modulus)
    and H (square).
    """
    r = radius_of(z)
    lo, hi, pts = _point_parts(f, z, "f-a0")
    return refined_bohr(f, r, head) + _reduce(lo**dist_power, hi**dist_power, pts)


def derivative_refined(f: SchurFunction, z: Point, head_power: int = 1, include_quadratic: bool = True) -> ValueInterval:
    """``|f(z)|^head_power + |f'(z)| r + sum_{n>=2} |a_n| r^n`` (+ refined quadratic term).

    ``|f(z)|`` and ``|f'(z)|`` are combined point by point before maximising.
    """
    r = radius_of(z)
    flo, fhi, pts = _point_parts(f, z, "f")
    dlo, dhi, _ = _point_parts(f, z, "df")
    point = _reduce(flo**head_power + r * dlo, fhi**head_power + r * dhi, pts)
    out = point + bohr_sum(f, r, start=2)
    if include_quadratic:
        out = out + refined_tail(f, r, 0)
    return out
