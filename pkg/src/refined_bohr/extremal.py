"""Closed-form functional values on the extremal families, at real ``z = r``.

For the disk automorphisms ``(a +- z)/(1 +- a z)`` (real ``a`` in [0, 1)) every
coefficient sum has a geometric closed form:

* ``sum_{n>=N} |a_n| r^n = (1-a^2) a^(N-1) r^N / (1 - a r)``
* ``sum_{n>=t+1} |a_n|^2 r^(2n) = (1-a^2)^2 a^(2t) r^(2t+2) / (1 - a^2 r^2)``
* ``sum_{n>=1} n |a_n|^2 r^(2n) = (1-a^2)^2 r^2 / (1 - a^2 r^2)^2``

The ``*_factored`` functions are the simplified expressions that make the
sign of ``value - 1`` visible; tests check they agree with the direct sums and
with the truncated series.
"""

from __future__ import annotations

import math


def _w(a: float, r: float) -> float:
    return 1.0 / (1.0 + a) + r / (1.0 - r)


def tail_sum(a: float, r: float, N: int = 1) -> float:
    return (1 - a * a) * a ** (N - 1) * r**N / (1 - a * r)


def square_tail(a: float, r: float, t: int = 0) -> float:
    return (1 - a * a) ** 2 * a ** (2 * t) * r ** (2 * t + 2) / (1 - a * a * r * r)


def square_head(a: float, t: int) -> float:
    """``sum_{n=1}^t |a_n|^2``."""
    return (1 - a * a) * (1 - a ** (2 * t))


def area(a: float, r: float) -> float:
    return (1 - a * a) ** 2 * r * r / (1 - a * a * r * r) ** 2


def moebius_modulus(a: float, r: float, sign: str) -> float:
    """``|f(r)|`` for ``(a + z)/(1 + a z)`` (sign '+') or ``(a - z)/(1 - a z)`` (sign '-')."""
    return (a + r) / (1 + a * r) if sign == "+" else abs(a - r) / (1 - a * r)


# --- refined Bohr sums ---------------------------------------------------------------


def refined_bohr(a: float, r: float, head: str = "modulus") -> float:
    h = a if head == "modulus" else a * a
    return h + tail_sum(a, r) + _w(a, r) * square_tail(a, r)


def refined_bohr_factored(a: float, r: float, head: str = "modulus") -> float:
    """The tail and quadratic terms collapse to ``(1-a^2) r / (1-r)``."""
    h = a if head == "modulus" else a * a
    return h + (1 - a * a) * r / (1 - r)


def bohr(a: float, r: float) -> float:
    return a + tail_sum(a, r)


# --- Bohr-Rogosinski ---------------------------------------------------------------------


def rogosinski(a: float, r: float, N: int = 1, power: int = 1, refined: bool = True, sign: str = "+") -> float:
    t = (N - 1) // 2
    value = moebius_modulus(a, r, sign) ** power + tail_sum(a, r, N)
    if refined:
        if t > 0:
            value += square_head(a, t) * r**N / (1 - r)
        value += _w(a, r) * square_tail(a, r, t)
    return value


def thm2_A1(a: float, r: float) -> float:
    return (1 - a - a * a) * r * r - (3 + a) * r + 1


def thm2_A_factored(a: float, r: float) -> float:
    return 1 - (1 - a) * thm2_A1(a, r) / ((1 + a * r) * (1 - r))


def thm2_A2(a: float, r: float) -> float:
    return (1 - a * a) * r**3 - (1 + 2 * a) * r**2 - 2 * r + 1


def thm2_B_factored(a: float, r: float) -> float:
    return 1 - (1 - a * a) * thm2_A2(a, r) / ((1 + a * r) ** 2 * (1 - r))


# --- symmetric ------------------------------------------------------------------------------


def symmetric_refined(a: float, p: int, m: int, r: float, head: str = "modulus") -> float:
    """Functional on ``z^m (a -+ z^p)/(1 -+ a z^p)`` summed term by term."""
    rho = r**p
    h = a if head == "modulus" else a * a
    return r**m * (h + tail_sum(a, rho) + _w(a, rho) * square_tail(a, rho))


def symmetric_refined_factored(a: float, p: int, m: int, r: float) -> float:
    rho = r**p
    return r**m * (a + (1 - a * a) * rho / (1 - rho))


def symmetric_bohr(a: float, p: int, m: int, r: float) -> float:
    rho = r**p
    return r**m * (a + tail_sum(a, rho))


def cor2(a: float, p: int, r: float, inner_start: int = 2) -> float:
    """``cor2a``/``cor2b`` functional on ``z^p (a - z^p)/(1 - a z^p)``, summed term by term."""
    rho = r**p
    lin = rho * (a + tail_sum(a, rho))
    if inner_start == 1:
        quad = a * a + square_tail(a, rho)
    else:
        quad = square_tail(a, rho)
    return lin + _w(a, rho) * rho * quad


def cor2b_factored(a: float, p: int, r: float) -> float:
    rho = r**p
    return a * rho + rho * rho / (1 - rho) + a * a * rho / (1 + a)


# --- area -------------------------------------------------------------------------------------


def area_refined(a: float, r: float, lam: float, head: str = "modulus", refined: bool = True) -> float:
    h = a if head == "modulus" else a * a
    base = h + tail_sum(a, r) + (_w(a, r) * square_tail(a, r) if refined else 0.0)
    return base + lam * area(a, r)


def thm4_first_at_third(a: float, lam: float) -> float:
    """First area functional on ``(a - z)/(1 - a z)`` at ``r = 1/3``, factored form."""
    b = 1 - a
    poly = 8 * (9 * lam - 8) - 8 * (9 * lam + 4) * b + 6 * (3 * lam + 2) * b**2 + 4 * b**3 - b**4
    return 1 + b * b / (2 * (9 - a * a) ** 2) * poly


def thm4_A6(a: float, lam: float) -> float:
    b = 1 - a
    return (8 * lam - 9) + 12 * (lam - 3) * b + 2 * (lam - 18) * b**2 - 3 * lam * b**3 - lam * b**4


def thm4_second_at_radius(a: float, lam: float) -> float:
    """Second area functional at ``r = 1/(3-a)``, factored form."""
    return 1 + (1 - a) ** 2 * (1 + a) / (9 * (3 - 2 * a) ** 2 * (2 - a)) * thm4_A6(a, lam)


# --- distance variants ------------------------------------------------------------------------


def distance_refined(a: float, r: float, dist_power: int, head: str = "modulus") -> float:
    """F, G or H on ``(a - z)/(1 - a z)`` at ``z = r``; ``|f(r) - a| = (1-a^2) r/(1 - a r)``."""
    dist = (1 - a * a) * r / (1 - a * r)
    return refined_bohr(a, r, head) + dist**dist_power


def thm5_F_at_third(a: float) -> float:
    return 1 + (1 - a) ** 2 * (a * a + 10 * a - 7) / (2 * (3 - a) ** 2)


def thm6_A11(a: float, r: float) -> float:
    return r * r * a * a + (3 * r * r - 3 * r) * a + (r * r - 3 * r + 1)


def thm6_G_factored(a: float, r: float) -> float:
    return 1 - (1 - a) / ((1 - r) * (1 - a * r)) * thm6_A11(a, r)


def thm6_A14(a: float, r: float) -> float:
    return (1 - 3 * r + r * r) + (-r + 2 * r * r) * a


def thm6_H_factored(a: float, r: float) -> float:
    return 1 - (1 - a * a) / ((1 - r) * (1 - a * r)) * thm6_A14(a, r)


def threshold_G(r: float) -> float:
    return (3 * (1 - r) - math.sqrt(5 * r * r - 6 * r + 5)) / (2 * r)


def threshold_H(r: float) -> float:
    return (r * r - 3 * r + 1) / (r - 2 * r * r)


# --- derivative variants ------------------------------------------------------------------------


def derivative_refined(a: float, r: float, head_power: int = 1, include_quadratic: bool = True) -> float:
    """I or J on ``(a + z)/(1 + a z)`` at ``z = r``; ``|f'(r)| = (1-a^2)/(1+a r)^2``."""
    value = ((a + r) / (1 + a * r)) ** head_power + r * (1 - a * a) / (1 + a * r) ** 2
    value += tail_sum(a, r, 2)
    if include_quadratic:
        value += _w(a, r) * square_tail(a, r)
    return value


def thm7_I_factored(a: float, r: float) -> float:
    bracket = -1 + 3 * r - r * r + (2 * r * r + r**3) * a + (2 * r**3 + r**4) * a * a + r**4 * a**3
    return 1 + (1 - a) / ((1 + a * r) ** 2 * (1 - r)) * bracket


def thm7_A15(a: float, r: float) -> float:
    return -1 + 2 * r + r * r - r**3 + 2 * r**3 * a + r**4 * a * a


def thm7_J_factored(a: float, r: float) -> float:
    return 1 + (1 - a * a) / ((1 + a * r) ** 2 * (1 - r)) * thm7_A15(a, r)
