"""Checkable coefficient and growth bounds for the Schur class.

Each ``*_check`` / ``*_sides`` function evaluates both sides of one inequality
for a concrete function and returns a :class:`LemmaReport`.  The left-hand
side is an upper enclosure (truncation tails included) and the right-hand side
is computed in closed form, so ``margin >= 0`` is a certified pass up to
floating point; ``holds`` allows ``SLACK`` for accumulated rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import series as ser
from . import sums
from .errors import DomainError
from .intervals import ValueInterval
from .schur import SchurFunction
from .series import TaylorSeries

SLACK = 1e-9
LEMMA2_MAX_RADIUS = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class LemmaReport:
    lhs: ValueInterval
    rhs: ValueInterval
    margin: float
    holds: bool
    label: str = ""

    @classmethod
    def compare(cls, lhs: ValueInterval, rhs: ValueInterval, label: str = "") -> "LemmaReport":
        margin = float(rhs.lower - lhs.upper)
        return cls(lhs, rhs, margin, bool(margin >= -SLACK), label)


def _moduli(f) -> np.ndarray:
    if isinstance(f, SchurFunction):
        return np.abs(f.coeffs)
    if isinstance(f, TaylorSeries):
        return np.abs(f.coeffs)
    return np.abs(np.asarray(f, dtype=np.complex128))


def sgn(t: int) -> int:
    """Sign of a nonnegative integer; ``sgn(0) = 0``."""
    return 1 if t > 0 else 0


# --- lemma1: majorant of the tail sum -------------------------------------


def lemma1_rhs(a0: float, r: float) -> float:
    """Bound on ``sum_{n>=1} |a_n| r^n``; the branch switches at ``|a0| = r``."""
    a0 = abs(a0)
    if not (0.0 <= a0 < 1.0 and 0.0 <= r < 1.0):
        raise DomainError(f"need |a0| < 1 and 0 <= r < 1, got a0={a0}, r={r}")
    if a0 >= r:
        return r * (1.0 - a0 * a0) / (1.0 - r * a0)
    return r * math.sqrt(1.0 - a0 * a0) / math.sqrt(1.0 - r * r)


def lemma1_check(f: SchurFunction, r: float) -> LemmaReport:
    b = _moduli(f)
    return LemmaReport.compare(sums.linear(b, r, start=1), ValueInterval.exact(lemma1_rhs(b[0], r)), "lemma1")


# --- lemma2: area bound ------------------------------------------------------


def lemma2_rhs(a0: float, r: float) -> float:
    """``r^2 (1-|a0|^2)^2 / (1-|a0|^2 r^2)^2``, asserted only for ``r <= 1/sqrt(2)``."""
    if not 0.0 <= r <= LEMMA2_MAX_RADIUS:
        raise DomainError(f"area bound holds for 0 <= r <= 1/sqrt(2), got r={r}")
    s = abs(a0) ** 2
    return r * r * (1.0 - s) ** 2 / (1.0 - s * r * r) ** 2


def lemma2_check(f: SchurFunction, r: float) -> LemmaReport:
    b = _moduli(f)
    return LemmaReport.compare(sums.area(b, r), ValueInterval.exact(lemma2_rhs(b[0], r)), "lemma2")


# --- lemma3: refined coefficient bounds ---------------------------------------


def lemma3_check(f, n: int) -> tuple[LemmaReport, Optional[LemmaReport]]:
    """Parts (a) ``|a_{2n+1}|`` and (b) ``|a_{2n}|`` against the head-weighted bounds.

    Part (b) is only stated for ``n >= 1``; at ``n = 0`` the second entry is None.
    """
    b = _moduli(f)
    if 2 * n + 1 > b.size - 1:
        raise DomainError(f"index 2n+1 = {2 * n + 1} exceeds the truncation order {b.size - 1}")
    head = float(np.sum(b[: n + 1] ** 2))
    part_a = LemmaReport.compare(
        ValueInterval.exact(b[2 * n + 1]), ValueInterval.exact(1.0 - head), f"lemma3a(n={n})"
    )
    if n == 0:
        return part_a, None
    rhs_b = 1.0 - float(np.sum(b[:n] ** 2)) - b[n] ** 2 / (1.0 + b[0])
    part_b = LemmaReport.compare(ValueInterval.exact(b[2 * n]), ValueInterval.exact(rhs_b), f"lemma3b(n={n})")
    return part_a, part_b


def lemma3_fixture(head: Sequence[complex], eps: complex, part: str = "a", order: int = ser.DEFAULT_ORDER) -> TaylorSeries:
    """Series of the rational form that is necessary for equality in ``lemma3``.

    part ``"a"`` (index ``2n+1``, ``n = len(head) - 1``)::

        (a_0 + ... + a_n z^n + eps z^(2n+1)) / (1 + eps (conj(a_n) z^n + ... + conj(a_0) z^(2n+1)))

    part ``"b"`` (index ``2n``) uses ``a_n / (1 + |a_0|)`` in place of ``a_n``
    and ``z^(2n)`` in place of ``z^(2n+1)``.  These are fixtures only: whether
    the result lies in the Schur class depends on the supplied head.
    """
    head = [complex(h) for h in head]
    n = len(head) - 1
    if abs(abs(eps) - 1.0) > 1e-12:
        raise DomainError("eps must be unimodular")
    if part == "b":
        if n < 1:
            raise DomainError("part (b) needs n >= 1")
        head = head[:-1] + [head[-1] / (1.0 + abs(head[0]))]
        top = 2 * n
    elif part == "a":
        top = 2 * n + 1
    else:
        raise ValueError("part must be 'a' or 'b'")
    num = np.zeros(order + 1, dtype=np.complex128)
    den = np.zeros(order + 1, dtype=np.complex128)
    num[: n + 1] = head
    den[0] = 1.0
    if top <= order:
        num[top] += eps
        # conj(a_k) multiplies z^(top - k)
        for k, h in enumerate(head):
            if top - k <= order:
                den[top - k] += eps * np.conj(h)
    return ser.divide(TaylorSeries(num), TaylorSeries(den))


# --- lemma4: master tail inequality --------------------------------------------


def lemma4_lhs(b: np.ndarray, r: float, N: int) -> ValueInterval:
    """Left side with ``t = floor((N-1)/2)``; the middle sum vanishes when ``t = 0``."""
    if N < 1:
        raise DomainError(f"N must be a positive integer, got {N}")
    t = (N - 1) // 2
    lhs = sums.linear(b, r, start=N)
    if sgn(t):
        lhs = lhs + float(np.sum(b[1 : t + 1] ** 2)) * r**N / (1.0 - r)
    weight = 1.0 / (1.0 + b[0]) + r / (1.0 - r)
    return lhs + weight * sums.quadratic(b, r, start=t + 1)


def lemma4_rhs(a0: float, r: float, N: int) -> float:
    return (1.0 - abs(a0) ** 2) * r**N / (1.0 - r)


def lemma4_sides(f, r: float, N: int) -> LemmaReport:
    if not 0.0 <= r < 1.0:
        raise DomainError(f"need 0 <= r < 1, got {r}")
    b = _moduli(f)
    return LemmaReport.compare(lemma4_lhs(b, r, N), ValueInterval.exact(lemma4_rhs(b[0], r, N)), f"lemma4(N={N})")


# --- Schwarz-Pick -------------------------------------------------------------------


def schwarz_pick_value(a0: float, r: float) -> float:
    """``max_{|z|=r} |f(z)| <= (r + |a0|) / (1 + r |a0|)``."""
    a0 = abs(a0)
    return (r + a0) / (1.0 + r * a0)


def schwarz_pick_derivative(w, r: float):
    """``|f'(z)| <= (1 - |f(z)|^2) / (1 - |z|^2)`` given ``w = |f(z)|``."""
    return (1.0 - np.asarray(w) ** 2) / (1.0 - r * r)


def schwarz_pick_check(f: SchurFunction, r: float, n_theta: int = 128) -> tuple[LemmaReport, LemmaReport]:
    """Growth bound and derivative bound on the θ-grid of ``|z| = r``.

    Returns the reports at the worst grid point of each inequality.
    """
    ev = ser.evaluate_circle(f.series, r, n_theta)
    mod = np.abs(ev.value)
    k = int(np.argmax(mod))
    pts = ser.circle_points(r, n_theta)
    value = LemmaReport.compare(
        ValueInterval(max(mod[k] - ev.tail, 0.0), mod[k] + ev.tail, complex(pts[k])),
        ValueInterval.exact(schwarz_pick_value(f.abs_a0, r)),
        "schwarz-pick",
    )
    d = ser.derivative(f.series)
    dev = ser.evaluate_circle(d, r, n_theta, bound=0.0)
    dtail = sums.derivative_tail(d.order + 1, r)
    dmod = np.abs(dev.value)
    w_hi = np.minimum(mod + ev.tail, 1.0)
    rhs_lo = schwarz_pick_derivative(w_hi, r)
    margins = rhs_lo - (dmod + dtail)
    j = int(np.argmin(margins))
    deriv = LemmaReport.compare(
        ValueInterval(max(dmod[j] - dtail, 0.0), dmod[j] + dtail, complex(pts[j])),
        ValueInterval(float(rhs_lo[j]), float(schwarz_pick_derivative(max(mod[j] - ev.tail, 0.0), r))),
        "schwarz-pick-derivative",
    )
    return value, deriv
