"""Coefficient sums over Schur-class series with rigorous truncation tails.

All tails rest on ``|a_n| <= 1 - |a_0|^2`` for ``n >= 1``, so with
``M = 1 - |a_0|^2``:

* ``sum_{n>K} |a_n| rho^n      <= M rho^(K+1) / (1 - rho)``
* ``sum_{n>K} |a_n|^2 rho^(2n) <= M^2 rho^(2K+2) / (1 - rho^2)``
* ``sum_{n>K} n |a_n|^2 rho^(2n) <= M^2 rho^(2K+2) (K+1 - K rho^2) / (1 - rho^2)^2``
* ``sum_{n>K} n |a_n| rho^(n-1) <= M rho^K (K+1 - K rho) / (1 - rho)^2``

The arguments are the modulus array ``b = |a_0| .. |a_K|``.
"""

from __future__ import annotations

import numpy as np

from .intervals import ValueInterval


def _powers(rho: float, n: int) -> np.ndarray:
    return rho ** np.arange(n)


def coefficient_bound(b: np.ndarray) -> float:
    return max(0.0, 1.0 - float(b[0]) ** 2)


def _check(rho: float):
    if not 0.0 <= rho < 1.0:
        raise ValueError(f"radius must lie in [0, 1), got {rho}")


def linear(b: np.ndarray, rho: float, start: int = 0, stop: int | None = None) -> ValueInterval:
    """``sum_{n=start}^{stop} b_n rho^n`` (``stop=None`` means infinity)."""
    _check(rho)
    K = b.size - 1
    hi = K if stop is None else min(stop, K)
    if start > hi:
        body = 0.0
    else:
        body = float(np.dot(b[start : hi + 1], _powers(rho, hi + 1)[start:]))
    if stop is not None and stop <= K:
        return ValueInterval.exact(body)
    first = max(K + 1, start)
    tail = coefficient_bound(b) * rho**first / (1.0 - rho)
    return ValueInterval.with_tail(body, tail)


def quadratic(b: np.ndarray, rho: float, start: int = 1, stop: int | None = None) -> ValueInterval:
    """``sum_{n=start}^{stop} b_n^2 rho^(2n)``."""
    _check(rho)
    K = b.size - 1
    hi = K if stop is None else min(stop, K)
    if start > hi:
        body = 0.0
    else:
        body = float(np.dot(b[start : hi + 1] ** 2, _powers(rho * rho, hi + 1)[start:]))
    if stop is not None and stop <= K:
        return ValueInterval.exact(body)
    first = max(K + 1, start)
    tail = coefficient_bound(b) ** 2 * rho ** (2 * first) / (1.0 - rho * rho)
    return ValueInterval.with_tail(body, tail)


def area(b: np.ndarray, rho: float) -> ValueInterval:
    """``sum_{n>=1} n b_n^2 rho^(2n)``."""
    _check(rho)
    K = b.size - 1
    n = np.arange(K + 1)
    body = float(np.dot(n * b**2, _powers(rho * rho, K + 1)))
    q = rho * rho
    tail = coefficient_bound(b) ** 2 * q ** (K + 1) * ((K + 1) - K * q) / (1.0 - q) ** 2
    return ValueInterval.with_tail(body, tail)


def derivative_linear(b: np.ndarray, rho: float) -> ValueInterval:
    """``sum_{n>=1} n b_n rho^(n-1)``, a majorant of ``|f'(z)|`` on ``|z| = rho``."""
    _check(rho)
    K = b.size - 1
    n = np.arange(1, K + 1)
    body = float(np.dot(n * b[1:], _powers(rho, K)))
    tail = coefficient_bound(b) * rho**K * ((K + 1) - K * rho) / (1.0 - rho) ** 2
    return ValueInterval.with_tail(body, tail)


def derivative_tail(order: int, rho: float, bound: float = 1.0) -> float:
    """Remainder of the derivative series truncated at degree ``order - 1``.

    ``sum_{n>=K} (n+1) |a_{n+1}| rho^n <= M rho^K (K+1 - K rho) / (1 - rho)^2``.
    """
    _check(rho)
    K = order
    return bound * rho**K * ((K + 1) - K * rho) / (1.0 - rho) ** 2
