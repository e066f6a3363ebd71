"""Radius constants and root solvers for every inequality in the package.

Each :class:`Theorem` variant is tied to a polynomial whose root in (0, 1) is
the radius (closed-form radii come with the polynomial they solve, so every
result carries a residual).  Polynomial radii are found by scanning (0, 1) on a
1e-3 grid for sign changes and bisecting the bracket; when the scan finds no
sign change, critical points of the polynomial are bisected instead, which
catches double roots such as ``(3 r - 1)^2``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from enum import Enum
from typing import Optional

import numpy as np
from numpy.polynomial import Polynomial

from .errors import DomainError, MultipleRoots, NoRootInUnitInterval

SCAN_STEP = 1e-3
RESIDUAL_TOL = 1e-13
DOUBLE_ROOT_TOL = 1e-12

SQRT5 = math.sqrt(5.0)
SQRT17 = math.sqrt(17.0)
THM5_A0_THRESHOLD = 4.0 * math.sqrt(2.0) - 5.0
THMF_RADIUS = (SQRT17 - 3.0) / 4.0
COR2B_RHO = (5.0 - SQRT17) / 2.0
GOLDEN_WINDOW = (3.0 - SQRT5) / 2.0


class Theorem(str, Enum):
    """Inequality variants; the value is the command-line identifier."""

    THM_A = "thma"
    THM_B = "thmb-modulus"
    THM_B_SQ = "thmb-square"
    THM_C_R = "thmc-r"
    THM_C_RSQ = "thmc-rsq"
    THM1_R = "thm1-r"
    THM1_RSQ = "thm1-rsq"
    THM2 = "thm2"
    THM2_SQ = "thm2-sq"
    THM_D = "thmd"
    THM3 = "thm3"
    COR1A = "cor1a"
    COR1B = "cor1b"
    COR2A = "cor2a"
    COR2B = "cor2b"
    THM_E_FIRST = "thme-first"
    THM_E_SECOND = "thme-second"
    THM4_FIRST = "thm4-first"
    THM4_SECOND = "thm4-second"
    THM5 = "thm5"
    THM6_G = "thm6-g"
    THM6_H = "thm6-h"
    THM_F = "thmf"
    THM7_J = "thm7-j"

    @classmethod
    def parse(cls, text: str) -> "Theorem":
        key = text.strip().lower().replace("_", "-")
        key = ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown theorem id {text!r}; known: {', '.join(t.value for t in cls)}") from None


ALIASES = {
    "thmb": "thmb-modulus",
    "thm4-lambda-first": "thm4-first",
    "thm4-lambda-second": "thm4-second",
    "thm7-i": "thmf",
    "thm1-rprime": "thm1-rsq",
}

_NEEDS_N = {Theorem.THM1_R, Theorem.THM1_RSQ, Theorem.THM_C_R, Theorem.THM_C_RSQ}
_NEEDS_P = {Theorem.THM_D, Theorem.THM3, Theorem.COR1A, Theorem.COR1B, Theorem.COR2A, Theorem.COR2B}
_NEEDS_M = {Theorem.THM_D, Theorem.THM3}
# radii that depend on the head coefficient of the function under test
A0_DEPENDENT = {
    Theorem.THM_B,
    Theorem.THM2,
    Theorem.THM2_SQ,
    Theorem.THM3,
    Theorem.COR1A,
    Theorem.COR2A,
    Theorem.THM4_SECOND,
}
# polynomial radii claimed to be the unique root in (0, 1)
_UNIQUE = {Theorem.THM1_R, Theorem.THM1_RSQ, Theorem.THM_C_R, Theorem.THM_C_RSQ, Theorem.THM2_SQ, Theorem.THM3, Theorem.THM7_J}
_MAXIMAL = {Theorem.THM_D}

NOTES = {
    Theorem.THM4_SECOND: "radius 1/(3-a) read with a = |a0|",
    Theorem.THM2_SQ: "cubic coefficient taken as 1-|a0|^2",
}


@dataclass(frozen=True)
class RadiusQuery:
    theorem: Theorem
    N: Optional[int] = None
    p: Optional[int] = None
    m: Optional[int] = None
    a0: Optional[float] = None

    def __post_init__(self):
        if not isinstance(self.theorem, Theorem):
            object.__setattr__(self, "theorem", Theorem.parse(str(self.theorem)))

    def check(self, require_a0: bool = True) -> "RadiusQuery":
        """Validate that exactly the parameters this variant uses are present."""
        th = self.theorem
        for name, needed in (("N", th in _NEEDS_N), ("p", th in _NEEDS_P), ("m", th in _NEEDS_M)):
            value = getattr(self, name)
            if needed and value is None:
                raise ValueError(f"{th.value} needs parameter {name}")
            if not needed and value is not None:
                raise ValueError(f"{th.value} takes no parameter {name}")
        if th in A0_DEPENDENT:
            if require_a0 and self.a0 is None:
                raise ValueError(f"{th.value} needs parameter a0")
        elif self.a0 is not None:
            raise ValueError(f"{th.value} does not depend on a0")
        if self.N is not None and self.N < 1:
            raise DomainError(f"N must be >= 1, got {self.N}")
        if self.p is not None and self.p < 1:
            raise DomainError(f"p must be >= 1, got {self.p}")
        if self.m is not None and not 0 <= self.m <= self.p:
            raise DomainError(f"need 0 <= m <= p, got m={self.m}, p={self.p}")
        if self.a0 is not None and not 0.0 <= self.a0 < 1.0:
            raise DomainError(f"a0 is a modulus in [0, 1), got {self.a0}")
        return self

    def with_a0(self, a0: float) -> "RadiusQuery":
        return replace(self, a0=float(a0)) if self.theorem in A0_DEPENDENT else self

    def params(self) -> dict:
        return {k: v for k, v in asdict(self).items() if k != "theorem" and v is not None}

    def label(self) -> str:
        extra = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.theorem.value}({extra})" if extra else self.theorem.value


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    residual: float
    root_count: int
    method: str
    note: str = ""


def _poly(terms: dict) -> Polynomial:
    """Polynomial from ``{degree: coefficient}``, accumulating repeated degrees."""
    coef = np.zeros(max(terms) + 1)
    for deg, c in terms.items():
        coef[deg] += c
    return Polynomial(coef)


def _sum_terms(*pairs) -> dict:
    out: dict = {}
    for deg, c in pairs:
        out[deg] = out.get(deg, 0.0) + c
    return out


def equation(q: RadiusQuery) -> Polynomial:
    """The polynomial in ``r`` whose root is the radius for ``q``."""
    th = q.theorem
    a = q.a0 if q.a0 is not None else 0.0
    if th in (Theorem.THM1_R, Theorem.THM_C_R):
        # 2(1+r) r^N - (1-r)^2
        return _poly(_sum_terms((q.N, 2.0), (q.N + 1, 2.0), (0, -1.0), (1, 2.0), (2, -1.0)))
    if th in (Theorem.THM1_RSQ, Theorem.THM_C_RSQ):
        return _poly(_sum_terms((q.N, 1.0), (q.N + 1, 1.0), (0, -1.0), (1, 2.0), (2, -1.0)))
    if th == Theorem.THM2:
        return _poly({0: 1.0, 1: -(3 + a), 2: 1 - a - a * a})
    if th == Theorem.THM2_SQ:
        return _poly({0: 1.0, 1: -2.0, 2: -(1 + 2 * a), 3: 1 - a * a})
    if th == Theorem.THM_D:
        p, m = q.p, q.m
        return _poly(_sum_terms((p - m, -6.0), (2 * (p - m), 1.0), (2 * p, 8.0), (0, 1.0)))
    if th == Theorem.THM3:
        p, m = q.p, q.m
        return _poly(_sum_terms((p + m, 1 - a - a * a), (p, 1.0), (m, a), (0, -1.0)))
    if th == Theorem.COR1A:
        return _poly(_sum_terms((q.p, 2 + a), (0, -1.0)))
    if th == Theorem.COR1B:
        return _poly(_sum_terms((q.p, 2.0), (0, -1.0)))
    if th == Theorem.COR2A:
        return _poly(_sum_terms((2 * q.p, 1 - a - a * a), (q.p, 1 + a), (0, -1.0)))
    if th == Theorem.COR2B:
        return _poly(_sum_terms((2 * q.p, 1.0), (q.p, -5.0), (0, 2.0)))
    if th == Theorem.THM_B:
        return _poly({0: -1.0, 1: 2 + a})
    if th in (Theorem.THM_B_SQ, Theorem.THM_E_SECOND):
        return _poly({0: -1.0, 1: 2.0})
    if th in (Theorem.THM_A, Theorem.THM_E_FIRST, Theorem.THM4_FIRST, Theorem.THM5, Theorem.THM6_H):
        return _poly({0: -1.0, 1: 3.0})
    if th == Theorem.THM4_SECOND:
        return _poly({0: -1.0, 1: 3 - a})
    if th == Theorem.THM6_G:
        return _poly({0: -1.0, 1: 5.0})
    if th == Theorem.THM_F:
        return _poly({0: -1.0, 1: 3.0, 2: 2.0})
    if th == Theorem.THM7_J:
        return _poly({0: 1.0, 1: -2.0, 2: -1.0, 3: -1.0, 4: -1.0})
    raise ValueError(f"no equation for {th}")


def alpha(ap: float) -> float:
    """``1 + |a_p| + sqrt((1 - |a_p|)(5 + 3|a_p|))``."""
    return 1.0 + ap + math.sqrt((1.0 - ap) * (5.0 + 3.0 * ap))


def closed_form(q: RadiusQuery) -> Optional[float]:
    """Radius from an explicit formula, or None for variants solved numerically."""
    th = q.theorem
    a = q.a0
    if th == Theorem.THM_B:
        return 1.0 / (2.0 + a)
    if th in (Theorem.THM_B_SQ, Theorem.THM_E_SECOND):
        return 0.5
    if th in (Theorem.THM_A, Theorem.THM_E_FIRST, Theorem.THM4_FIRST, Theorem.THM5, Theorem.THM6_H):
        return 1.0 / 3.0
    if th == Theorem.THM2:
        return 2.0 / (3.0 + a + SQRT5 * (1.0 + a))
    if th == Theorem.COR1A:
        return (1.0 / (2.0 + a)) ** (1.0 / q.p)
    if th == Theorem.COR1B:
        return 0.5 ** (1.0 / q.p)
    if th == Theorem.COR2A:
        return (2.0 / alpha(a)) ** (1.0 / q.p)
    if th == Theorem.COR2B:
        return COR2B_RHO ** (1.0 / q.p)
    if th == Theorem.THM4_SECOND:
        return 1.0 / (3.0 - a)
    if th == Theorem.THM6_G:
        return 0.2
    if th == Theorem.THM_F:
        return THMF_RADIUS
    return None


def _horner(coef, x: float) -> float:
    acc = 0.0
    for c in reversed(coef):
        acc = acc * x + c
    return acc


def _bisect(poly: Polynomial, lo: float, hi: float) -> float:
    coef = [float(c) for c in poly.coef]
    flo = _horner(coef, lo)
    if flo == 0.0:
        return lo
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo < 1e-16:
            break
        fm = _horner(coef, mid)
        if fm == 0.0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _sign_change_brackets(poly: Polynomial, step: float = SCAN_STEP) -> list[tuple[float, float]]:
    n = int(round(1.0 / step))
    grid = np.linspace(0.0, 1.0, n + 1)
    vals = poly(grid)
    brackets = []
    # exact zeros at interior grid points count once, as degenerate brackets
    zeros = set(np.flatnonzero(vals[1:n] == 0.0) + 1)
    flips = np.flatnonzero(vals[:-1] * vals[1:] < 0)
    for i in sorted(zeros | set(flips)):
        brackets.append((grid[i], grid[i]) if i in zeros else (grid[i], grid[i + 1]))
    return brackets


def find_roots(poly: Polynomial, step: float = SCAN_STEP) -> tuple[list[float], str]:
    """Roots in (0, 1): sign changes first, then double roots at critical points."""
    brackets = _sign_change_brackets(poly, step)
    if brackets:
        return [lo if lo == hi else _bisect(poly, lo, hi) for lo, hi in brackets], "bisection"
    deriv = poly.deriv()
    doubles = []
    for lo, hi in _sign_change_brackets(deriv, step):
        c = lo if lo == hi else _bisect(deriv, lo, hi)
        if 0.0 < c < 1.0 and abs(poly(c)) < DOUBLE_ROOT_TOL:
            doubles.append(c)
    return doubles, "double-root"


def solve(q: RadiusQuery) -> RadiusResult:
    """Radius for ``q``.

    Raises :class:`NoRootInUnitInterval` when a polynomial variant has no root
    in (0, 1) and :class:`MultipleRoots` when a root claimed unique is not.
    """
    q.check()
    poly = equation(q)
    note = NOTES.get(q.theorem, "")
    value = closed_form(q)
    if value is not None:
        return RadiusResult(value, float(abs(poly(value))), 1, "closed-form", note)
    roots, method = find_roots(poly)
    if not roots:
        raise NoRootInUnitInterval(f"{q.label()}: no root of the radius equation in (0, 1)")
    if q.theorem in _UNIQUE and len(roots) != 1:
        raise MultipleRoots(f"{q.label()}: expected a unique root in (0, 1), found {roots}")
    root = max(roots)
    residual = float(abs(poly(root)))
    if residual >= RESIDUAL_TOL:
        raise NoRootInUnitInterval(f"{q.label()}: residual {residual:.3g} at r = {root!r} exceeds tolerance")
    return RadiusResult(float(root), residual, len(roots), method, note)


def radius(theorem, **params) -> float:
    """Shorthand: ``radius('thm1-r', N=1)``."""
    return solve(RadiusQuery(Theorem.parse(theorem) if isinstance(theorem, str) else theorem, **params)).radius


def extremal_a_for_thmD(p: int, m: int) -> float:
    """Parameter of the extremal ``z^m (z^p - a)/(1 - a z^p)`` at the radius ``r_{p,m}``.

    ``a = (1 - sqrt(1 - r^(2p)) / sqrt(2)) / r^p``.  For ``m = 0`` the radius
    satisfies ``r^p = 1/3`` and the formula gives the boundary value ``a = 1``,
    which is rejected with :class:`DomainError`.
    """
    r = solve(RadiusQuery(Theorem.THM_D, p=p, m=m)).radius
    rp = r**p
    a = (1.0 - math.sqrt(1.0 - rp * rp) / math.sqrt(2.0)) / rp
    if not 0.0 <= a < 1.0 - 1e-12:
        err = DomainError(f"extremal parameter a = {a!r} is not in [0, 1) for p={p}, m={m}")
        err.value = a
        raise err
    return a
