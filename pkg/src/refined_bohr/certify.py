"""Sharpness certificates: explicit functions that break an inequality just past its radius.

For each variant the extremal family is evaluated in closed form at real
``z = r`` (see :mod:`refined_bohr.extremal`), which avoids any truncation
ambiguity exactly where the strict inequality ``value > 1`` matters.

Three scan shapes are used:

``radius``
    ``r = (1 + eps) * radius(a)``; a witness shows that radius cannot grow.
``lambda``
    ``r = radius(a)`` and the area weight inflated to ``(1 + eps) * lambda``.
``threshold``
    ``r`` at the radius and ``a`` above the admissible head bound (the
    if-and-only-if statement with ``|a0| <= 4 sqrt 2 - 5``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import extremal as ex
from .errors import DomainError, NoWitnessFound
from .intervals import ValueInterval
from .radii import (
    GOLDEN_WINDOW,
    THM5_A0_THRESHOLD,
    RadiusQuery,
    Theorem,
    solve,
)
from .schur import Moebius, SymmetricExtremal

DEFAULT_A_GRID = (0.9, 0.99, 0.999)
DEFAULT_EPS_GRID = (1e-2, 1e-3)
STRICT = 1e-12
# relative pad on closed-form values for floating-point rounding
ROUNDING_PAD = 64 * np.finfo(float).eps


@dataclass(frozen=True)
class Witness:
    a: float
    r: float
    value: ValueInterval
    eps: float
    recipe: str
    radius: float
    lam: Optional[float] = None

    def to_dict(self) -> dict:
        out = {
            "a": self.a,
            "eps": self.eps,
            "r": self.r,
            "radius": self.radius,
            "recipe": self.recipe,
            "value_lower": self.value.lower,
            "value_upper": self.value.upper,
        }
        if self.lam is not None:
            out["lambda"] = self.lam
        return out


@dataclass
class SharpnessCertificate:
    theorem: RadiusQuery
    witnesses: list
    grid: dict
    scanned: list = field(default_factory=list)
    mode: str = "radius"

    @property
    def valid(self) -> bool:
        return bool(self.witnesses)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.theorem.value,
            "params": self.theorem.params(),
            "mode": self.mode,
            "grid": self.grid,
            "valid": self.valid,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "scanned": [w.to_dict() for w in self.scanned],
        }


@dataclass(frozen=True)
class _Plan:
    mode: str
    value: Callable  # (a, r, lam) -> float
    recipe: Callable  # a -> recipe
    lam: Optional[float] = None
    r_cap: float = 1.0


def _psi(a):
    return Moebius(a, "+")


def _phi(a):
    return Moebius(a, "-")


def _plan(q: RadiusQuery) -> _Plan:
    th = q.theorem
    if th == Theorem.THM_A:
        return _Plan("radius", lambda a, r, lam: ex.bohr(a, r), _phi)
    if th == Theorem.THM_B:
        return _Plan("radius", lambda a, r, lam: ex.refined_bohr(a, r, "modulus"), _psi)
    if th == Theorem.THM_B_SQ:
        return _Plan("radius", lambda a, r, lam: ex.refined_bohr(a, r, "square"), _psi)
    if th in (Theorem.THM1_R, Theorem.THM1_RSQ, Theorem.THM_C_R, Theorem.THM_C_RSQ, Theorem.THM2, Theorem.THM2_SQ):
        power = 2 if th in (Theorem.THM1_RSQ, Theorem.THM_C_RSQ, Theorem.THM2_SQ) else 1
        refined = th not in (Theorem.THM_C_R, Theorem.THM_C_RSQ)
        N = q.N or 1
        return _Plan("radius", lambda a, r, lam: ex.rogosinski(a, r, N, power, refined), _psi)
    if th in (Theorem.THM3, Theorem.COR1A):
        p, m = q.p, q.m or 0
        return _Plan("radius", lambda a, r, lam: ex.symmetric_refined(a, p, m, r), lambda a: SymmetricExtremal(a, p, m, "-"))
    if th == Theorem.COR1B:
        p = q.p
        return _Plan(
            "radius", lambda a, r, lam: ex.symmetric_refined(a, p, 0, r, "square"), lambda a: SymmetricExtremal(a, p, 0, "-")
        )
    if th in (Theorem.COR2A, Theorem.COR2B):
        p = q.p
        start = 2 if th == Theorem.COR2A else 1
        return _Plan("radius", lambda a, r, lam: ex.cor2(a, p, r, start), lambda a: SymmetricExtremal(a, p, p, "-"))
    if th == Theorem.THM4_FIRST:
        return _Plan("lambda", lambda a, r, lam: ex.area_refined(a, r, lam, "modulus"), _phi, lam=8.0 / 9.0)
    if th == Theorem.THM4_SECOND:
        return _Plan("lambda", lambda a, r, lam: ex.area_refined(a, r, lam, "square"), _phi, lam=9.0 / 8.0)
    if th == Theorem.THM5:
        return _Plan("threshold", lambda a, r, lam: ex.distance_refined(a, r, 2, "modulus"), _phi)
    if th == Theorem.THM6_G:
        return _Plan("radius", lambda a, r, lam: ex.distance_refined(a, r, 1, "modulus"), _phi, r_cap=GOLDEN_WINDOW)
    if th == Theorem.THM6_H:
        return _Plan("radius", lambda a, r, lam: ex.distance_refined(a, r, 1, "square"), _phi, r_cap=GOLDEN_WINDOW)
    if th == Theorem.THM_F:
        return _Plan("radius", lambda a, r, lam: ex.derivative_refined(a, r, 1), _psi)
    if th == Theorem.THM7_J:
        return _Plan("radius", lambda a, r, lam: ex.derivative_refined(a, r, 2), _psi)
    raise ValueError(f"no sharpness claim is certified for {th.value}")


SUPPORTED = tuple(
    t for t in Theorem if t not in (Theorem.THM_D, Theorem.THM_E_FIRST, Theorem.THM_E_SECOND)
)


def _enclose(value: float) -> ValueInterval:
    value = float(value)
    pad = ROUNDING_PAD * max(1.0, abs(value))
    return ValueInterval(value - pad, value + pad)


def certify_sharpness(
    q: RadiusQuery,
    a_grid: Sequence[float] = DEFAULT_A_GRID,
    eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
    raise_on_failure: bool = True,
) -> SharpnessCertificate:
    """Scan the extremal family on ``a_grid x eps_grid`` and keep points where the value exceeds 1.

    ``eps`` is a relative excess over the radius (or over the area weight in
    the ``lambda`` mode; ignored in the ``threshold`` mode).  Raises
    :class:`NoWitnessFound` when nothing exceeds ``1 + 1e-12``.
    """
    if not a_grid or not eps_grid:
        raise ValueError("grids must be nonempty")
    base = RadiusQuery(q.theorem, N=q.N, p=q.p, m=q.m)
    base.check(require_a0=False)
    plan = _plan(base)
    scanned = []
    for a in a_grid:
        if not 0.0 <= a < 1.0:
            raise DomainError(f"a must lie in [0, 1), got {a}")
        rad = solve(base.with_a0(a)).radius
        eps_values = (0.0,) if plan.mode == "threshold" else eps_grid
        for eps in eps_values:
            lam = None
            if plan.mode == "radius":
                r = min((1.0 + eps) * rad, 0.5 * (rad + plan.r_cap) if (1.0 + eps) * rad >= plan.r_cap else math.inf)
            else:
                r = rad
                if plan.mode == "lambda":
                    lam = (1.0 + eps) * plan.lam
            value = _enclose(plan.value(a, r, lam))
            scanned.append(Witness(a, r, value, eps, plan.recipe(a).text(), rad, lam))
    witnesses = [w for w in scanned if w.value.lower > 1.0 + STRICT]
    if plan.mode == "threshold":
        witnesses = [w for w in witnesses if w.a > THM5_A0_THRESHOLD]
    elif plan.mode == "radius":
        witnesses = [w for w in witnesses if w.r > w.radius]
    grid = {"a": list(map(float, a_grid)), "eps": list(map(float, eps_grid)), "strict": STRICT}
    if plan.lam is not None:
        grid["lambda"] = plan.lam
    cert = SharpnessCertificate(base, witnesses, grid, scanned, plan.mode)
    if raise_on_failure and not cert.valid:
        raise NoWitnessFound(f"no witness above 1 for {base.label()}", [w.to_dict() for w in scanned])
    return cert


def threshold_a(theorem, r: float) -> float:
    """Smallest ``a`` past which ``(a - z)/(1 - a z)`` breaks G or H at ``z = r``.

    G needs ``1/5 < r < (3 - sqrt 5)/2``; H needs ``1/3 < r < (3 - sqrt 5)/2``.
    """
    th = Theorem.parse(theorem) if isinstance(theorem, str) else theorem
    if th == Theorem.THM6_G:
        if not 0.2 < r < GOLDEN_WINDOW:
            raise DomainError(f"G threshold defined for 1/5 < r < (3-sqrt5)/2, got {r}")
        a = ex.threshold_G(r)
    elif th == Theorem.THM6_H:
        if not 1.0 / 3.0 < r < GOLDEN_WINDOW:
            raise DomainError(f"H threshold defined for 1/3 < r < (3-sqrt5)/2, got {r}")
        a = ex.threshold_H(r)
    else:
        raise ValueError("threshold_a is defined for thm6-g and thm6-h only")
    if not 0.0 < a < 1.0:
        raise DomainError(f"threshold {a} fell outside (0, 1)")
    return a


@dataclass(frozen=True)
class RemarkReport:
    c: float
    value: ValueInterval
    expected: float
    exceeds_one: bool

    def to_dict(self) -> dict:
        return {"c": self.c, "value_lower": self.value.lower, "value_upper": self.value.upper,
                "expected": self.expected, "exceeds_one": self.exceeds_one}


def remark_thm4_counterexample(c: float, order: int | None = None) -> RemarkReport:
    """Square-head area functional with weight ``c`` at ``f(z) = z``, ``r = 1/2``.

    The value is ``1 + c/4``, so no positive weight survives at ``r = 1/2``.
    """
    from . import functionals
    from .schur import identity
    from .series import DEFAULT_ORDER

    if c <= 0:
        raise DomainError("c must be positive")
    f = identity(order or DEFAULT_ORDER)
    value = functionals.area_refined(f, 0.5, c, head="square")
    return RemarkReport(float(c), value, 1.0 + c / 4.0, value.lower > 1.0)


def theorem5_sign_change(a_grid: Sequence[float] = (0.64, 0.65, 0.66, 0.67)) -> list[tuple[float, float]]:
    """``(a, F(1/3) - 1)`` along ``(a - z)/(1 - a z)``."""
    return [(float(a), ex.distance_refined(a, 1.0 / 3.0, 2) - 1.0) for a in a_grid]


# default probe points inside the failure windows (1/5, (3-sqrt5)/2) and (1/3, (3-sqrt5)/2)
WINDOW_PROBES = {Theorem.THM6_G: (0.21, 0.99), Theorem.THM6_H: (0.35, 0.99)}


def window_witness(theorem, r: float, a: float) -> Witness:
    """G or H on ``(a - z)/(1 - a z)`` at ``z = r`` for ``a`` above the threshold ``a_r``.

    Raises :class:`NoWitnessFound` if the value does not exceed ``1 + 1e-12``.
    """
    th = Theorem.parse(theorem) if isinstance(theorem, str) else theorem
    a_r = threshold_a(th, r)
    if not a_r < a < 1.0:
        raise DomainError(f"need a_r = {a_r!r} < a < 1, got a = {a}")
    head = "modulus" if th == Theorem.THM6_G else "square"
    value = _enclose(ex.distance_refined(a, r, 1, head))
    w = Witness(a, r, value, 0.0, _phi(a).text(), solve(RadiusQuery(th)).radius)
    if not value.lower > 1.0 + STRICT:
        raise NoWitnessFound(f"{th.value}: no violation at r={r}, a={a}", [w.to_dict()])
    return w
