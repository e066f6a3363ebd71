"""Seeded Monte Carlo campaigns over sampled Schur functions.

Each trial ``i`` is keyed by ``(seed, i)``: the sampler profile rotates
through :data:`~refined_bohr.schur.PROFILES` by ``i mod 3``, ``r`` is drawn
uniformly on ``[0, radius]`` (or pinned to the radius in edge mode) from an
independent stream, and point-evaluated terms use the 128-point θ-grid.
Symmetric variants sample the base function ``g`` of ``z^m g(z^p)``.

Reports are pure data; a failing inequality is recorded, never raised.
"""

from __future__ import annotations

import json
import math
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import bounds, functionals as fn, schur
from .functionals import Circle, Worst
from .intervals import ValueInterval
from .radii import A0_DEPENDENT, THM5_A0_THRESHOLD, RadiusQuery, Theorem, solve
from .schur import PROFILES, SchurFunction
from .series import DEFAULT_ORDER

SLACK = bounds.SLACK
N_THETA = fn.N_THETA
LEMMA_R_GRID = tuple(round(0.05 * k, 2) for k in range(1, 10))
LEMMA_N_GRID = tuple(range(1, 7))
LEMMA3_N_GRID = (0, 1, 2, 3)
THM5_MAX_TRIES = 256
# stream tags for trial_rng(seed, index, tag, ...)
_R_STREAM = 1
_FILTER_STREAM = 2


def default_order() -> int:
    """``K`` from ``BOHR_DEFAULT_ORDER`` if set, else 256."""
    raw = os.environ.get("BOHR_DEFAULT_ORDER")
    if raw is None or not raw.strip():
        return DEFAULT_ORDER
    order = int(raw)
    if order < 1:
        raise ValueError(f"BOHR_DEFAULT_ORDER must be a positive integer, got {raw!r}")
    return order


# --- functional per variant ----------------------------------------------------------

SYMMETRIC = {Theorem.THM_D, Theorem.THM3, Theorem.COR1A, Theorem.COR1B, Theorem.COR2A, Theorem.COR2B}


def _area_classic(f, r, lam, head):
    return fn.area_refined(f, r, lam, head=head, refined=False)


def evaluate(q: RadiusQuery, f: SchurFunction, z) -> ValueInterval:
    """Left-hand side of variant ``q`` for ``f`` at ``z``.

    ``z`` may be a radius (float, treated as the θ-grid), a :class:`Circle`
    or a :class:`Worst`.  Coefficient-only functionals use ``radius_of(z)``.
    For symmetric variants ``f`` is the base function ``g``.
    """
    if isinstance(z, (int, float)):
        z = Circle(float(z))
    r = fn.radius_of(z)
    th = q.theorem
    N = q.N or 1
    if th == Theorem.THM_A:
        return fn.bohr_sum(f, r)
    if th == Theorem.THM_B:
        return fn.refined_bohr(f, r, "modulus")
    if th == Theorem.THM_B_SQ:
        return fn.refined_bohr(f, r, "square")
    if th in (Theorem.THM_C_R, Theorem.THM_C_RSQ):
        return fn.rogosinski(f, z, N, 2 if th == Theorem.THM_C_RSQ else 1, refined=False)
    if th in (Theorem.THM1_R, Theorem.THM1_RSQ):
        return fn.rogosinski(f, z, N, 2 if th == Theorem.THM1_RSQ else 1)
    if th in (Theorem.THM2, Theorem.THM2_SQ):
        return fn.rogosinski(f, z, 1, 2 if th == Theorem.THM2_SQ else 1)
    if th == Theorem.THM_D:
        return fn.symmetric_bohr_sum(f, q.p, q.m, r)
    if th == Theorem.THM3:
        return fn.symmetric_refined(f, q.p, q.m, r)
    if th == Theorem.COR1A:
        return fn.symmetric_refined(f, q.p, 0, r)
    if th == Theorem.COR1B:
        return fn.symmetric_refined(f, q.p, 0, r, head="square")
    if th == Theorem.COR2A:
        return fn.cor2_functional(f, q.p, r, inner_start=2)
    if th == Theorem.COR2B:
        return fn.cor2_functional(f, q.p, r, inner_start=1)
    if th == Theorem.THM_E_FIRST:
        return _area_classic(f, r, 16.0 / 9.0, "modulus")
    if th == Theorem.THM_E_SECOND:
        return _area_classic(f, r, 9.0 / 8.0, "square")
    if th == Theorem.THM4_FIRST:
        return fn.area_refined(f, r, 8.0 / 9.0, "modulus")
    if th == Theorem.THM4_SECOND:
        return fn.area_refined(f, r, 9.0 / 8.0, "square")
    if th == Theorem.THM5:
        return fn.distance_refined(f, z, 2, "modulus")
    if th == Theorem.THM6_G:
        return fn.distance_refined(f, z, 1, "modulus")
    if th == Theorem.THM6_H:
        return fn.distance_refined(f, z, 1, "square")
    if th == Theorem.THM_F:
        return fn.derivative_refined(f, z, 1)
    if th == Theorem.THM7_J:
        return fn.derivative_refined(f, z, 2)
    raise ValueError(f"no functional for {th.value}")


def query_for(q: RadiusQuery, f: SchurFunction) -> RadiusQuery:
    """``q`` with the head modulus of ``f`` filled in where the radius depends on it."""
    if q.theorem in A0_DEPENDENT:
        return q.with_a0(min(f.abs_a0, math.nextafter(1.0, 0.0)))
    return q


# --- reports ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    recipe: str
    z: complex
    r: float
    value: ValueInterval
    check: str = ""

    def to_dict(self) -> dict:
        return {
            "recipe": self.recipe,
            "z_re": float(self.z.real),
            "z_im": float(self.z.imag),
            "r": float(self.r),
            "value_lower": float(self.value.lower),
            "value_upper": float(self.value.upper),
        }


@dataclass
class VerificationReport:
    theorem: object  # RadiusQuery, or the string "lemmas"
    trials: int
    seed: int
    order: int
    worst_margin: float
    failures: list
    elapsed_ms: int = 0
    extra: dict = field(default_factory=dict)
    max_width: float = 0.0
    majorant_certified: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def theorem_id(self) -> str:
        return self.theorem if isinstance(self.theorem, str) else self.theorem.theorem.value

    def params(self) -> dict:
        base = {} if isinstance(self.theorem, str) else self.theorem.params()
        return {**base, **self.extra}

    def to_dict(self, timing: bool = False) -> dict:
        """Schema-ordered dict; ``elapsed_ms`` is 0 unless ``timing`` so output stays reproducible."""
        return {
            "theorem": self.theorem_id,
            "params": self.params(),
            "trials": int(self.trials),
            "seed": int(self.seed),
            "order": int(self.order),
            "worst_margin": float(self.worst_margin),
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": int(self.elapsed_ms) if timing else 0,
        }

    def to_json(self, timing: bool = False, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(timing), indent=indent, allow_nan=False)


class _Tally:
    def __init__(self):
        self.worst = math.inf
        self.failures = []
        self.max_width = 0.0

    def add(self, margin: float, failure: Callable[[], Failure]):
        if margin < self.worst:
            self.worst = margin
        if margin < -SLACK:
            self.failures.append(failure())


# --- sampling -------------------------------------------------------------------------------


def profile_for(index: int) -> str:
    return PROFILES[index % len(PROFILES)]


def draw(q: RadiusQuery, seed: int, index: int, order: int) -> SchurFunction:
    """Trial function; ``thm5`` trials are redrawn until ``|a0| <= 4 sqrt 2 - 5``."""
    profile = profile_for(index)
    if q.theorem != Theorem.THM5:
        return schur.sample(seed, profile, order, index)
    f = schur.sample(seed, profile, order, index)
    tries = 0
    while f.abs_a0 > THM5_A0_THRESHOLD:
        if tries >= THM5_MAX_TRIES:
            raise RuntimeError(f"no sample with |a0| <= {THM5_A0_THRESHOLD} after {tries} draws")
        rng = schur.trial_rng(seed, index, _FILTER_STREAM, tries)
        f = schur.build(schur.sample_recipe(rng, profile), order)
        tries += 1
    return f


def draw_radius(seed: int, index: int, radius: float, edge: bool) -> float:
    if edge:
        return radius
    return float(radius * schur.trial_rng(seed, index, _R_STREAM).random())


# --- campaigns --------------------------------------------------------------------------------


def _as_query(q) -> RadiusQuery:
    if isinstance(q, RadiusQuery):
        return q
    return RadiusQuery(Theorem.parse(str(q)))


def run(
    q,
    trials: int,
    seed: int,
    order: Optional[int] = None,
    edge: bool = False,
    functions: Optional[Sequence[SchurFunction]] = None,
    n_theta: int = N_THETA,
    r: Optional[float] = None,
) -> VerificationReport:
    """Verify ``q`` on ``trials`` sampled functions.

    ``functions`` replaces the sampler (trial ``i`` uses ``functions[i % len]``,
    with no ``thm5`` filtering) and ``r`` pins the radius of every trial.
    """
    q = _as_query(q)
    q.check(require_a0=False)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if functions is not None and not functions:
        raise ValueError("functions must be nonempty when given")
    order = order or default_order()
    start = time.perf_counter()
    fixed = None if q.theorem in A0_DEPENDENT else solve(q).radius
    tally = _Tally()
    majorant = 0
    for i in range(trials):
        f = functions[i % len(functions)] if functions is not None else draw(q, seed, i, order)
        radius = fixed if fixed is not None else solve(query_for(q, f)).radius
        ri = float(r) if r is not None else draw_radius(seed, i, radius, edge)
        value = evaluate(q, f, Circle(ri, n_theta))
        tally.max_width = max(tally.max_width, value.width)
        if evaluate(q, f, Worst(ri)).upper <= 1.0 + SLACK:
            majorant += 1
        at = value.at if value.at is not None else complex(ri)
        tally.add(1.0 - value.upper, lambda: Failure(f.text(), at, ri, value))
    extra = {"edge": bool(edge), "n_theta": int(n_theta), "slack": SLACK}
    if q.theorem in SYMMETRIC:
        extra["sampled"] = "base g of z^m g(z^p)"
    if q.theorem == Theorem.THM5 and functions is None:
        extra["a0_filter"] = f"|a0| <= {THM5_A0_THRESHOLD!r}"
    if functions is not None:
        extra["functions"] = len(functions)
    if r is not None:
        extra["r"] = float(r)
    return VerificationReport(
        q, trials, int(seed), order, tally.worst, tally.failures,
        int(round(1000 * (time.perf_counter() - start))), extra, tally.max_width, majorant,
    )


def _lemma_reports(f: SchurFunction, n_theta: int):
    for r in LEMMA_R_GRID:
        yield r, bounds.lemma1_check(f, r)
        yield r, bounds.lemma2_check(f, r)
        for N in LEMMA_N_GRID:
            yield r, bounds.lemma4_sides(f, r, N)
        yield from ((r, rep) for rep in bounds.schwarz_pick_check(f, r, n_theta))
    for n in LEMMA3_N_GRID:
        part_a, part_b = bounds.lemma3_check(f, n)
        yield 0.0, part_a
        if part_b is not None:
            yield 0.0, part_b


def run_lemmas(
    trials: int,
    seed: int,
    order: Optional[int] = None,
    functions: Optional[Sequence[SchurFunction]] = None,
    n_theta: int = N_THETA,
) -> VerificationReport:
    """``lemma1``-``lemma4`` and Schwarz-Pick oracles on every sample and grid point; margin is ``rhs - lhs``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    order = order or default_order()
    start = time.perf_counter()
    tally = _Tally()
    for i in range(trials):
        f = functions[i % len(functions)] if functions else schur.sample(seed, profile_for(i), order, i)
        for r, rep in _lemma_reports(f, n_theta):
            at = rep.lhs.at if rep.lhs.at is not None else complex(r)
            tally.add(rep.margin, lambda: Failure(f.text(), at, r, rep.lhs, rep.label))
    extra = {
        "r_grid": list(LEMMA_R_GRID),
        "N_grid": list(LEMMA_N_GRID),
        "lemma3_n_grid": list(LEMMA3_N_GRID),
        "n_theta": int(n_theta),
        "slack": SLACK,
    }
    return VerificationReport(
        "lemmas", trials, int(seed), order, tally.worst, tally.failures,
        int(round(1000 * (time.perf_counter() - start))), extra,
    )


def default_campaign() -> list[RadiusQuery]:
    """One or more parameter choices for every variant."""
    T = Theorem
    out = [RadiusQuery(T.THM_A), RadiusQuery(T.THM_B), RadiusQuery(T.THM_B_SQ)]
    for th in (T.THM_C_R, T.THM_C_RSQ, T.THM1_R, T.THM1_RSQ):
        out += [RadiusQuery(th, N=N) for N in (1, 2, 3, 6)]
    out += [RadiusQuery(T.THM2), RadiusQuery(T.THM2_SQ)]
    out += [RadiusQuery(T.THM_D, p=p, m=m) for p, m in ((1, 0), (2, 1), (3, 3))]
    out += [RadiusQuery(T.THM3, p=p, m=m) for p, m in ((1, 0), (1, 1), (2, 1), (3, 2), (4, 0))]
    for th in (T.COR1A, T.COR1B, T.COR2A, T.COR2B):
        out += [RadiusQuery(th, p=p) for p in (1, 2)]
    out += [RadiusQuery(th) for th in (
        T.THM_E_FIRST, T.THM_E_SECOND, T.THM4_FIRST, T.THM4_SECOND,
        T.THM5, T.THM6_G, T.THM6_H, T.THM_F, T.THM7_J,
    )]
    return out


def run_campaign(
    trials: int,
    seed: int,
    order: Optional[int] = None,
    edge: bool = False,
    queries: Optional[Sequence[RadiusQuery]] = None,
) -> list[VerificationReport]:
    return [run(q, trials, seed, order, edge) for q in (queries or default_campaign())]
