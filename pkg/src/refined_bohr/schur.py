"""Members of the Schur class and how to build, sample and replay them.

Every :class:`SchurFunction` is produced by a construction that guarantees
``sup |f| <= 1`` on the disk (a disk automorphism, a finite Blaschke product,
the Schur recursion from parameters in the disk, or a convex combination of
those).  Membership is never inferred from boundary samples; the θ-grid checks
in the test-suite only corroborate it.

Recipes print to a compact text form, e.g.::

    blaschke(phase=1.5,zeros=[0.5+0j,-0.25+0.10000000000000001j])
    convex(weights=[0.25,0.75],parts=[moebius(a=0.5,sign=-),schur(params=[0.1+0j])])

with floats written to 17 significant digits, so ``build(parse_recipe(text))``
reproduces the coefficients bit for bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from . import series as ser
from .errors import DomainError
from .series import DEFAULT_ORDER, TaylorSeries

PROFILES = ("blaschke", "schur-params", "convex-combo")
SAMPLER_RADIUS = 0.95
MAX_BLASCHKE_DEGREE = 32


def _fmt_real(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}j"


@dataclass(frozen=True)
class Moebius:
    a: float
    sign: str = "-"

    def text(self) -> str:
        return f"moebius(a={_fmt_real(self.a)},sign={self.sign})"


@dataclass(frozen=True)
class SymmetricExtremal:
    a: float
    p: int
    m: int
    sign: str = "-"

    def text(self) -> str:
        return f"symmetric(a={_fmt_real(self.a)},p={self.p},m={self.m},sign={self.sign})"


@dataclass(frozen=True)
class Blaschke:
    zeros: tuple
    phase: float = 0.0

    def text(self) -> str:
        zs = ",".join(_fmt_complex(z) for z in self.zeros)
        return f"blaschke(phase={_fmt_real(self.phase)},zeros=[{zs}])"


@dataclass(frozen=True)
class SchurParams:
    params: tuple

    def text(self) -> str:
        return "schur(params=[" + ",".join(_fmt_complex(g) for g in self.params) + "])"


@dataclass(frozen=True)
class ConvexCombo:
    weights: tuple
    parts: tuple

    def text(self) -> str:
        ws = ",".join(_fmt_real(w) for w in self.weights)
        ps = ",".join(p.text() for p in self.parts)
        return f"convex(weights=[{ws}],parts=[{ps}])"


Recipe = Union[Moebius, SymmetricExtremal, Blaschke, SchurParams, ConvexCombo]


@dataclass(frozen=True, eq=False)
class SchurFunction:
    """A truncated Taylor series of a certified Schur-class function.

    ``a0`` is the constant coefficient, kept separately because every radius
    formula depends on ``|a0|``.
    """

    series: TaylorSeries
    recipe: Recipe
    a0: complex

    def __post_init__(self):
        if self.series.coeffs[0] != self.a0:
            raise ValueError("a0 must equal the constant coefficient of the series")
        if abs(self.a0) >= 1.0:
            raise DomainError("unimodular constants are excluded from the Schur class here")

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def coeffs(self) -> np.ndarray:
        return self.series.coeffs

    @property
    def abs_a0(self) -> float:
        return abs(self.a0)

    def text(self) -> str:
        return self.recipe.text()

    def __repr__(self):
        return f"SchurFunction({self.text()}, order={self.order})"


def _wrap(s: TaylorSeries, recipe: Recipe) -> SchurFunction:
    return SchurFunction(series=s, recipe=recipe, a0=complex(s.coeffs[0]))


def _check_sign(sign: str) -> str:
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")
    return sign


def _moebius_coeffs(a: float, sign: str, order: int) -> np.ndarray:
    c = np.empty(order + 1, dtype=np.complex128)
    c[0] = a
    if order >= 1:
        n = np.arange(order)
        ratio = -a if sign == "+" else a
        lead = (1.0 - a * a) if sign == "+" else -(1.0 - a * a)
        c[1:] = lead * ratio**n
    return c


def moebius(a: float, sign: str = "-", order: int = DEFAULT_ORDER) -> SchurFunction:
    """Disk automorphism with real ``a`` in [0, 1).

    ``sign='+'`` gives ``(a + z)/(1 + a z)``, coefficients ``a, (1-a^2)(-a)^(n-1)``;
    ``sign='-'`` gives ``(a - z)/(1 - a z)``, coefficients ``a, -(1-a^2) a^(n-1)``.
    """
    _check_sign(sign)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"moebius parameter must lie in [0, 1), got {a}")
    return _wrap(TaylorSeries(_moebius_coeffs(float(a), sign, order)), Moebius(float(a), sign))


def symmetric_extremal(a: float, p: int, m: int, sign: str = "-", order: int = DEFAULT_ORDER) -> SchurFunction:
    """``z^m * h(z^p)`` where ``h`` is :func:`moebius` ``(a, sign)``.

    With ``sign='-'`` this is ``z^m (a - z^p)/(1 - a z^p)``; the coefficient at
    ``p n + m`` is ``-(1-a^2) a^(n-1)`` for ``n >= 1`` and zero off the progression.
    """
    _check_sign(sign)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"parameter a must lie in [0, 1), got {a}")
    if p < 1 or not 0 <= m <= p:
        raise DomainError(f"need p >= 1 and 0 <= m <= p, got p={p}, m={m}")
    n_max = (order - m) // p if m <= order else -1
    out = np.zeros(order + 1, dtype=np.complex128)
    if n_max >= 0:
        out[m : m + p * n_max + 1 : p] = _moebius_coeffs(float(a), sign, n_max)
    return _wrap(TaylorSeries(out), SymmetricExtremal(float(a), int(p), int(m), sign))


def _blaschke_factor(alpha: complex, order: int) -> TaylorSeries:
    # (alpha - z)/(1 - conj(alpha) z) = alpha - (1-|alpha|^2) sum conj(alpha)^(n-1) z^n
    c = np.empty(order + 1, dtype=np.complex128)
    c[0] = alpha
    if order >= 1:
        c[1:] = -(1.0 - abs(alpha) ** 2) * np.conj(alpha) ** np.arange(order)
    return TaylorSeries(c)


def blaschke(zeros: Sequence[complex], phase: float = 0.0, order: int = DEFAULT_ORDER) -> SchurFunction:
    """Finite Blaschke product ``e^{i phase} prod (alpha_k - z)/(1 - conj(alpha_k) z)``."""
    zeros = tuple(complex(z) for z in zeros)
    if not zeros:
        raise DomainError("an empty Blaschke product is a unimodular constant")
    if len(zeros) > MAX_BLASCHKE_DEGREE:
        raise DomainError(f"Blaschke degree capped at {MAX_BLASCHKE_DEGREE}")
    if any(abs(z) >= 1.0 for z in zeros):
        raise DomainError("Blaschke zeros must lie strictly inside the unit disk")
    s = ser.constant(np.exp(1j * phase), order)
    for alpha in zeros:
        s = ser.mul(s, _blaschke_factor(alpha, order))
    return _wrap(s, Blaschke(zeros, float(phase)))


def from_schur_params(params: Sequence[complex], order: int = DEFAULT_ORDER) -> SchurFunction:
    """Run the Schur recursion backwards from ``f_d = gamma_d``.

    ``f_j = (gamma_j + z f_{j+1}) / (1 + conj(gamma_j) z f_{j+1})``; every
    ``|gamma_j| < 1`` keeps each ``f_j`` in the Schur class.
    """
    params = tuple(complex(g) for g in params)
    if not params:
        raise DomainError("need at least one Schur parameter")
    if any(abs(g) >= 1.0 for g in params):
        raise DomainError("Schur parameters must lie strictly inside the unit disk")
    f = ser.constant(params[-1], order)
    for g in reversed(params[:-1]):
        zf = ser.shift(f, 1)
        num = ser.add(ser.constant(g, order), zf)
        den = ser.add(ser.one(order), ser.scale(zf, np.conj(g)))
        f = ser.divide(num, den)
    return _wrap(f, SchurParams(params))


def convex_combo(weights: Sequence[float], parts: Sequence[SchurFunction]) -> SchurFunction:
    """``sum w_i f_i`` with ``w_i >= 0``, ``sum w_i = 1``; stays in the class by the triangle inequality."""
    w = np.asarray(weights, dtype=float)
    if len(parts) == 0 or w.size != len(parts):
        raise DomainError("need one weight per part and at least one part")
    if np.any(w < 0) or abs(w.sum() - 1.0) > 1e-12:
        raise DomainError("weights must be nonnegative and sum to 1")
    order = min(p.order for p in parts)
    coeffs = sum(wi * p.series.coeffs[: order + 1] for wi, p in zip(w, parts))
    recipe = ConvexCombo(tuple(float(x) for x in w), tuple(p.recipe for p in parts))
    return _wrap(TaylorSeries(coeffs), recipe)


def identity(order: int = DEFAULT_ORDER) -> SchurFunction:
    """``f(z) = z``."""
    return moebius(0.0, "+", order)


def constant(c: complex, order: int = DEFAULT_ORDER) -> SchurFunction:
    """A constant ``|c| < 1``, realised as a depth-0 Schur recursion."""
    return from_schur_params([c], order)


def build(recipe: Recipe, order: int = DEFAULT_ORDER) -> SchurFunction:
    """Rebuild a function from its recipe."""
    if isinstance(recipe, Moebius):
        return moebius(recipe.a, recipe.sign, order)
    if isinstance(recipe, SymmetricExtremal):
        return symmetric_extremal(recipe.a, recipe.p, recipe.m, recipe.sign, order)
    if isinstance(recipe, Blaschke):
        return blaschke(recipe.zeros, recipe.phase, order)
    if isinstance(recipe, SchurParams):
        return from_schur_params(recipe.params, order)
    if isinstance(recipe, ConvexCombo):
        return convex_combo(recipe.weights, [build(p, order) for p in recipe.parts])
    raise TypeError(f"unknown recipe {recipe!r}")


def exact_values(recipe: Recipe, z) -> np.ndarray:
    """Evaluate a recipe in closed form (no series), for cross-checking truncations."""
    z = np.asarray(z, dtype=np.complex128)
    if isinstance(recipe, Moebius):
        a = recipe.a
        return (a + z) / (1 + a * z) if recipe.sign == "+" else (a - z) / (1 - a * z)
    if isinstance(recipe, SymmetricExtremal):
        w = z**recipe.p
        return z**recipe.m * exact_values(Moebius(recipe.a, recipe.sign), w)
    if isinstance(recipe, Blaschke):
        out = np.exp(1j * recipe.phase) * np.ones_like(z)
        for alpha in recipe.zeros:
            out = out * (alpha - z) / (1 - np.conj(alpha) * z)
        return out
    if isinstance(recipe, SchurParams):
        f = recipe.params[-1] * np.ones_like(z)
        for g in reversed(recipe.params[:-1]):
            f = (g + z * f) / (1 + np.conj(g) * z * f)
        return f
    if isinstance(recipe, ConvexCombo):
        return sum(w * exact_values(p, z) for w, p in zip(recipe.weights, recipe.parts))
    raise TypeError(f"unknown recipe {recipe!r}")


# --- sampling ---------------------------------------------------------------


def trial_rng(seed: int, index: int = 0, *extra: int) -> np.random.Generator:
    """Counter-based generator keyed by ``(seed, index, *extra)``.

    Philox streams for distinct keys are independent, so trials can run in any
    order or in parallel and still reproduce.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(index), *map(int, extra)])))


def _disk_point(rng: np.random.Generator, radius: float) -> complex:
    rho = radius * np.sqrt(rng.random())
    return complex(rho * np.exp(2j * np.pi * rng.random()))


def sample_recipe(rng: np.random.Generator, profile: str) -> Recipe:
    """Draw a recipe (not yet expanded to a series) from ``rng``."""
    if profile == "blaschke":
        degree = int(rng.integers(1, 9))
        zeros = tuple(_disk_point(rng, SAMPLER_RADIUS) for _ in range(degree))
        return Blaschke(zeros, float(2 * np.pi * rng.random()))
    if profile == "schur-params":
        depth = int(rng.integers(1, 11))
        return SchurParams(tuple(_disk_point(rng, SAMPLER_RADIUS) for _ in range(depth + 1)))
    if profile == "convex-combo":
        k = int(rng.integers(2, 5))
        weights = rng.dirichlet(np.ones(k))
        weights[-1] = 1.0 - weights[:-1].sum()
        parts = tuple(sample_recipe(rng, PROFILES[int(rng.integers(0, 2))]) for _ in range(k))
        return ConvexCombo(tuple(float(w) for w in weights), parts)
    raise ValueError(f"unknown profile {profile!r}; choose from {PROFILES}")


@lru_cache(maxsize=4096)
def sample(seed: int, profile: str = "blaschke", order: int = DEFAULT_ORDER, index: int = 0) -> SchurFunction:
    """Draw a Schur function deterministically from ``(seed, index)``.

    * ``blaschke``: degree uniform on 1..8, zeros uniform on the disk of radius 0.95,
      phase uniform.
    * ``schur-params``: depth uniform on 1..10 (depth+1 parameters), parameters
      uniform on the disk of radius 0.95.
    * ``convex-combo``: 2 to 4 parts from the two profiles above with
      Dirichlet(1, ..., 1) weights.
    """
    rng = trial_rng(seed, index)
    return build(sample_recipe(rng, profile), order)


def grid_modulus(f: SchurFunction, radius: float = 0.99, n_theta: int = 128) -> tuple[float, float]:
    """``(max |truncated f|, tail)`` over the θ-grid on ``|z| = radius``."""
    ev = ser.evaluate_circle(f.series, radius, n_theta)
    return float(np.max(np.abs(ev.value))), ev.tail


# --- recipe text parsing ------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<punct>[()\[\],=])|(?P<atom>[^()\[\],=\s]+))")


def _tokens(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse recipe near {text[pos:pos + 20]!r}")
        out.append(m.group("punct") or m.group("atom"))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"recipe parse error: expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def value(self):
        if self.peek() == "[":
            self.take("[")
            items = []
            while self.peek() != "]":
                items.append(self.value())
                if self.peek() == ",":
                    self.take(",")
            self.take("]")
            return items
        atom = self.take()
        if self.peek() == "(":
            return self.call(atom)
        return atom

    def call(self, tag):
        self.take("(")
        kwargs = {}
        while self.peek() != ")":
            key = self.take()
            self.take("=")
            kwargs[key] = self.value()
            if self.peek() == ",":
                self.take(",")
        self.take(")")
        return _make_recipe(tag, kwargs)


def _make_recipe(tag: str, kw: dict) -> Recipe:
    try:
        if tag == "moebius":
            return Moebius(float(kw["a"]), kw.get("sign", "-"))
        if tag == "symmetric":
            return SymmetricExtremal(float(kw["a"]), int(kw["p"]), int(kw["m"]), kw.get("sign", "-"))
        if tag == "blaschke":
            return Blaschke(tuple(complex(z) for z in kw["zeros"]), float(kw.get("phase", 0.0)))
        if tag == "schur":
            return SchurParams(tuple(complex(g) for g in kw["params"]))
        if tag == "convex":
            return ConvexCombo(tuple(float(w) for w in kw["weights"]), tuple(kw["parts"]))
    except KeyError as exc:
        raise ValueError(f"recipe {tag!r} is missing field {exc}") from None
    raise ValueError(f"unknown recipe tag {tag!r}")


def parse_recipe(text: str) -> Recipe:
    """Inverse of ``recipe.text()``."""
    p = _Parser(text)
    out = p.value()
    if p.peek() is not None:
        raise ValueError(f"trailing input in recipe: {p.toks[p.i:]}")
    if isinstance(out, (str, list)):
        raise ValueError(f"not a recipe: {text!r}")
    return out


def replay(text: str, order: int = DEFAULT_ORDER) -> SchurFunction:
    return build(parse_recipe(text), order)
