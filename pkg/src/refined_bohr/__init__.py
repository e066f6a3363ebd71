"""Verified numerics for refined Bohr-type inequalities on the Schur class.

Typical use::

    from refined_bohr import radius, schur, verify

    radius("thm1-r", N=1)                     # sqrt(5) - 2
    f = schur.moebius(0.5, "+")
    report = verify.run("thmb-modulus", trials=100, seed=42)
"""

from . import bounds, certify, extremal, functionals, radii, schur, series, sums, verify
from .certify import SharpnessCertificate, certify_sharpness, remark_thm4_counterexample, threshold_a
from .errors import (
    BohrError,
    DomainError,
    MultipleRoots,
    NoRootInUnitInterval,
    NoWitnessFound,
    ZeroLeadingCoefficient,
)
from .functionals import Circle, Worst
from .intervals import ValueInterval
from .radii import RadiusQuery, RadiusResult, Theorem, radius, solve
from .schur import SchurFunction
from .series import DEFAULT_ORDER, TaylorSeries
from .verify import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BohrError",
    "Circle",
    "DEFAULT_ORDER",
    "DomainError",
    "MultipleRoots",
    "NoRootInUnitInterval",
    "NoWitnessFound",
    "RadiusQuery",
    "RadiusResult",
    "SchurFunction",
    "SharpnessCertificate",
    "TaylorSeries",
    "Theorem",
    "ValueInterval",
    "VerificationReport",
    "Worst",
    "ZeroLeadingCoefficient",
    "bounds",
    "certify",
    "certify_sharpness",
    "extremal",
    "functionals",
    "radii",
    "radius",
    "remark_thm4_counterexample",
    "schur",
    "series",
    "solve",
    "sums",
    "threshold_a",
    "verify",
]
