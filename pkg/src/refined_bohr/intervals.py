"""Two-sided enclosures for functional values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ValueInterval:
    """``[lower, upper]`` enclosing a real quantity.

    ``lower`` is the truncated sum (all terms are nonnegative), ``upper`` adds
    the analytic truncation tail.  ``at`` optionally records the point ``z``
    where a point-evaluated term attained its largest upper bound.
    """

    lower: float
    upper: float
    at: Optional[complex] = None

    def __post_init__(self):
        object.__setattr__(self, "lower", float(self.lower))
        object.__setattr__(self, "upper", float(self.upper))
        if self.at is not None:
            object.__setattr__(self, "at", complex(self.at))
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    @classmethod
    def exact(cls, value: float) -> "ValueInterval":
        return cls(float(value), float(value))

    @classmethod
    def with_tail(cls, value: float, tail: float) -> "ValueInterval":
        return cls(float(value), float(value) + float(tail))

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def mid(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def __add__(self, other):
        if isinstance(other, ValueInterval):
            at = self.at if self.at is not None else other.at
            return ValueInterval(self.lower + other.lower, self.upper + other.upper, at)
        return ValueInterval(self.lower + other, self.upper + other, self.at)

    __radd__ = __add__

    def __mul__(self, c):
        c = float(c)
        if c < 0:
            raise ValueError("only nonnegative scalings keep the enclosure ordered")
        return ValueInterval(self.lower * c, self.upper * c, self.at)

    __rmul__ = __mul__

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= x <= self.upper + slack

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper}
