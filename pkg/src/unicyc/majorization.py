"""Majorization order, Schur-style sums and products of degree functions.

A sequence x majorizes y (both non-increasing, equal totals) when every
prefix sum of x is at least the matching prefix sum of y. For a convex
term function f, the map x -> sum f(x_i) respects that order; for log
convex f so does x -> prod f(x_i). All sharp bounds in this package are
instances of these two facts applied to degree sequences.

Values are exact (int or Fraction) whenever the term function allows it
and float64 otherwise; `value_mode` reports which.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Value",
    "value_mode",
    "values_close",
    "leq_with_tol",
    "pow_value",
    "FunctionSpec",
    "power",
    "exdeg",
    "IDENTITY",
    "SELF_POWER",
    "convexity_class",
    "log_convexity_class",
    "majorizes",
    "schur_value",
    "SequenceClass",
    "in_class",
    "OrderingReport",
    "verify_schur_monotonicity",
    "DEFAULT_TOLERANCE",
]

Value = Union[int, Fraction, float]

DEFAULT_TOLERANCE = 1e-9

EXDEG_FLOOR1_LIMIT = math.exp(-2)  # t*a**t convex on [1, inf) for a <= e^-2 or a > 1
EXDEG_FLOOR2_LIMIT = math.exp(-1)  # and on [2, inf) for a <= e^-1 or a > 1


def value_mode(v: Value) -> str:
    """'integer', 'rational' or 'float'."""
    if isinstance(v, bool):
        raise TypeError("not a numeric value")
    if isinstance(v, int):
        return "integer"
    if isinstance(v, Fraction):
        return "rational"
    if isinstance(v, float):
        return "float"
    raise TypeError(f"not an index value: {v!r}")


def _is_exact(v: Value) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def values_close(value: Value, reference: Value, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Equality test: exact when both sides are exact, else relative."""
    if _is_exact(value) and _is_exact(reference):
        return value == reference
    return abs(float(value) - float(reference)) <= tol * max(1.0, abs(float(reference)))


def leq_with_tol(value: Value, reference: Value, tol: float = DEFAULT_TOLERANCE) -> bool:
    """value <= reference, with relative slack in float mode."""
    if _is_exact(value) and _is_exact(reference):
        return value <= reference
    return float(value) <= float(reference) + tol * max(1.0, abs(float(reference)))


def pow_value(base: int, exponent) -> Value:
    """base**exponent, exact for integer exponents (Fraction when negative)."""
    if isinstance(exponent, float) and exponent.is_integer():
        exponent = int(exponent)
    if isinstance(exponent, int):
        if exponent >= 0:
            return base**exponent
        return Fraction(1, base ** (-exponent))
    return float(base) ** exponent


# ---------------------------------------------------------------------------
# term functions

_FAMILIES = ("power", "exdeg", "identity", "self_power")


@dataclass(frozen=True)
class FunctionSpec:
    """A term function f applied to every degree.

    Families:
      power(alpha):  f(t) = t**alpha
      exdeg(a):      f(t) = t * a**t, with a > 0, a != 1
      identity:      f(t) = t
      self_power:    f(t) = t**t as a factor, t*log(t) as a summand

    domain_floor is the smallest degree this function will ever be
    applied to; schur_value rejects entries below it.
    """

    family: str
    param: float | int | None = None
    domain_floor: int = 1

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown function family {self.family!r}")
        if self.family == "power":
            if self.param is None:
                raise ValueError("power needs an exponent")
            p = self.param
            if isinstance(p, float) and p.is_integer():
                object.__setattr__(self, "param", int(p))
        elif self.family == "exdeg":
            if self.param is None or self.param <= 0 or self.param == 1:
                raise ValueError("exdeg needs a base a > 0, a != 1")
        elif self.param is not None:
            raise ValueError(f"{self.family} takes no parameter")
        if self.domain_floor < 1:
            raise ValueError("domain_floor must be >= 1")

    def term(self, t: int, mode: str = "additive") -> Value:
        """f(t); for self_power the additive reading is t*log(t)."""
        if t < self.domain_floor:
            raise ValueError(f"entry {t} below domain floor {self.domain_floor}")
        if self.family == "power":
            return pow_value(t, self.param)
        if self.family == "exdeg":
            return t * float(self.param) ** t
        if self.family == "identity":
            return t
        if mode == "additive":
            return t * math.log(t)
        return t**t

    @property
    def label(self) -> str:
        if self.family == "power":
            return f"power({_fmt_param(self.param)})"
        if self.family == "exdeg":
            return f"exdeg({_fmt_param(self.param)})"
        return self.family


def _fmt_param(p) -> str:
    return f"{p:.12g}" if isinstance(p, float) else str(p)


def power(alpha) -> FunctionSpec:
    return FunctionSpec("power", alpha)


def exdeg(a, domain_floor: int = 1) -> FunctionSpec:
    return FunctionSpec("exdeg", a, domain_floor)


IDENTITY = FunctionSpec("identity")
SELF_POWER = FunctionSpec("self_power")

STRICTLY_CONVEX = "strictly_convex"
STRICTLY_CONCAVE = "strictly_concave"
NEITHER = "neither"


def convexity_class(f: FunctionSpec, floor: int | None = None) -> str:
    """Strict convexity of the additive term function on [floor, inf).

    Returns 'neither' wherever strictness is not established; callers
    must not apply convexity-based bounds in that case.
    """
    floor = f.domain_floor if floor is None else floor
    if floor < 1:
        raise ValueError("floor must be >= 1")
    if f.family == "power":
        a = f.param
        if a < 0 or a > 1:
            return STRICTLY_CONVEX
        if 0 < a < 1:
            return STRICTLY_CONCAVE
        return NEITHER  # constant or linear
    if f.family == "exdeg":
        a = f.param
        # (t*a**t)'' = a**t * ln(a) * (2 + t*ln(a)): positive everywhere
        # for a > 1, and for a < 1 once t >= 2/|ln a|
        if a > 1 or a <= math.exp(-2.0 / floor):
            return STRICTLY_CONVEX
        return NEITHER
    if f.family == "identity":
        return NEITHER
    return STRICTLY_CONVEX  # t*log(t)


def log_convexity_class(f: FunctionSpec, floor: int | None = None) -> str:
    """Strict convexity of log(f), governing the multiplicative map."""
    floor = f.domain_floor if floor is None else floor
    if floor < 1:
        raise ValueError("floor must be >= 1")
    if f.family == "power":
        a = f.param
        if a < 0:
            return STRICTLY_CONVEX  # alpha*log(t) with alpha < 0
        if a > 0:
            return STRICTLY_CONCAVE
        return NEITHER
    if f.family == "exdeg":
        return STRICTLY_CONCAVE  # log(t) + t*log(a)
    if f.family == "identity":
        return STRICTLY_CONCAVE  # log(t)
    return STRICTLY_CONVEX  # t*log(t)


# ---------------------------------------------------------------------------
# majorization


def _check_nonincreasing(x, name: str):
    for i in range(len(x) - 1):
        if x[i] < x[i + 1]:
            raise ValueError(f"{name} is not non-increasing at position {i}")


def majorizes(x: Iterable[int], y: Iterable[int]) -> bool:
    """True when x majorizes y: equal totals, prefix sums of x dominate."""
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    _check_nonincreasing(x, "x")
    _check_nonincreasing(y, "y")
    sx = sy = 0
    for a, b in zip(x, y):
        sx += a
        sy += b
        if sx < sy:
            return False
    return sx == sy


def schur_value(f: FunctionSpec, x: Iterable[int], mode: str = "additive") -> Value:
    """sum of f over x ('additive') or product of f over x ('multiplicative')."""
    if mode not in ("additive", "multiplicative"):
        raise ValueError(f"unknown mode {mode!r}")
    x = tuple(x)
    if mode == "additive":
        out: Value = 0
        for t in x:
            out = out + f.term(t, mode)
    else:
        out = 1
        for t in x:
            out = out * f.term(t, mode)
    return out


@dataclass(frozen=True)
class SequenceClass:
    """Non-increasing positive integer n-tuples with total 2n.

    Optional constraints: max_degree fixes the leading entry, pendants
    fixes the number of trailing 1-entries. These are the candidate
    degree sequences of unicyclic graphs with those statistics.
    """

    n: int
    max_degree: int | None = None
    pendants: int | None = None

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need n >= 3")
        if self.max_degree is not None and not 2 <= self.max_degree <= self.n - 1:
            raise ValueError(f"max_degree must be in 2..{self.n - 1}")
        if self.pendants is not None and not 0 <= self.pendants <= self.n - 3:
            raise ValueError(f"pendants must be in 0..{self.n - 3}")

    def contains(self, x) -> bool:
        x = tuple(x)
        if len(x) != self.n or sum(x) != 2 * self.n:
            return False
        if any(t < 1 for t in x):
            return False
        for i in range(len(x) - 1):
            if x[i] < x[i + 1]:
                return False
        if self.max_degree is not None and x[0] != self.max_degree:
            return False
        if self.pendants is not None and sum(1 for t in x if t == 1) != self.pendants:
            return False
        return True


def in_class(x, c: SequenceClass) -> bool:
    return c.contains(x)


@dataclass(frozen=True)
class OrderingReport:
    """Outcome of checking one majorizing pair against a term function."""

    expected: str  # ">=" or "<=", value at x versus value at y
    value_x: Value
    value_y: Value
    consistent: bool
    strict: bool


def verify_schur_monotonicity(
    f: FunctionSpec, x, y, mode: str = "additive"
) -> OrderingReport:
    """Check that the Schur map respects a majorizing pair x >= y.

    Convex f (log convex in multiplicative mode) predicts value(x) >=
    value(y), concave the reverse. Raises when x does not majorize y or
    when f has no established class in the given mode.
    """
    x, y = tuple(x), tuple(y)
    if not majorizes(x, y):
        raise ValueError("x does not majorize y")
    cls = convexity_class(f) if mode == "additive" else log_convexity_class(f)
    if cls == NEITHER:
        raise ValueError(f"{f.label} has no established convexity class here")
    vx = schur_value(f, x, mode)
    vy = schur_value(f, y, mode)
    expected = ">=" if cls == STRICTLY_CONVEX else "<="
    hi, lo = (vx, vy) if expected == ">=" else (vy, vx)
    if _is_exact(hi) and _is_exact(lo):
        consistent = hi >= lo
        strict = hi > lo
    else:
        consistent = leq_with_tol(lo, hi)
        strict = not values_close(lo, hi)
    return OrderingReport(expected, vx, vy, consistent, strict)
