"""Core domain types and scoring primitives.

Careers are points in a three-axis space: wealth (career capital), autonomy
(structural control over work), and meaning (counterfactual impact). All
three axes are scored on [0, 100]. Everything here is pure and
deterministic; values validate themselves at construction and are safe to
share across threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError

AXIS_MAX = 100.0
IMPACT_FACTOR_MAX = 5.0
IMPACT_RAW_MAX = IMPACT_FACTOR_MAX**4  # 625
SIMPLEX_TOLERANCE = 1e-9


def _check_range(name: str, value: float, lo: float, hi: float) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError(f"{name} must be a number, got {value!r}", field_path=name)
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}", field_path=name)
    if value < lo or value > hi:
        raise ValidationError(
            f"{name} must be within [{lo:g}, {hi:g}], got {value:g}", field_path=name
        )
    return value


@dataclass(frozen=True)
class CareerState:
    """A point (w, a, m) in axis space, each component in [0, 100]."""

    w: float
    a: float
    m: float

    def __post_init__(self):
        object.__setattr__(self, "w", _check_range("w", self.w, 0.0, AXIS_MAX))
        object.__setattr__(self, "a", _check_range("a", self.a, 0.0, AXIS_MAX))
        object.__setattr__(self, "m", _check_range("m", self.m, 0.0, AXIS_MAX))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.w, self.a, self.m)

    def to_dict(self) -> dict:
        return {"w": self.w, "a": self.a, "m": self.m}


@dataclass(frozen=True)
class Preferences:
    """Axis weights on the simplex: nonnegative, each in [0, 1], summing
    to 1 within ``SIMPLEX_TOLERANCE``. ``lambda_m`` is the altruism weight."""

    lambda_w: float
    lambda_a: float
    lambda_m: float

    def __post_init__(self):
        for name in ("lambda_w", "lambda_a", "lambda_m"):
            object.__setattr__(self, name, _check_range(name, getattr(self, name), 0.0, 1.0))
        total = self.lambda_w + self.lambda_a + self.lambda_m
        if abs(total - 1.0) > SIMPLEX_TOLERANCE:
            raise ValidationError(
                f"preference weights must sum to 1 (got {total!r})",
                field_path="preferences",
            )

    def to_dict(self) -> dict:
        return {
            "lambda_w": self.lambda_w,
            "lambda_a": self.lambda_a,
            "lambda_m": self.lambda_m,
        }


@dataclass(frozen=True)
class ImpactFactors:
    """Scale, neglectedness, tractability, and personal fit, each rated
    on [0, 5]. Meaning is their product, so one zero annihilates the rest."""

    scale: float
    neglectedness: float
    tractability: float
    personal_fit: float

    def __post_init__(self):
        for name in ("scale", "neglectedness", "tractability", "personal_fit"):
            object.__setattr__(
                self, name, _check_range(name, getattr(self, name), 0.0, IMPACT_FACTOR_MAX)
            )

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.scale, self.neglectedness, self.tractability, self.personal_fit)

    def to_dict(self) -> dict:
        return {
            "scale": self.scale,
            "neglectedness": self.neglectedness,
            "tractability": self.tractability,
            "personal_fit": self.personal_fit,
        }


class DominanceRelation(enum.Enum):
    LEFT_DOMINATES = "left_dominates"
    RIGHT_DOMINATES = "right_dominates"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


@dataclass(frozen=True)
class RawMeasures:
    """Optional raw proxies that normalize onto the score axes: income and
    runway feed wealth, the discretionary-time fraction feeds autonomy, and
    the impact factors feed meaning."""

    income: float | None = None
    runway: float | None = None
    discretionary_fraction: float | None = None
    impact_factors: ImpactFactors | None = None

    def __post_init__(self):
        if self.income is not None:
            object.__setattr__(self, "income", _check_range("income", self.income, 0.0, math.inf))
        if self.runway is not None:
            object.__setattr__(self, "runway", _check_range("runway", self.runway, 0.0, math.inf))
        if self.discretionary_fraction is not None:
            object.__setattr__(
                self,
                "discretionary_fraction",
                _check_range("discretionary_fraction", self.discretionary_fraction, 0.0, 1.0),
            )


@dataclass(frozen=True)
class NormalizationConfig:
    """Ceilings that map raw wealth proxies onto the [0, 100] scale."""

    income_ceiling: float = 200_000.0
    runway_ceiling: float = 5.0

    def __post_init__(self):
        for name in ("income_ceiling", "runway_ceiling"):
            value = _check_range(name, getattr(self, name), 0.0, math.inf)
            if value <= 0:
                raise ValidationError(f"{name} must be positive", field_path=name)
            object.__setattr__(self, name, value)

    def to_dict(self) -> dict:
        return {"income_ceiling": self.income_ceiling, "runway_ceiling": self.runway_ceiling}


def impact_raw(factors: ImpactFactors) -> float:
    """Product of the four impact factors, in [0, 625]."""
    s, n, t, f = factors.as_tuple()
    if 0.0 in (s, n, t, f):
        return 0.0
    return s * n * t * f


def impact_to_meaning_score(raw: float) -> float:
    """Linearly map a raw impact product [0, 625] onto the meaning axis."""
    raw = _check_range("raw impact", raw, 0.0, IMPACT_RAW_MAX)
    return AXIS_MAX * raw / IMPACT_RAW_MAX


def meaning_score(factors: ImpactFactors) -> float:
    """Meaning score of an impact rating: the full product-then-normalize pipeline."""
    return impact_to_meaning_score(impact_raw(factors))


def utility(state: CareerState, prefs: Preferences) -> float:
    """Weighted utility of a career state: lambda_w*W + lambda_a*A + lambda_m*M."""
    return prefs.lambda_w * state.w + prefs.lambda_a * state.a + prefs.lambda_m * state.m


def dominates(a: CareerState, b: CareerState) -> DominanceRelation:
    """Strict Pareto comparison: a state dominates another when it is at
    least as high on every axis and strictly higher on at least one."""
    at, bt = a.as_tuple(), b.as_tuple()
    if at == bt:
        return DominanceRelation.EQUAL
    if all(x >= y for x, y in zip(at, bt)):
        return DominanceRelation.LEFT_DOMINATES
    if all(x <= y for x, y in zip(at, bt)):
        return DominanceRelation.RIGHT_DOMINATES
    return DominanceRelation.INCOMPARABLE


def pareto_frontier(
    options: Sequence[tuple[str, CareerState]],
) -> list[tuple[str, CareerState]]:
    """Undominated subset of labeled options, input order preserved.

    Equal states never dominate one another, so duplicates of an identical
    state are all retained. Duplicate labels are rejected.
    """
    seen: set[str] = set()
    for label, _ in options:
        if label in seen:
            raise ValidationError(f"duplicate option label: {label!r}", field_path="options")
        seen.add(label)
    frontier = []
    for label, state in options:
        dominated = any(
            dominates(other, state) is DominanceRelation.LEFT_DOMINATES
            for _, other in options
        )
        if not dominated:
            frontier.append((label, state))
    return frontier


def normalize_axes(raw: RawMeasures, config: NormalizationConfig) -> CareerState:
    """Map raw proxies onto a full career state.

    Wealth blends income and runway equally against their ceilings and
    saturates at 100; autonomy is the discretionary fraction; meaning comes
    from the impact pipeline. All four proxies are required here; missing
    ones are reported together.
    """
    missing = [
        name
        for name, value in (
            ("income", raw.income),
            ("runway", raw.runway),
            ("discretionary_fraction", raw.discretionary_fraction),
            ("impact_factors", raw.impact_factors),
        )
        if value is None
    ]
    if missing:
        raise ValidationError(
            "missing raw measures for normalization: " + ", ".join(missing),
            field_path="raw_measures",
        )
    blend = 0.5 * raw.income / config.income_ceiling + 0.5 * raw.runway / config.runway_ceiling
    w = AXIS_MAX * min(1.0, blend)
    a = AXIS_MAX * raw.discretionary_fraction
    m = meaning_score(raw.impact_factors)
    return CareerState(w=w, a=a, m=m)


def frontier_labels(options: Iterable[tuple[str, CareerState]]) -> list[str]:
    return [label for label, _ in pareto_frontier(list(options))]
