"""Aspiration-level filtering and least-regret threshold relaxation.

Instead of optimizing, fix a minimum on each axis and keep every option
that clears all three. When nothing clears, find the single axis whose
threshold can be lowered the least to readmit at least one option.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError
from .model import AXIS_MAX, CareerState, _check_range


class Axis(enum.Enum):
    W = "w"
    A = "a"
    M = "m"


_AXIS_VALUE = {
    Axis.W: lambda s: s.w,
    Axis.A: lambda s: s.a,
    Axis.M: lambda s: s.m,
}


@dataclass(frozen=True)
class Thresholds:
    """Aspiration minima per axis, each in [0, 100]."""

    w_min: float
    a_min: float
    m_min: float

    def __post_init__(self):
        for name in ("w_min", "a_min", "m_min"):
            object.__setattr__(
                self, name, _check_range(f"thresholds.{name}", getattr(self, name), 0.0, AXIS_MAX)
            )

    def value(self, axis: Axis) -> float:
        return {Axis.W: self.w_min, Axis.A: self.a_min, Axis.M: self.m_min}[axis]

    def to_dict(self) -> dict:
        return {"w_min": self.w_min, "a_min": self.a_min, "m_min": self.m_min}


def meets(state: CareerState, t: Thresholds) -> bool:
    """Non-strict test: the state clears all three thresholds."""
    return state.w >= t.w_min and state.a >= t.a_min and state.m >= t.m_min


def satisfice(
    options: Sequence[tuple[str, CareerState]], t: Thresholds
) -> list[tuple[str, CareerState]]:
    """Options meeting every threshold, input order preserved."""
    return [(label, state) for label, state in options if meets(state, t)]


@dataclass(frozen=True)
class RelaxationAdvice:
    """Lower the named axis's threshold to ``required_threshold`` (consuming
    ``regret`` points of slack) and ``unlocked_options`` become feasible."""

    axis: Axis
    required_threshold: float
    regret: float
    unlocked_options: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "axis": self.axis.value,
            "required_threshold": self.required_threshold,
            "regret": self.regret,
            "unlocked_options": list(self.unlocked_options),
        }


class RelaxationStatus(enum.Enum):
    ALREADY_FEASIBLE = "already_feasible"
    RELAXATION_FOUND = "relaxation_found"
    MULTI_AXIS_INFEASIBLE = "multi_axis_infeasible"


@dataclass(frozen=True)
class RelaxationOutcome:
    status: RelaxationStatus
    reason: str
    advice: RelaxationAdvice | None = None
    deficits: dict[str, float] | None = None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "reason": self.reason,
            "advice": self.advice.to_dict() if self.advice else None,
            "deficits": self.deficits,
        }


def _other_axes_met(state: CareerState, t: Thresholds, axis: Axis) -> bool:
    return all(_AXIS_VALUE[other](state) >= t.value(other) for other in Axis if other is not axis)


def least_regret_relaxation(
    options: Sequence[tuple[str, CareerState]], t: Thresholds
) -> RelaxationOutcome:
    """Smallest single-axis threshold reduction that readmits an option.

    For each axis independently, holding the other two thresholds fixed,
    the minimal reduction lowers that threshold to the best value achieved
    on the axis by options already feasible on the other two; the regret is
    the slack consumed. The axis with least regret wins, ties broken in the
    order W, A, M. If no single axis suffices, the per-axis deficits (how
    far each threshold sits above the best value any option achieves) are
    reported instead.
    """
    if not options:
        raise ValidationError("options must be nonempty", field_path="options")
    if satisfice(options, t):
        return RelaxationOutcome(
            status=RelaxationStatus.ALREADY_FEASIBLE,
            reason="already feasible: at least one option meets every threshold",
        )

    best_advice: RelaxationAdvice | None = None
    for axis in (Axis.W, Axis.A, Axis.M):
        candidates = [
            (label, state) for label, state in options if _other_axes_met(state, t, axis)
        ]
        if not candidates:
            continue
        best_value = max(_AXIS_VALUE[axis](state) for _, state in candidates)
        # Options feasible on the other two axes and at the best achievable
        # value on this one: exactly what the relaxed threshold admits.
        unlocked = tuple(
            label for label, state in candidates if _AXIS_VALUE[axis](state) >= best_value
        )
        advice = RelaxationAdvice(
            axis=axis,
            required_threshold=best_value,
            regret=t.value(axis) - best_value,
            unlocked_options=unlocked,
        )
        if best_advice is None or advice.regret < best_advice.regret:
            best_advice = advice

    if best_advice is not None:
        return RelaxationOutcome(
            status=RelaxationStatus.RELAXATION_FOUND,
            reason=(
                f"relax {best_advice.axis.value} to {best_advice.required_threshold:g} "
                f"(regret {best_advice.regret:g})"
            ),
            advice=best_advice,
        )

    deficits = {
        axis.value: max(
            0.0, t.value(axis) - max(_AXIS_VALUE[axis](state) for _, state in options)
        )
        for axis in Axis
    }
    return RelaxationOutcome(
        status=RelaxationStatus.MULTI_AXIS_INFEASIBLE,
        reason="no single-axis relaxation suffices: every option misses at least two thresholds",
        deficits=deficits,
    )
