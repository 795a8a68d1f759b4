"""Inter-axis coupling mechanics.

Wealth gates the rest of the space: it caps the autonomy the market will
fund, it unlocks missions, and it compounds through practice. Meaning feeds
back by stabilizing autonomy that wealth alone would not support. The two
control traps — demanding autonomy the market won't fund, and an employer
withholding autonomy from a now-critical employee — are detected here as
pure predicates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import ValidationError
from .model import AXIS_MAX, ImpactFactors, _check_range


class MarketKind(enum.Enum):
    AUCTION = "auction"
    WINNER_TAKE_ALL = "winner_take_all"


@dataclass(frozen=True)
class MarketStructure:
    """How the labor market converts wealth into fundable autonomy.

    Auction markets scale smoothly (power law in w); winner-take-all markets
    jump from a low cap to a high cap at a wealth threshold.
    """

    kind: MarketKind
    gamma: float | None = None
    threshold_w: float | None = None
    low_cap: float | None = None
    high_cap: float | None = None

    def __post_init__(self):
        if self.kind is MarketKind.AUCTION:
            if self.gamma is None:
                raise ValidationError("auction market requires gamma", field_path="market.gamma")
            gamma = _check_range("market.gamma", self.gamma, 0.0, math.inf)
            if gamma <= 0:
                raise ValidationError("market.gamma must be positive", field_path="market.gamma")
            object.__setattr__(self, "gamma", gamma)
        else:
            for name in ("threshold_w", "low_cap", "high_cap"):
                value = getattr(self, name)
                if value is None:
                    raise ValidationError(
                        f"winner-take-all market requires {name}", field_path=f"market.{name}"
                    )
                object.__setattr__(self, name, _check_range(f"market.{name}", value, 0.0, AXIS_MAX))
            if self.low_cap > self.high_cap:
                raise ValidationError(
                    "market.low_cap must not exceed market.high_cap", field_path="market.low_cap"
                )

    @classmethod
    def auction(cls, gamma: float = 1.0) -> "MarketStructure":
        return cls(kind=MarketKind.AUCTION, gamma=gamma)

    @classmethod
    def winner_take_all(
        cls, threshold_w: float, low_cap: float, high_cap: float
    ) -> "MarketStructure":
        return cls(
            kind=MarketKind.WINNER_TAKE_ALL,
            threshold_w=threshold_w,
            low_cap=low_cap,
            high_cap=high_cap,
        )

    def to_dict(self) -> dict:
        if self.kind is MarketKind.AUCTION:
            return {"kind": self.kind.value, "gamma": self.gamma}
        return {
            "kind": self.kind.value,
            "threshold_w": self.threshold_w,
            "low_cap": self.low_cap,
            "high_cap": self.high_cap,
        }


@dataclass(frozen=True)
class GrowthModel:
    """Capital growth dynamics: learning rate ``eta`` and a small floor on
    effective capital so a zero-wealth start can still grow."""

    eta: float = 0.3
    floor_w: float = 1.0

    def __post_init__(self):
        eta = _check_range("growth.eta", self.eta, 0.0, math.inf)
        if eta <= 0:
            raise ValidationError("growth.eta must be positive", field_path="growth.eta")
        object.__setattr__(self, "eta", eta)
        floor = _check_range("growth.floor_w", self.floor_w, 0.0, AXIS_MAX)
        if not 0 < floor < AXIS_MAX:
            raise ValidationError(
                "growth.floor_w must be strictly between 0 and 100",
                field_path="growth.floor_w",
            )
        object.__setattr__(self, "floor_w", floor)

    def to_dict(self) -> dict:
        return {"eta": self.eta, "floor_w": self.floor_w}


@dataclass(frozen=True)
class CouplingParams:
    """Knobs for the coupling mechanisms: the second-trap criticality
    threshold, the meaning->autonomy stabilizer strength, and the yearly
    wealth decay applied while the first trap persists."""

    w_star_trap: float = 70.0
    beta_meaning: float = 0.5
    delta_instability: float = 0.15

    def __post_init__(self):
        object.__setattr__(
            self, "w_star_trap", _check_range("coupling.w_star_trap", self.w_star_trap, 0.0, AXIS_MAX)
        )
        beta = _check_range("coupling.beta_meaning", self.beta_meaning, 0.0, math.inf)
        object.__setattr__(self, "beta_meaning", beta)
        object.__setattr__(
            self,
            "delta_instability",
            _check_range("coupling.delta_instability", self.delta_instability, 0.0, 1.0),
        )

    def to_dict(self) -> dict:
        return {
            "w_star_trap": self.w_star_trap,
            "beta_meaning": self.beta_meaning,
            "delta_instability": self.delta_instability,
        }


@dataclass(frozen=True)
class Mission:
    """A high-impact mission gated on a minimum wealth score."""

    id: str
    min_w: float
    impact: ImpactFactors

    def __post_init__(self):
        if not self.id:
            raise ValidationError("mission id must be nonempty", field_path="missions.id")
        object.__setattr__(self, "min_w", _check_range("mission.min_w", self.min_w, 0.0, AXIS_MAX))

    def to_dict(self) -> dict:
        return {"id": self.id, "min_w": self.min_w, "impact": self.impact.to_dict()}


class TrapKind(enum.Enum):
    NONE = "none"
    FIRST_TRAP = "first_trap"
    SECOND_TRAP = "second_trap"


class BindingConstraint(enum.Enum):
    NONE = "none"
    MARKET_VIABILITY = "market_viability"
    ORGANIZATIONAL_RESISTANCE = "organizational_resistance"


@dataclass(frozen=True)
class TrapReport:
    trap: TrapKind
    detail: str
    binding_constraint: BindingConstraint

    def __post_init__(self):
        expected = {
            TrapKind.NONE: BindingConstraint.NONE,
            TrapKind.FIRST_TRAP: BindingConstraint.MARKET_VIABILITY,
            TrapKind.SECOND_TRAP: BindingConstraint.ORGANIZATIONAL_RESISTANCE,
        }[self.trap]
        if self.binding_constraint is not expected:
            raise ValidationError(
                f"{self.trap.value} must bind {expected.value}, got {self.binding_constraint.value}"
            )

    def to_dict(self) -> dict:
        return {
            "trap": self.trap.value,
            "detail": self.detail,
            "binding_constraint": self.binding_constraint.value,
        }


NO_TRAP = TrapReport(TrapKind.NONE, "no trap", BindingConstraint.NONE)


def feasible_autonomy_cap(w: float, market: MarketStructure) -> float:
    """Upper bound on autonomy the market will fund at wealth ``w``.

    Monotone nondecreasing in ``w`` for a fixed market.
    """
    w = _check_range("w", w, 0.0, AXIS_MAX)
    if market.kind is MarketKind.AUCTION:
        return AXIS_MAX * (w / AXIS_MAX) ** market.gamma
    return market.low_cap if w < market.threshold_w else market.high_cap


def detect_first_control_trap(
    a_attempted: float, w: float, market: MarketStructure
) -> TrapReport:
    """First control trap: attempted autonomy strictly exceeds the cap the
    market funds at the current wealth. The boundary itself is feasible."""
    a_attempted = _check_range("a_attempted", a_attempted, 0.0, AXIS_MAX)
    cap = feasible_autonomy_cap(w, market)
    if a_attempted > cap:
        return TrapReport(
            TrapKind.FIRST_TRAP,
            f"attempted autonomy {a_attempted:g} exceeds the market-funded cap {cap:g} "
            f"at wealth {w:g}; expect financial instability",
            BindingConstraint.MARKET_VIABILITY,
        )
    return NO_TRAP


def detect_second_control_trap(
    w: float, params: CouplingParams, a_requested: float, a_granted: float
) -> TrapReport:
    """Second control trap: wealth at or above the criticality threshold
    while the employer grants less autonomy than requested."""
    w = _check_range("w", w, 0.0, AXIS_MAX)
    a_requested = _check_range("a_requested", a_requested, 0.0, AXIS_MAX)
    a_granted = _check_range("a_granted", a_granted, 0.0, AXIS_MAX)
    if w >= params.w_star_trap and a_requested > a_granted:
        return TrapReport(
            TrapKind.SECOND_TRAP,
            f"wealth {w:g} is at or beyond the criticality threshold "
            f"{params.w_star_trap:g} and requested autonomy {a_requested:g} exceeds "
            f"granted {a_granted:g}: organizational resistance, not market viability",
            BindingConstraint.ORGANIZATIONAL_RESISTANCE,
        )
    return NO_TRAP


def mission_set(w: float, catalog: list[Mission] | tuple[Mission, ...]) -> list[Mission]:
    """Missions accessible at wealth ``w``: those whose gate is at or below
    ``w``. Monotone in ``w`` by construction; catalog order preserved."""
    w = _check_range("w", w, 0.0, AXIS_MAX)
    return [m for m in catalog if m.min_w <= w]


def capital_growth_step(w: float, practice_quality: float, model: GrowthModel, dt: float) -> float:
    """Advance wealth by one step of compounding growth scaled by practice quality.

    The increment is ``eta * q * w_eff * (w_eff/100) * (1 - w_eff/100) * dt``:
    existing capital amplifies growth (the ``w_eff/100`` factor) while the
    ``1 - w_eff/100`` factor flattens it near the skill ceiling. The rate is
    computed on ``max(w, floor_w)`` so zero wealth is not absorbing, but the
    increment is added to ``w`` itself: with zero practice the state is an
    exact fixed point, as is the ceiling at 100.
    """
    w = _check_range("w", w, 0.0, AXIS_MAX)
    practice_quality = _check_range("practice_quality", practice_quality, 0.0, 1.0)
    if not isinstance(dt, (int, float)) or isinstance(dt, bool) or not math.isfinite(dt) or dt <= 0:
        raise ValidationError(f"dt must be a positive number of years, got {dt!r}", field_path="dt")
    w_eff = max(w, model.floor_w)
    increment = (
        model.eta
        * practice_quality
        * w_eff
        * (w_eff / AXIS_MAX)
        * (1.0 - w_eff / AXIS_MAX)
        * dt
    )
    return min(AXIS_MAX, max(0.0, w + increment))


def stabilized_autonomy_cap(base_cap: float, m: float, params: CouplingParams) -> float:
    """Raise an autonomy cap by the meaning-driven stabilizer: mission-heavy
    roles sustain autonomy that wealth alone would not fund."""
    base_cap = _check_range("base_cap", base_cap, 0.0, AXIS_MAX)
    m = _check_range("m", m, 0.0, AXIS_MAX)
    return min(AXIS_MAX, base_cap * (1.0 + params.beta_meaning * m / AXIS_MAX))
