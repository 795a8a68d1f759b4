"""Career decision engine over a three-axis (wealth, autonomy, meaning) space.

Library surface: scoring and Pareto primitives (:mod:`triaxis.model`),
inter-axis coupling mechanics (:mod:`triaxis.coupling`), trajectory
simulation and strategy comparison (:mod:`triaxis.trajectory`), satisficing
(:mod:`triaxis.satisficing`), household games (:mod:`triaxis.household`),
and scenario I/O (:mod:`triaxis.scenario`). The CLI lives in
:mod:`triaxis.cli` and the HTTP facade in :mod:`triaxis.service`.
"""

from .errors import InfeasibleError, TriaxisError, ValidationError
from .model import (
    CareerState,
    DominanceRelation,
    ImpactFactors,
    NormalizationConfig,
    Preferences,
    RawMeasures,
    dominates,
    impact_raw,
    impact_to_meaning_score,
    meaning_score,
    normalize_axes,
    pareto_frontier,
    utility,
)
from .coupling import (
    CouplingParams,
    GrowthModel,
    MarketKind,
    MarketStructure,
    Mission,
    TrapKind,
    TrapReport,
    capital_growth_step,
    detect_first_control_trap,
    detect_second_control_trap,
    feasible_autonomy_cap,
    mission_set,
    stabilized_autonomy_cap,
)
from .trajectory import (
    CareerPlan,
    OptionValueReport,
    Phase,
    PhasePriority,
    PhaseSchedule,
    PlanMove,
    Role,
    StateAdjustment,
    StrategyReport,
    StrategyScenario,
    Trajectory,
    default_phase_schedule,
    evaluate_strategy,
    option_value,
    phase_priority,
    role_state,
    simulate,
)
from .satisficing import (
    Axis,
    RelaxationAdvice,
    RelaxationOutcome,
    RelaxationStatus,
    Thresholds,
    least_regret_relaxation,
    satisfice,
)
from .household import (
    AgentSpec,
    Constraints,
    EquilibriumReport,
    HouseholdGame,
    Profile,
    Strategy,
    cooperative_optimum,
    cooperative_templates,
    coordination_gap,
    payoff,
    pure_nash,
)
from .scenario import (
    ArchetypeEntry,
    ArchetypeName,
    Level,
    Scenario,
    TransitionCost,
    archetype,
    archetypes,
    load_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
    transition_cost,
)

__version__ = "0.1.0"
