/**
 * Shared types mirroring the engine's scenario schema and /v1 responses.
 * The UI treats every numeric field here as opaque display data: it never
 * derives domain numbers itself.
 */

export interface PreferencesDoc {
  lambda_w: number;
  lambda_a: number;
  lambda_m: number;
}

export interface StateDoc {
  w: number;
  a: number;
  m: number;
}

export interface ImpactDoc {
  scale: number;
  neglectedness: number;
  tractability: number;
  personal_fit: number;
}

export interface RoleDoc {
  id: string;
  practice_quality: number;
  offered_autonomy: number;
  impact: ImpactDoc;
  income: number;
  entry_min_w?: number;
  entry_cost_w?: number;
}

export interface MissionDoc {
  id: string;
  min_w: number;
  impact: ImpactDoc;
}

export interface PlanMoveDoc {
  year: number;
  role_id: string;
}

export interface PlanDoc {
  horizon: number;
  moves: PlanMoveDoc[];
}

export interface ThresholdsDoc {
  w_min: number;
  a_min: number;
  m_min: number;
}

export interface StrategyDoc {
  safe_path: PlanDoc;
  venture_path: PlanDoc;
  success_probability: number;
  success_adjustment: { dw: number; da: number; dm: number };
  failure_adjustment: { dw: number; da: number; dm: number };
  risk_exponent: number;
}

export interface HouseholdStrategyDoc {
  label: string;
  state: StateDoc;
  high_variance?: boolean;
}

export interface HouseholdAgentDoc {
  strategies: HouseholdStrategyDoc[];
  preferences: PreferencesDoc;
}

export interface HouseholdConstraintsDoc {
  colocation_required?: boolean;
  colocation_map?: Record<string, string>;
  care_requirement?: boolean;
  flexible_strategies?: string[];
  care_penalty?: number;
  joint_w_floor?: number;
  max_one_high_variance?: boolean;
}

export interface HouseholdDoc {
  agent1: HouseholdAgentDoc;
  agent2: HouseholdAgentDoc;
  constraints?: HouseholdConstraintsDoc;
}

/** Client-side scenario draft; mirrors the engine's document schema. */
export interface ScenarioDoc {
  version?: string;
  preferences: PreferencesDoc;
  initial_state: StateDoc;
  normalization?: { income_ceiling: number; runway_ceiling: number };
  market?: Record<string, unknown>;
  coupling?: { w_star_trap: number; beta_meaning: number; delta_instability: number };
  growth?: { eta: number; floor_w: number };
  roles?: RoleDoc[];
  missions?: MissionDoc[];
  plans?: Record<string, PlanDoc>;
  thresholds?: ThresholdsDoc;
  phases?: { start_year: number; end_year: number | null; priority: string }[];
  strategy?: StrategyDoc;
  household?: HouseholdDoc;
  [key: `x_${string}`]: unknown;
}

// ---- response payloads ----

export interface ScoreEntry {
  role_id: string;
  state: StateDoc;
  impact_raw: number;
  utility: number;
}

export interface ScoreResult {
  preferences: PreferencesDoc;
  scores: ScoreEntry[];
}

export interface FrontierResult {
  options: { label: string; state: StateDoc }[];
  frontier: string[];
}

export interface TrapDoc {
  trap: "none" | "first_trap" | "second_trap";
  detail: string;
  binding_constraint: string;
}

export interface TrajectoryPointDoc {
  year: number;
  state: StateDoc;
  role_id: string | null;
  trap: TrapDoc;
  phase: string;
}

export interface SimulateResult {
  plan: string;
  points: TrajectoryPointDoc[];
  refusals: { year: number; role_id: string; reason: string }[];
  terminal_utility: number;
}

export interface RelaxationAdviceDoc {
  axis: "w" | "a" | "m";
  required_threshold: number;
  regret: number;
  unlocked_options: string[];
}

export interface RelaxationDoc {
  status: string;
  reason: string;
  advice: RelaxationAdviceDoc | null;
  deficits: Record<string, number> | null;
}

export interface SatisficeResult {
  thresholds: ThresholdsDoc;
  options: { label: string; state: StateDoc }[];
  feasible: string[];
  relaxation: RelaxationDoc | null;
}

export interface StrategyResult {
  sequential_eu: number;
  simultaneous_eu: number;
  preferred: "sequential" | "simultaneous";
  sequential_terminal: StateDoc;
  venture_success_state: StateDoc;
  venture_failure_state: StateDoc;
}

export interface ProfileDoc {
  s1: string;
  s2: string;
  payoff1: number | null;
  payoff2: number | null;
  joint_welfare: number | null;
  feasible: boolean;
  violation: string | null;
}

export interface HouseholdResult {
  pure_nash_profiles: ProfileDoc[];
  pareto_suboptimal: boolean[];
  cooperative_optimum: ProfileDoc;
  gap: number;
  note: string | null;
}

export interface ApiErrorBody {
  category: string;
  message: string;
  field_path: string | null;
  detail: unknown;
}

export type Envelope<T> =
  | { ok: true; result: T }
  | { ok: false; error: ApiErrorBody };
