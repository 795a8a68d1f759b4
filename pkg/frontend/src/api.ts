/**
 * Typed client for the engine's /v1 API.
 *
 * Every method posts a scenario document and unwraps the response envelope.
 * A 422 on satisfice is not a transport failure: the report (with
 * relaxation advice) rides in error.detail and is surfaced as a regular
 * result plus an `infeasible` flag.
 */

import type {
  Envelope,
  FrontierResult,
  HouseholdResult,
  SatisficeResult,
  ScenarioDoc,
  ScoreResult,
  SimulateResult,
  StrategyResult,
} from "./types";

export class ApiError extends Error {
  constructor(
    public category: string,
    message: string,
    public fieldPath: string | null = null,
    public detail: unknown = null,
  ) {
    super(message);
  }
}

/** Transport-level failure: server unreachable or non-JSON response. */
export class OfflineError extends Error {}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface SatisficeOutcome {
  report: SatisficeResult;
  infeasible: boolean;
}

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchImpl(`${this.baseUrl}/health`);
      return response.ok;
    } catch {
      return false;
    }
  }

  async score(scenario: ScenarioDoc): Promise<ScoreResult> {
    return this.post<ScoreResult>("/v1/score", scenario);
  }

  async frontier(scenario: ScenarioDoc): Promise<FrontierResult> {
    return this.post<FrontierResult>("/v1/frontier", scenario);
  }

  async simulate(scenario: ScenarioDoc, plan: string): Promise<SimulateResult> {
    return this.post<SimulateResult>(
      `/v1/simulate?plan=${encodeURIComponent(plan)}`,
      scenario,
    );
  }

  async strategy(scenario: ScenarioDoc): Promise<StrategyResult> {
    return this.post<StrategyResult>("/v1/strategy", scenario);
  }

  async household(scenario: ScenarioDoc): Promise<HouseholdResult> {
    return this.post<HouseholdResult>("/v1/household", scenario);
  }

  /** satisfice returns 200 (feasible) or 422 with the report in error.detail */
  async satisfice(scenario: ScenarioDoc): Promise<SatisficeOutcome> {
    const response = await this.raw("/v1/satisfice", scenario);
    const body = (await this.decode(response)) as Envelope<SatisficeResult>;
    if (body.ok) {
      return { report: body.result, infeasible: false };
    }
    if (body.error.category === "infeasible" && body.error.detail) {
      return { report: body.error.detail as SatisficeResult, infeasible: true };
    }
    throw new ApiError(
      body.error.category,
      body.error.message,
      body.error.field_path,
      body.error.detail,
    );
  }

  private async post<T>(path: string, scenario: ScenarioDoc): Promise<T> {
    const response = await this.raw(path, scenario);
    const body = (await this.decode(response)) as Envelope<T>;
    if (body.ok) {
      return body.result;
    }
    throw new ApiError(
      body.error.category,
      body.error.message,
      body.error.field_path,
      body.error.detail,
    );
  }

  private async raw(path: string, scenario: ScenarioDoc): Promise<Response> {
    try {
      return await this.fetchImpl(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(scenario),
      });
    } catch (err) {
      throw new OfflineError(String(err));
    }
  }

  private async decode(response: Response): Promise<unknown> {
    try {
      return await response.json();
    } catch {
      throw new OfflineError(`non-JSON response (status ${response.status})`);
    }
  }
}
