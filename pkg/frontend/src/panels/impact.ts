/**
 * Panel 2 — Impact Calculator: four factor sliders with a live raw product
 * and meaning score. Both numbers come from the service: the panel posts a
 * one-role probe scenario to /v1/score and displays `impact_raw` and
 * `state.m` from the response verbatim.
 */

import type { ApiClient } from "../api";
import { clear, h } from "../dom";
import { compact } from "../format";
import type { Workspace } from "../state";
import type { ImpactDoc, ScenarioDoc, ScoreResult } from "../types";

export const IMPACT_PANEL = "impact";
const FACTORS: (keyof ImpactDoc)[] = ["scale", "neglectedness", "tractability", "personal_fit"];

export class ImpactPanel {
  readonly el: HTMLElement;
  factors: ImpactDoc = { scale: 3, neglectedness: 3, tractability: 3, personal_fit: 3 };

  private productEl: HTMLElement;
  private meaningEl: HTMLElement;

  constructor(private workspace: Workspace, api: ApiClient) {
    this.el = h("section", { class: "panel", id: "panel-impact" });
    this.productEl = h("output", { "data-field": "impact-product" }, "–");
    this.meaningEl = h("output", { "data-field": "impact-meaning" }, "–");
    workspace.registerPanel<ScoreResult>(IMPACT_PANEL, {
      request: (scenario) => api.score(this.probeScenario(scenario)),
      onResult: (result) => this.show(result),
    });
    this.render();
  }

  setFactor(name: keyof ImpactDoc, value: number): void {
    this.factors = { ...this.factors, [name]: Math.min(5, Math.max(0, value)) };
    this.workspace.schedule(IMPACT_PANEL);
  }

  /** Minimal valid scenario carrying one probe role with the entered factors. */
  probeScenario(base: ScenarioDoc): ScenarioDoc {
    return {
      preferences: base.preferences,
      initial_state: base.initial_state,
      roles: [
        {
          id: "impact_probe",
          practice_quality: 0,
          offered_autonomy: 0,
          impact: this.factors,
          income: 0,
        },
      ],
    };
  }

  private show(result: ScoreResult): void {
    const probe = result.scores.find((s) => s.role_id === "impact_probe");
    if (!probe) return;
    this.productEl.textContent = compact(probe.impact_raw);
    this.meaningEl.textContent = compact(probe.state.m);
  }

  private render(): void {
    clear(this.el);
    const rows = FACTORS.map((name) =>
      h(
        "label",
        { class: "row" },
        name.replace("_", " "),
        h("input", {
          type: "range",
          min: 0,
          max: 5,
          step: 0.5,
          value: this.factors[name],
          id: `impact-${name}`,
          oninput: (event: Event) => {
            this.setFactor(name, Number((event.target as HTMLInputElement).value));
          },
        }),
      ),
    );
    this.el.append(
      h("h2", {}, "Impact Calculator"),
      ...rows,
      h("p", {}, "raw product: ", this.productEl, " · meaning score: ", this.meaningEl),
    );
  }
}
