/**
 * Panel 4 — Thresholds: satisficing filter over the options with an
 * infeasibility banner surfacing the service's relaxation advice verbatim.
 */

import type { ApiClient, SatisficeOutcome } from "../api";
import { clear, h } from "../dom";
import { compact } from "../format";
import type { Workspace } from "../state";
import type { ThresholdsDoc } from "../types";

export const THRESHOLDS_PANEL = "thresholds";
const AXES: (keyof ThresholdsDoc)[] = ["w_min", "a_min", "m_min"];

export class ThresholdsPanel {
  readonly el: HTMLElement;

  private resultHost: HTMLElement;

  constructor(private workspace: Workspace, api: ApiClient) {
    this.el = h("section", { class: "panel", id: "panel-thresholds" });
    this.resultHost = h("div", { class: "satisfice-result" });
    workspace.registerPanel<SatisficeOutcome>(THRESHOLDS_PANEL, {
      request: (scenario) => api.satisfice(scenario),
      onResult: (outcome) => this.show(outcome),
    });
    this.render();
  }

  setThreshold(axis: keyof ThresholdsDoc, value: number): void {
    const clamped = Math.min(100, Math.max(0, value));
    this.workspace.edit((draft) => {
      draft.thresholds = {
        w_min: 0,
        a_min: 0,
        m_min: 0,
        ...(draft.thresholds ?? {}),
        [axis]: clamped,
      };
    }, [THRESHOLDS_PANEL]);
  }

  private show(outcome: SatisficeOutcome): void {
    clear(this.resultHost);
    if (!outcome.infeasible) {
      this.resultHost.append(
        h(
          "ul",
          { "data-field": "feasible-list" },
          ...outcome.report.feasible.map((label) =>
            h("li", { "data-option": label }, label),
          ),
        ),
      );
      return;
    }
    const relaxation = outcome.report.relaxation;
    const banner = h("div", { class: "banner infeasible", "data-field": "infeasible-banner" });
    banner.append(h("strong", {}, "no option meets every threshold"));
    if (relaxation?.advice) {
      const advice = relaxation.advice;
      banner.append(
        h(
          "p",
          { "data-field": "relaxation-advice" },
          `relax ${advice.axis} to `,
          h("span", { "data-field": "required-threshold" }, compact(advice.required_threshold)),
          " (regret ",
          h("span", { "data-field": "regret" }, compact(advice.regret)),
          ") to unlock: ",
          h("span", { "data-field": "unlocked" }, advice.unlocked_options.join(", ")),
        ),
      );
    } else if (relaxation) {
      banner.append(h("p", { "data-field": "relaxation-reason" }, relaxation.reason));
    }
    this.resultHost.append(banner);
  }

  private render(): void {
    clear(this.el);
    const thresholds = this.workspace.draft.thresholds ?? { w_min: 0, a_min: 0, m_min: 0 };
    const rows = AXES.map((axis) =>
      h(
        "label",
        { class: "row" },
        `${axis.replace("_min", "")} at least`,
        h("input", {
          type: "number",
          min: 0,
          max: 100,
          value: thresholds[axis],
          id: `threshold-${axis}`,
          onchange: (event: Event) => {
            this.setThreshold(axis, Number((event.target as HTMLInputElement).value));
          },
        }),
      ),
    );
    this.el.append(h("h2", {}, "Thresholds"), ...rows, this.resultHost);
  }
}
