/**
 * Panel 6 — Household Studio: the two agents' strategy grid with Nash
 * cells and the cooperative cell highlighted, the coordination-gap
 * readout, and toggles that apply the cooperative templates by reshaping
 * the household constraints (risk hedging, geographic bundling) or
 * swapping the agents (sequential focus, period 2). Payoffs, flags, and
 * the gap all come from /v1/household.
 */

import type { ApiClient } from "../api";
import { clear, h } from "../dom";
import { fixed } from "../format";
import type { Workspace } from "../state";
import type { HouseholdResult } from "../types";

export const HOUSEHOLD_PANEL = "household";

export class HouseholdPanel {
  readonly el: HTMLElement;

  private gridHost: HTMLElement;
  private gapHost: HTMLElement;

  constructor(private workspace: Workspace, api: ApiClient) {
    this.el = h("section", { class: "panel", id: "panel-household" });
    this.gridHost = h("div", { class: "household-grid" });
    this.gapHost = h("div", { class: "household-gap" });
    workspace.registerPanel<HouseholdResult | null>(HOUSEHOLD_PANEL, {
      request: async (scenario) => {
        if (!scenario.household) return null;
        return api.household(scenario);
      },
      onResult: (result) => {
        if (result) this.show(result);
      },
    });
    this.render();
  }

  toggleRiskHedging(enabled: boolean): void {
    this.workspace.edit((draft) => {
      if (!draft.household) return;
      draft.household.constraints = {
        ...(draft.household.constraints ?? {}),
        max_one_high_variance: enabled,
      };
    }, [HOUSEHOLD_PANEL]);
  }

  toggleGeographicBundling(enabled: boolean): void {
    this.workspace.edit((draft) => {
      if (!draft.household) return;
      draft.household.constraints = {
        ...(draft.household.constraints ?? {}),
        colocation_required: enabled,
      };
    }, [HOUSEHOLD_PANEL]);
  }

  /** Sequential focus, period 2: swap the agents' seats. */
  swapAgents(): void {
    this.workspace.edit((draft) => {
      if (!draft.household) return;
      const { agent1, agent2 } = draft.household;
      draft.household.agent1 = agent2;
      draft.household.agent2 = agent1;
    }, [HOUSEHOLD_PANEL]);
  }

  private show(result: HouseholdResult): void {
    const household = this.workspace.draft.household;
    if (!household) return;
    const labels1 = household.agent1.strategies.map((s) => s.label);
    const labels2 = household.agent2.strategies.map((s) => s.label);
    const nashCells = new Map(
      result.pure_nash_profiles.map((p, i) => [
        `${p.s1}|${p.s2}`,
        { profile: p, suboptimal: result.pareto_suboptimal[i] },
      ]),
    );
    const coop = result.cooperative_optimum;

    clear(this.gridHost);
    const header = h(
      "tr",
      {},
      h("th", {}, ""),
      ...labels2.map((label) => h("th", {}, label)),
    );
    const rows = labels1.map((s1) =>
      h(
        "tr",
        {},
        h("th", {}, s1),
        ...labels2.map((s2) => {
          const key = `${s1}|${s2}`;
          const nash = nashCells.get(key);
          const isCoop = coop.s1 === s1 && coop.s2 === s2;
          const classes = [
            nash ? "nash" : "",
            nash?.suboptimal ? "suboptimal" : "",
            isCoop ? "cooperative" : "",
          ]
            .filter(Boolean)
            .join(" ");
          const cell = h("td", {
            class: classes,
            "data-cell": key,
            "data-nash": nash ? "true" : "false",
            "data-suboptimal": nash?.suboptimal ? "true" : "false",
            "data-cooperative": isCoop ? "true" : "false",
          });
          if (nash) {
            cell.append(
              h(
                "span",
                { "data-field": "payoffs" },
                `${fixed(nash.profile.payoff1 ?? 0)}, ${fixed(nash.profile.payoff2 ?? 0)}`,
              ),
            );
            if (nash.suboptimal) cell.append(h("span", { class: "badge" }, " trap"));
          } else if (isCoop) {
            cell.append(
              h(
                "span",
                { "data-field": "coop-welfare" },
                `joint ${fixed(coop.joint_welfare ?? 0)}`,
              ),
            );
          }
          return cell;
        }),
      ),
    );
    this.gridHost.append(h("table", {}, h("thead", {}, header), h("tbody", {}, ...rows)));

    clear(this.gapHost);
    this.gapHost.append(
      h(
        "p",
        {},
        "coordination gap: ",
        h("span", { "data-field": "gap" }, fixed(result.gap)),
        result.note ? ` (${result.note})` : "",
      ),
    );
  }

  private render(): void {
    clear(this.el);
    const constraints = this.workspace.draft.household?.constraints ?? {};
    this.el.append(
      h("h2", {}, "Household Studio"),
      h(
        "div",
        { class: "row templates" },
        h(
          "label",
          {},
          h("input", {
            type: "checkbox",
            id: "toggle-risk-hedging",
            checked: Boolean(constraints.max_one_high_variance),
            onchange: (event: Event) => {
              this.toggleRiskHedging((event.target as HTMLInputElement).checked);
            },
          }),
          "risk hedging (at most one high-variance pick)",
        ),
        h(
          "label",
          {},
          h("input", {
            type: "checkbox",
            id: "toggle-geo-bundling",
            checked: Boolean(constraints.colocation_required),
            onchange: (event: Event) => {
              this.toggleGeographicBundling((event.target as HTMLInputElement).checked);
            },
          }),
          "geographic bundling (co-location required)",
        ),
        h(
          "button",
          { id: "swap-agents", onclick: () => this.swapAgents() },
          "sequential focus: swap periods",
        ),
      ),
      this.gridHost,
      this.gapHost,
    );
  }
}
