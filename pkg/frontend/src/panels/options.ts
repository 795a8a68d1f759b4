/**
 * Panel 3 — Options Board: the role catalog as labeled options with live
 * utility ranking (/v1/score) and frontier highlighting (/v1/frontier),
 * plus a parallel-coordinates view. Rankings, utilities, states, and
 * frontier membership all come from service responses.
 */

import type { ApiClient } from "../api";
import { clear, h } from "../dom";
import { fixed } from "../format";
import { renderParallelCoordinates } from "../parallel";
import type { Workspace } from "../state";
import type { FrontierResult, RoleDoc, ScoreResult } from "../types";

export const OPTIONS_PANEL = "options";

interface BoardData {
  score: ScoreResult;
  frontier: FrontierResult;
}

export class OptionsPanel {
  readonly el: HTMLElement;

  private tableHost: HTMLElement;
  private plotHost: HTMLElement;

  constructor(private workspace: Workspace, api: ApiClient) {
    this.el = h("section", { class: "panel", id: "panel-options" });
    this.tableHost = h("div", { class: "options-table" });
    this.plotHost = h("div", { class: "options-plot" });
    workspace.registerPanel<BoardData>(OPTIONS_PANEL, {
      request: async (scenario) => {
        const [score, frontier] = await Promise.all([
          api.score(scenario),
          api.frontier(scenario),
        ]);
        return { score, frontier };
      },
      onResult: (data) => this.show(data),
    });
    this.render();
  }

  addOption(role: RoleDoc): void {
    this.workspace.edit((draft) => {
      draft.roles = [...(draft.roles ?? []), role];
    }, [OPTIONS_PANEL]);
  }

  removeOption(roleId: string): void {
    this.workspace.edit((draft) => {
      draft.roles = (draft.roles ?? []).filter((r) => r.id !== roleId);
    }, [OPTIONS_PANEL]);
  }

  updateOption(roleId: string, patch: Partial<RoleDoc>): void {
    this.workspace.edit((draft) => {
      draft.roles = (draft.roles ?? []).map((r) =>
        r.id === roleId ? { ...r, ...patch } : r,
      );
    }, [OPTIONS_PANEL]);
  }

  private show(data: BoardData): void {
    const frontier = new Set(data.frontier.frontier);
    const ranked = [...data.score.scores].sort((a, b) => b.utility - a.utility);
    clear(this.tableHost);
    const rows = ranked.map((entry, index) =>
      h(
        "tr",
        {
          "data-option": entry.role_id,
          "data-frontier": frontier.has(entry.role_id) ? "true" : "false",
          class: frontier.has(entry.role_id) ? "frontier" : "",
        },
        h("td", {}, String(index + 1)),
        h("td", {}, entry.role_id),
        h("td", { "data-field": "utility" }, fixed(entry.utility)),
        h("td", {}, fixed(entry.state.w)),
        h("td", {}, fixed(entry.state.a)),
        h("td", {}, fixed(entry.state.m)),
        h(
          "td",
          {},
          h("button", {
            onclick: () => this.removeOption(entry.role_id),
            "aria-label": `remove ${entry.role_id}`,
          }, "×"),
        ),
      ),
    );
    this.tableHost.append(
      h(
        "table",
        {},
        h(
          "thead",
          {},
          h(
            "tr",
            {},
            h("th", {}, "#"),
            h("th", {}, "option"),
            h("th", {}, "utility"),
            h("th", {}, "w"),
            h("th", {}, "a"),
            h("th", {}, "m"),
            h("th", {}, ""),
          ),
        ),
        h("tbody", {}, ...rows),
      ),
    );
    renderParallelCoordinates(this.plotHost, data.frontier.options, frontier);
  }

  private render(): void {
    clear(this.el);
    this.el.append(
      h("h2", {}, "Options Board"),
      this.plotHost,
      this.tableHost,
      h(
        "form",
        {
          class: "row",
          onsubmit: (event: Event) => {
            event.preventDefault();
            const form = event.target as HTMLFormElement;
            const read = (name: string) =>
              Number((form.elements.namedItem(name) as HTMLInputElement).value);
            const label = (form.elements.namedItem("label") as HTMLInputElement).value.trim();
            if (!label) return;
            this.addOption({
              id: label,
              practice_quality: 0.5,
              offered_autonomy: read("autonomy"),
              impact: {
                scale: read("scale"),
                neglectedness: read("neglectedness"),
                tractability: read("tractability"),
                personal_fit: read("personal_fit"),
              },
              income: read("income"),
            });
            form.reset();
          },
        },
        h("input", { name: "label", placeholder: "label", required: true }),
        h("input", { name: "income", type: "number", value: 100000, min: 0 }),
        h("input", { name: "autonomy", type: "number", value: 50, min: 0, max: 100 }),
        h("input", { name: "scale", type: "number", value: 3, min: 0, max: 5, step: 0.5 }),
        h("input", { name: "neglectedness", type: "number", value: 3, min: 0, max: 5, step: 0.5 }),
        h("input", { name: "tractability", type: "number", value: 3, min: 0, max: 5, step: 0.5 }),
        h("input", { name: "personal_fit", type: "number", value: 3, min: 0, max: 5, step: 0.5 }),
        h("button", { type: "submit" }, "add option"),
      ),
    );
  }
}
