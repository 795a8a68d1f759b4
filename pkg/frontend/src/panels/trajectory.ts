/**
 * Panel 5 — Trajectory Studio: a plan builder on a year timeline and the
 * simulated (w, a, m) series with trap markers and phase shading. All
 * series values, trap flags, and phase names come from /v1/simulate.
 */

import type { ApiClient } from "../api";
import { clear, h, svgEl } from "../dom";
import { fixed } from "../format";
import type { Workspace } from "../state";
import type { SimulateResult, TrajectoryPointDoc } from "../types";

export const TRAJECTORY_PANEL = "trajectory";

const SERIES: { key: "w" | "a" | "m"; color: string; label: string }[] = [
  { key: "w", color: "#1f6feb", label: "wealth" },
  { key: "a", color: "#2da44e", label: "autonomy" },
  { key: "m", color: "#bf3989", label: "meaning" },
];
const PHASE_FILL: Record<string, string> = {
  maximize_w: "#eef4ff",
  convert: "#fff8e7",
  maximize_m: "#f2fbf4",
};

export class TrajectoryPanel {
  readonly el: HTMLElement;
  selectedPlan: string | null = null;

  private chartHost: HTMLElement;
  private summaryHost: HTMLElement;
  private planPicker: HTMLElement;

  constructor(private workspace: Workspace, api: ApiClient) {
    this.el = h("section", { class: "panel", id: "panel-trajectory" });
    this.chartHost = h("div", { class: "trajectory-chart" });
    this.summaryHost = h("div", { class: "trajectory-summary" });
    this.planPicker = h("div", { class: "row" });
    const plans = Object.keys(workspace.draft.plans ?? {});
    this.selectedPlan = plans[0] ?? null;
    workspace.registerPanel<SimulateResult | null>(TRAJECTORY_PANEL, {
      request: async (scenario) => {
        if (!this.selectedPlan) return null;
        return api.simulate(scenario, this.selectedPlan);
      },
      onResult: (result) => {
        if (result) this.show(result);
      },
    });
    this.render();
  }

  selectPlan(name: string): void {
    this.selectedPlan = name;
    this.workspace.schedule(TRAJECTORY_PANEL);
  }

  addMove(plan: string, year: number, roleId: string): void {
    this.workspace.edit((draft) => {
      const target = draft.plans?.[plan];
      if (!target) return;
      target.moves = [...target.moves.filter((m) => m.year !== year), { year, role_id: roleId }]
        .sort((a, b) => a.year - b.year);
      if (year > target.horizon) target.horizon = year;
    }, [TRAJECTORY_PANEL]);
  }

  private show(result: SimulateResult): void {
    this.drawChart(result.points);
    clear(this.summaryHost);
    const traps = result.points.filter((p) => p.trap.trap !== "none");
    this.summaryHost.append(
      h(
        "p",
        {},
        `plan ${result.plan}: terminal utility `,
        h("span", { "data-field": "terminal-utility" }, fixed(result.terminal_utility)),
        traps.length ? ` · ${traps.length} trap year(s)` : " · no traps",
      ),
      ...result.refusals.map((r) =>
        h("p", { class: "refusal" }, `year ${r.year}: move to ${r.role_id} refused — ${r.reason}`),
      ),
    );
  }

  private drawChart(points: TrajectoryPointDoc[]): void {
    const width = 460;
    const height = 200;
    const margin = 26;
    const innerW = width - 2 * margin;
    const innerH = height - 2 * margin;
    const years = points.length - 1 || 1;
    const x = (year: number) => margin + (year / years) * innerW;
    const y = (value: number) => margin + innerH * (1 - value / 100);

    const svg = svgEl("svg", { viewBox: `0 0 ${width} ${height}`, width, height });

    // phase bands behind the series
    let bandStart = 0;
    for (let i = 1; i <= points.length; i++) {
      const boundary = i === points.length || points[i].phase !== points[bandStart].phase;
      if (!boundary) continue;
      const phase = points[bandStart].phase;
      svg.append(
        svgEl("rect", {
          x: x(points[bandStart].year),
          y: margin,
          width: x(points[i - 1].year) - x(points[bandStart].year),
          height: innerH,
          fill: PHASE_FILL[phase] ?? "#f6f8fa",
          "data-phase": phase,
        }),
      );
      bandStart = i;
    }

    for (const series of SERIES) {
      const path = points
        .map((p) => `${x(p.year)},${y(p.state[series.key])}`)
        .join(" ");
      svg.append(
        svgEl("polyline", {
          points: path,
          fill: "none",
          stroke: series.color,
          "stroke-width": 2,
          "data-series": series.key,
        }),
      );
    }

    for (const point of points) {
      if (point.trap.trap === "none") continue;
      const marker = svgEl("circle", {
        cx: x(point.year),
        cy: y(point.state.w),
        r: 3.5,
        fill: "#d1242f",
        "data-trap-year": point.year,
      });
      marker.setAttribute("data-trap", point.trap.trap);
      svg.append(marker);
    }

    clear(this.chartHost);
    this.chartHost.append(svg);
  }

  private render(): void {
    clear(this.el);
    clear(this.planPicker);
    const plans = Object.keys(this.workspace.draft.plans ?? {});
    for (const name of plans) {
      this.planPicker.append(
        h(
          "button",
          {
            class: name === this.selectedPlan ? "active" : "",
            "data-plan": name,
            onclick: () => {
              this.selectPlan(name);
              this.render();
            },
          },
          name,
        ),
      );
    }
    this.el.append(
      h("h2", {}, "Trajectory Studio"),
      this.planPicker,
      this.chartHost,
      this.summaryHost,
    );
  }
}
