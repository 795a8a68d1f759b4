/**
 * UI integrity with a stubbed service: every displayed domain number maps
 * to a stubbed response field (the sentinels are values no local
 * computation could produce from the inputs), the simplex editor cannot
 * emit an invalid triple, and entering the climate-advocacy factor set
 * (5, 1, 2, 2) displays the raw product 20 straight from the stub.
 */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { createApp, DEFAULT_DRAFT } from "../src/app";
import { isValidSimplex } from "../src/simplex";
import type { ScenarioDoc } from "../src/types";
import { miniEngineStub, SENTINELS, sentinelStub } from "./stub";

const DRAFT: ScenarioDoc = {
  ...DEFAULT_DRAFT,
  roles: [
    {
      id: "alpha",
      practice_quality: 0.5,
      offered_autonomy: 12,
      impact: { scale: 1, neglectedness: 1, tractability: 1, personal_fit: 1 },
      income: 20_000,
    },
    {
      id: "beta",
      practice_quality: 0.5,
      offered_autonomy: 22,
      impact: { scale: 2, neglectedness: 2, tractability: 2, personal_fit: 2 },
      income: 40_000,
    },
  ],
  plans: { demo: { horizon: 1, moves: [{ year: 0, role_id: "alpha" }] } },
  household: {
    agent1: {
      strategies: [
        { label: "grind", state: { w: 55, a: 30, m: 10 } },
        { label: "flex", state: { w: 50, a: 60, m: 10 } },
      ],
      preferences: { lambda_w: 1, lambda_a: 0, lambda_m: 0 },
    },
    agent2: {
      strategies: [{ label: "career", state: { w: 60, a: 30, m: 10 } }],
      preferences: { lambda_w: 1, lambda_a: 0, lambda_m: 0 },
    },
    constraints: {},
  },
};

function mount() {
  const root = document.createElement("div");
  document.body.append(root);
  return root;
}

describe("displayed numbers come from the service, not local math", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = "";
    root = mount();
  });

  it("options board shows the stub's utilities and frontier flags", async () => {
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    await app.refreshAll();

    const rows = [...root.querySelectorAll("#panel-options tbody tr")];
    expect(rows.length).toBe(2);
    // ranking order follows the stub's utilities (alpha 777.25 > beta 13.5)
    expect(rows[0].getAttribute("data-option")).toBe("alpha");
    expect(rows[0].querySelector('[data-field="utility"]')?.textContent).toBe(
      SENTINELS.utilityA.toFixed(2),
    );
    expect(rows[1].querySelector('[data-field="utility"]')?.textContent).toBe(
      SENTINELS.utilityB.toFixed(2),
    );
    // frontier highlighting mirrors the /v1/frontier membership exactly
    expect(rows[0].getAttribute("data-frontier")).toBe("false");
    expect(rows[1].getAttribute("data-frontier")).toBe("true");
    const plotted = [...root.querySelectorAll("#panel-options polyline[data-option]")];
    const plotFlags = Object.fromEntries(
      plotted.map((el) => [el.getAttribute("data-option"), el.getAttribute("data-frontier")]),
    );
    expect(plotFlags).toEqual({ alpha: "false", beta: "true" });
  });

  it("impact panel shows the stub's raw product and meaning score", async () => {
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    await app.refreshAll();

    expect(root.querySelector('[data-field="impact-product"]')?.textContent).toBe(
      String(SENTINELS.impactRaw),
    );
    expect(root.querySelector('[data-field="impact-meaning"]')?.textContent).toBe("13");
  });

  it("thresholds panel surfaces the stub's relaxation advice verbatim", async () => {
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    await app.refreshAll();

    expect(root.querySelector('[data-field="infeasible-banner"]')).not.toBeNull();
    expect(root.querySelector('[data-field="required-threshold"]')?.textContent).toBe(
      String(SENTINELS.requiredThreshold),
    );
    expect(root.querySelector('[data-field="regret"]')?.textContent).toBe(
      String(SENTINELS.regret),
    );
    expect(root.querySelector('[data-field="unlocked"]')?.textContent).toBe("alpha");
  });

  it("trajectory panel shows the stub's terminal utility and trap markers", async () => {
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    await app.refreshAll();

    expect(root.querySelector('[data-field="terminal-utility"]')?.textContent).toBe(
      SENTINELS.terminalUtility.toFixed(2),
    );
    const marker = root.querySelector('#panel-trajectory [data-trap="first_trap"]');
    expect(marker?.getAttribute("data-trap-year")).toBe("1");
  });

  it("household panel shows the stub's gap, nash flags, and cooperative cell", async () => {
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    await app.refreshAll();

    expect(root.querySelector('[data-field="gap"]')?.textContent).toBe(
      SENTINELS.gap.toFixed(2),
    );
    const nashCell = root.querySelector('[data-cell="grind|career"]');
    expect(nashCell?.getAttribute("data-nash")).toBe("true");
    expect(nashCell?.getAttribute("data-suboptimal")).toBe("true");
    expect(nashCell?.querySelector('[data-field="payoffs"]')?.textContent).toBe("25.00, 30.00");
    const coopCell = root.querySelector('[data-cell="flex|career"]');
    expect(coopCell?.getAttribute("data-cooperative")).toBe("true");
    expect(coopCell?.querySelector('[data-field="coop-welfare"]')?.textContent).toBe(
      "joint 140.00",
    );
  });

  it("every request carries the current draft; edits reach the service", async () => {
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    await app.refreshAll();
    stub.log.calls.length = 0;

    app.panels.thresholds.setThreshold("w_min", 77);
    await app.workspace.fire("thresholds");
    const call = stub.log.calls.find((c) => c.path === "/v1/satisfice");
    expect(call?.scenario.thresholds?.w_min).toBe(77);
  });
});

describe("simplex editor", () => {
  it("cannot emit an invalid preference triple under arbitrary slider moves", async () => {
    const root = mount();
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    const panel = app.panels.preferences;

    let seed = 12345;
    const next = () => {
      seed = (seed * 1103515245 + 12345) % 2 ** 31;
      return seed / 2 ** 31;
    };
    for (let step = 0; step < 500; step++) {
      const index = Math.floor(next() * 3) as 0 | 1 | 2;
      panel.moveWeight(index, next() * 1.4 - 0.2); // overshoots are clamped
      const prefs = app.workspace.draft.preferences;
      const triple: [number, number, number] = [
        prefs.lambda_w,
        prefs.lambda_a,
        prefs.lambda_m,
      ];
      expect(isValidSimplex(triple)).toBe(true);
    }
  });

  it("slider input events keep the rendered triple valid and in sync", () => {
    const root = mount();
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    const slider = root.querySelector<HTMLInputElement>("#slider-lambda_m");
    expect(slider).not.toBeNull();
    slider!.value = "900";
    slider!.dispatchEvent(new Event("input"));
    const prefs = app.workspace.draft.preferences;
    expect(prefs.lambda_m).toBeCloseTo(0.9, 9);
    expect(prefs.lambda_w + prefs.lambda_a + prefs.lambda_m).toBeCloseTo(1, 9);
    expect(
      root.querySelector('[data-weight="lambda_m"]')?.textContent,
    ).toBe("0.900");
  });
});

describe("climate-advocacy factor set", () => {
  it("entering (5, 1, 2, 2) displays raw product 20 from the service", async () => {
    const root = mount();
    const stub = miniEngineStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);

    const impact = app.panels.impact;
    impact.setFactor("scale", 5);
    impact.setFactor("neglectedness", 1);
    impact.setFactor("tractability", 2);
    impact.setFactor("personal_fit", 2);
    await app.workspace.fire("impact");

    expect(root.querySelector('[data-field="impact-product"]')?.textContent).toBe("20");
    expect(root.querySelector('[data-field="impact-meaning"]')?.textContent).toBe("3.2");
    // and the probe really went over the wire with those factors
    const call = stub.log.calls.at(-1);
    expect(call?.path).toBe("/v1/score");
    expect(call?.scenario.roles?.[0].impact).toEqual({
      scale: 5,
      neglectedness: 1,
      tractability: 2,
      personal_fit: 2,
    });
  });
});

describe("import/export", () => {
  it("export-then-import is the identity on the draft", async () => {
    const root = mount();
    const stub = sentinelStub();
    const app = createApp(root, new ApiClient("", stub.fetch), DRAFT);
    const exported = app.exportDraft();
    await app.importDraft(exported);
    expect(app.exportDraft()).toBe(exported);
    expect(app.workspace.draft).toEqual(JSON.parse(exported));
  });

  it("invalid import is rejected with field-path diagnostics", async () => {
    const root = mount();
    const failing = sentinelStub();
    const api = new ApiClient("", async (input, init) => {
      const url = new URL(input, "http://stub.local");
      if (url.pathname === "/v1/frontier") {
        return new Response(
          JSON.stringify({
            ok: false,
            error: {
              category: "validation",
              message: "preference weights must sum to 1",
              field_path: "preferences",
              detail: null,
            },
          }),
          { status: 400, headers: { "Content-Type": "application/json" } },
        );
      }
      return failing.fetch(input, init);
    });
    const app = createApp(root, api, DRAFT);
    const before = app.exportDraft();
    await app.importDraft(
      JSON.stringify({
        preferences: { lambda_w: 0.5, lambda_a: 0.3, lambda_m: 0.1 },
        initial_state: { w: 1, a: 1, m: 1 },
      }),
    );
    expect(app.exportDraft()).toBe(before); // draft unchanged
    const diagnostics = root.querySelector("#import-diagnostics");
    expect(diagnostics?.textContent).toContain("preferences");
    expect(root.querySelector("#panel-preferences")?.classList.contains("invalid")).toBe(true);
  });
});
