/**
 * What-if explorer shell: builds the workspace around a scenario draft,
 * mounts the six panels, wires the offline banner and retry, and handles
 * scenario import/export. Every edit debounces into a service call; every
 * displayed domain number originates in a service response.
 */

import { ApiClient, ApiError } from "./api";
import { clear, h } from "./dom";
import { HOUSEHOLD_PANEL, HouseholdPanel } from "./panels/household";
import { IMPACT_PANEL, ImpactPanel } from "./panels/impact";
import { OPTIONS_PANEL, OptionsPanel } from "./panels/options";
import { THRESHOLDS_PANEL, ThresholdsPanel } from "./panels/thresholds";
import { TRAJECTORY_PANEL, TrajectoryPanel } from "./panels/trajectory";
import { PreferencesPanel } from "./panels/preferences";
import { Workspace } from "./state";
import type { ScenarioDoc } from "./types";

export const DEFAULT_DRAFT: ScenarioDoc = {
  version: "1",
  preferences: { lambda_w: 0.4, lambda_a: 0.3, lambda_m: 0.3 },
  initial_state: { w: 30, a: 20, m: 10 },
  roles: [],
  thresholds: { w_min: 0, a_min: 0, m_min: 0 },
  plans: {},
};

export interface App {
  workspace: Workspace;
  panels: {
    preferences: PreferencesPanel;
    impact: ImpactPanel;
    options: OptionsPanel;
    thresholds: ThresholdsPanel;
    trajectory: TrajectoryPanel;
    household: HouseholdPanel;
  };
  refreshAll: () => Promise<void>;
  exportDraft: () => string;
  importDraft: (text: string) => Promise<void>;
}

export function createApp(
  root: HTMLElement,
  api: ApiClient,
  draft: ScenarioDoc = DEFAULT_DRAFT,
): App {
  const offlineBanner = h(
    "div",
    { class: "banner offline", id: "offline-banner", hidden: true },
    "service unreachable — edits are queued locally ",
    h("button", { id: "retry-connection", onclick: () => void workspace.retryQueued() }, "retry"),
  );
  const importDiagnostics = h("p", { id: "import-diagnostics", class: "diagnostics" });

  const workspace = new Workspace(structuredClone(draft), {
    onOffline: (offline) => {
      if (offline) {
        offlineBanner.removeAttribute("hidden");
      } else {
        offlineBanner.setAttribute("hidden", "");
      }
    },
    onStatus: (panel, status) => {
      const host = root.querySelector(`#panel-${panel === "options" ? "options" : panel}`);
      host?.setAttribute("data-status", status);
    },
  });

  const preferences = new PreferencesPanel(workspace);
  const impact = new ImpactPanel(workspace, api);
  const options = new OptionsPanel(workspace, api);
  const thresholds = new ThresholdsPanel(workspace, api);
  const trajectory = new TrajectoryPanel(workspace, api);
  const household = new HouseholdPanel(workspace, api);
  preferences.affects = [OPTIONS_PANEL, TRAJECTORY_PANEL];

  const refreshable = [
    IMPACT_PANEL,
    OPTIONS_PANEL,
    THRESHOLDS_PANEL,
    TRAJECTORY_PANEL,
    HOUSEHOLD_PANEL,
  ];

  async function refreshAll(): Promise<void> {
    await Promise.all(refreshable.map((name) => workspace.fire(name)));
  }

  function exportDraft(): string {
    return JSON.stringify(workspace.draft, null, 2);
  }

  async function importDraft(text: string): Promise<void> {
    importDiagnostics.textContent = "";
    let parsed: ScenarioDoc;
    try {
      parsed = JSON.parse(text) as ScenarioDoc;
    } catch (err) {
      importDiagnostics.textContent = `import rejected: not valid JSON (${String(err)})`;
      return;
    }
    // validate through the service before adopting the draft
    try {
      await api.frontier(parsed);
    } catch (err) {
      if (err instanceof ApiError) {
        importDiagnostics.textContent = `import rejected at ${err.fieldPath ?? "document"}: ${err.message}`;
        highlightInvalidField(err.fieldPath);
        return;
      }
      importDiagnostics.textContent = "import not validated: service unreachable";
      return;
    }
    workspace.draft = parsed;
    await refreshAll();
  }

  function highlightInvalidField(fieldPath: string | null): void {
    root.querySelectorAll(".invalid").forEach((el) => el.classList.remove("invalid"));
    if (!fieldPath) return;
    const section = fieldPath.split(/[.\[]/)[0];
    const panelBySection: Record<string, string> = {
      preferences: "panel-preferences",
      initial_state: "panel-preferences",
      roles: "panel-options",
      thresholds: "panel-thresholds",
      plans: "panel-trajectory",
      household: "panel-household",
    };
    const id = panelBySection[section];
    if (id) {
      root.querySelector(`#${id}`)?.classList.add("invalid");
    }
  }

  const toolbar = h(
    "div",
    { class: "toolbar" },
    h(
      "button",
      {
        id: "export-button",
        onclick: () => {
          const blob = new Blob([exportDraft()], { type: "application/json" });
          const link = h("a", {
            href: URL.createObjectURL(blob),
            download: "scenario.json",
          });
          link.click();
          URL.revokeObjectURL(link.getAttribute("href") ?? "");
        },
      },
      "export scenario",
    ),
    h("input", {
      type: "file",
      id: "import-input",
      accept: "application/json",
      onchange: async (event: Event) => {
        const file = (event.target as HTMLInputElement).files?.[0];
        if (file) {
          await importDraft(await file.text());
        }
      },
    }),
    importDiagnostics,
  );

  clear(root);
  root.append(
    offlineBanner,
    toolbar,
    preferences.el,
    impact.el,
    options.el,
    thresholds.el,
    trajectory.el,
    household.el,
  );

  return {
    workspace,
    panels: { preferences, impact, options, thresholds, trajectory, household },
    refreshAll,
    exportDraft,
    importDraft,
  };
}

/** Browser entry point; tests construct the app directly instead. */
export async function main(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) return;
  const api = new ApiClient("http://127.0.0.1:8787");
  const app = createApp(root, api);
  if (await api.health()) {
    await app.refreshAll();
  }
}

declare global {
  interface Window {
    __TRIAXIS_NO_AUTOSTART__?: boolean;
  }
}

if (typeof window !== "undefined" && !window.__TRIAXIS_NO_AUTOSTART__) {
  void main();
}
