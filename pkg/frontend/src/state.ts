/**
 * Workspace: the client-side scenario draft plus per-panel request
 * plumbing — 150 ms debounce, request sequence numbers (stale responses
 * discarded, last write wins per panel), per-panel dirty/synced status,
 * and an offline queue that replays each panel's latest recompute when the
 * service comes back.
 */

import { OfflineError } from "./api";
import type { ScenarioDoc } from "./types";

export const DEBOUNCE_MS = 150;

export type PanelStatus = "synced" | "pending" | "stale" | "error" | "offline";

export interface PanelHooks<T> {
  request: (scenario: ScenarioDoc) => Promise<T>;
  onResult: (result: T) => void;
  onError?: (err: unknown) => void;
}

interface PanelRuntime {
  timer: ReturnType<typeof setTimeout> | null;
  sequence: number;
  applied: number;
  status: PanelStatus;
  hooks: PanelHooks<unknown>;
  queued: boolean;
}

export interface WorkspaceOptions {
  debounceMs?: number;
  onStatus?: (panel: string, status: PanelStatus) => void;
  onOffline?: (offline: boolean) => void;
}

export class Workspace {
  draft: ScenarioDoc;
  offline = false;
  private panels = new Map<string, PanelRuntime>();
  private debounceMs: number;
  private onStatus: (panel: string, status: PanelStatus) => void;
  private onOffline: (offline: boolean) => void;

  constructor(draft: ScenarioDoc, options: WorkspaceOptions = {}) {
    this.draft = draft;
    this.debounceMs = options.debounceMs ?? DEBOUNCE_MS;
    this.onStatus = options.onStatus ?? (() => {});
    this.onOffline = options.onOffline ?? (() => {});
  }

  registerPanel<T>(name: string, hooks: PanelHooks<T>): void {
    this.panels.set(name, {
      timer: null,
      sequence: 0,
      applied: 0,
      status: "synced",
      hooks: hooks as PanelHooks<unknown>,
      queued: false,
    });
  }

  status(name: string): PanelStatus {
    return this.panel(name).status;
  }

  /** Apply an edit to the draft and schedule the affected panels. */
  edit(mutate: (draft: ScenarioDoc) => void, panels: string[]): void {
    mutate(this.draft);
    for (const name of panels) {
      this.schedule(name);
    }
  }

  /** Debounced recompute; the trailing edit in a burst wins. */
  schedule(name: string): void {
    const panel = this.panel(name);
    this.setStatus(name, panel.status === "synced" ? "stale" : panel.status);
    if (panel.timer !== null) {
      clearTimeout(panel.timer);
    }
    panel.timer = setTimeout(() => {
      panel.timer = null;
      void this.fire(name);
    }, this.debounceMs);
  }

  /** Immediate recompute (initial load, retry button, tests). */
  async fire(name: string): Promise<void> {
    const panel = this.panel(name);
    const sequence = ++panel.sequence;
    this.setStatus(name, "pending");
    const snapshot = JSON.parse(JSON.stringify(this.draft)) as ScenarioDoc;
    try {
      const result = await panel.hooks.request(snapshot);
      if (sequence < panel.sequence) {
        return; // superseded by a newer request for this panel
      }
      panel.applied = sequence;
      panel.queued = false;
      this.setOffline(false);
      this.setStatus(name, "synced");
      panel.hooks.onResult(result);
    } catch (err) {
      if (sequence < panel.sequence) {
        return;
      }
      if (err instanceof OfflineError) {
        panel.queued = true; // replayed by retryQueued() on reconnect
        this.setOffline(true);
        this.setStatus(name, "offline");
        return;
      }
      this.setStatus(name, "error");
      panel.hooks.onError?.(err);
    }
  }

  /** Replay the latest queued recompute for every panel that went offline. */
  async retryQueued(): Promise<void> {
    const queued = [...this.panels.entries()].filter(([, p]) => p.queued);
    await Promise.all(queued.map(([name]) => this.fire(name)));
  }

  queuedPanels(): string[] {
    return [...this.panels.entries()].filter(([, p]) => p.queued).map(([name]) => name);
  }

  private panel(name: string): PanelRuntime {
    const panel = this.panels.get(name);
    if (!panel) {
      throw new Error(`unknown panel: ${name}`);
    }
    return panel;
  }

  private setStatus(name: string, status: PanelStatus): void {
    const panel = this.panel(name);
    if (panel.status !== status) {
      panel.status = status;
      this.onStatus(name, status);
    }
  }

  private setOffline(offline: boolean): void {
    if (this.offline !== offline) {
      this.offline = offline;
      this.onOffline(offline);
    }
  }
}
