import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { OfflineError } from "../src/api";
import { Workspace } from "../src/state";
import type { ScenarioDoc } from "../src/types";

const DRAFT: ScenarioDoc = {
  preferences: { lambda_w: 0.4, lambda_a: 0.3, lambda_m: 0.3 },
  initial_state: { w: 30, a: 20, m: 10 },
};

describe("workspace request plumbing", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("debounces a burst of edits into one request", async () => {
    const calls: ScenarioDoc[] = [];
    const ws = new Workspace(structuredClone(DRAFT), { debounceMs: 150 });
    ws.registerPanel("p", {
      request: async (scenario) => {
        calls.push(scenario);
        return null;
      },
      onResult: () => {},
    });
    for (let i = 1; i <= 5; i++) {
      ws.edit((draft) => {
        draft.initial_state.w = i;
      }, ["p"]);
      vi.advanceTimersByTime(50); // under the debounce window each time
    }
    expect(calls.length).toBe(0);
    await vi.advanceTimersByTimeAsync(150);
    expect(calls.length).toBe(1);
    expect(calls[0].initial_state.w).toBe(5); // trailing edit wins
  });

  it("discards stale responses; last request wins per panel", async () => {
    const shown: number[] = [];
    let release: (() => void) | null = null;
    let call = 0;
    const ws = new Workspace(structuredClone(DRAFT), { debounceMs: 0 });
    ws.registerPanel<number>("p", {
      request: () => {
        call += 1;
        const mine = call;
        if (mine === 1) {
          // first request resolves only after the second completes
          return new Promise<number>((resolve) => {
            release = () => resolve(mine);
          });
        }
        return Promise.resolve(mine);
      },
      onResult: (value) => shown.push(value),
    });
    const first = ws.fire("p");
    const second = ws.fire("p");
    await second;
    release?.();
    await first;
    expect(shown).toEqual([2]); // the slow first response never renders
  });

  it("queues offline panels and replays them on retry", async () => {
    let offline = true;
    const shown: string[] = [];
    const offlineEvents: boolean[] = [];
    const ws = new Workspace(structuredClone(DRAFT), {
      debounceMs: 0,
      onOffline: (value) => offlineEvents.push(value),
    });
    ws.registerPanel<string>("p", {
      request: async () => {
        if (offline) throw new OfflineError("down");
        return "fresh";
      },
      onResult: (value) => shown.push(value),
    });
    await ws.fire("p");
    expect(ws.offline).toBe(true);
    expect(ws.status("p")).toBe("offline");
    expect(ws.queuedPanels()).toEqual(["p"]);
    expect(shown).toEqual([]);

    offline = false;
    await ws.retryQueued();
    expect(ws.offline).toBe(false);
    expect(ws.status("p")).toBe("synced");
    expect(shown).toEqual(["fresh"]);
    expect(offlineEvents).toEqual([true, false]);
  });

  it("marks panels stale while an edit is pending", async () => {
    const statuses: [string, string][] = [];
    const ws = new Workspace(structuredClone(DRAFT), {
      debounceMs: 150,
      onStatus: (panel, status) => statuses.push([panel, status]),
    });
    ws.registerPanel("p", { request: async () => null, onResult: () => {} });
    ws.edit(() => {}, ["p"]);
    expect(statuses.at(-1)).toEqual(["p", "stale"]);
    await vi.advanceTimersByTimeAsync(150);
    expect(statuses.at(-1)).toEqual(["p", "synced"]);
  });

  it("non-offline failures surface as panel errors", async () => {
    const errors: unknown[] = [];
    const ws = new Workspace(structuredClone(DRAFT), { debounceMs: 0 });
    ws.registerPanel("p", {
      request: async () => {
        throw new Error("validation exploded");
      },
      onResult: () => {},
      onError: (err) => errors.push(err),
    });
    await ws.fire("p");
    expect(ws.status("p")).toBe("error");
    expect(errors.length).toBe(1);
  });
});
