/**
 * Panel 1 — Preferences & State: three linked weight sliders that always
 * sum to 1 (simplex editor) and numeric entry for the current (w, a, m).
 */

import { clear, h } from "../dom";
import { fixed } from "../format";
import { isValidSimplex, setWeight, SimplexTriple } from "../simplex";
import type { Workspace } from "../state";

const WEIGHT_KEYS = ["lambda_w", "lambda_a", "lambda_m"] as const;
const WEIGHT_LABELS = ["wealth weight", "autonomy weight", "meaning weight"];
const STATE_KEYS = ["w", "a", "m"] as const;

export class PreferencesPanel {
  readonly el: HTMLElement;
  /** panels to refresh when preferences or the current state change */
  affects: string[] = [];

  private sliders: HTMLInputElement[] = [];
  private readouts: HTMLElement[] = [];

  constructor(private workspace: Workspace) {
    this.el = h("section", { class: "panel", id: "panel-preferences" });
    this.render();
  }

  weights(): SimplexTriple {
    const p = this.workspace.draft.preferences;
    return [p.lambda_w, p.lambda_a, p.lambda_m];
  }

  /** Slider movement: renormalize the triple, write back, refresh. */
  moveWeight(index: 0 | 1 | 2, value: number): void {
    const next = setWeight(this.weights(), index, value);
    if (!isValidSimplex(next)) {
      // unreachable by construction; refuse rather than submit garbage
      return;
    }
    this.workspace.edit((draft) => {
      draft.preferences = {
        lambda_w: next[0],
        lambda_a: next[1],
        lambda_m: next[2],
      };
    }, this.affects);
    this.sync();
  }

  setStateAxis(axis: (typeof STATE_KEYS)[number], value: number): void {
    const clamped = Math.min(100, Math.max(0, value));
    this.workspace.edit((draft) => {
      draft.initial_state = { ...draft.initial_state, [axis]: clamped };
    }, this.affects);
  }

  private render(): void {
    clear(this.el);
    this.sliders = [];
    this.readouts = [];
    const weights = this.weights();
    const sliderRows = WEIGHT_KEYS.map((key, i) => {
      const slider = h("input", {
        type: "range",
        min: 0,
        max: 1000,
        value: Math.round(weights[i] * 1000),
        id: `slider-${key}`,
        oninput: (event: Event) => {
          const raw = Number((event.target as HTMLInputElement).value) / 1000;
          this.moveWeight(i as 0 | 1 | 2, raw);
        },
      });
      const readout = h(
        "output",
        { class: "weight-value", "data-weight": key },
        fixed(weights[i], 3),
      );
      this.sliders.push(slider);
      this.readouts.push(readout);
      return h("label", { class: "row" }, WEIGHT_LABELS[i], slider, readout);
    });

    const state = this.workspace.draft.initial_state;
    const stateInputs = STATE_KEYS.map((key) =>
      h(
        "label",
        { class: "row" },
        `current ${key}`,
        h("input", {
          type: "number",
          min: 0,
          max: 100,
          step: 1,
          value: state[key],
          id: `state-${key}`,
          onchange: (event: Event) => {
            this.setStateAxis(key, Number((event.target as HTMLInputElement).value));
          },
        }),
      ),
    );

    this.el.append(
      h("h2", {}, "Preferences & State"),
      ...sliderRows,
      h("p", { class: "hint" }, "weights always sum to 1"),
      ...stateInputs,
    );
  }

  /** Refresh slider positions/readouts after a linked move. */
  private sync(): void {
    const weights = this.weights();
    this.sliders.forEach((slider, i) => {
      slider.value = String(Math.round(weights[i] * 1000));
    });
    this.readouts.forEach((readout, i) => {
      readout.textContent = fixed(weights[i], 3);
    });
  }
}
