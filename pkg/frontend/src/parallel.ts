/**
 * Parallel-coordinates view of labeled (w, a, m) options.
 *
 * Three vertical axes on a fixed [0, 100] scale; one polyline per option.
 * Frontier members (per the service's frontier response) render bold, the
 * rest faded. Pixel math here is presentation, not domain math.
 */

import { clear, svgEl } from "./dom";
import type { StateDoc } from "./types";

export interface ParallelOptions {
  width?: number;
  height?: number;
  margin?: number;
}

const AXES: { key: keyof StateDoc; label: string }[] = [
  { key: "w", label: "wealth" },
  { key: "a", label: "autonomy" },
  { key: "m", label: "meaning" },
];

export function renderParallelCoordinates(
  host: Element,
  options: { label: string; state: StateDoc }[],
  frontier: Set<string>,
  config: ParallelOptions = {},
): SVGElement {
  const width = config.width ?? 420;
  const height = config.height ?? 220;
  const margin = config.margin ?? 28;
  const innerHeight = height - 2 * margin;
  const step = (width - 2 * margin) / (AXES.length - 1);
  const x = (axis: number) => margin + axis * step;
  const y = (value: number) => margin + innerHeight * (1 - value / 100);

  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
    role: "img",
  });

  for (let i = 0; i < AXES.length; i++) {
    svg.append(
      svgEl("line", {
        x1: x(i), x2: x(i), y1: margin, y2: margin + innerHeight,
        stroke: "#9aa4b2", "stroke-width": 1,
      }),
    );
    const label = svgEl("text", {
      x: x(i), y: height - 6, "text-anchor": "middle", "font-size": 11, fill: "#5b6472",
    });
    label.textContent = AXES[i].label;
    svg.append(label);
  }

  for (const option of options) {
    const points = AXES.map((axis, i) => `${x(i)},${y(option.state[axis.key])}`).join(" ");
    const onFrontier = frontier.has(option.label);
    const line = svgEl("polyline", {
      points,
      fill: "none",
      stroke: onFrontier ? "#1f6feb" : "#b7bec8",
      "stroke-width": onFrontier ? 2.5 : 1,
      opacity: onFrontier ? 1 : 0.6,
    });
    line.setAttribute("data-option", option.label);
    line.setAttribute("data-frontier", onFrontier ? "true" : "false");
    svg.append(line);
  }

  clear(host);
  host.append(svg);
  return svg;
}
