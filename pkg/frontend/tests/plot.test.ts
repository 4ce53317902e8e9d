import { describe, expect, it } from "vitest";

import { curveSvg, monitorPlotSvg } from "../src/plot.js";
import type { PlottedPoint } from "../src/monitor.js";
import { CURVE_RESPONSE, FINAL_STATE } from "./fixtures.js";

const POINTS: PlottedPoint[] = FINAL_STATE.records.map((r) => ({
  index: r.index,
  z: r.z_hat,
  signal: r.signal,
  label: r.label,
}));

describe("monitorPlotSvg", () => {
  it("renders the full replay with exactly 3 signal-styled points", () => {
    const svg = monitorPlotSvg(POINTS, { side: "upper", value: 1.0142083149011651 }, 15);
    expect(svg.match(/class="pt signal"/g)).toHaveLength(3);
    expect(svg.match(/class="pt"/g)).toHaveLength(12);
    expect(svg).toContain("UCL 1.01421");
    expect(svg).toContain('<polyline class="series"');
  });

  it("puts points above the limit line above it on screen (y inverted)", () => {
    const limit = { side: "upper" as const, value: 1.0142083149011651 };
    const svg = monitorPlotSvg(POINTS, limit, 15);
    const limitY = Number(/class="limit" x1="[^"]+" y1="([0-9.]+)"/.exec(svg)![1]);
    const circles = [...svg.matchAll(/<circle class="pt( signal)?" cx="[0-9.]+" cy="([0-9.]+)"/g)];
    expect(circles).toHaveLength(15);
    for (const [i, m] of circles.entries()) {
      const cy = Number(m[2]);
      if (POINTS[i].signal) {
        expect(cy).toBeLessThan(limitY); // SVG y grows downward
      } else {
        expect(cy).toBeGreaterThan(limitY);
      }
    }
  });

  it("renders an empty chart without points", () => {
    const svg = monitorPlotSvg([], { side: "lower", value: 0.9615 }, 10);
    expect(svg).toContain("LCL 0.96150");
    expect(svg).not.toContain('class="pt"');
  });
});

describe("curveSvg", () => {
  it("draws the TARL curve with one marker per shift", () => {
    const svg = curveSvg(CURVE_RESPONSE, 15);
    expect(svg.match(/<circle class="pt/g)).toHaveLength(CURVE_RESPONSE.length);
    expect(svg).toContain('class="pt incontrol"'); // tau = 1 marker
    expect(svg).toContain('<polyline class="series"');
  });

  it("handles an empty curve", () => {
    expect(curveSvg([], 15)).toContain("<svg");
  });
});
