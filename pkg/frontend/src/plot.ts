/** Pure SVG builders: a run chart of the plotted ratio against its limit,
 * and the TARL-vs-shift curve.  No DOM access; both return markup strings.
 */

import type { PlottedPoint } from "./monitor.js";
import type { TarlPoint } from "./types.js";

const W = 640;
const H = 300;
const PAD = { left: 56, right: 16, top: 16, bottom: 36 };

interface Scale {
  (v: number): number;
}

function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
}

function fmt(v: number): string {
  return Number(v.toFixed(2)).toString();
}

function axis(xScale: Scale, yScale: Scale, xTicks: number[], yTicks: number[],
              xLabel: string, yLabel: string): string {
  const parts: string[] = [];
  const y0 = H - PAD.bottom;
  parts.push(`<line class="axis" x1="${PAD.left}" y1="${y0}" x2="${W - PAD.right}" y2="${y0}"/>`);
  parts.push(`<line class="axis" x1="${PAD.left}" y1="${PAD.top}" x2="${PAD.left}" y2="${y0}"/>`);
  for (const t of xTicks) {
    const x = xScale(t);
    parts.push(`<line class="tick" x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 4}"/>`);
    parts.push(`<text class="ticklabel" x="${x}" y="${y0 + 18}" text-anchor="middle">${fmt(t)}</text>`);
  }
  for (const t of yTicks) {
    const y = yScale(t);
    parts.push(`<line class="tick" x1="${PAD.left - 4}" y1="${y}" x2="${PAD.left}" y2="${y}"/>`);
    parts.push(`<text class="ticklabel" x="${PAD.left - 8}" y="${y + 4}" text-anchor="end">${fmt(t)}</text>`);
  }
  parts.push(`<text class="axislabel" x="${(PAD.left + W - PAD.right) / 2}" y="${H - 4}" text-anchor="middle">${xLabel}</text>`);
  parts.push(`<text class="axislabel" x="14" y="${(PAD.top + y0) / 2}" text-anchor="middle" transform="rotate(-90 14 ${(PAD.top + y0) / 2})">${yLabel}</text>`);
  return parts.join("");
}

function ticks(lo: number, hi: number, count: number): number[] {
  const out: number[] = [];
  for (let i = 0; i <= count; i++) out.push(lo + ((hi - lo) * i) / count);
  return out;
}

/** Run chart: plotted ratio per inspection with the one-sided limit line. */
export function monitorPlotSvg(
  points: PlottedPoint[],
  limit: { side: "lower" | "upper"; value: number } | null,
  horizon: number,
): string {
  const zs = points.map((p) => p.z);
  if (limit) zs.push(limit.value);
  const zLo = zs.length ? Math.min(...zs) : 0.99;
  const zHi = zs.length ? Math.max(...zs) : 1.01;
  const margin = (zHi - zLo || 0.01) * 0.15;
  const x = linearScale(1, Math.max(horizon, 2), PAD.left, W - PAD.right);
  const y = linearScale(zLo - margin, zHi + margin, H - PAD.bottom, PAD.top);

  const parts: string[] = [];
  parts.push(axis(x, y, ticks(1, Math.max(horizon, 2), Math.min(horizon - 1, 14)),
                  ticks(zLo - margin, zHi + margin, 5), "inspection", "ratio of sample means"));
  if (limit) {
    const ly = y(limit.value);
    parts.push(`<line class="limit" x1="${PAD.left}" y1="${ly}" x2="${W - PAD.right}" y2="${ly}"/>`);
    parts.push(`<text class="limitlabel" x="${W - PAD.right}" y="${ly - 6}" text-anchor="end">` +
      `${limit.side === "upper" ? "UCL" : "LCL"} ${limit.value.toFixed(5)}</text>`);
  }
  if (points.length > 1) {
    const path = points.map((p) => `${x(p.index)},${y(p.z)}`).join(" ");
    parts.push(`<polyline class="series" points="${path}"/>`);
  }
  for (const p of points) {
    const cls = p.signal ? "pt signal" : "pt";
    parts.push(`<circle class="${cls}" cx="${x(p.index)}" cy="${y(p.z)}" r="5">` +
      `<title>#${p.index}${p.label ? ` (${p.label})` : ""}: ${p.z.toFixed(3)}` +
      `${p.signal ? " — SIGNAL" : ""}</title></circle>`);
  }
  return `<svg viewBox="0 0 ${W} ${H}" role="img" aria-label="run chart">${parts.join("")}</svg>`;
}

/** TARL-vs-shift curve from the API (tau ascending). */
export function curveSvg(points: TarlPoint[], horizon: number): string {
  if (points.length === 0) {
    return `<svg viewBox="0 0 ${W} ${H}" role="img" aria-label="tarl curve"></svg>`;
  }
  const taus = points.map((p) => p.tau);
  const x = linearScale(Math.min(...taus), Math.max(...taus), PAD.left, W - PAD.right);
  const y = linearScale(0, Math.max(horizon + 1, ...points.map((p) => p.tarl1)),
                        H - PAD.bottom, PAD.top);
  const parts: string[] = [];
  parts.push(axis(x, y, taus, ticks(0, horizon + 1, 5), "shift multiplier",
                  "expected truncated run length"));
  const path = points.map((p) => `${x(p.tau)},${y(p.tarl1)}`).join(" ");
  parts.push(`<polyline class="series" points="${path}"/>`);
  for (const p of points) {
    parts.push(`<circle class="pt${p.tau === 1 ? " incontrol" : ""}" cx="${x(p.tau)}" cy="${y(p.tarl1)}" r="4">` +
      `<title>tau ${p.tau} (${p.side}): ${p.tarl1.toFixed(1)}</title></circle>`);
  }
  return `<svg viewBox="0 0 ${W} ${H}" role="img" aria-label="tarl curve">${parts.join("")}</svg>`;
}
