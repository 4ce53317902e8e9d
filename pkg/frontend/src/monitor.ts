/** Monitor view model: live sample entry against a designed chart.
 *
 * Sample text is validated locally (pair count must match the chart's n)
 * before anything is sent; the API's record decides the point's signal
 * state, and the banner mirrors the chart status it reports.  Entry is
 * disabled once the run completes; reset starts a fresh linked run.
 */

import { ApiError, type RzApi } from "./api.js";
import type { ChartState, ChartStatus, InspectionRecord } from "./types.js";
import { parsePairs } from "./validate.js";

export interface PlottedPoint {
  index: number;
  z: number;
  signal: boolean;
  label: string | null;
}

export class MonitorViewModel {
  chart: ChartState | null = null;
  apiError: string | null = null;
  entryError: string | null = null;
  busy = false;

  constructor(private readonly api: RzApi) {}

  async load(chartId: string): Promise<void> {
    this.busy = true;
    this.apiError = null;
    try {
      this.chart = await this.api.getChart(chartId);
    } catch (err) {
      this.apiError = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
      this.chart = null;
    } finally {
      this.busy = false;
    }
  }

  /** Used by tests and the designer hand-off to avoid a network round-trip. */
  attach(chart: ChartState): void {
    this.chart = chart;
    this.apiError = null;
    this.entryError = null;
  }

  get status(): ChartStatus | null {
    return this.chart ? this.chart.status : null;
  }

  get entryEnabled(): boolean {
    return this.chart !== null && this.chart.status !== "completed";
  }

  get sampleSize(): number {
    return this.chart ? this.chart.cfg.n : 0;
  }

  get horizon(): number {
    return this.chart ? this.chart.cfg.horizon_inspections : 0;
  }

  get inspectionsDone(): number {
    return this.chart ? this.chart.records.length : 0;
  }

  signalIndices(): number[] {
    if (!this.chart) return [];
    return this.chart.records.filter((r) => r.signal).map((r) => r.index);
  }

  points(): PlottedPoint[] {
    if (!this.chart) return [];
    return this.chart.records.map((r) => ({
      index: r.index,
      z: r.z_hat,
      signal: r.signal,
      label: r.label,
    }));
  }

  /** The one-sided limit to draw: the solved bound for the chart's side. */
  limit(): { side: "lower" | "upper"; value: number } | null {
    if (!this.chart) return null;
    const cfg = this.chart.cfg;
    return cfg.side === "upper"
      ? { side: "upper", value: cfg.ucl as number }
      : { side: "lower", value: cfg.lcl };
  }

  bannerText(): string {
    switch (this.status) {
      case "active":
        return "In control — monitoring";
      case "signaled_active":
        return "SIGNAL — out-of-control point detected; run continues";
      case "completed":
        return "Run completed";
      default:
        return "No chart loaded";
    }
  }

  /** Submit one inspection from pasted/typed "x,y" lines. */
  async submitSample(text: string, label?: string): Promise<InspectionRecord | null> {
    if (!this.chart) return null;
    if (!this.entryEnabled) {
      this.entryError = "run completed; reset to start a new one";
      return null;
    }
    const parsed = parsePairs(text, this.chart.cfg.n);
    if ("error" in parsed) {
      this.entryError = parsed.error; // inline; nothing is sent
      return null;
    }
    this.entryError = null;
    this.apiError = null;
    this.busy = true;
    try {
      const record = await this.api.postInspection(
        this.chart.id,
        parsed.xs,
        parsed.ys,
        label,
      );
      this.chart.records.push(record);
      if (record.chart_status) {
        this.chart.status = record.chart_status as ChartStatus;
      }
      return record;
    } catch (err) {
      this.apiError = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
      if (err instanceof ApiError && err.status === 409) {
        this.chart.status = "completed";
      }
      return null;
    } finally {
      this.busy = false;
    }
  }

  /** Corrective action taken: start a fresh run with the same design. */
  async reset(): Promise<void> {
    if (!this.chart) return;
    this.busy = true;
    this.apiError = null;
    try {
      this.chart = await this.api.resetChart(this.chart.id);
      this.entryError = null;
    } catch (err) {
      this.apiError = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
    } finally {
      this.busy = false;
    }
  }
}
