/** In-memory API double for view-model tests: serves the frozen fixture
 * payloads and records every call so tests can assert what was (not) sent.
 */

import type { RzApi, TarlQuery } from "../src/api.js";
import { ApiError } from "../src/api.js";
import type {
  ChartState,
  DesignRequest,
  InspectionRecord,
  TarlPoint,
} from "../src/types.js";
import {
  CURVE_RESPONSE,
  DESIGN_RESPONSE,
  INSPECTION_RESPONSES,
} from "./fixtures.js";

function clone<T>(v: T): T {
  return JSON.parse(JSON.stringify(v)) as T;
}

export class FakeApi implements RzApi {
  calls: { method: string; args: unknown[] }[] = [];
  nextInspection = 0;
  charts = new Map<string, ChartState>();

  constructor() {
    const fresh = clone(DESIGN_RESPONSE);
    this.charts.set(fresh.id, fresh);
  }

  private record(method: string, ...args: unknown[]): void {
    this.calls.push({ method, args });
  }

  callCount(method?: string): number {
    return method
      ? this.calls.filter((c) => c.method === method).length
      : this.calls.length;
  }

  async createChart(req: DesignRequest): Promise<ChartState> {
    this.record("createChart", req);
    const state = clone(DESIGN_RESPONSE);
    state.client_token = req.client_token ?? null;
    return state;
  }

  async getChart(id: string): Promise<ChartState> {
    this.record("getChart", id);
    const state = this.charts.get(id);
    if (!state) throw new ApiError(404, "not_found", `no such chart: ${id}`);
    return clone(state);
  }

  async listCharts(): Promise<ChartState[]> {
    this.record("listCharts");
    return [...this.charts.values()].map(clone);
  }

  async postInspection(
    id: string,
    xs: number[],
    ys: number[],
    label?: string,
  ): Promise<InspectionRecord> {
    this.record("postInspection", id, xs, ys, label);
    const state = this.charts.get(id);
    if (!state) throw new ApiError(404, "not_found", `no such chart: ${id}`);
    if (state.status === "completed") {
      throw new ApiError(409, "conflict", "run already completed");
    }
    if (this.nextInspection >= INSPECTION_RESPONSES.length) {
      throw new ApiError(409, "conflict", "fixture exhausted");
    }
    const record = clone(INSPECTION_RESPONSES[this.nextInspection]);
    this.nextInspection += 1;
    state.records.push(record);
    state.status = (record.chart_status ?? state.status) as ChartState["status"];
    return record;
  }

  async resetChart(id: string): Promise<ChartState> {
    this.record("resetChart", id);
    const parent = this.charts.get(id);
    if (!parent) throw new ApiError(404, "not_found", `no such chart: ${id}`);
    const fresh = clone(DESIGN_RESPONSE);
    fresh.id = `${id}-reset`;
    fresh.parent_id = id;
    fresh.records = [];
    fresh.status = "active";
    this.charts.set(fresh.id, fresh);
    this.nextInspection = 0;
    return clone(fresh);
  }

  async tarlCurve(query: TarlQuery): Promise<TarlPoint[]> {
    this.record("tarlCurve", query);
    return clone(CURVE_RESPONSE);
  }
}
