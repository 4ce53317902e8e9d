/** Typed client for the rzchart HTTP API.
 *
 * All numbers displayed anywhere in the UI come from this client; the UI
 * itself never computes a limit or a run length.
 */

import type {
  ChartState,
  DesignRequest,
  InspectionRecord,
  TarlPoint,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export interface TarlQuery {
  n: number;
  gamma_x: number;
  gamma_y: number;
  z0: number;
  rho0: number;
  horizon_inspections: number;
  taus: number[];
  rho1?: number;
  side?: "lower" | "upper";
}

/** The surface the view models depend on (stubbed in tests). */
export interface RzApi {
  createChart(req: DesignRequest): Promise<ChartState>;
  getChart(id: string): Promise<ChartState>;
  listCharts(): Promise<ChartState[]>;
  postInspection(
    id: string,
    xs: number[],
    ys: number[],
    label?: string,
  ): Promise<InspectionRecord>;
  resetChart(id: string): Promise<ChartState>;
  tarlCurve(query: TarlQuery): Promise<TarlPoint[]>;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class HttpApi implements RzApi {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await this.fetchFn(this.base + path, {
      method,
      headers: body !== undefined ? { "Content-Type": "application/json" } : undefined,
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    const payload = await resp.json();
    if (!resp.ok) {
      const err = payload?.error ?? {};
      throw new ApiError(resp.status, err.code ?? "unknown", err.message ?? resp.statusText);
    }
    return payload as T;
  }

  createChart(req: DesignRequest): Promise<ChartState> {
    return this.request("POST", "/api/charts", req);
  }

  getChart(id: string): Promise<ChartState> {
    return this.request("GET", `/api/charts/${encodeURIComponent(id)}`);
  }

  async listCharts(): Promise<ChartState[]> {
    const payload = await this.request<{ charts: ChartState[] }>("GET", "/api/charts");
    return payload.charts;
  }

  postInspection(
    id: string,
    xs: number[],
    ys: number[],
    label?: string,
  ): Promise<InspectionRecord> {
    return this.request("POST", `/api/charts/${encodeURIComponent(id)}/inspections`, {
      x_values: xs,
      y_values: ys,
      ...(label ? { label } : {}),
    });
  }

  resetChart(id: string): Promise<ChartState> {
    return this.request("POST", `/api/charts/${encodeURIComponent(id)}/reset`);
  }

  async tarlCurve(query: TarlQuery): Promise<TarlPoint[]> {
    const params = new URLSearchParams({
      n: String(query.n),
      gamma_x: String(query.gamma_x),
      gamma_y: String(query.gamma_y),
      z0: String(query.z0),
      rho0: String(query.rho0),
      I: String(query.horizon_inspections),
      taus: query.taus.join(","),
    });
    if (query.rho1 !== undefined) params.set("rho1", String(query.rho1));
    if (query.side !== undefined) params.set("side", query.side);
    const payload = await this.request<{ results: TarlPoint[] }>(
      "GET",
      `/api/tarl?${params.toString()}`,
    );
    return payload.results;
  }
}
