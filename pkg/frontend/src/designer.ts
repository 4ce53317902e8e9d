/** Designer view model: what-if exploration of chart parameters.
 *
 * Every edit is validated locally (no request leaves for invalid input);
 * valid parameter sets are sent to the API, which returns the designed
 * limit and the TARL-vs-shift curve.  Designs are created with a
 * deterministic client token derived from the parameters, so re-exploring
 * the same set reuses the same chart, and "open monitor" simply navigates
 * to it.
 */

import { ApiError, type RzApi } from "./api.js";
import type { ChartState, DesignRequest, TarlPoint } from "./types.js";
import { validateDesign, validateRho1, type FieldErrors } from "./validate.js";

export const DEFAULT_TAUS = [0.9, 0.95, 0.98, 0.99, 1.0, 1.01, 1.02, 1.05, 1.1];

export interface DesignerLimit {
  side: "lower" | "upper";
  value: number;
  alpha0: number;
}

export function designToken(req: DesignRequest): string {
  return [
    "designer",
    req.side,
    req.n,
    req.gamma_x,
    req.gamma_y,
    req.z0,
    req.rho0,
    req.horizon_inspections,
    req.tarl0_target ?? "",
  ].join(":");
}

export class DesignerViewModel {
  params: DesignRequest = {
    side: "upper",
    n: 5,
    gamma_x: 0.02,
    gamma_y: 0.01,
    z0: 1,
    rho0: 0.8,
    horizon_inspections: 15,
  };
  rho1: number | null = null; // null -> rho0
  fieldErrors: FieldErrors = {};
  rho1Error: string | null = null;
  apiError: string | null = null;
  limit: DesignerLimit | null = null;
  chart: ChartState | null = null;
  curve: TarlPoint[] = [];
  busy = false;
  requestsFired = 0;
  private generation = 0;

  constructor(private readonly api: RzApi, initial?: Partial<DesignRequest>) {
    if (initial) this.params = { ...this.params, ...initial };
    this.fieldErrors = validateDesign(this.params);
  }

  /** Apply one widget edit; returns true when the whole form is valid. */
  setParam<K extends keyof DesignRequest>(key: K, value: DesignRequest[K]): boolean {
    this.params = { ...this.params, [key]: value };
    this.fieldErrors = validateDesign(this.params);
    this.limit = null;
    this.chart = null;
    this.curve = [];
    return this.isValid();
  }

  setRho1(value: number | null): boolean {
    this.rho1 = value;
    this.rho1Error = value === null ? null : validateRho1(value);
    return this.rho1Error === null;
  }

  isValid(): boolean {
    return Object.keys(this.fieldErrors).length === 0 && this.rho1Error === null;
  }

  /** Fetch limit and curve for the current (valid) parameters. */
  async refresh(): Promise<void> {
    if (!this.isValid()) return; // invalid input never fires a request
    const gen = ++this.generation;
    this.busy = true;
    this.apiError = null;
    try {
      this.requestsFired += 1;
      const req = { ...this.params, client_token: designToken(this.params) };
      const [chart, curve] = await Promise.all([
        this.api.createChart(req),
        this.api.tarlCurve({
          n: this.params.n,
          gamma_x: this.params.gamma_x,
          gamma_y: this.params.gamma_y,
          z0: this.params.z0,
          rho0: this.params.rho0,
          horizon_inspections: this.params.horizon_inspections,
          taus: DEFAULT_TAUS,
          rho1: this.rho1 ?? undefined,
        }),
      ]);
      if (gen !== this.generation) return; // superseded by a newer edit
      this.chart = chart;
      this.limit =
        chart.cfg.side === "upper"
          ? { side: "upper", value: chart.cfg.ucl as number, alpha0: chart.cfg.alpha0 }
          : { side: "lower", value: chart.cfg.lcl, alpha0: chart.cfg.alpha0 };
      this.curve = [...curve].sort((a, b) => a.tau - b.tau);
    } catch (err) {
      if (gen !== this.generation) return;
      this.apiError = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
      this.chart = null;
      this.limit = null;
      this.curve = [];
    } finally {
      if (gen === this.generation) this.busy = false;
    }
  }

  /** "UCL 1.0142" / "LCL 0.9615" for the banner (4 decimals, API value). */
  limitLabel(): string {
    if (!this.limit) return "";
    const name = this.limit.side === "upper" ? "UCL" : "LCL";
    return `${name} ${this.limit.value.toFixed(4)}`;
  }

  /** The curve value at tau = 1 (equals I when rho1 = rho0). */
  tauOnePoint(): number | null {
    const pt = this.curve.find((p) => p.tau === 1.0);
    return pt ? pt.tarl1 : null;
  }

  /** The chart id to open in the monitor view ("create chart" commits). */
  committedChartId(): string | null {
    return this.chart ? this.chart.id : null;
  }
}
