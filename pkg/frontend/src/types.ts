/** Payload shapes of the rzchart HTTP API. */

export type ChartSide = "lower" | "upper";

export interface DesignRequest {
  side: ChartSide;
  n: number;
  gamma_x: number;
  gamma_y: number;
  z0: number;
  rho0: number;
  horizon_inspections: number;
  tarl0_target?: number;
  client_token?: string;
}

export interface ChartConfig {
  side: ChartSide;
  n: number;
  horizon_inspections: number;
  z0: number;
  rho0: number;
  gamma_x: number;
  gamma_y: number;
  alpha0: number;
  lcl: number;
  /** null encodes the lower chart's never-triggering +infinity bound */
  ucl: number | null;
  tarl0_target: number;
}

export interface InspectionRecord {
  index: number;
  x_values: number[];
  y_values: number[];
  x_bar: number;
  y_bar: number;
  z_hat: number;
  signal: boolean;
  timestamp: string | null;
  label: string | null;
  chart_status?: string;
}

export type ChartStatus = "active" | "signaled_active" | "completed";

export interface ChartSummary {
  status: ChartStatus;
  signal_count: number;
  signal_indices: number[];
  inspections_done: number;
  inspections_remaining: number;
  last_z_hat: number | null;
  lcl: number;
  ucl: number | null;
}

export interface ChartState {
  id: string;
  cfg: ChartConfig;
  records: InspectionRecord[];
  status: ChartStatus;
  created_at: string;
  updated_at: string;
  parent_id: string | null;
  client_token?: string | null;
  summary?: ChartSummary;
}

export interface TarlPoint {
  tau: number;
  side: ChartSide;
  tarl1: number;
}

export interface ApiErrorPayload {
  code: string;
  message: string;
  detail?: unknown;
}
