/** Client-side input validation mirroring the API's parameter ranges.
 *
 * The widgets reject what the server would reject, so no request is fired
 * for out-of-range values; the server remains the authority.
 */

import type { DesignRequest } from "./types.js";

export type FieldErrors = Partial<Record<keyof DesignRequest, string>>;

export function validateDesign(req: DesignRequest): FieldErrors {
  const errors: FieldErrors = {};
  if (req.side !== "lower" && req.side !== "upper") {
    errors.side = "side must be lower or upper";
  }
  if (!Number.isInteger(req.n) || req.n < 1) {
    errors.n = "n must be an integer ≥ 1";
  }
  for (const key of ["gamma_x", "gamma_y"] as const) {
    const v = req[key];
    if (!Number.isFinite(v) || v <= 0) {
      errors[key] = "must be > 0";
    } else if (v > 0.5) {
      errors[key] = "must be ≤ 0.5 (approximation limit)";
    }
  }
  if (!Number.isFinite(req.z0) || req.z0 <= 0) {
    errors.z0 = "must be > 0";
  }
  if (!Number.isFinite(req.rho0) || req.rho0 <= -1 || req.rho0 >= 1) {
    errors.rho0 = "must lie strictly between -1 and 1";
  }
  if (!Number.isInteger(req.horizon_inspections) || req.horizon_inspections < 2) {
    errors.horizon_inspections = "must be an integer ≥ 2";
  }
  if (req.tarl0_target !== undefined) {
    if (
      !Number.isFinite(req.tarl0_target) ||
      req.tarl0_target <= 1 ||
      req.tarl0_target >= req.horizon_inspections + 1
    ) {
      errors.tarl0_target = "must lie in (1, I+1)";
    }
  }
  return errors;
}

export function validateRho1(rho1: number): string | null {
  if (!Number.isFinite(rho1) || rho1 <= -1 || rho1 >= 1) {
    return "must lie strictly between -1 and 1";
  }
  return null;
}

export interface ParsedSample {
  xs: number[];
  ys: number[];
}

/** Parse n lines of "x,y" (comma, tab or space separated) pasted or typed. */
export function parsePairs(text: string, n: number): ParsedSample | { error: string } {
  const lines = text
    .split(/\r?\n/)
    .map((l) => l.trim())
    .filter((l) => l.length > 0);
  if (lines.length !== n) {
    return { error: `expected ${n} (x, y) pairs, got ${lines.length}` };
  }
  const xs: number[] = [];
  const ys: number[] = [];
  for (const [i, line] of lines.entries()) {
    const parts = line.split(/[,\t ]+/).filter((p) => p.length > 0);
    if (parts.length !== 2) {
      return { error: `line ${i + 1}: expected two values, got ${parts.length}` };
    }
    const x = Number(parts[0]);
    const y = Number(parts[1]);
    if (!Number.isFinite(x) || !Number.isFinite(y)) {
      return { error: `line ${i + 1}: values must be finite numbers` };
    }
    xs.push(x);
    ys.push(y);
  }
  return { xs, ys };
}
