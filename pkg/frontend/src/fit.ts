/**
 * Reader for the fit-report JSON emitted by `chunglu fit`
 * (schema id "cl-fit-1").  Figures display these numbers verbatim and
 * never recompute them, so a figure cannot disagree with its fit report.
 */

import { SchemaError } from "./csv.js";

export const FIT_SCHEMA = "cl-fit-1";

export interface FitReport {
  mode: string;
  slope: number | null;
  stderr: number | null;
  intercept: number | null;
  nPoints: number;
  xName: string;
  yName: string;
  gamma: number | null;
  thetaC: number | null;
  bandRatio: number | null;
  nValues: number[];
  bandMeans: number[];
}

export function parseFitReport(text: string): FitReport {
  let raw: Record<string, unknown>;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    throw new SchemaError(`fit report is not valid JSON: ${err}`);
  }
  if (raw["schema"] !== FIT_SCHEMA) {
    throw new SchemaError(
      `unknown fit schema id ${JSON.stringify(raw["schema"])} ` +
        `(this tool renders ${FIT_SCHEMA})`,
    );
  }
  return {
    mode: String(raw["mode"]),
    slope: raw["slope"] as number | null,
    stderr: raw["stderr"] as number | null,
    intercept: raw["intercept"] as number | null,
    nPoints: Number(raw["n_points"] ?? 0),
    xName: String(raw["x_name"] ?? ""),
    yName: String(raw["y_name"] ?? ""),
    gamma: raw["gamma"] as number | null,
    thetaC: raw["theta_c"] as number | null,
    bandRatio: raw["band_ratio"] as number | null,
    nValues: (raw["n_values"] as number[]) ?? [],
    bandMeans: (raw["band_means"] as number[]) ?? [],
  };
}
