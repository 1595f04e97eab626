/**
 * The four standard figures over sweep CSVs and fit reports.
 *
 * Figures display data; they never compute statistics.  Fitted lines,
 * slopes, and band summaries come verbatim from the fit report produced by
 * `chunglu fit`, so a figure cannot disagree with its fit.  Rendering is a
 * pure function of the parsed inputs: identical inputs give identical
 * bytes.
 */

import { NoDataError, SweepRow } from "./csv.js";
import { FitReport } from "./fit.js";
import {
  Chart,
  linearScale,
  linearTicks,
  logScale,
  logTicks,
  Scale,
} from "./svg.js";

export const FIGURES = [
  "PhaseDiagram",
  "ScalingLogLog",
  "ScalingInverseTheta",
  "SubcriticalBand",
] as const;

export type FigureName = (typeof FIGURES)[number];

export interface AxisOverrides {
  xMin?: number;
  xMax?: number;
  yMin?: number;
  yMax?: number;
}

export interface FigureSpec {
  figure: FigureName;
  fit?: FitReport;
  axes?: AxisOverrides;
}

const CURVE = "#1f77b4";
const POINTS = "#d62728";
const FITLINE = "#2ca02c";

export function renderFigure(rows: SweepRow[], spec: FigureSpec): string {
  const axes = spec.axes ?? {};
  switch (spec.figure) {
    case "PhaseDiagram":
      return phaseDiagram(rows, axes);
    case "ScalingLogLog":
      return scalingLogLog(rows, requireFit(spec, "ScalingLogLog"), axes);
    case "ScalingInverseTheta":
      return scalingInverseTheta(rows, requireFit(spec, "ScalingInverseTheta"), axes);
    case "SubcriticalBand":
      return subcriticalBand(rows, requireFit(spec, "SubcriticalBand"), axes);
  }
}

function override(
  domain: [number, number],
  lo: number | undefined,
  hi: number | undefined,
): [number, number] {
  return [lo ?? domain[0], hi ?? domain[1]];
}

function requireFit(spec: FigureSpec, name: string): FitReport {
  if (!spec.fit) {
    throw new NoDataError(
      `${name} needs --fit: annotations are read from the fit report, never recomputed`,
    );
  }
  return spec.fit;
}

function pad(lo: number, hi: number, frac = 0.06): [number, number] {
  const span = hi - lo || Math.abs(hi) || 1;
  return [lo - span * frac, hi + span * frac];
}

function padLog(lo: number, hi: number): [number, number] {
  return [lo / 1.35, hi * 1.35];
}

function phaseDiagram(rows: SweepRow[], axes: AxisOverrides): string {
  const curve = new Map<number, number>();
  for (const r of rows) {
    if (r.rhoBarAnalytic !== null) curve.set(r.theta, r.rhoBarAnalytic);
  }
  if (!curve.size) throw new NoDataError("no data rows with rho_bar_analytic");
  const curvePts = [...curve.entries()].sort((a, b) => a[0] - b[0]);
  const simPts = rows
    .filter((r) => r.giantFraction !== null)
    .map((r) => [r.theta, r.giantFraction as number] as [number, number]);
  const thetas = curvePts.map(([t]) => t).concat(simPts.map(([t]) => t));
  const [xlo, xhi] = override(pad(Math.min(...thetas), Math.max(...thetas)), axes.xMin, axes.xMax);
  const [ylo, yhi] = override([0, 1], axes.yMin, axes.yMax);
  const chart = new Chart(`Giant fraction vs theta (gamma = ${rows[0].gamma})`);
  const xs = linearScale(xlo, xhi, chart.x0, chart.x1);
  const ys = linearScale(ylo, yhi, chart.y0, chart.y1);
  chart.axes(
    xs,
    ys,
    linearTicks(xlo, xhi),
    linearTicks(ylo, yhi),
    "theta",
    "giant fraction",
  );
  chart.line(
    curvePts.map(([t, v]) => [xs.map(t), ys.map(v)]),
    CURVE,
  );
  chart.dots(
    curvePts.map(([t, v]) => [xs.map(t), ys.map(v)]),
    CURVE,
    2.5,
  );
  chart.dots(
    simPts.map(([t, v]) => [xs.map(t), ys.map(v)]),
    POINTS,
  );
  chart.legend([
    ["analytic rho_bar", CURVE],
    ["simulated |C1|/n per seed", POINTS],
  ]);
  return chart.render();
}

function scalingLogLog(rows: SweepRow[], fit: FitReport, axes: AxisOverrides): string {
  const thetaC = fit.thetaC ?? 0;
  const pts: Array<[number, number]> = [];
  for (const r of rows) {
    const x = r.theta - thetaC;
    if (r.rhoBarAnalytic !== null && r.rhoBarAnalytic > 0 && x > 0) {
      pts.push([x, r.rhoBarAnalytic]);
    }
  }
  if (!pts.length) throw new NoDataError("no positive data rows to plot on log axes");
  pts.sort((a, b) => a[0] - b[0]);
  const [xlo, xhi] = override(padLog(pts[0][0], pts[pts.length - 1][0]), axes.xMin, axes.xMax);
  const yvals = pts.map(([, v]) => v);
  const [ylo, yhi] = override(padLog(Math.min(...yvals), Math.max(...yvals)), axes.yMin, axes.yMax);
  const xName = thetaC > 0 ? "theta - theta_c" : "theta";
  const chart = new Chart(
    `Near-critical scaling, log-log (gamma = ${fit.gamma ?? rows[0].gamma})`,
  );
  const xs = logScale(xlo, xhi, chart.x0, chart.x1);
  const ys = logScale(ylo, yhi, chart.y0, chart.y1);
  chart.axes(xs, ys, logTicks(xlo, xhi), logTicks(ylo, yhi), xName, "rho_bar");
  chart.dots(pts.map(([x, y]) => [xs.map(x), ys.map(y)]), CURVE);
  if (fit.slope !== null && fit.intercept !== null) {
    const line: Array<[number, number]> = [pts[0][0], pts[pts.length - 1][0]].map(
      (x) => {
        const y = Math.exp(fit.slope! * Math.log(x) + fit.intercept!);
        return [xs.map(x), ys.map(y)] as [number, number];
      },
    );
    chart.line(line, FITLINE, 2, "6 4");
  }
  chart.annotation([
    `slope = ${fit.slope}`,
    `stderr = ${fit.stderr}`,
    `fit: ${fit.yName} vs ${fit.xName}`,
  ]);
  return chart.render();
}

function scalingInverseTheta(rows: SweepRow[], fit: FitReport, axes: AxisOverrides): string {
  const pts: Array<[number, number]> = [];
  for (const r of rows) {
    if (r.rhoBarAnalytic !== null && r.rhoBarAnalytic > 0 && r.theta > 0) {
      pts.push([1 / r.theta, Math.log(r.rhoBarAnalytic)]);
    }
  }
  if (!pts.length) throw new NoDataError("no positive data rows to plot");
  pts.sort((a, b) => a[0] - b[0]);
  const [xlo, xhi] = override(pad(pts[0][0], pts[pts.length - 1][0]), axes.xMin, axes.xMax);
  const yvals = pts.map(([, v]) => v);
  const [ylo, yhi] = override(pad(Math.min(...yvals), Math.max(...yvals)), axes.yMin, axes.yMax);
  const chart = new Chart(
    `Exponential scaling in 1/theta (gamma = ${fit.gamma ?? rows[0].gamma})`,
  );
  const xs = linearScale(xlo, xhi, chart.x0, chart.x1);
  const ys = linearScale(ylo, yhi, chart.y0, chart.y1);
  chart.axes(
    xs,
    ys,
    linearTicks(xlo, xhi),
    linearTicks(ylo, yhi),
    "1/theta",
    "log(rho_bar)",
  );
  chart.dots(pts.map(([x, y]) => [xs.map(x), ys.map(y)]), CURVE);
  if (fit.slope !== null && fit.intercept !== null) {
    const line: Array<[number, number]> = [pts[0][0], pts[pts.length - 1][0]].map(
      (x) => [xs.map(x), ys.map(fit.slope! * x + fit.intercept!)] as [number, number],
    );
    chart.line(line, FITLINE, 2, "6 4");
  }
  chart.annotation([
    `slope = ${fit.slope}`,
    `stderr = ${fit.stderr}`,
    `fit: ${fit.yName} vs ${fit.xName}`,
  ]);
  return chart.render();
}

function subcriticalBand(rows: SweepRow[], fit: FitReport, axes: AxisOverrides): string {
  const pts: Array<[number, number]> = [];
  for (const r of rows) {
    if (r.n !== null && r.maxClusterNormalized !== null) {
      pts.push([r.n, r.maxClusterNormalized]);
    }
  }
  if (!pts.length) throw new NoDataError("no data rows with max_cluster_normalized");
  const ns = pts.map(([n]) => n);
  const [xlo, xhi] = override(padLog(Math.min(...ns), Math.max(...ns)), axes.xMin, axes.xMax);
  const yvals = pts.map(([, v]) => v).concat(fit.bandMeans);
  const [ylo, yhi] = override(pad(0, Math.max(...yvals)), axes.yMin, axes.yMax);
  const chart = new Chart(
    `Normalized max cluster vs n (gamma = ${fit.gamma ?? rows[0].gamma})`,
  );
  const xs = logScale(xlo, xhi, chart.x0, chart.x1);
  const ys = linearScale(ylo, yhi, chart.y0, chart.y1);
  chart.axes(
    xs,
    ys,
    logTicks(xlo, xhi),
    linearTicks(ylo, yhi),
    "n",
    "max cluster / n^(1/(gamma-1))",
  );
  chart.dots(pts.map(([x, y]) => [xs.map(x), ys.map(y)]), POINTS);
  if (fit.nValues.length === fit.bandMeans.length && fit.nValues.length > 0) {
    const meanPts = fit.nValues.map(
      (n, i) => [xs.map(n), ys.map(fit.bandMeans[i])] as [number, number],
    );
    chart.line(meanPts, CURVE);
    chart.dots(meanPts, CURVE, 4.5);
  }
  chart.annotation([
    `band ratio = ${fit.bandRatio}`,
    `per-n means from fit report (${fit.nPoints} rows)`,
  ]);
  chart.legend([
    ["per-seed normalized max cluster", POINTS],
    ["per-n mean (fit report)", CURVE],
  ]);
  return chart.render();
}
