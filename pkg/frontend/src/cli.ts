#!/usr/bin/env node
/**
 * plot --figure <name> --in <csv> [--fit <json>] --out <path>
 *
 * Renders one SVG figure from a chunglu sweep CSV and, for the scaling and
 * band figures, the matching fit report.  Exit codes mirror the producer:
 * 0 success, 1 usage, 2 schema or data mismatch, 3 I/O.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { NoDataError, parseSweepCsv, SchemaError } from "./csv.js";
import { AxisOverrides, FIGURES, FigureName, renderFigure } from "./figures.js";
import { parseFitReport } from "./fit.js";

export const EXIT_OK = 0;
export const EXIT_USAGE = 1;
export const EXIT_SCHEMA = 2;
export const EXIT_IO = 3;

interface Args {
  figure: FigureName;
  inPath: string;
  fitPath?: string;
  outPath: string;
  axes: AxisOverrides;
}

const USAGE =
  "usage: plot --figure <PhaseDiagram|ScalingLogLog|ScalingInverseTheta|SubcriticalBand> " +
  "--in <sweep.csv> [--fit <fit.json>] --out <figure.svg> " +
  "[--x-min V] [--x-max V] [--y-min V] [--y-max V]";

class UsageError extends Error {}

function parseArgs(argv: string[]): Args {
  const values = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new UsageError(`malformed arguments near ${JSON.stringify(flag)}`);
    }
    values.set(flag.slice(2), value);
  }
  const figure = values.get("figure");
  const inPath = values.get("in");
  const outPath = values.get("out");
  if (!figure || !inPath || !outPath) {
    throw new UsageError("--figure, --in and --out are required");
  }
  if (!(FIGURES as readonly string[]).includes(figure)) {
    throw new UsageError(
      `unknown figure ${JSON.stringify(figure)}; expected one of ${FIGURES.join(", ")}`,
    );
  }
  for (const key of values.keys()) {
    if (!["figure", "in", "fit", "out", "x-min", "x-max", "y-min", "y-max"].includes(key)) {
      throw new UsageError(`unknown flag --${key}`);
    }
  }
  const axis = (key: string): number | undefined => {
    const raw = values.get(key);
    if (raw === undefined) return undefined;
    const value = Number(raw);
    if (!Number.isFinite(value)) {
      throw new UsageError(`--${key} must be numeric, got ${JSON.stringify(raw)}`);
    }
    return value;
  };
  return {
    figure: figure as FigureName,
    inPath,
    fitPath: values.get("fit"),
    outPath,
    axes: {
      xMin: axis("x-min"),
      xMax: axis("x-max"),
      yMin: axis("y-min"),
      yMax: axis("y-max"),
    },
  };
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    console.error(USAGE);
    return EXIT_USAGE;
  }
  let csvText: string;
  let fitText: string | undefined;
  try {
    csvText = readFileSync(args.inPath, "utf-8");
    fitText = args.fitPath ? readFileSync(args.fitPath, "utf-8") : undefined;
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return EXIT_IO;
  }
  let svg: string;
  try {
    const rows = parseSweepCsv(csvText);
    const fit = fitText !== undefined ? parseFitReport(fitText) : undefined;
    svg = renderFigure(rows, { figure: args.figure, fit, axes: args.axes });
  } catch (err) {
    if (err instanceof SchemaError || err instanceof NoDataError) {
      console.error(`error: ${err.message}`);
      return EXIT_SCHEMA;
    }
    throw err;
  }
  try {
    writeFileSync(args.outPath, svg, "utf-8");
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return EXIT_IO;
  }
  return EXIT_OK;
}

const isDirectRun =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (isDirectRun) {
  process.exit(main(process.argv.slice(2)));
}
