/**
 * Strict reader for the sweep CSV schema emitted by the chunglu CLI
 * (schema id "cl-sweep-1").  The header must match the schema columns
 * exactly; every row must carry the schema id in its first cell.
 */

export const SWEEP_SCHEMA = "cl-sweep-1";

export const SWEEP_COLUMNS = [
  "schema",
  "gamma",
  "theta",
  "n",
  "seed",
  "m",
  "c1",
  "c2",
  "giant_fraction",
  "rho_bar_analytic",
  "a_theta",
  "max_cluster_normalized",
  "elapsed",
  "status",
  "error",
] as const;

export interface SweepRow {
  gamma: number;
  theta: number;
  n: number | null;
  seed: number | null;
  m: number | null;
  c1: number | null;
  c2: number | null;
  giantFraction: number | null;
  rhoBarAnalytic: number | null;
  aTheta: number | null;
  maxClusterNormalized: number | null;
  elapsed: number | null;
  status: string;
  error: string;
}

/** Header or schema-id does not match what this tool renders. */
export class SchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaError";
  }
}

/** Structurally valid CSV with zero usable data rows. */
export class NoDataError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "NoDataError";
  }
}

function columnDiff(got: string[]): string {
  const expected = SWEEP_COLUMNS as readonly string[];
  const missing = expected.filter((c) => !got.includes(c));
  const unexpected = got.filter((c) => !expected.includes(c));
  const parts = [];
  if (missing.length) parts.push(`missing columns: ${missing.join(", ")}`);
  if (unexpected.length) parts.push(`unexpected columns: ${unexpected.join(", ")}`);
  if (!parts.length) parts.push("columns reordered");
  return parts.join("; ");
}

function floatOrNull(cell: string, line: number, column: string): number | null {
  if (cell === "") return null;
  const value = Number(cell);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`line ${line}: column ${column} is not numeric: ${cell}`);
  }
  return value;
}

export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.split("\n");
  if (lines.length && lines[lines.length - 1] === "") lines.pop();
  if (!lines.length) throw new SchemaError("empty file");
  const header = lines[0].split(",");
  if (
    header.length !== SWEEP_COLUMNS.length ||
    header.some((c, i) => c !== SWEEP_COLUMNS[i])
  ) {
    throw new SchemaError(
      `unexpected CSV header for schema ${SWEEP_SCHEMA}: ${columnDiff(header)}`,
    );
  }
  const rows: SweepRow[] = [];
  for (let k = 1; k < lines.length; k++) {
    // the writer never quotes; only the trailing error column may hold commas
    const cells = lines[k].split(",");
    if (cells.length < SWEEP_COLUMNS.length) {
      throw new SchemaError(
        `line ${k + 1}: expected ${SWEEP_COLUMNS.length} cells, got ${cells.length}`,
      );
    }
    if (cells[0] !== SWEEP_SCHEMA) {
      throw new SchemaError(
        `line ${k + 1}: unknown schema id ${JSON.stringify(cells[0])} ` +
          `(this tool renders ${SWEEP_SCHEMA})`,
      );
    }
    const num = (i: number) => floatOrNull(cells[i], k + 1, SWEEP_COLUMNS[i]);
    rows.push({
      gamma: num(1) ?? NaN,
      theta: num(2) ?? NaN,
      n: num(3),
      seed: num(4),
      m: num(5),
      c1: num(6),
      c2: num(7),
      giantFraction: num(8),
      rhoBarAnalytic: num(9),
      aTheta: num(10),
      maxClusterNormalized: num(11),
      elapsed: num(12),
      status: cells[13],
      error: cells.slice(14).join(","),
    });
  }
  const usable = rows.filter((r) => r.status === "ok");
  if (!usable.length) throw new NoDataError("no data rows");
  return usable;
}
