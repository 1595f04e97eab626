/**
 * Renders all four figures from the CSVs and fit reports produced by the
 * acceptance sweeps (artifacts/acceptance when present, the checked-in
 * fixtures otherwise), and checks the error paths.
 */

import { existsSync, mkdtempSync, readFileSync, statSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { EXIT_IO, EXIT_OK, EXIT_SCHEMA, EXIT_USAGE, main } from "../src/cli.js";
import { NoDataError, parseSweepCsv, SchemaError, SWEEP_COLUMNS } from "../src/csv.js";
import { parseFitReport } from "../src/fit.js";
import { renderFigure } from "../src/figures.js";

const here = dirname(fileURLToPath(import.meta.url));

function dataDir(): string {
  for (const candidate of [
    join(here, "..", "..", "artifacts", "acceptance"),
    join(here, "..", "fixtures"),
  ]) {
    if (existsSync(join(candidate, "thm2_phase.csv"))) return candidate;
  }
  throw new Error("no acceptance artifacts or fixtures found");
}

const data = dataDir();
const out = mkdtempSync(join(tmpdir(), "chunglu-plot-"));

const CASES: Array<{ figure: string; csv: string; fit?: string }> = [
  { figure: "PhaseDiagram", csv: "thm2_phase.csv" },
  { figure: "ScalingLogLog", csv: "thm3_powerlaw.csv", fit: "thm3_powerlaw_fit.json" },
  { figure: "ScalingInverseTheta", csv: "thm3_gamma3.csv", fit: "thm3_gamma3_fit.json" },
  { figure: "SubcriticalBand", csv: "thm4_band.csv", fit: "thm4_band_fit.json" },
];

describe("acceptance: all four figures render from the sweep artifacts", () => {
  for (const { figure, csv, fit } of CASES) {
    it(`renders ${figure}`, () => {
      const outPath = join(out, `${figure}.svg`);
      const argv = ["--figure", figure, "--in", join(data, csv), "--out", outPath];
      if (fit) argv.push("--fit", join(data, fit));
      expect(main(argv)).toBe(EXIT_OK);
      expect(statSync(outPath).size).toBeGreaterThan(0);
      const svg = readFileSync(outPath, "utf-8");
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg).toContain("</svg>");
    });
  }

  it("ScalingLogLog annotation equals the fit slope exactly", () => {
    const fitText = readFileSync(join(data, "thm3_powerlaw_fit.json"), "utf-8");
    const fit = parseFitReport(fitText);
    const svg = readFileSync(join(out, "ScalingLogLog.svg"), "utf-8");
    expect(svg).toContain(`slope = ${fit.slope}`);
    // the producer writes shortest round-trip decimals; String() of the
    // parsed double reproduces the raw JSON digits, so the annotation is
    // the fit value digit for digit
    const raw = /"slope":\s*([-+0-9.eE]+)/.exec(fitText);
    expect(raw).not.toBeNull();
    expect(String(fit.slope)).toBe(raw![1]);
    expect(fit.slope).toBeGreaterThan(1.95);
    expect(fit.slope).toBeLessThan(2.05);
  });

  it("band annotation carries the fit band ratio verbatim", () => {
    const fit = parseFitReport(
      readFileSync(join(data, "thm4_band_fit.json"), "utf-8"),
    );
    const svg = readFileSync(join(out, "SubcriticalBand.svg"), "utf-8");
    expect(svg).toContain(`band ratio = ${fit.bandRatio}`);
  });

  it("axis overrides change the view, not the data", () => {
    const rows = parseSweepCsv(readFileSync(join(data, "thm2_phase.csv"), "utf-8"));
    const base = renderFigure(rows, { figure: "PhaseDiagram" });
    const zoomed = renderFigure(rows, {
      figure: "PhaseDiagram",
      axes: { yMin: 0, yMax: 0.5 },
    });
    expect(zoomed).not.toBe(base);
    expect((zoomed.match(/<circle/g) ?? []).length).toBe(
      (base.match(/<circle/g) ?? []).length,
    );
  });

  it("rendering is a pure function of its inputs", () => {
    const rows = parseSweepCsv(readFileSync(join(data, "thm3_powerlaw.csv"), "utf-8"));
    const fit = parseFitReport(
      readFileSync(join(data, "thm3_powerlaw_fit.json"), "utf-8"),
    );
    const a = renderFigure(rows, { figure: "ScalingLogLog", fit });
    const b = renderFigure(rows, { figure: "ScalingLogLog", fit });
    expect(a).toBe(b);
  });
});

describe("error paths", () => {
  it("header-only CSV is rejected with 'no data rows'", () => {
    const headerOnly = SWEEP_COLUMNS.join(",") + "\n";
    expect(() => parseSweepCsv(headerOnly)).toThrow(NoDataError);
    expect(() => parseSweepCsv(headerOnly)).toThrow("no data rows");
    const path = join(out, "empty.csv");
    writeFileSync(path, headerOnly);
    expect(
      main(["--figure", "PhaseDiagram", "--in", path, "--out", join(out, "x.svg")]),
    ).toBe(EXIT_SCHEMA);
  });

  it("schema mismatch reports a column diff", () => {
    const text = readFileSync(join(data, "thm2_phase.csv"), "utf-8");
    const mangled = text.replace("giant_fraction", "giant_frac");
    try {
      parseSweepCsv(mangled);
      expect.unreachable("should have thrown");
    } catch (err) {
      expect(err).toBeInstanceOf(SchemaError);
      expect((err as Error).message).toContain("missing columns: giant_fraction");
      expect((err as Error).message).toContain("unexpected columns: giant_frac");
    }
  });

  it("unknown schema id on a data row is rejected", () => {
    const text = readFileSync(join(data, "thm2_phase.csv"), "utf-8");
    const mangled = text.replace(/^cl-sweep-1/m, "cl-sweep-9");
    expect(() => parseSweepCsv(mangled)).toThrow(/unknown schema id/);
  });

  it("unknown fit schema id is rejected", () => {
    expect(() => parseFitReport('{"schema": "cl-fit-9"}')).toThrow(SchemaError);
  });

  it("scaling figures demand a fit report", () => {
    const rows = parseSweepCsv(readFileSync(join(data, "thm3_powerlaw.csv"), "utf-8"));
    expect(() => renderFigure(rows, { figure: "ScalingLogLog" })).toThrow(
      /needs --fit/,
    );
  });

  it("usage errors exit 1", () => {
    expect(main([])).toBe(EXIT_USAGE);
    expect(main(["--figure", "PieChart", "--in", "x", "--out", "y"])).toBe(EXIT_USAGE);
    expect(main(["--figure"])).toBe(EXIT_USAGE);
    expect(
      main(["--figure", "PhaseDiagram", "--in", "x", "--out", "y", "--wat", "z"]),
    ).toBe(EXIT_USAGE);
  });

  it("missing input exits 3", () => {
    expect(
      main([
        "--figure", "PhaseDiagram",
        "--in", join(out, "definitely-not-there.csv"),
        "--out", join(out, "y.svg"),
      ]),
    ).toBe(EXIT_IO);
  });
});
