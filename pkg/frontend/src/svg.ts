/**
 * Minimal deterministic SVG chart scaffolding: scales, axes, markers.
 * String assembly only, so identical inputs give byte-identical output.
 */

export interface Scale {
  map(v: number): number;
  domain: [number, number];
}

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return {
    map: (v) => r0 + ((v - d0) / span) * (r1 - r0),
    domain: [d0, d1],
  };
}

export function logScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const l0 = Math.log10(d0);
  const span = Math.log10(d1) - l0 || 1;
  return {
    map: (v) => r0 + ((Math.log10(v) - l0) / span) * (r1 - r0),
    domain: [d0, d1],
  };
}

export function linearTicks(lo: number, hi: number, count = 6): number[] {
  const span = hi - lo;
  if (!(span > 0)) return [lo];
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const err = span / count / step;
  const unit = err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1;
  const inc = unit * step;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / inc) * inc; v <= hi + inc * 1e-9; v += inc) {
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

export function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(lo) - 1e-9); e <= Math.log10(hi) + 1e-9; e++) {
    const v = Math.pow(10, e);
    if (v >= lo * (1 - 1e-9) && v <= hi * (1 + 1e-9)) ticks.push(v);
  }
  return ticks.length ? ticks : [lo, hi];
}

export function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 0.001 && a < 10000) {
    return String(Number(v.toPrecision(6)));
  }
  return v.toExponential(2);
}

export const WIDTH = 720;
export const HEIGHT = 480;
export const MARGIN = { top: 48, right: 28, bottom: 56, left: 76 };

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export class Chart {
  private parts: string[] = [];
  readonly x0 = MARGIN.left;
  readonly x1 = WIDTH - MARGIN.right;
  readonly y0 = HEIGHT - MARGIN.bottom;
  readonly y1 = MARGIN.top;

  constructor(title: string) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
        `font-family="Helvetica, Arial, sans-serif" font-size="13">`,
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
      `<text x="${WIDTH / 2}" y="24" text-anchor="middle" font-size="16">${esc(title)}</text>`,
    );
  }

  axes(
    xs: Scale,
    ys: Scale,
    xTicks: number[],
    yTicks: number[],
    xLabel: string,
    yLabel: string,
  ): void {
    const p = this.parts;
    p.push(`<g stroke="#222" stroke-width="1">`);
    p.push(`<line x1="${this.x0}" y1="${this.y0}" x2="${this.x1}" y2="${this.y0}"/>`);
    p.push(`<line x1="${this.x0}" y1="${this.y0}" x2="${this.x0}" y2="${this.y1}"/>`);
    p.push(`</g>`);
    for (const t of xTicks) {
      const x = xs.map(t);
      if (x < this.x0 - 0.5 || x > this.x1 + 0.5) continue;
      p.push(`<line x1="${r(x)}" y1="${this.y0}" x2="${r(x)}" y2="${this.y0 + 5}" stroke="#222"/>`);
      p.push(
        `<text x="${r(x)}" y="${this.y0 + 20}" text-anchor="middle" fill="#222">${esc(fmt(t))}</text>`,
      );
    }
    for (const t of yTicks) {
      const y = ys.map(t);
      if (y > this.y0 + 0.5 || y < this.y1 - 0.5) continue;
      p.push(`<line x1="${this.x0 - 5}" y1="${r(y)}" x2="${this.x0}" y2="${r(y)}" stroke="#222"/>`);
      p.push(
        `<text x="${this.x0 - 9}" y="${r(y) + 4}" text-anchor="end" fill="#222">${esc(fmt(t))}</text>`,
      );
      p.push(
        `<line x1="${this.x0}" y1="${r(y)}" x2="${this.x1}" y2="${r(y)}" stroke="#eee"/>`,
      );
    }
    p.push(
      `<text x="${(this.x0 + this.x1) / 2}" y="${HEIGHT - 14}" text-anchor="middle">${esc(xLabel)}</text>`,
    );
    p.push(
      `<text transform="rotate(-90 18 ${(this.y0 + this.y1) / 2})" x="18" y="${(this.y0 + this.y1) / 2}" ` +
        `text-anchor="middle">${esc(yLabel)}</text>`,
    );
  }

  line(points: Array<[number, number]>, color: string, width = 2, dash = ""): void {
    if (!points.length) return;
    const d = points.map(([x, y], i) => `${i ? "L" : "M"}${r(x)} ${r(y)}`).join(" ");
    const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
    this.parts.push(
      `<path d="${d}" fill="none" stroke="${color}" stroke-width="${width}"${dashAttr}/>`,
    );
  }

  dots(points: Array<[number, number]>, color: string, radius = 3.5): void {
    for (const [x, y] of points) {
      this.parts.push(`<circle cx="${r(x)}" cy="${r(y)}" r="${radius}" fill="${color}" fill-opacity="0.75"/>`);
    }
  }

  annotation(lines: string[], cls = "annotation"): void {
    const x = this.x0 + 14;
    let y = this.y1 + 18;
    for (const line of lines) {
      this.parts.push(
        `<text class="${cls}" x="${x}" y="${y}" fill="#333">${esc(line)}</text>`,
      );
      y += 18;
    }
  }

  legend(entries: Array<[string, string]>): void {
    let y = this.y1 + 18;
    const x = this.x1 - 190;
    for (const [label, color] of entries) {
      this.parts.push(`<rect x="${x}" y="${y - 9}" width="12" height="12" fill="${color}"/>`);
      this.parts.push(`<text x="${x + 18}" y="${y + 2}" fill="#333">${esc(label)}</text>`);
      y += 18;
    }
  }

  render(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

function r(v: number): string {
  return String(Math.round(v * 100) / 100);
}
