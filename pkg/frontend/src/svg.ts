/**
 * Minimal SVG document builder: enough rects, lines, and labels for the
 * five figure kinds, with deterministic output (fixed precision, no
 * timestamps) so re-rendering a figure is byte-identical.
 */

const PRECISION = 2;

function fmt(v: number): string {
  return Number(v.toFixed(PRECISION)).toString();
}

function escapeText(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 === 0 ? 1 : d1 - d0;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

/** Round tick positions covering [lo, hi] with roughly `count` steps. */
export function ticks(lo: number, hi: number, count = 5): number[] {
  if (hi === lo) return [lo];
  const rawStep = (hi - lo) / count;
  const magnitude = 10 ** Math.floor(Math.log10(rawStep));
  const candidates = [1, 2, 2.5, 5, 10].map((m) => m * magnitude);
  const step = candidates.find((c) => (hi - lo) / c <= count) ?? candidates[candidates.length - 1];
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    out.push(Number(v.toFixed(6)));
  }
  return out;
}

export class SvgCanvas {
  readonly width: number;
  readonly height: number;
  private readonly parts: string[] = [];

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
  }

  rect(x: number, y: number, w: number, h: number, fill: string, stroke = "none"): void {
    this.parts.push(
      `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" fill="${fill}" stroke="${stroke}"/>`,
    );
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke = "#333", width = 1): void {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${stroke}" stroke-width="${width}"/>`,
    );
  }

  polyline(points: Array<[number, number]>, stroke: string, width = 1.5): void {
    const joined = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    this.parts.push(
      `<polyline points="${joined}" fill="none" stroke="${stroke}" stroke-width="${width}"/>`,
    );
  }

  text(
    x: number,
    y: number,
    content: string,
    opts: { anchor?: "start" | "middle" | "end"; size?: number; rotate?: number } = {},
  ): void {
    const anchor = opts.anchor ?? "start";
    const size = opts.size ?? 11;
    const transform = opts.rotate ? ` transform="rotate(${opts.rotate} ${fmt(x)} ${fmt(y)})"` : "";
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" font-family="sans-serif" text-anchor="${anchor}"${transform}>${escapeText(content)}</text>`,
    );
  }

  render(): string {
    return [
      `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" viewBox="0 0 ${this.width} ${this.height}">`,
      `<rect x="0" y="0" width="${this.width}" height="${this.height}" fill="white"/>`,
      ...this.parts,
      "</svg>",
    ].join("\n");
  }
}

export interface PlotArea {
  left: number;
  top: number;
  right: number;
  bottom: number;
}

/** Draw x/y axis lines, ticks, tick labels, and axis titles. */
export function drawAxes(
  canvas: SvgCanvas,
  area: PlotArea,
  xScale: Scale,
  yScale: Scale,
  xLabel: string,
  yLabel: string,
): void {
  canvas.line(area.left, area.bottom, area.right, area.bottom);
  canvas.line(area.left, area.top, area.left, area.bottom);
  for (const t of ticks(xScale.domain[0], xScale.domain[1])) {
    const x = xScale(t);
    canvas.line(x, area.bottom, x, area.bottom + 4);
    canvas.text(x, area.bottom + 16, String(t), { anchor: "middle", size: 10 });
  }
  for (const t of ticks(yScale.domain[0], yScale.domain[1])) {
    const y = yScale(t);
    canvas.line(area.left - 4, y, area.left, y);
    canvas.text(area.left - 7, y + 3, String(t), { anchor: "end", size: 10 });
  }
  canvas.text((area.left + area.right) / 2, area.bottom + 32, xLabel, { anchor: "middle" });
  canvas.text(14, (area.top + area.bottom) / 2, yLabel, {
    anchor: "middle",
    rotate: -90,
  });
}

export const SERIES_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
