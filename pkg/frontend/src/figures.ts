/**
 * Figure rendering over run directories.
 *
 * A FigureSpec names a figure kind, one or more run directories, a histogram
 * bin width in seconds, and an output path. Rendering reads the run CSVs,
 * never writes to them, and produces one SVG per call; the returned series
 * expose the plotted numbers so callers and tests can check them without
 * parsing SVG.
 */
import * as fs from "node:fs";
import * as path from "node:path";

import {
  loadBlocks,
  loadMachineCounts,
  loadSummary,
  loadThroughput,
  loadWaiting,
  runName,
} from "./csv.js";
import { boxStats, histogram } from "./stats.js";
import { SERIES_COLORS, SvgCanvas, drawAxes, linearScale } from "./svg.js";

export const FIGURE_KINDS = [
  "throughput-box",
  "per-machine-box",
  "waiting-histogram",
  "mining-rate-series",
  "pool-series",
] as const;

export type FigureKind = (typeof FIGURE_KINDS)[number];

export interface FigureSpec {
  kind: FigureKind;
  /** run directories produced by the simulator CLI */
  inputs: string[];
  /** histogram bin width in seconds (waiting-histogram only) */
  bin: number;
  out: string;
}

export interface RenderResult {
  out: string;
  svg: string;
  /** plotted numbers keyed by "<run>/<series>" */
  series: Record<string, number[]>;
}

const WIDTH = 640;
const HEIGHT = 400;
const AREA = { left: 60, top: 30, right: WIDTH - 20, bottom: HEIGHT - 50 };

function validate(spec: FigureSpec): void {
  if (!FIGURE_KINDS.includes(spec.kind)) {
    throw new Error(`unknown figure kind "${spec.kind}"`);
  }
  if (spec.inputs.length === 0) {
    throw new Error("inputs must name at least one run directory");
  }
  if (!(spec.bin > 0)) {
    throw new Error("bin must be positive");
  }
}

/** Included-per-bin rates (tps) over the run's steady window. */
function steadyIncludedTps(runDir: string): number[] {
  const summary = loadSummary(runDir);
  const rows = loadThroughput(runDir);
  const widthMs = summary.binS * 1000;
  const fullBins = Math.floor((summary.loadEndMs - summary.loadStartMs) / widthMs);
  const included = rows.map((r) => r.included);
  const first = included.findIndex((v) => v > 0);
  const start = first === -1 ? 0 : first;
  return included.slice(start, Math.max(start, Math.min(included.length, fullBins)))
    .map((v) => v / summary.binS);
}

function drawBox(
  canvas: SvgCanvas,
  xCenter: number,
  stats: { min: number; q1: number; median: number; q3: number; max: number },
  yScale: (v: number) => number,
  color: string,
): void {
  const half = 22;
  canvas.line(xCenter, yScale(stats.min), xCenter, yScale(stats.q1), color);
  canvas.line(xCenter, yScale(stats.q3), xCenter, yScale(stats.max), color);
  for (const whisker of [stats.min, stats.max]) {
    canvas.line(xCenter - half / 2, yScale(whisker), xCenter + half / 2, yScale(whisker), color);
  }
  canvas.rect(
    xCenter - half,
    yScale(stats.q3),
    2 * half,
    Math.max(yScale(stats.q1) - yScale(stats.q3), 0.5),
    "none",
    color,
  );
  canvas.line(xCenter - half, yScale(stats.median), xCenter + half, yScale(stats.median), color, 2);
}

function renderBoxFigure(
  spec: FigureSpec,
  valuesPerRun: Array<{ name: string; values: number[] }>,
  yLabel: string,
): RenderResult {
  const canvas = new SvgCanvas(WIDTH, HEIGHT);
  const allValues = valuesPerRun.flatMap((r) => r.values);
  const yScale = linearScale([0, Math.max(...allValues) * 1.1], [AREA.bottom, AREA.top]);
  const xScale = linearScale([0, valuesPerRun.length], [AREA.left, AREA.right]);
  drawAxes(canvas, AREA, xScale, yScale, "", yLabel);
  const series: Record<string, number[]> = {};
  valuesPerRun.forEach((run, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    const x = xScale(i + 0.5);
    drawBox(canvas, x, boxStats(run.values), yScale, color);
    canvas.text(x, AREA.bottom + 30, run.name, { anchor: "middle", size: 10 });
    series[`${run.name}/values`] = run.values;
  });
  return finish(spec, canvas, series);
}

function renderThroughputBox(spec: FigureSpec): RenderResult {
  const runs = spec.inputs.map((dir) => ({
    name: runName(dir),
    values: steadyIncludedTps(dir),
  }));
  return renderBoxFigure(spec, runs, "inclusion rate (tps)");
}

function renderPerMachineBox(spec: FigureSpec): RenderResult {
  const runs = spec.inputs.map((dir) => {
    const summary = loadSummary(dir);
    const durationS = (summary.loadEndMs - summary.loadStartMs) / 1000;
    const counts = loadMachineCounts(dir);
    const rates = [...counts.entries()]
      .sort(([a], [b]) => a - b)
      .map(([, count]) => count / durationS);
    return { name: runName(dir), values: rates };
  });
  return renderBoxFigure(spec, runs, "creation rate per machine (tps)");
}

function renderWaitingHistogram(spec: FigureSpec): RenderResult {
  const canvas = new SvgCanvas(WIDTH, HEIGHT);
  const series: Record<string, number[]> = {};
  const panels = spec.inputs.map((dir) => {
    const waits = loadWaiting(dir).map((r) => r.waitingMs / 1000);
    return { name: runName(dir), histogram: histogram(waits, spec.bin) };
  });
  const xMax = Math.max(...panels.map((p) => p.histogram.edges[p.histogram.edges.length - 1]));
  const xMin = Math.min(...panels.map((p) => p.histogram.edges[0]));
  const yMax = Math.max(...panels.flatMap((p) => p.histogram.counts));
  const xScale = linearScale([xMin, xMax], [AREA.left, AREA.right]);
  const yScale = linearScale([0, yMax * 1.05], [AREA.bottom, AREA.top]);
  drawAxes(canvas, AREA, xScale, yScale, "waiting period (seconds)", "transactions (count)");
  panels.forEach((panel, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    const { edges, counts } = panel.histogram;
    counts.forEach((count, bin) => {
      const x0 = xScale(edges[bin]);
      const x1 = xScale(edges[bin + 1]);
      canvas.rect(x0, yScale(count), x1 - x0, AREA.bottom - yScale(count), "none", color);
    });
    canvas.text(AREA.right - 4, AREA.top + 14 * (i + 1), panel.name, {
      anchor: "end",
      size: 10,
    });
    series[`${panel.name}/counts`] = counts;
    series[`${panel.name}/edges_s`] = edges;
  });
  return finish(spec, canvas, series);
}

function renderMiningRateSeries(spec: FigureSpec): RenderResult {
  const canvas = new SvgCanvas(WIDTH, HEIGHT);
  const series: Record<string, number[]> = {};
  const panels = spec.inputs.map((dir) => {
    const blocks = loadBlocks(dir);
    if (blocks.length < 2) {
      throw new Error(`${dir}: need at least two blocks for a rate series`);
    }
    const interBlockS = (blocks[1].timeMs - blocks[0].timeMs) / 1000;
    const summary = loadSummary(dir);
    const throughput = loadThroughput(dir);
    return {
      name: runName(dir),
      timesS: blocks.map((b) => b.timeMs / 1000),
      includedTps: blocks.map((b) => b.txCount / interBlockS),
      createdTimesS: throughput.map((r) => (r.binStartMs + (summary.binS * 1000) / 2) / 1000),
      createdTps: throughput.map((r) => r.created / summary.binS),
    };
  });
  const xMax = Math.max(...panels.flatMap((p) => p.timesS));
  const yMax = Math.max(...panels.flatMap((p) => [...p.includedTps, ...p.createdTps]));
  const xScale = linearScale([0, xMax], [AREA.left, AREA.right]);
  const yScale = linearScale([0, yMax * 1.1], [AREA.bottom, AREA.top]);
  drawAxes(canvas, AREA, xScale, yScale, "time (seconds)", "rate (tps)");
  panels.forEach((panel, i) => {
    const included = SERIES_COLORS[(2 * i) % SERIES_COLORS.length];
    const created = SERIES_COLORS[(2 * i + 1) % SERIES_COLORS.length];
    canvas.polyline(
      panel.timesS.map((t, j) => [xScale(t), yScale(panel.includedTps[j])] as [number, number]),
      included,
    );
    canvas.polyline(
      panel.createdTimesS.map(
        (t, j) => [xScale(t), yScale(panel.createdTps[j])] as [number, number],
      ),
      created,
    );
    canvas.text(AREA.right - 4, AREA.top + 28 * i + 14, `${panel.name} included`, {
      anchor: "end",
      size: 10,
    });
    canvas.text(AREA.right - 4, AREA.top + 28 * i + 26, `${panel.name} created`, {
      anchor: "end",
      size: 10,
    });
    series[`${panel.name}/included_tps`] = panel.includedTps;
    series[`${panel.name}/created_tps`] = panel.createdTps;
  });
  return finish(spec, canvas, series);
}

function renderPoolSeries(spec: FigureSpec): RenderResult {
  const canvas = new SvgCanvas(WIDTH, HEIGHT);
  const series: Record<string, number[]> = {};
  const panels = spec.inputs.map((dir) => {
    const blocks = loadBlocks(dir);
    return {
      name: runName(dir),
      timesS: blocks.map((b) => b.timeMs / 1000),
      pending: blocks.map((b) => b.pendingAfter),
      queued: blocks.map((b) => b.queuedAfter),
    };
  });
  const xMax = Math.max(...panels.flatMap((p) => p.timesS));
  const yMax = Math.max(1, ...panels.flatMap((p) => [...p.pending, ...p.queued]));
  const xScale = linearScale([0, xMax], [AREA.left, AREA.right]);
  const yScale = linearScale([0, yMax * 1.1], [AREA.bottom, AREA.top]);
  drawAxes(canvas, AREA, xScale, yScale, "time (seconds)", "pool size (transactions)");
  panels.forEach((panel, i) => {
    const pendingColor = SERIES_COLORS[(2 * i) % SERIES_COLORS.length];
    const queuedColor = SERIES_COLORS[(2 * i + 1) % SERIES_COLORS.length];
    canvas.polyline(
      panel.timesS.map((t, j) => [xScale(t), yScale(panel.pending[j])] as [number, number]),
      pendingColor,
    );
    canvas.polyline(
      panel.timesS.map((t, j) => [xScale(t), yScale(panel.queued[j])] as [number, number]),
      queuedColor,
    );
    canvas.text(AREA.right - 4, AREA.top + 28 * i + 14, `${panel.name} pending`, {
      anchor: "end",
      size: 10,
    });
    canvas.text(AREA.right - 4, AREA.top + 28 * i + 26, `${panel.name} queued`, {
      anchor: "end",
      size: 10,
    });
    series[`${panel.name}/pending`] = panel.pending;
    series[`${panel.name}/queued`] = panel.queued;
  });
  return finish(spec, canvas, series);
}

function finish(spec: FigureSpec, canvas: SvgCanvas, series: Record<string, number[]>): RenderResult {
  const svg = canvas.render() + "\n";
  fs.mkdirSync(path.dirname(path.resolve(spec.out)), { recursive: true });
  fs.writeFileSync(spec.out, svg);
  return { out: spec.out, svg, series };
}

export function render(spec: FigureSpec): RenderResult {
  validate(spec);
  switch (spec.kind) {
    case "throughput-box":
      return renderThroughputBox(spec);
    case "per-machine-box":
      return renderPerMachineBox(spec);
    case "waiting-histogram":
      return renderWaitingHistogram(spec);
    case "mining-rate-series":
      return renderMiningRateSeries(spec);
    case "pool-series":
      return renderPoolSeries(spec);
  }
}

/** Checked in tests: histogram counts must add up to the waiting.csv rows. */
export function histogramRowConservation(result: RenderResult, runDir: string): boolean {
  const rows = loadWaiting(runDir).length;
  const counts = result.series[`${runName(runDir)}/counts`];
  if (!counts) throw new Error(`no histogram series for ${runDir}`);
  return counts.reduce((a, b) => a + b, 0) === rows;
}
