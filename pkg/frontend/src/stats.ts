/** Small numeric helpers shared by the figure renderers. */

export function mean(values: number[]): number {
  if (values.length === 0) throw new Error("mean of empty series");
  return values.reduce((a, b) => a + b, 0) / values.length;
}

export function stddev(values: number[]): number {
  const m = mean(values);
  return Math.sqrt(mean(values.map((v) => (v - m) ** 2)));
}

/** Linear-interpolation quantile, q in [0, 1]. */
export function quantile(values: number[], q: number): number {
  if (values.length === 0) throw new Error("quantile of empty series");
  const sorted = [...values].sort((a, b) => a - b);
  const pos = q * (sorted.length - 1);
  const lo = Math.floor(pos);
  const hi = Math.ceil(pos);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo);
}

export interface BoxStats {
  min: number;
  q1: number;
  median: number;
  q3: number;
  max: number;
}

export function boxStats(values: number[]): BoxStats {
  return {
    min: Math.min(...values),
    q1: quantile(values, 0.25),
    median: quantile(values, 0.5),
    q3: quantile(values, 0.75),
    max: Math.max(...values),
  };
}

export interface Histogram {
  /** bin edges, length counts.length + 1, aligned to multiples of width */
  edges: number[];
  counts: number[];
}

export function histogram(values: number[], width: number): Histogram {
  if (width <= 0) throw new Error("histogram width must be positive");
  if (values.length === 0) throw new Error("histogram of empty series");
  const lo = Math.floor(Math.min(...values) / width) * width;
  let hi = Math.ceil(Math.max(...values) / width) * width;
  if (hi <= lo) hi = lo + width;
  const n = Math.round((hi - lo) / width);
  const counts = new Array<number>(n).fill(0);
  for (const v of values) {
    // the maximum falls in the last bin, not one past it
    const bin = Math.min(Math.floor((v - lo) / width), n - 1);
    counts[bin] += 1;
  }
  const edges = Array.from({ length: n + 1 }, (_, i) => lo + i * width);
  return { edges, counts };
}
