/**
 * Readers for the run-directory file contract.
 *
 * A run directory holds txs.csv, blocks.csv, throughput.csv, waiting.csv,
 * summary.json and machines/machine_<id>.csv. Everything here is read-only
 * and validates headers before touching rows; a schema mismatch throws an
 * Error naming the offending column.
 */
import * as fs from "node:fs";
import * as path from "node:path";
import Papa from "papaparse";

export interface BlockRow {
  block: number;
  timeMs: number;
  txCount: number;
  gasUsed: number;
  pendingAfter: number;
  queuedAfter: number;
}

export interface ThroughputRow {
  binStartMs: number;
  created: number;
  included: number;
}

export interface WaitingRow {
  txId: string;
  waitingMs: number;
}

export interface RunSummary {
  approach: string;
  machines: number;
  rangeSize: number | null;
  seed: number;
  loadStartMs: number;
  loadEndMs: number;
  binS: number;
}

interface Table {
  header: string[];
  rows: string[][];
}

function readTable(file: string, expected: string[]): Table {
  const text = fs.readFileSync(file, "utf8");
  const parsed = Papa.parse<string[]>(text.trimEnd(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new Error(`${file}: ${parsed.errors[0].message}`);
  }
  const [header, ...rows] = parsed.data;
  if (!header) {
    throw new Error(`${file}: empty file`);
  }
  for (const column of expected) {
    if (!header.includes(column)) {
      throw new Error(`${file}: missing column "${column}"`);
    }
  }
  return { header, rows };
}

function columnIndex(table: Table, column: string): number {
  return table.header.indexOf(column);
}

function num(file: string, column: string, raw: string, rowIndex: number): number {
  const value = Number(raw);
  if (raw === "" || Number.isNaN(value)) {
    throw new Error(`${file}: column "${column}" row ${rowIndex + 1}: not a number (${JSON.stringify(raw)})`);
  }
  return value;
}

export function loadBlocks(runDir: string): BlockRow[] {
  const file = path.join(runDir, "blocks.csv");
  const table = readTable(file, [
    "block",
    "time_ms",
    "tx_count",
    "gas_used",
    "pending_after",
    "queued_after",
  ]);
  const idx = (c: string) => columnIndex(table, c);
  return table.rows.map((row, i) => ({
    block: num(file, "block", row[idx("block")], i),
    timeMs: num(file, "time_ms", row[idx("time_ms")], i),
    txCount: num(file, "tx_count", row[idx("tx_count")], i),
    gasUsed: num(file, "gas_used", row[idx("gas_used")], i),
    pendingAfter: num(file, "pending_after", row[idx("pending_after")], i),
    queuedAfter: num(file, "queued_after", row[idx("queued_after")], i),
  }));
}

export function loadThroughput(runDir: string): ThroughputRow[] {
  const file = path.join(runDir, "throughput.csv");
  const table = readTable(file, ["bin_start_ms", "created", "included"]);
  const idx = (c: string) => columnIndex(table, c);
  return table.rows.map((row, i) => ({
    binStartMs: num(file, "bin_start_ms", row[idx("bin_start_ms")], i),
    created: num(file, "created", row[idx("created")], i),
    included: num(file, "included", row[idx("included")], i),
  }));
}

export function loadWaiting(runDir: string): WaitingRow[] {
  const file = path.join(runDir, "waiting.csv");
  const table = readTable(file, ["tx_id", "waiting_ms"]);
  const idx = (c: string) => columnIndex(table, c);
  return table.rows.map((row, i) => ({
    txId: row[idx("tx_id")],
    waitingMs: num(file, "waiting_ms", row[idx("waiting_ms")], i),
  }));
}

export function loadSummary(runDir: string): RunSummary {
  const file = path.join(runDir, "summary.json");
  const data = JSON.parse(fs.readFileSync(file, "utf8"));
  for (const key of ["config", "load_start_ms", "load_end_ms", "throughput"]) {
    if (!(key in data)) {
      throw new Error(`${file}: missing key "${key}"`);
    }
  }
  return {
    approach: String(data.config.approach),
    machines: Number(data.config.machines),
    rangeSize: data.config.range_size === null ? null : Number(data.config.range_size),
    seed: Number(data.seed),
    loadStartMs: Number(data.load_start_ms),
    loadEndMs: Number(data.load_end_ms),
    binS: Number(data.throughput.bin_s),
  };
}

/** Transactions per machine trace, keyed by machine id. */
export function loadMachineCounts(runDir: string): Map<number, number> {
  const machinesDir = path.join(runDir, "machines");
  const counts = new Map<number, number>();
  for (const name of fs.readdirSync(machinesDir).sort()) {
    const match = /^machine_(\d+)\.csv$/.exec(name);
    if (!match) continue;
    const file = path.join(machinesDir, name);
    const table = readTable(file, [
      "machine_id",
      "seq",
      "tx_id",
      "nonce",
      "created_at_ms",
      "submitted_at_ms",
    ]);
    counts.set(Number(match[1]), table.rows.length);
  }
  if (counts.size === 0) {
    throw new Error(`${machinesDir}: no machine_<id>.csv traces found`);
  }
  return counts;
}

export function runName(runDir: string): string {
  return path.basename(path.resolve(runDir));
}
