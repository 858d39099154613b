/** Input contracts: the sweep summary and the solver benchmark tables. */

import { readFileSync } from "node:fs";
import { join } from "node:path";
import Papa from "papaparse";
import { z } from "zod";

/** Raised when an input file does not match its expected table shape. */
export class SchemaError extends Error {}

export const SUMMARY_COLUMNS = [
  "policy",
  "t_alloc",
  "s_udp",
  "metric",
  "group",
  "quantile",
  "value",
] as const;

export const BENCH_COLUMNS = ["n_nodes", "reps", "median_us", "q1_us", "q3_us"] as const;

const summaryRow = z.object({
  policy: z.string().min(1),
  t_alloc: z.coerce.number().int().positive(),
  s_udp: z.coerce.number().int().positive(),
  metric: z.string().min(1),
  group: z.string().min(1),
  quantile: z.string().min(1),
  value: z.coerce.number(),
});

const benchRow = z.object({
  n_nodes: z.coerce.number().int().positive(),
  reps: z.coerce.number().int().positive(),
  median_us: z.coerce.number().nonnegative(),
  q1_us: z.coerce.number().nonnegative(),
  q3_us: z.coerce.number().nonnegative(),
});

export type SummaryRow = z.infer<typeof summaryRow>;
export type BenchRow = z.infer<typeof benchRow>;

function parseTable<T>(
  text: string,
  file: string,
  columns: readonly string[],
  row: z.ZodType<T>,
): T[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  const fields = parsed.meta.fields ?? [];
  const missing = columns.filter((c) => !fields.includes(c));
  if (missing.length > 0) {
    throw new SchemaError(
      `${file}: missing column(s) ${missing.join(", ")} — expected header ` +
        `"${columns.join(",")}", found "${fields.join(",")}"`,
    );
  }
  if (parsed.data.length === 0) {
    throw new SchemaError(`${file}: no data rows`);
  }
  return parsed.data.map((raw, i) => {
    const v = row.safeParse(raw);
    if (!v.success) {
      const issue = v.error.issues[0];
      throw new SchemaError(
        `${file}: row ${i + 2}: column "${issue?.path.join(".")}" ${issue?.message}`,
      );
    }
    return v.data;
  });
}

export function parseSummary(text: string): SummaryRow[] {
  return parseTable(text, "summary.csv", SUMMARY_COLUMNS, summaryRow);
}

export function parseBench(text: string): BenchRow[] {
  return parseTable(text, "bench_tmwm.csv", BENCH_COLUMNS, benchRow);
}

function readInput(dir: string, name: string): string {
  let text: string;
  try {
    text = readFileSync(join(dir, name), "utf8");
  } catch {
    throw new SchemaError(`${name} not found in ${dir}`);
  }
  return text;
}

export function loadSummary(dir: string): SummaryRow[] {
  return parseSummary(readInput(dir, "summary.csv"));
}

export function loadBench(dir: string): BenchRow[] {
  return parseBench(readInput(dir, "bench_tmwm.csv"));
}
