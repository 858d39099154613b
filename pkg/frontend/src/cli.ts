/** Figure rendering entry point: one SVG per requested figure. */

import { mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { BenchRow, SchemaError, loadBench, loadSummary } from "./csv.js";
import { FIGURES, FIGURE_NAMES } from "./figures.js";

const USAGE = `usage: cli.js <figure|all> <input-dir> <out-dir>

Renders SVG figures from <input-dir>/summary.csv (and bench_tmwm.csv for
the runtime figure) into <out-dir>/<figure>.svg.

figures: all, ${FIGURE_NAMES.join(", ")}`;

export function main(argv: string[]): number {
  const [figure, inputDir, outDir] = argv;
  if (figure === undefined || inputDir === undefined || outDir === undefined) {
    process.stderr.write(USAGE + "\n");
    return 1;
  }
  const wanted = figure === "all" ? FIGURE_NAMES : [figure];
  const unknown = wanted.filter((f) => !(f in FIGURES));
  if (unknown.length > 0) {
    process.stderr.write(`unknown figure(s): ${unknown.join(", ")}\n\n${USAGE}\n`);
    return 1;
  }
  try {
    const summary = loadSummary(inputDir);
    let bench: BenchRow[] | undefined;
    if (wanted.includes("runtime-vs-size")) {
      bench = loadBench(inputDir);
    }
    mkdirSync(outDir, { recursive: true });
    for (const name of wanted) {
      const svg = FIGURES[name]!(summary, bench);
      const path = join(outDir, `${name}.svg`);
      writeFileSync(path, svg);
      process.stdout.write(`wrote ${path}\n`);
    }
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      process.stderr.write(`schema error: ${err.message}\n`);
      return 1;
    }
    process.stderr.write(`error: ${err instanceof Error ? err.stack ?? err.message : err}\n`);
    return 2;
  }
}

process.exit(main(process.argv.slice(2)));
