import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { SchemaError, loadSummary, parseBench, parseSummary } from "../src/csv.js";
import { FIGURES, FIGURE_NAMES, policies, sizes, throughputEcdf } from "../src/figures.js";

const POLICIES = ["dist", "msr", "ba", "mrba"];
const SIZES = [50, 100, 200, 500];

function synthSummaryText(): string {
  const rows: string[] = ["policy,t_alloc,s_udp,metric,group,quantile,value"];
  let seed = 1;
  const jitter = () => ((seed = (seed * 16807) % 2147483647) % 1000) / 1000;
  for (const policy of POLICIES) {
    for (const ta of [1, 2, 4]) {
      for (const s of SIZES) {
        const base = 2 + jitter();
        rows.push(`${policy},${ta},${s},s_app_mbps,all,q1,${base}`);
        rows.push(`${policy},${ta},${s},s_app_mbps,all,q2,${base + 1}`);
        rows.push(`${policy},${ta},${s},s_app_mbps,all,q3,${base + 2}`);
        rows.push(`${policy},${ta},${s},d_app_ms,all,q1,${10 * base}`);
        rows.push(`${policy},${ta},${s},d_app_ms,all,q2,${12 * base}`);
        rows.push(`${policy},${ta},${s},d_app_ms,all,q3,${15 * base}`);
        for (let i = 1; i <= 10; i++) {
          rows.push(`${policy},${ta},${s},s_app_mbps,ecdf,${i / 10},${(base * i) / 5}`);
          rows.push(`${policy},${ta},${s},d_app_ms,ecdf,${i / 10},${(30 * i) / 5}`);
        }
        for (const kind of ["ue", "node"]) {
          rows.push(`${policy},${ta},${s},b_rlc_bytes,kind:${kind},q1,100`);
          rows.push(`${policy},${ta},${s},b_rlc_bytes,kind:${kind},q2,300`);
          rows.push(`${policy},${ta},${s},b_rlc_bytes,kind:${kind},q3,900`);
        }
        for (const depth of [1, 2, 3]) {
          rows.push(`${policy},${ta},${s},b_rlc_bytes,depth:${depth},q1,${500 / depth}`);
          rows.push(`${policy},${ta},${s},b_rlc_bytes,depth:${depth},q2,${1500 / depth}`);
          rows.push(`${policy},${ta},${s},b_rlc_bytes,depth:${depth},q3,${4500 / depth}`);
        }
        rows.push(`${policy},${ta},${s},source_rate_mbps,all,-,${(8 * s) / 100}`);
      }
    }
  }
  return rows.join("\n") + "\n";
}

const benchText =
  "n_nodes,reps,median_us,q1_us,q3_us\n" +
  [100, 1000, 10000, 100000]
    .map((n) => `${n},50,${(0.9 * n) / 100},${(0.8 * n) / 100},${(1.1 * n) / 100}`)
    .join("\n") +
  "\n";

const summary = parseSummary(synthSummaryText());
const bench = parseBench(benchText);

describe("input contracts", () => {
  it("reports missing columns by name", () => {
    const bad = "policy,t_alloc,metric\n" + "dist,1,s_app_mbps\n";
    expect(() => parseSummary(bad)).toThrowError(SchemaError);
    expect(() => parseSummary(bad)).toThrowError(/s_udp.*group.*quantile.*value/s);
    expect(() => parseSummary(bad)).toThrowError(/expected header/);
  });

  it("rejects an empty table", () => {
    expect(() => parseSummary("policy,t_alloc,s_udp,metric,group,quantile,value\n")).toThrowError(
      /no data rows/,
    );
  });

  it("points at the offending row and column", () => {
    const bad =
      "policy,t_alloc,s_udp,metric,group,quantile,value\n" +
      "dist,1,100,s_app_mbps,all,q1,3.5\n" +
      "dist,oops,100,s_app_mbps,all,q2,3.6\n";
    expect(() => parseSummary(bad)).toThrowError(/row 3.*t_alloc/);
  });

  it("reports a missing summary file as a schema error", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    expect(() => loadSummary(dir)).toThrowError(/summary\.csv not found/);
  });

  it("parses the bench table", () => {
    expect(bench).toHaveLength(4);
    expect(bench[0]).toMatchObject({ n_nodes: 100, reps: 50 });
  });
});

describe("selectors", () => {
  it("orders policies canonically", () => {
    expect(policies(summary)).toEqual(POLICIES);
  });

  it("collects packet sizes ascending", () => {
    expect(sizes(summary)).toEqual(SIZES);
  });
});

describe("figures", () => {
  it("renders all six figure types", () => {
    for (const name of FIGURE_NAMES) {
      const svg = FIGURES[name]!(summary, bench);
      expect(svg.startsWith("<svg"), name).toBe(true);
      expect(svg.endsWith("</svg>"), name).toBe(true);
      expect(svg.length, name).toBeGreaterThan(500);
    }
    expect(FIGURE_NAMES).toHaveLength(6);
  });

  it("draws the dashed source-rate line on the throughput ECDF", () => {
    const svg = throughputEcdf(summary);
    expect(svg).toContain("stroke-dasharray");
    expect(svg).toContain("source rate");
  });

  it("draws one ECDF curve per policy and panel", () => {
    const svg = throughputEcdf(summary);
    const curves = svg.match(/<path /g) ?? [];
    expect(curves.length).toBe(POLICIES.length * SIZES.length);
  });

  it("is deterministic", () => {
    for (const name of FIGURE_NAMES) {
      expect(FIGURES[name]!(summary, bench)).toBe(FIGURES[name]!(summary, bench));
    }
  });

  it("requires the bench table only for the runtime figure", () => {
    expect(() => FIGURES["runtime-vs-size"]!(summary, undefined)).toThrowError(
      /bench_tmwm\.csv required/,
    );
    expect(() => FIGURES["throughput-ecdf"]!(summary, undefined)).not.toThrow();
  });

  it("labels the buffer depth profile", () => {
    const svg = FIGURES["buffer-profile"]!(summary, bench);
    expect(svg).toContain("gNB depth");
    expect(svg).toContain("third quartile by depth");
  });
});
