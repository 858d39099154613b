/** The six figure renderers over the sweep summary and solver benchmark. */

import { extent, max } from "d3-array";

import { BenchRow, SchemaError, SummaryRow } from "./csv.js";
import {
  Panel,
  axisBottom,
  axisLeft,
  el,
  fmt,
  legend,
  linScale,
  polyline,
  stepPath,
  svgDoc,
  text,
} from "./svg.js";

const POLICY_ORDER = ["dist", "msr", "ba", "mrba"];
const COLORS: Record<string, string> = {
  dist: "#555555",
  msr: "#1f77b4",
  ba: "#ff7f0e",
  mrba: "#2ca02c",
};
const FALLBACK_COLORS = ["#d62728", "#9467bd", "#8c564b", "#e377c2"];

const PANEL_W = 250;
const PANEL_H = 180;
const MARGIN = { left: 64, right: 16, top: 34, bottom: 48 };

function color(policy: string, i: number): string {
  return COLORS[policy] ?? FALLBACK_COLORS[i % FALLBACK_COLORS.length]!;
}

export function policies(rows: SummaryRow[]): string[] {
  const present = [...new Set(rows.map((r) => r.policy))];
  const known = POLICY_ORDER.filter((p) => present.includes(p));
  const extra = present.filter((p) => !POLICY_ORDER.includes(p)).sort();
  return [...known, ...extra];
}

export function sizes(rows: SummaryRow[]): number[] {
  return [...new Set(rows.map((r) => r.s_udp))].sort((a, b) => a - b);
}

function tAllocs(rows: SummaryRow[]): number[] {
  return [...new Set(rows.map((r) => r.t_alloc))].sort((a, b) => a - b);
}

function need<T>(what: string, v: T | undefined): T {
  if (v === undefined) throw new SchemaError(`summary.csv has no rows for ${what}`);
  return v;
}

function quartile(
  rows: SummaryRow[],
  policy: string,
  ta: number,
  s: number,
  metric: string,
  q: string,
): number | undefined {
  return rows.find(
    (r) =>
      r.policy === policy && r.t_alloc === ta && r.s_udp === s &&
      r.metric === metric && r.group === "all" && r.quantile === q,
  )?.value;
}

function grouped(
  rows: SummaryRow[],
  policy: string,
  ta: number,
  s: number,
  metric: string,
  group: string,
  q: string,
): number | undefined {
  return rows.find(
    (r) =>
      r.policy === policy && r.t_alloc === ta && r.s_udp === s &&
      r.metric === metric && r.group === group && r.quantile === q,
  )?.value;
}

function ecdfPoints(
  rows: SummaryRow[],
  policy: string,
  ta: number,
  s: number,
  metric: string,
): Array<[number, number]> {
  return rows
    .filter(
      (r) =>
        r.policy === policy && r.t_alloc === ta && r.s_udp === s &&
        r.metric === metric && r.group === "ecdf",
    )
    .map((r): [number, number] => [r.value, Number(r.quantile)])
    .sort((a, b) => a[1] - b[1]);
}

function sourceRate(rows: SummaryRow[], s: number): number | undefined {
  return rows.find((r) => r.s_udp === s && r.metric === "source_rate_mbps")?.value;
}

function panelAt(i: number, j = 0): Panel {
  return {
    x: MARGIN.left + i * (PANEL_W + MARGIN.left),
    y: MARGIN.top + j * (PANEL_H + MARGIN.top + MARGIN.bottom),
    width: PANEL_W,
    height: PANEL_H,
  };
}

function docSize(cols: number, rowsOfPanels = 1): [number, number] {
  return [
    MARGIN.left + cols * (PANEL_W + MARGIN.left) - MARGIN.left + PANEL_W * 0 + MARGIN.right,
    rowsOfPanels * (MARGIN.top + PANEL_H + MARGIN.bottom) + 18,
  ];
}

function log10(v: number): number {
  return Math.log10(Math.max(v, 1e-9));
}

export function throughputEcdf(rows: SummaryRow[]): string {
  const pols = policies(rows);
  const ss = sizes(rows);
  const ta = need("any t_alloc", tAllocs(rows)[0]);
  const parts: string[] = [];
  ss.forEach((s, i) => {
    const panel = panelAt(i);
    const src = sourceRate(rows, s);
    const curves = pols.map((p) => ecdfPoints(rows, p, ta, s, "s_app_mbps"));
    const xMax = need(
      `throughput ecdf at ${s} B`,
      max([...curves.flat().map((c) => c[0]), src ?? 0]),
    );
    const xs = linScale([0, xMax * 1.05], [panel.x, panel.x + panel.width]);
    const ys = linScale([0, 1], [panel.y + panel.height, panel.y]);
    parts.push(axisBottom(xs, panel, "throughput [Mbit/s]"));
    parts.push(axisLeft(ys, panel, i === 0 ? "fraction of UEs" : ""));
    parts.push(text(panel.x + panel.width / 2, panel.y - 8, `s_UDP = ${s} B`, { "text-anchor": "middle", "font-weight": "bold" }));
    pols.forEach((p, pi) => {
      const pts = curves[pi]!;
      if (pts.length === 0) return;
      const mapped = pts.map(([v, f]): [number, number] => [xs(v), ys(f)]);
      mapped.unshift([xs(0), ys(0)]);
      parts.push(stepPath(mapped, { stroke: color(p, pi), "stroke-width": 1.6 }));
    });
    if (src !== undefined) {
      parts.push(
        el("line", {
          x1: xs(src), y1: ys(0), x2: xs(src), y2: ys(1),
          stroke: "#333", "stroke-dasharray": "5 4",
        }),
      );
      parts.push(text(xs(src) + 3, panel.y + 12, "source rate", { fill: "#333" }));
    }
  });
  const [w, h] = docSize(ss.length);
  parts.push(legend(MARGIN.left, h - 6, pols.map((p, i) => [p, color(p, i)])));
  return svgDoc(w, h, parts.join(""));
}

function quartileLinesPanel(
  rows: SummaryRow[],
  metric: string,
  q: string,
  panel: Panel,
  yLabel: string,
  title: string,
): string {
  const pols = policies(rows);
  const ss = sizes(rows);
  const ta = need("any t_alloc", tAllocs(rows)[0]);
  const series = pols.map((p) =>
    ss.map((s): [number, number] => [s, need(`${metric} ${q} for ${p} at ${s} B`, quartile(rows, p, ta, s, metric, q))]),
  );
  const yMax = need(metric, max(series.flat().map((d) => d[1])));
  const xs = linScale([0, need("sizes", max(ss))], [panel.x, panel.x + panel.width]);
  const ys = linScale([0, yMax * 1.05], [panel.y + panel.height, panel.y]);
  const parts = [
    axisBottom(xs, panel, "packet size [B]"),
    axisLeft(ys, panel, yLabel),
    text(panel.x + panel.width / 2, panel.y - 8, title, { "text-anchor": "middle", "font-weight": "bold" }),
  ];
  pols.forEach((p, pi) => {
    const pts = series[pi]!.map(([s, v]): [number, number] => [xs(s), ys(v)]);
    parts.push(polyline(pts, { stroke: color(p, pi), "stroke-width": 1.6 }));
    for (const [x, y] of pts) parts.push(el("circle", { cx: x, cy: y, r: 2.5, fill: color(p, pi) }));
  });
  return parts.join("");
}

export function throughputQuartiles(rows: SummaryRow[]): string {
  const parts = [
    quartileLinesPanel(rows, "s_app_mbps", "q1", panelAt(0), "throughput [Mbit/s]", "first quartile"),
    quartileLinesPanel(rows, "s_app_mbps", "q3", panelAt(1), "", "third quartile"),
  ];
  const pols = policies(rows);
  const [w, h] = docSize(2);
  parts.push(legend(MARGIN.left, h - 6, pols.map((p, i) => [p, color(p, i)])));
  return svgDoc(w, h, parts.join(""));
}

export function delayProfile(rows: SummaryRow[]): string {
  const pols = policies(rows);
  const ss = sizes(rows);
  const sMin = need("sizes", ss[0]);
  const ta = need("any t_alloc", tAllocs(rows)[0]);
  const parts: string[] = [];

  const p1 = panelAt(0);
  const curves = pols.map((p) => ecdfPoints(rows, p, ta, sMin, "d_app_ms"));
  const xMax = need(`delay ecdf at ${sMin} B`, max(curves.flat().map((c) => c[0])));
  const xs = linScale([0, xMax * 1.05], [p1.x, p1.x + p1.width]);
  const ys = linScale([0, 1], [p1.y + p1.height, p1.y]);
  parts.push(axisBottom(xs, p1, "delay [ms]"));
  parts.push(axisLeft(ys, p1, "fraction of packets"));
  parts.push(text(p1.x + p1.width / 2, p1.y - 8, `ECDF at s_UDP = ${sMin} B`, { "text-anchor": "middle", "font-weight": "bold" }));
  pols.forEach((p, pi) => {
    const pts = curves[pi]!;
    if (pts.length === 0) return;
    const mapped = pts.map(([v, f]): [number, number] => [xs(v), ys(f)]);
    mapped.unshift([xs(0), ys(0)]);
    parts.push(stepPath(mapped, { stroke: color(p, pi), "stroke-width": 1.6 }));
  });

  const p2 = panelAt(1);
  const q3 = pols.map((p) =>
    ss.map((s): [number, number] => [s, need(`delay q3 for ${p}`, quartile(rows, p, ta, s, "d_app_ms", "q3"))]),
  );
  const q1 = pols.map((p) =>
    ss.map((s): [number, number] => [s, need(`delay q1 for ${p}`, quartile(rows, p, ta, s, "d_app_ms", "q1"))]),
  );
  const yMax = need("delay quartiles", max([...q3.flat(), ...q1.flat()].map((d) => d[1])));
  const xs2 = linScale([0, need("sizes", max(ss))], [p2.x, p2.x + p2.width]);
  const ys2 = linScale([0, yMax * 1.05], [p2.y + p2.height, p2.y]);
  parts.push(axisBottom(xs2, p2, "packet size [B]"));
  parts.push(axisLeft(ys2, p2, "delay [ms]"));
  parts.push(text(p2.x + p2.width / 2, p2.y - 8, "quartiles (solid Q3, dashed Q1)", { "text-anchor": "middle", "font-weight": "bold" }));
  pols.forEach((p, pi) => {
    parts.push(polyline(q3[pi]!.map(([s, v]): [number, number] => [xs2(s), ys2(v)]), { stroke: color(p, pi), "stroke-width": 1.6 }));
    parts.push(polyline(q1[pi]!.map(([s, v]): [number, number] => [xs2(s), ys2(v)]), { stroke: color(p, pi), "stroke-width": 1.2, "stroke-dasharray": "4 3" }));
  });

  const [w, h] = docSize(2);
  parts.push(legend(MARGIN.left, h - 6, pols.map((p, i) => [p, color(p, i)])));
  return svgDoc(w, h, parts.join(""));
}

export function bufferProfile(rows: SummaryRow[]): string {
  const pols = policies(rows);
  const ss = sizes(rows);
  const sRef = need("sizes", ss[ss.length - 1]);
  const ta = need("any t_alloc", tAllocs(rows)[0]);
  const parts: string[] = [];

  const kinds = ["ue", "node"];
  const p1 = panelAt(0);
  const vals = pols.map((p) =>
    kinds.map((k) => grouped(rows, p, ta, sRef, "b_rlc_bytes", `kind:${k}`, "q2") ?? 0),
  );
  const yMax = need("buffer medians", max(vals.flat().map(log10)));
  const ys = linScale([0, yMax * 1.05], [p1.y + p1.height, p1.y]);
  parts.push(axisLeft(ys, p1, "log10 occupancy [B]"));
  parts.push(text(p1.x + p1.width / 2, p1.y - 8, `median by edge kind, s_UDP = ${sRef} B`, { "text-anchor": "middle", "font-weight": "bold" }));
  const groupW = p1.width / kinds.length;
  const barW = Math.min(28, (groupW - 30) / pols.length);
  kinds.forEach((k, ki) => {
    const cx = p1.x + ki * groupW + groupW / 2;
    parts.push(text(cx, p1.y + p1.height + 15, `${k} edges`, { "text-anchor": "middle" }));
    pols.forEach((p, pi) => {
      const v = log10(vals[pi]![ki]!);
      const x = cx - (pols.length * barW) / 2 + pi * barW;
      parts.push(
        el("rect", {
          x, y: ys(v), width: barW - 2, height: Math.max(0, p1.y + p1.height - ys(v)),
          fill: color(p, pi),
        }),
      );
    });
  });
  parts.push(el("line", { x1: p1.x, y1: p1.y + p1.height, x2: p1.x + p1.width, y2: p1.y + p1.height, stroke: "black" }));

  const p2 = panelAt(1);
  const depths = [
    ...new Set(
      rows
        .filter((r) => r.metric === "b_rlc_bytes" && r.group.startsWith("depth:"))
        .map((r) => Number(r.group.slice(6))),
    ),
  ].sort((a, b) => a - b);
  need("buffer depth groups", depths[0]);
  const series = pols.map((p) =>
    depths.map((d): [number, number] => [d, log10(grouped(rows, p, ta, sRef, "b_rlc_bytes", `depth:${d}`, "q3") ?? 0)]),
  );
  const yMax2 = need("buffer depth profile", max(series.flat().map((d) => d[1])));
  const xs2 = linScale([need("depths", depths[0]), need("depths", depths[depths.length - 1])], [p2.x, p2.x + p2.width]);
  const ys2 = linScale([0, yMax2 * 1.05], [p2.y + p2.height, p2.y]);
  parts.push(axisBottom(xs2, p2, "gNB depth", (v) => fmt(v)));
  parts.push(axisLeft(ys2, p2, "log10 occupancy [B]"));
  parts.push(text(p2.x + p2.width / 2, p2.y - 8, "third quartile by depth", { "text-anchor": "middle", "font-weight": "bold" }));
  pols.forEach((p, pi) => {
    const pts = series[pi]!.map(([d, v]): [number, number] => [xs2(d), ys2(v)]);
    parts.push(polyline(pts, { stroke: color(p, pi), "stroke-width": 1.6 }));
    for (const [x, y] of pts) parts.push(el("circle", { cx: x, cy: y, r: 2.5, fill: color(p, pi) }));
  });

  const [w, h] = docSize(2);
  parts.push(legend(MARGIN.left, h - 6, pols.map((p, i) => [p, color(p, i)])));
  return svgDoc(w, h, parts.join(""));
}

export function tallocScatter(rows: SummaryRow[]): string {
  const pols = policies(rows);
  const ss = sizes(rows);
  const sRef = need("sizes", ss[0]);
  const tas = tAllocs(rows);
  const pts: Array<{ p: string; ta: number; thr: number; dly: number }> = [];
  for (const p of pols) {
    for (const ta of tas) {
      const thr = quartile(rows, p, ta, sRef, "s_app_mbps", "q2");
      const dly = quartile(rows, p, ta, sRef, "d_app_ms", "q2");
      if (thr !== undefined && dly !== undefined) pts.push({ p, ta, thr, dly });
    }
  }
  need("throughput/delay medians", pts[0]);
  const panel = panelAt(0);
  const [thrLo, thrHi] = extent(pts.map((d) => d.thr)) as [number, number];
  const [dlyLo, dlyHi] = extent(pts.map((d) => d.dly)) as [number, number];
  const xs = linScale([thrLo * 0.95, thrHi * 1.05], [panel.x, panel.x + panel.width]);
  const ys = linScale([dlyLo * 0.95, dlyHi * 1.05], [panel.y + panel.height, panel.y]);
  const parts = [
    axisBottom(xs, panel, "median throughput [Mbit/s]"),
    axisLeft(ys, panel, "median delay [ms]"),
    text(panel.x + panel.width / 2, panel.y - 8, `allocation period sweep, s_UDP = ${sRef} B`, { "text-anchor": "middle", "font-weight": "bold" }),
  ];
  pts.forEach((d) => {
    const pi = pols.indexOf(d.p);
    parts.push(el("circle", { cx: xs(d.thr), cy: ys(d.dly), r: 4, fill: color(d.p, pi), "fill-opacity": 0.85 }));
    parts.push(text(xs(d.thr) + 6, ys(d.dly) + 4, `${d.p}@${d.ta}`));
  });
  const [w, h] = docSize(1);
  return svgDoc(w, h, parts.join(""));
}

export function runtimeVsSize(rows: SummaryRow[], bench: BenchRow[] | undefined): string {
  if (bench === undefined || bench.length === 0) {
    throw new SchemaError("bench_tmwm.csv required for the runtime figure");
  }
  const sorted = [...bench].sort((a, b) => a.n_nodes - b.n_nodes);
  const panel = panelAt(0);
  const xs = linScale(
    [log10(need("bench sizes", sorted[0]).n_nodes), log10(need("bench sizes", sorted[sorted.length - 1]).n_nodes)],
    [panel.x, panel.x + panel.width],
  );
  const yHi = need("bench medians", max(sorted.map((r) => log10(r.q3_us))));
  const yLo = Math.min(0, ...sorted.map((r) => log10(r.q1_us)));
  const ys = linScale([yLo, yHi * 1.05], [panel.y + panel.height, panel.y]);
  const pow = (v: number) => `1e${fmt(v)}`;
  const parts = [
    axisBottom(xs, panel, "tree nodes", pow),
    axisLeft(ys, panel, "runtime [us]", pow),
    text(panel.x + panel.width / 2, panel.y - 8, "matching solver runtime (median, IQR)", { "text-anchor": "middle", "font-weight": "bold" }),
  ];
  const mid = sorted.map((r): [number, number] => [xs(log10(r.n_nodes)), ys(log10(r.median_us))]);
  sorted.forEach((r, i) => {
    const x = mid[i]![0];
    parts.push(el("line", { x1: x, y1: ys(log10(r.q1_us)), x2: x, y2: ys(log10(r.q3_us)), stroke: "#1f77b4", "stroke-width": 1.2 }));
  });
  parts.push(polyline(mid, { stroke: "#1f77b4", "stroke-width": 1.6 }));
  for (const [x, y] of mid) parts.push(el("circle", { cx: x, cy: y, r: 3, fill: "#1f77b4" }));
  const [w, h] = docSize(1);
  return svgDoc(w, h, parts.join(""));
}

export const FIGURES: Record<string, (summary: SummaryRow[], bench?: BenchRow[]) => string> = {
  "throughput-ecdf": (s) => throughputEcdf(s),
  "throughput-quartiles": (s) => throughputQuartiles(s),
  "delay-profile": (s) => delayProfile(s),
  "buffer-profile": (s) => bufferProfile(s),
  "talloc-scatter": (s) => tallocScatter(s),
  "runtime-vs-size": (s, b) => runtimeVsSize(s, b),
};

export const FIGURE_NAMES = Object.keys(FIGURES);
