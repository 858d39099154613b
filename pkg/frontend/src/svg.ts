/** Minimal SVG assembly: elements, panels, axes over d3 linear scales. */

import { scaleLinear, type ScaleLinear } from "d3-scale";

export const FONT = "11px sans-serif";

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

export function el(
  tag: string,
  attrs: Record<string, string | number>,
  children = "",
): string {
  const a = Object.entries(attrs)
    .map(([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : esc(v)}"`)
    .join(" ");
  return children === "" ? `<${tag} ${a}/>` : `<${tag} ${a}>${children}</${tag}>`;
}

export function text(x: number, y: number, s: string, attrs: Record<string, string | number> = {}): string {
  return el("text", { x, y, "font-size": 11, "font-family": "sans-serif", ...attrs }, esc(s));
}

/** Round coordinates to keep files small and output stable across platforms. */
export function fmt(v: number): string {
  if (!Number.isFinite(v)) return "0";
  const r = Math.round(v * 100) / 100;
  return Object.is(r, -0) ? "0" : String(r);
}

export function svgDoc(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">` +
    el("rect", { x: 0, y: 0, width, height, fill: "white" }) +
    body +
    "</svg>"
  );
}

export interface Panel {
  x: number;
  y: number;
  width: number;
  height: number;
}

export function linScale(domain: [number, number], range: [number, number]): ScaleLinear<number, number> {
  const [lo, hi] = domain;
  // a degenerate domain still deserves a drawable axis
  return scaleLinear().domain(lo === hi ? [lo, lo + 1] : domain).range(range).nice();
}

export function axisBottom(scale: ScaleLinear<number, number>, panel: Panel, label: string, tickFormat?: (v: number) => string): string {
  const y = panel.y + panel.height;
  const f = tickFormat ?? ((v: number) => fmt(v));
  const parts = [
    el("line", { x1: panel.x, y1: y, x2: panel.x + panel.width, y2: y, stroke: "black" }),
  ];
  for (const t of scale.ticks(5)) {
    const x = scale(t);
    parts.push(el("line", { x1: x, y1: y, x2: x, y2: y + 4, stroke: "black" }));
    parts.push(text(x, y + 15, f(t), { "text-anchor": "middle" }));
  }
  parts.push(
    text(panel.x + panel.width / 2, y + 30, label, { "text-anchor": "middle", "font-style": "italic" }),
  );
  return parts.join("");
}

export function axisLeft(scale: ScaleLinear<number, number>, panel: Panel, label: string, tickFormat?: (v: number) => string): string {
  const f = tickFormat ?? ((v: number) => fmt(v));
  const parts = [
    el("line", { x1: panel.x, y1: panel.y, x2: panel.x, y2: panel.y + panel.height, stroke: "black" }),
  ];
  for (const t of scale.ticks(5)) {
    const y = scale(t);
    parts.push(el("line", { x1: panel.x - 4, y1: y, x2: panel.x, y2: y, stroke: "black" }));
    parts.push(text(panel.x - 6, y + 3, f(t), { "text-anchor": "end" }));
  }
  parts.push(
    el(
      "g",
      { transform: `translate(${panel.x - 38},${panel.y + panel.height / 2}) rotate(-90)` },
      text(0, 0, label, { "text-anchor": "middle", "font-style": "italic" }),
    ),
  );
  return parts.join("");
}

export function polyline(points: Array<[number, number]>, attrs: Record<string, string | number>): string {
  const d = points.map(([x, y], i) => `${i === 0 ? "M" : "L"}${fmt(x)},${fmt(y)}`).join("");
  return el("path", { d, fill: "none", ...attrs });
}

/** Horizontal-then-vertical step path, the natural shape of an ECDF. */
export function stepPath(points: Array<[number, number]>, attrs: Record<string, string | number>): string {
  if (points.length === 0) return "";
  const first = points[0]!;
  let d = `M${fmt(first[0])},${fmt(first[1])}`;
  for (let i = 1; i < points.length; i++) {
    const [x, y] = points[i]!;
    const prev = points[i - 1]!;
    d += `L${fmt(x)},${fmt(prev[1])}L${fmt(x)},${fmt(y)}`;
  }
  return el("path", { d, fill: "none", ...attrs });
}

export function legend(x: number, y: number, entries: Array<[string, string]>): string {
  const parts: string[] = [];
  let cx = x;
  for (const [name, color] of entries) {
    parts.push(el("line", { x1: cx, y1: y - 4, x2: cx + 18, y2: y - 4, stroke: color, "stroke-width": 2 }));
    parts.push(text(cx + 22, y, name));
    cx += 26 + 7 * name.length + 18;
  }
  return parts.join("");
}
