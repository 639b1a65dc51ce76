/** Inline SVG chart builders.  These shape presentation geometry only; the
 * statistics shown anywhere as text always come verbatim from the service. */

const SVG_NS = "http://www.w3.org/2000/svg";

function svg(width: number, height: number, label: string): SVGSVGElement {
  const el = document.createElementNS(SVG_NS, "svg");
  el.setAttribute("viewBox", `0 0 ${width} ${height}`);
  el.setAttribute("width", String(width));
  el.setAttribute("height", String(height));
  el.setAttribute("role", "img");
  el.setAttribute("aria-label", label);
  return el;
}

/** Side-by-side bars for two category distributions. */
export function histogramOverlay(
  a: number[],
  b: number[],
  label = "category distributions",
): SVGSVGElement {
  const width = 360;
  const height = 140;
  const pad = 4;
  const root = svg(width, height, label);
  const n = Math.max(a.length, b.length);
  const top = Math.max(...a, ...b, 1e-9);
  const slot = (width - 2 * pad) / n;
  const bar = slot / 2 - 1;
  for (let i = 0; i < n; i++) {
    for (const [series, values, color] of [
      ["a", a, "#3565a9"],
      ["b", b, "#d97f33"],
    ] as const) {
      const v = values[i] ?? 0;
      const h = ((height - 2 * pad) * v) / top;
      const rect = document.createElementNS(SVG_NS, "rect");
      rect.setAttribute("x", String(pad + i * slot + (series === "a" ? 0 : bar + 2)));
      rect.setAttribute("y", String(height - pad - h));
      rect.setAttribute("width", String(Math.max(bar, 1)));
      rect.setAttribute("height", String(h));
      rect.setAttribute("fill", color);
      rect.setAttribute("data-series", series);
      rect.setAttribute("data-bin", String(i + 1));
      root.appendChild(rect);
    }
  }
  return root;
}

function polyline(points: Array<[number, number]>, color: string): SVGPolylineElement {
  const el = document.createElementNS(SVG_NS, "polyline");
  el.setAttribute("points", points.map(([x, y]) => `${x},${y}`).join(" "));
  el.setAttribute("fill", "none");
  el.setAttribute("stroke", color);
  el.setAttribute("stroke-width", "1.5");
  return el;
}

/** Overlaid line charts for equal-length curves (Lorenz points, shape
 * signatures); values scaled into the viewbox. */
export function curveOverlay(a: number[], b: number[], label: string): SVGSVGElement {
  const width = 360;
  const height = 140;
  const pad = 4;
  const root = svg(width, height, label);
  const top = Math.max(...a, ...b, 1e-9);
  const place = (values: number[]): Array<[number, number]> =>
    values.map((v, i) => [
      pad + ((width - 2 * pad) * i) / Math.max(values.length - 1, 1),
      height - pad - ((height - 2 * pad) * v) / top,
    ]);
  root.appendChild(polyline(place(a), "#3565a9")).setAttribute("data-series", "a");
  root.appendChild(polyline(place(b), "#d97f33")).setAttribute("data-series", "b");
  return root;
}

/** Horizontal 0..1 gauge; the text shown next to it is the caller's. */
export function gaugeBar(fraction: number, label: string): SVGSVGElement {
  const width = 220;
  const height = 16;
  const root = svg(width, height, label);
  const frame = document.createElementNS(SVG_NS, "rect");
  frame.setAttribute("x", "0.5");
  frame.setAttribute("y", "0.5");
  frame.setAttribute("width", String(width - 1));
  frame.setAttribute("height", String(height - 1));
  frame.setAttribute("fill", "#f2f2f2");
  frame.setAttribute("stroke", "#999");
  root.appendChild(frame);
  const fill = document.createElementNS(SVG_NS, "rect");
  const clamped = Math.min(Math.max(fraction, 0), 1);
  fill.setAttribute("x", "0.5");
  fill.setAttribute("y", "0.5");
  fill.setAttribute("width", String((width - 1) * clamped));
  fill.setAttribute("height", String(height - 1));
  fill.setAttribute("fill", "#b3432b");
  fill.setAttribute("data-role", "gauge-fill");
  root.appendChild(fill);
  return root;
}
