// DOM and SVG builders. These only lay out numbers taken verbatim from
// service responses; the one bit of local arithmetic is pixel projection.

import type { CurveResponse, EvaluateResponse, LedgerResponse } from "./api";
import { fmt } from "./state";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface Axis {
  min: number;
  max: number;
  lower: number;
  upper: number;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  return node;
}

function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function renderGauges(
  root: HTMLElement,
  labels: { increasing: string; decreasing: string },
  evaluation: EvaluateResponse,
): void {
  const set = (side: "inc" | "dec", label: string, percent: number, raw: number) => {
    const name = root.querySelector<HTMLElement>(`.gauge-${side} .gauge-label`)!;
    const value = root.querySelector<HTMLElement>(`.gauge-${side} .gauge-value`)!;
    const fill = root.querySelector<HTMLElement>(`.gauge-${side} .gauge-fill`)!;
    name.textContent = label;
    value.textContent = `${percent}%`;
    value.title = `raw share ${raw}`;
    fill.style.width = `${percent}%`;
  };
  set("inc", labels.increasing, evaluation.swp_percent, evaluation.swp_raw);
  set("dec", labels.decreasing, evaluation.bwp_percent, evaluation.bwp_raw);
}

const ZONE_TITLES: Record<string, string> = {
  lose_win: "lose-win",
  fuzzy_win_win: "win-win (ZOPA)",
  win_lose: "win-lose",
};

export function renderZoneChip(chip: HTMLElement, zone: string): void {
  chip.textContent = ZONE_TITLES[zone] ?? zone;
  chip.dataset.zone = zone;
}

/** Three colored regions with the agreement zone highlighted, plus a value marker. */
export function drawZoneBand(svg: SVGSVGElement, axis: Axis, value: number): void {
  clear(svg);
  const width = 640;
  const height = 44;
  const bandTop = 16;
  const bandHeight = 18;
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  const x = (v: number) => ((v - axis.min) / (axis.max - axis.min)) * width;

  const regions: [number, number, string, string][] = [
    [axis.min, axis.lower, "zone-losewin", "lose-win"],
    [axis.lower, axis.upper, "zone-zopa", "ZOPA"],
    [axis.upper, axis.max, "zone-winlose", "win-lose"],
  ];
  for (const [from, to, cls, title] of regions) {
    if (to <= from) continue;
    svg.appendChild(
      svgEl("rect", {
        x: String(x(from)),
        y: String(bandTop),
        width: String(x(to) - x(from)),
        height: String(bandHeight),
        class: cls,
      }),
    );
    const label = svgEl("text", {
      x: String((x(from) + x(to)) / 2),
      y: "11",
      class: "zone-text",
      "text-anchor": "middle",
    });
    label.textContent = title;
    svg.appendChild(label);
  }
  const markerX = x(Math.min(Math.max(value, axis.min), axis.max));
  svg.appendChild(
    svgEl("line", {
      x1: String(markerX),
      y1: String(bandTop - 4),
      x2: String(markerX),
      y2: String(bandTop + bandHeight + 4),
      class: "marker-line",
    }),
  );
}

/** Both membership curves (service-sampled) with a marker at the candidate value. */
export function drawCurves(
  svg: SVGSVGElement,
  axis: Axis,
  curve: CurveResponse,
  value: number,
  evaluation: EvaluateResponse | null,
): void {
  clear(svg);
  const width = 640;
  const height = 220;
  const pad = 24;
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  const x = (v: number) => pad + ((v - axis.min) / (axis.max - axis.min)) * (width - 2 * pad);
  const y = (share: number) => pad + (1 - share) * (height - 2 * pad);

  for (const share of [0, 0.5, 1]) {
    svg.appendChild(
      svgEl("line", {
        x1: String(pad),
        y1: String(y(share)),
        x2: String(width - pad),
        y2: String(y(share)),
        class: "grid-line",
      }),
    );
  }
  for (const bound of [axis.lower, axis.upper]) {
    svg.appendChild(
      svgEl("line", {
        x1: String(x(bound)),
        y1: String(pad),
        x2: String(x(bound)),
        y2: String(height - pad),
        class: "bound-line",
      }),
    );
  }

  const polyline = (shareIndex: 1 | 2, cls: string) =>
    svgEl("polyline", {
      points: curve.points.map((p) => `${x(p[0])},${y(p[shareIndex])}`).join(" "),
      class: cls,
      fill: "none",
    });
  svg.appendChild(polyline(1, "curve-increasing"));
  svg.appendChild(polyline(2, "curve-decreasing"));

  const markerX = x(Math.min(Math.max(value, axis.min), axis.max));
  svg.appendChild(
    svgEl("line", {
      x1: String(markerX),
      y1: String(pad),
      x2: String(markerX),
      y2: String(height - pad),
      class: "marker-line",
    }),
  );
  if (evaluation) {
    svg.appendChild(
      svgEl("circle", {
        cx: String(markerX),
        cy: String(y(evaluation.swp_raw)),
        r: "4",
        class: "marker-dot-increasing",
      }),
    );
    svg.appendChild(
      svgEl("circle", {
        cx: String(markerX),
        cy: String(y(evaluation.bwp_raw)),
        r: "4",
        class: "marker-dot-decreasing",
      }),
    );
  }
}

export function renderAxisLabels(row: HTMLElement, axis: Axis): void {
  row.innerHTML = "";
  for (const value of [axis.min, axis.lower, axis.upper, axis.max]) {
    const span = document.createElement("span");
    span.textContent = fmt(value);
    row.appendChild(span);
  }
}

const MARKS: Record<string, [string, string]> = {
  increasing_wins: ["X", ""],
  decreasing_wins: ["", "X"],
  tie: ["X", "X"],
};

export function renderLedger(
  container: HTMLElement,
  labels: { increasing: string; decreasing: string },
  response: LedgerResponse,
  warnings: string[],
): void {
  container.innerHTML = "";

  if (warnings.length > 0 || response.errors.length > 0) {
    const issues = document.createElement("ul");
    issues.className = "record-errors";
    for (const warning of warnings) {
      const item = document.createElement("li");
      item.textContent = warning;
      issues.appendChild(item);
    }
    for (const issue of response.errors) {
      const item = document.createElement("li");
      item.textContent = `${issue.label}: ${issue.message}`;
      issues.appendChild(item);
    }
    container.appendChild(issues);
  }

  const summary = response.summary;
  const chips = document.createElement("p");
  chips.className = "ledger-summary";
  chips.textContent =
    `${summary.record_count} records - ${labels.increasing} wins ` +
    `${summary.increasing_win_count}, ${labels.decreasing} wins ` +
    `${summary.decreasing_win_count}, ties ${summary.tie_count}`;
  container.appendChild(chips);

  const table = document.createElement("table");
  table.className = "ledger-table";
  const head = table.createTHead().insertRow();
  for (const title of [
    "label", "cost", "reference", "settled",
    labels.increasing, labels.decreasing,
    `${labels.increasing} wins`, `${labels.decreasing} wins`,
  ]) {
    const cell = document.createElement("th");
    cell.textContent = title;
    head.appendChild(cell);
  }
  const body = table.createTBody();
  for (const row of response.attributed) {
    const tr = body.insertRow();
    const [incMark, decMark] = MARKS[row.attribution] ?? ["", ""];
    const cells = [
      row.label,
      fmt(row.cost_price),
      fmt(row.reference_price),
      fmt(row.settled_price),
      `${row.swp_percent}%`,
      `${row.bwp_percent}%`,
      incMark,
      decMark,
    ];
    for (const text of cells) {
      tr.insertCell().textContent = text;
    }
    tr.dataset.attribution = row.attribution;
  }
  const foot = table.createTFoot().insertRow();
  foot.className = "avg-row";
  for (const text of [
    "AVG", "", "", "",
    `${summary.avg_increasing_percent}%`,
    `${summary.avg_decreasing_percent}%`,
    String(summary.increasing_win_count),
    String(summary.decreasing_win_count),
  ]) {
    foot.insertCell().textContent = text;
  }
  container.appendChild(table);
}
