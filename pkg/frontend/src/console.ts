// Console wiring: frame entry, the what-if slider, the inverse panel, and
// ledger upload. The service is the single source of truth for every share,
// percent, zone, and price shown; this module only moves its numbers around.

import { ApiError, WinWinApi } from "./api";
import type { CurveResponse, EvaluateResponse } from "./api";
import { CsvError, parseDealCsv } from "./csv";
import {
  drawCurves,
  drawZoneBand,
  renderAxisLabels,
  renderGauges,
  renderLedger,
  renderZoneChip,
} from "./render";
import type { Axis } from "./render";
import { SingleFlight, debounce, fmt, isAbort } from "./state";

export interface ConsoleOptions {
  /** Trailing-edge delay for slider-driven evaluate calls. */
  debounceMs?: number;
  curveSamples?: number;
}

interface PresetFrame {
  lower: number;
  upper: number;
  increasingParty: string;
  decreasingParty: string;
}

const PRESETS: Record<string, PresetFrame> = {
  chess: { lower: 38, upper: 76, increasingParty: "novice", decreasingParty: "grandmaster" },
};

// Blob.text() is missing from some DOM implementations (notably jsdom).
function readFileText(file: File): Promise<string> {
  if (typeof file.text === "function") return file.text();
  return new Promise((resolve, reject) => {
    const reader = new FileReader();
    reader.onload = () => resolve(String(reader.result ?? ""));
    reader.onerror = () => reject(reader.error);
    reader.readAsText(file);
  });
}

const TEMPLATE = `
  <div id="banner" class="banner hidden" role="alert"></div>
  <header>
    <h1>Negotiator console</h1>
    <p class="tagline">how much is each side actually winning?</p>
  </header>

  <section class="panel" id="frame-panel">
    <h2>Deal frame</h2>
    <div class="field-row">
      <label>preset
        <select id="preset">
          <option value="custom">custom</option>
          <option value="chess">chess</option>
        </select>
      </label>
      <label>lower bound <input id="frame-lower" type="number" step="any" value="33"></label>
      <label>upper bound <input id="frame-upper" type="number" step="any" value="66"></label>
      <label>rising party <input id="frame-increasing" value="seller"></label>
      <label>falling party <input id="frame-decreasing" value="buyer"></label>
      <button id="frame-apply">Apply frame</button>
    </div>
    <p id="frame-error" class="inline-error" hidden></p>
  </section>

  <section class="panel" id="whatif-panel">
    <h2>What-if</h2>
    <div class="slider-row">
      <input id="slider" type="range" step="any">
      <output id="slider-value"></output>
      <span id="zone-chip" class="zone-chip"></span>
    </div>
    <div id="gauges">
      <div class="gauge gauge-inc">
        <span class="gauge-label"></span>
        <div class="gauge-bar"><div class="gauge-fill"></div></div>
        <span class="gauge-value"></span>
      </div>
      <div class="gauge gauge-dec">
        <span class="gauge-label"></span>
        <div class="gauge-bar"><div class="gauge-fill"></div></div>
        <span class="gauge-value"></span>
      </div>
    </div>
    <svg id="zone-band"></svg>
    <svg id="curves"></svg>
    <div id="axis-labels" class="axis-labels"></div>
  </section>

  <section class="panel" id="inverse-panel">
    <h2>Inverse: value for a target share</h2>
    <div class="field-row">
      <label>party
        <select id="inverse-party">
          <option value="increasing">rising party</option>
          <option value="decreasing">falling party</option>
        </select>
      </label>
      <label>target share (%) <input id="inverse-target" type="number" step="any" min="0" max="100" value="40"></label>
      <button id="inverse-run">Find value</button>
    </div>
    <p id="inverse-error" class="inline-error" hidden></p>
    <p id="inverse-result" hidden>
      settle at <strong id="inverse-price"></strong>
      <button id="inverse-apply">set slider to this value</button>
    </p>
  </section>

  <section class="panel" id="ledger-panel">
    <h2>Ledger</h2>
    <div class="field-row">
      <label>records file (CSV) <input id="ledger-file" type="file" accept=".csv,text/csv"></label>
      <label>constant cost <input id="ledger-cost" type="number" step="any" placeholder="per-record"></label>
      <label>settled offset <input id="ledger-offset" type="number" step="any" placeholder="per-record"></label>
      <label>rising party <input id="ledger-increasing" value="seller"></label>
      <label>falling party <input id="ledger-decreasing" value="buyer"></label>
      <button id="ledger-run">Score ledger</button>
    </div>
    <p id="ledger-error" class="inline-error" hidden></p>
    <div id="ledger-view"></div>
  </section>
`;

export function initConsole(
  root: HTMLElement,
  api: WinWinApi,
  options: ConsoleOptions = {},
): void {
  const debounceMs = options.debounceMs ?? 100;
  const curveSamples = options.curveSamples ?? 161;
  root.innerHTML = TEMPLATE;

  const pick = <T extends Element>(selector: string): T => {
    const node = root.querySelector<T>(selector);
    if (!node) throw new Error(`console template is missing ${selector}`);
    return node;
  };

  const banner = pick<HTMLElement>("#banner");
  const presetSelect = pick<HTMLSelectElement>("#preset");
  const lowerInput = pick<HTMLInputElement>("#frame-lower");
  const upperInput = pick<HTMLInputElement>("#frame-upper");
  const increasingInput = pick<HTMLInputElement>("#frame-increasing");
  const decreasingInput = pick<HTMLInputElement>("#frame-decreasing");
  const frameApply = pick<HTMLButtonElement>("#frame-apply");
  const frameError = pick<HTMLElement>("#frame-error");
  const slider = pick<HTMLInputElement>("#slider");
  const sliderValue = pick<HTMLOutputElement>("#slider-value");
  const zoneChip = pick<HTMLElement>("#zone-chip");
  const gauges = pick<HTMLElement>("#gauges");
  const zoneBand = pick<SVGSVGElement>("#zone-band");
  const curvesSvg = pick<SVGSVGElement>("#curves");
  const axisLabels = pick<HTMLElement>("#axis-labels");
  const inverseParty = pick<HTMLSelectElement>("#inverse-party");
  const inverseTarget = pick<HTMLInputElement>("#inverse-target");
  const inverseRun = pick<HTMLButtonElement>("#inverse-run");
  const inverseError = pick<HTMLElement>("#inverse-error");
  const inverseResult = pick<HTMLElement>("#inverse-result");
  const inversePrice = pick<HTMLElement>("#inverse-price");
  const inverseApply = pick<HTMLButtonElement>("#inverse-apply");
  const ledgerFile = pick<HTMLInputElement>("#ledger-file");
  const ledgerCost = pick<HTMLInputElement>("#ledger-cost");
  const ledgerOffset = pick<HTMLInputElement>("#ledger-offset");
  const ledgerIncreasing = pick<HTMLInputElement>("#ledger-increasing");
  const ledgerDecreasing = pick<HTMLInputElement>("#ledger-decreasing");
  const ledgerRun = pick<HTMLButtonElement>("#ledger-run");
  const ledgerError = pick<HTMLElement>("#ledger-error");
  const ledgerView = pick<HTMLElement>("#ledger-view");

  let axis: Axis | null = null;
  let labels = { increasing: "seller", decreasing: "buyer" };
  let curve: CurveResponse | null = null;
  let lastEvaluation: EvaluateResponse | null = null;
  let lastInversePrice: number | null = null;

  const evaluateFlight = new SingleFlight();
  const curveFlight = new SingleFlight();
  const inverseFlight = new SingleFlight();
  const ledgerFlight = new SingleFlight();

  function showBanner(message: string): void {
    banner.textContent = message;
    banner.classList.remove("hidden");
  }

  function clearBanner(): void {
    banner.classList.add("hidden");
  }

  function showInline(node: HTMLElement, message: string): void {
    node.textContent = message;
    node.hidden = false;
  }

  function clearInline(node: HTMLElement): void {
    node.hidden = true;
    node.textContent = "";
  }

  function reportFailure(error: unknown, inline: HTMLElement): void {
    if (isAbort(error)) return;
    if (error instanceof ApiError) {
      showInline(inline, error.problem.message);
      return;
    }
    showBanner("service unreachable - inputs kept; start it with: winwin serve");
  }

  function redrawWhatIf(): void {
    if (!axis) return;
    const value = Number(slider.value);
    sliderValue.textContent = fmt(value);
    drawZoneBand(zoneBand, axis, value);
    if (curve) drawCurves(curvesSvg, axis, curve, value, lastEvaluation);
  }

  async function refreshEvaluation(): Promise<void> {
    if (!axis) return;
    const value = Number(slider.value);
    const { signal, ticket } = evaluateFlight.begin();
    try {
      const evaluation = await api.evaluate(axis.lower, axis.upper, value, signal);
      if (!evaluateFlight.isCurrent(ticket)) return;
      lastEvaluation = evaluation;
      clearBanner();
      renderGauges(gauges, labels, evaluation);
      renderZoneChip(zoneChip, evaluation.zone);
      redrawWhatIf();
    } catch (error) {
      reportFailure(error, frameError);
    }
  }

  const debouncedEvaluation = debounce(debounceMs, () => void refreshEvaluation());

  async function refreshCurve(): Promise<void> {
    if (!axis) return;
    const { signal, ticket } = curveFlight.begin();
    try {
      const response = await api.curve(
        axis.lower, axis.upper, axis.min, axis.max, curveSamples, signal,
      );
      if (!curveFlight.isCurrent(ticket)) return;
      curve = response;
      clearBanner();
      redrawWhatIf();
    } catch (error) {
      reportFailure(error, frameError);
    }
  }

  function applyFrame(): void {
    clearInline(frameError);
    const lower = Number(lowerInput.value);
    const upper = Number(upperInput.value);
    if (lowerInput.value.trim() === "" || upperInput.value.trim() === "" ||
        !Number.isFinite(lower) || !Number.isFinite(upper)) {
      showInline(frameError, "both bounds must be finite numbers");
      return;
    }
    if (!(lower < upper)) {
      showInline(frameError, "the lower bound must be strictly below the upper bound");
      return;
    }
    labels = {
      increasing: increasingInput.value.trim() || "rising party",
      decreasing: decreasingInput.value.trim() || "falling party",
    };
    const margin = (upper - lower) / 2;
    axis = { min: lower - margin, max: upper + margin, lower, upper };
    slider.min = String(axis.min);
    slider.max = String(axis.max);
    slider.value = String((lower + upper) / 2);
    lastEvaluation = null;
    curve = null;
    renderAxisLabels(axisLabels, axis);
    redrawWhatIf();
    void refreshCurve();
    void refreshEvaluation();
  }

  presetSelect.addEventListener("change", () => {
    const preset = PRESETS[presetSelect.value];
    if (!preset) return;
    lowerInput.value = String(preset.lower);
    upperInput.value = String(preset.upper);
    increasingInput.value = preset.increasingParty;
    decreasingInput.value = preset.decreasingParty;
    applyFrame();
  });

  frameApply.addEventListener("click", () => applyFrame());

  slider.addEventListener("input", () => {
    redrawWhatIf();
    debouncedEvaluation();
  });

  async function runInverse(): Promise<void> {
    clearInline(inverseError);
    if (!axis) return;
    const percent = Number(inverseTarget.value);
    if (inverseTarget.value.trim() === "" || !Number.isFinite(percent) ||
        percent < 0 || percent > 100) {
      inverseResult.hidden = true;
      showInline(inverseError, "target must be between 0% and 100%");
      return;
    }
    const party = inverseParty.value === "decreasing" ? "decreasing" : "increasing";
    const { signal, ticket } = inverseFlight.begin();
    try {
      const response = await api.inverse(axis.lower, axis.upper, party, percent / 100, signal);
      if (!inverseFlight.isCurrent(ticket)) return;
      clearBanner();
      lastInversePrice = response.price;
      inversePrice.textContent = fmt(response.price);
      inverseResult.hidden = false;
    } catch (error) {
      reportFailure(error, inverseError);
    }
  }

  inverseRun.addEventListener("click", () => void runInverse());

  inverseApply.addEventListener("click", () => {
    if (lastInversePrice === null) return;
    slider.value = String(lastInversePrice);
    redrawWhatIf();
    void refreshEvaluation();
  });

  let ledgerFileText: string | null = null;
  ledgerFile.addEventListener("change", () => {
    ledgerFileText = null;
    const file = ledgerFile.files?.[0];
    if (!file) return;
    void readFileText(file).then((text) => {
      ledgerFileText = text;
    });
  });

  async function runLedger(): Promise<void> {
    clearInline(ledgerError);
    if (ledgerFileText === null) {
      showInline(ledgerError, "choose a records CSV first");
      return;
    }
    let parsed;
    try {
      parsed = parseDealCsv(ledgerFileText);
    } catch (error) {
      if (error instanceof CsvError) {
        showInline(ledgerError, error.message);
        return;
      }
      throw error;
    }
    const ledgerLabels = {
      increasing: ledgerIncreasing.value.trim() || "seller",
      decreasing: ledgerDecreasing.value.trim() || "buyer",
    };
    const rule = {
      constant_cost: ledgerCost.value.trim() === "" ? null : Number(ledgerCost.value),
      settled_offset: ledgerOffset.value.trim() === "" ? null : Number(ledgerOffset.value),
      increasing_party: ledgerLabels.increasing,
      decreasing_party: ledgerLabels.decreasing,
    };
    const { signal, ticket } = ledgerFlight.begin();
    try {
      const response = await api.ledger(rule, parsed.records, signal);
      if (!ledgerFlight.isCurrent(ticket)) return;
      clearBanner();
      renderLedger(ledgerView, ledgerLabels, response, parsed.warnings);
    } catch (error) {
      reportFailure(error, ledgerError);
    }
  }

  ledgerRun.addEventListener("click", () => void runLedger());

  applyFrame();
}
