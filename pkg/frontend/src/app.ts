/** Dashboard shell: loads the active dataset, wires the controls, renders
 * the selected chart. Pure static files; any web server can host it. */

import { httpFetcher, loadDataset, Fetcher } from "./data.js";
import { renderBars } from "./charts/bars.js";
import { renderChord } from "./charts/chord.js";
import { renderPacking } from "./charts/packing.js";
import { renderResonance } from "./charts/resonance.js";
import { renderThermometer } from "./charts/thermometer.js";
import { BAR_CONTEXTS, namespacesOf } from "./charts/layout.js";
import {
  CHART_KINDS,
  CHART_REQUIREMENTS,
  ChartKind,
  Dataset,
  DEFAULT_VIEW_STATE,
  ViewState,
  validateViewState,
} from "./types.js";

const CHART_TITLES: Record<ChartKind, string> = {
  resonance: "Code resonance",
  packing: "Circle packing",
  chord: "Namespace chord",
  bars: "Top-N bars",
  thermometer: "Thermometers",
};

export function chartAvailability(dataset: Dataset): Record<ChartKind, boolean> {
  const missing = new Set(dataset.missingSections);
  const out = {} as Record<ChartKind, boolean>;
  for (const kind of CHART_KINDS) {
    out[kind] = CHART_REQUIREMENTS[kind].every((section) => !missing.has(section));
  }
  // bars can still chart types when only the methods section is absent
  if (!out.bars && !missing.has("types")) {
    out.bars = true;
  }
  return out;
}

export async function initApp(root: HTMLElement, fetcher?: Fetcher): Promise<void> {
  root.innerHTML = "";
  const result = await loadDataset(fetcher ?? httpFetcher());
  if (!result.ok) {
    const banner = document.createElement("div");
    banner.className = "error-banner";
    banner.textContent = `Could not load the dataset: ${result.error}`;
    root.appendChild(banner);
    return;
  }
  const dataset = result.dataset;
  const available = chartAvailability(dataset);
  const state: ViewState = { ...DEFAULT_VIEW_STATE };
  let barsContext: "types" | "methods" = "types";

  const header = document.createElement("header");
  header.innerHTML = `<h1>${dataset.project}</h1>`;
  const sub = document.createElement("p");
  sub.className = "subtitle";
  const s = dataset.document.summary;
  sub.textContent =
    `${s.total_namespaces} namespaces, ${s.total_types} types, ` +
    `${s.total_sloc} SLOC, complexity ${s.total_cyclo}`;
  header.appendChild(sub);
  root.appendChild(header);

  const nav = document.createElement("nav");
  nav.className = "chart-nav";
  const buttons = new Map<ChartKind, HTMLButtonElement>();
  for (const kind of CHART_KINDS) {
    const button = document.createElement("button");
    button.textContent = CHART_TITLES[kind];
    button.dataset.chart = kind;
    if (!available[kind]) {
      button.disabled = true;
      button.title = "dataset is missing the sections this chart needs";
    }
    button.addEventListener("click", () => {
      state.chart = kind;
      update();
    });
    nav.appendChild(button);
    buttons.set(kind, button);
  }
  root.appendChild(nav);

  const controls = document.createElement("div");
  controls.className = "controls";
  controls.innerHTML = `
    <label>top N <input type="number" id="ctl-top" min="1" value="${state.topN}"></label>
    <label>context <select id="ctl-context">
      <option value="types">types</option>
      <option value="methods"${dataset.missingSections.includes("methods") ? " disabled" : ""}>methods</option>
    </select></label>
    <label>metric <select id="ctl-metric"></select></label>
    <label>namespace <select id="ctl-namespace"><option value="">(all)</option></select></label>
    <label>complexity threshold
      <input type="number" id="ctl-threshold" min="1" value="${state.complexityThreshold}"></label>
  `;
  root.appendChild(controls);

  const metricSelect = controls.querySelector<HTMLSelectElement>("#ctl-metric")!;
  const namespaceSelect = controls.querySelector<HTMLSelectElement>("#ctl-namespace")!;
  for (const namespace of namespacesOf(dataset)) {
    const option = document.createElement("option");
    option.value = namespace;
    option.textContent = namespace;
    namespaceSelect.appendChild(option);
  }

  function fillMetrics(): void {
    metricSelect.innerHTML = "";
    for (const metric of BAR_CONTEXTS[barsContext].metrics) {
      const option = document.createElement("option");
      option.value = metric;
      option.textContent = metric;
      metricSelect.appendChild(option);
    }
    state.metric = BAR_CONTEXTS[barsContext].metrics[0];
    metricSelect.value = state.metric;
  }
  fillMetrics();

  controls.querySelector<HTMLInputElement>("#ctl-top")!.addEventListener("change", (e) => {
    state.topN = Math.max(1, Number((e.target as HTMLInputElement).value) || 1);
    update();
  });
  controls.querySelector<HTMLSelectElement>("#ctl-context")!.addEventListener("change", (e) => {
    barsContext = (e.target as HTMLSelectElement).value as "types" | "methods";
    fillMetrics();
    update();
  });
  metricSelect.addEventListener("change", () => {
    state.metric = metricSelect.value;
    update();
  });
  namespaceSelect.addEventListener("change", () => {
    state.namespace = namespaceSelect.value || null;
    update();
  });
  controls.querySelector<HTMLInputElement>("#ctl-threshold")!.addEventListener("change", (e) => {
    state.complexityThreshold = Math.max(1, Number((e.target as HTMLInputElement).value) || 1);
    update();
  });

  const host = document.createElement("div");
  host.id = "chart-host";
  root.appendChild(host);

  function update(): void {
    validateViewState(state);
    for (const [kind, button] of buttons) {
      button.classList.toggle("active", kind === state.chart);
    }
    const doc = dataset.document;
    switch (state.chart) {
      case "resonance":
        renderResonance(host, doc.types, state);
        break;
      case "packing":
        renderPacking(host, doc.types);
        break;
      case "chord":
        renderChord(host, doc.dependencies);
        break;
      case "bars":
        renderBars(host, doc, barsContext, state);
        break;
      case "thermometer":
        renderThermometer(host, doc.summary);
        break;
    }
  }

  update();
}

export function boot(): void {
  const root = document.getElementById("app");
  if (root) {
    void initApp(root);
  }
}
