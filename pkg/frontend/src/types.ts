/** Shapes of the dataset documents emitted by the metrics CLI. */

export interface SummarySection {
  total_namespaces: number;
  total_types: number;
  mean_types_per_namespace: number;
  total_sloc: number;
  mean_sloc_per_type: number;
  total_methods: number;
  mean_methods_per_type: number;
  total_cyclo: number;
  mean_cyclo_per_type: number;
}

export interface NamespaceRow {
  namespace: string;
  noc: number;
  nac: number;
}

export interface TypeRow {
  namespace: string;
  type: string;
  sloc: number;
  nom: number;
  npm: number;
  wmc: number;
  dep: number;
  i_dep: number;
  fan_in: number;
  fan_out: number;
  noa: number;
}

export interface MethodRow {
  namespace: string;
  type: string;
  method: string;
  mloc: number;
  cyclo: number;
  calls: number;
  nbd: number;
  param: number;
}

export interface CouplingRow {
  namespace: string;
  ca: number;
  ce: number;
  instability: number;
  abstractness: number;
  distance: number;
}

export interface DependencyEntry {
  type: string;
  depends_on: string[];
}

export interface DependenciesSection {
  external: DependencyEntry[];
  internal: DependencyEntry[];
  cycles: string[][];
}

export interface ReportDocument {
  project: string;
  generated_at: string | null;
  summary: SummarySection;
  namespaces: NamespaceRow[];
  types: TypeRow[];
  methods: MethodRow[];
  namespace_coupling: CouplingRow[];
  type_coupling?: unknown[];
  dependencies: DependenciesSection;
  findings?: unknown[];
}

export type ChartKind = "resonance" | "packing" | "chord" | "bars" | "thermometer";

export const CHART_KINDS: ChartKind[] = [
  "resonance",
  "packing",
  "chord",
  "bars",
  "thermometer",
];

/** Sections a chart needs before it can render. */
export const CHART_REQUIREMENTS: Record<ChartKind, (keyof ReportDocument)[]> = {
  resonance: ["types"],
  packing: ["types"],
  chord: ["dependencies"],
  bars: ["types", "methods"],
  thermometer: ["summary"],
};

export interface Dataset {
  project: string;
  document: ReportDocument;
  /** Sections the loaded document is missing (charts degrade gracefully). */
  missingSections: string[];
}

export interface ViewState {
  chart: ChartKind;
  metric: string;
  topN: number;
  namespace: string | null;
  complexityThreshold: number;
}

/** UI defaults mirror the CLI's default thresholds for chart coloring. */
export const DEFAULT_VIEW_STATE: ViewState = {
  chart: "resonance",
  metric: "sloc",
  topN: 5,
  namespace: null,
  complexityThreshold: 50,
};

export function validateViewState(state: ViewState): ViewState {
  if (!Number.isFinite(state.topN) || state.topN < 1) {
    throw new Error(`top-N must be >= 1, got ${state.topN}`);
  }
  if (!Number.isFinite(state.complexityThreshold) || state.complexityThreshold <= 0) {
    throw new Error(`complexity threshold must be > 0, got ${state.complexityThreshold}`);
  }
  return state;
}
