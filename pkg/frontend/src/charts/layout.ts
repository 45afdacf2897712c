/** Pure data preparation for every chart. No DOM, no d3: everything here is
 * unit-testable and every number comes straight from the dataset. */

import { takeTop, elementName } from "../sort.js";
import type {
  Dataset,
  DependenciesSection,
  ReportDocument,
  SummarySection,
  TypeRow,
  ViewState,
} from "../types.js";

// -- resonance ---------------------------------------------------------------

export interface Bubble {
  namespace: string;
  type: string;
  sloc: number;
  wmc: number;
  red: boolean;
  row: TypeRow;
}

export function resonanceBubbles(types: TypeRow[], threshold: number): Bubble[] {
  return types.map((row) => ({
    namespace: row.namespace,
    type: row.type,
    sloc: row.sloc,
    wmc: row.wmc,
    red: row.wmc >= threshold,
    row,
  }));
}

export function redBubbleCount(types: TypeRow[], threshold: number): number {
  return types.filter((row) => row.wmc >= threshold).length;
}

// -- hierarchy (resonance grouping and circle packing) -----------------------

export interface HierarchyNode {
  name: string;
  children?: HierarchyNode[];
  value?: number;
  row?: TypeRow;
}

export function namespaceHierarchy(types: TypeRow[], namespaceFilter?: string | null): HierarchyNode {
  const groups = new Map<string, HierarchyNode[]>();
  for (const row of types) {
    if (namespaceFilter && row.namespace !== namespaceFilter) continue;
    const children = groups.get(row.namespace) ?? [];
    // sized by SLOC; a zero-SLOC type still needs nonzero area to be visible
    children.push({ name: row.type, value: Math.max(row.sloc, 1), row });
    groups.set(row.namespace, children);
  }
  const children = [...groups.entries()]
    .sort((a, b) => (a[0] < b[0] ? -1 : 1))
    .map(([name, kids]) => ({ name, children: kids }));
  return { name: "project", children };
}

export function hierarchyTotal(node: HierarchyNode): number {
  if (node.children) {
    return node.children.reduce((acc, child) => acc + hierarchyTotal(child), 0);
  }
  return node.value ?? 0;
}

// -- chord -------------------------------------------------------------------

export interface ChordData {
  namespaces: string[];
  matrix: number[][]; // [from][to] = number of internal edges
}

function namespaceOf(fqn: string): string {
  const idx = fqn.lastIndexOf(".");
  return idx < 0 ? "<default>" : fqn.slice(0, idx);
}

export function chordData(dependencies: DependenciesSection): ChordData {
  const volumes = new Map<string, Map<string, number>>();
  const names = new Set<string>();
  for (const entry of dependencies.internal) {
    const from = namespaceOf(entry.type);
    names.add(from);
    for (const target of entry.depends_on) {
      const to = namespaceOf(target);
      names.add(to);
      const row = volumes.get(from) ?? new Map<string, number>();
      row.set(to, (row.get(to) ?? 0) + 1);
      volumes.set(from, row);
    }
  }
  const namespaces = [...names].sort();
  const index = new Map(namespaces.map((name, i) => [name, i]));
  const matrix = namespaces.map(() => namespaces.map(() => 0));
  for (const [from, row] of volumes) {
    for (const [to, volume] of row) {
      matrix[index.get(from)!][index.get(to)!] = volume;
    }
  }
  return { namespaces, matrix };
}

// -- bars --------------------------------------------------------------------

export interface Bar {
  label: string;
  value: number;
}

export const BAR_CONTEXTS: Record<string, { section: keyof ReportDocument; metrics: string[] }> = {
  types: {
    section: "types",
    metrics: ["sloc", "nom", "npm", "wmc", "dep", "i_dep", "fan_in", "fan_out", "noa"],
  },
  methods: {
    section: "methods",
    metrics: ["cyclo", "nbd", "mloc", "calls", "param"],
  },
};

export function barsData(
  document: ReportDocument,
  context: "types" | "methods",
  metric: string,
  topN: number,
  namespaceFilter?: string | null,
): Bar[] {
  const section = document[BAR_CONTEXTS[context].section] as unknown as Record<string, unknown>[];
  const rows = namespaceFilter
    ? section.filter((row) => row.namespace === namespaceFilter)
    : section;
  return takeTop(rows, context, topN, metric).map((row) => ({
    label: elementName(context, row),
    value: Number(row[metric] ?? 0),
  }));
}

// -- thermometer ---------------------------------------------------------------

export interface Thermometer {
  label: string;
  value: number;
  limit: number;
  ratio: number; // value/limit clamped to [0, 1.25] for drawing
  over: boolean;
}

/** Chart-coloring thresholds; same defaults the CLI documents. */
export interface ChartThresholds {
  noc_high: number;
  sloc_type_high: number;
  nom_low: number;
  wmc_high: number;
}

export const DEFAULT_CHART_THRESHOLDS: ChartThresholds = {
  noc_high: 20,
  sloc_type_high: 100,
  nom_low: 10,
  wmc_high: 50,
};

export function thermometerData(
  summary: SummarySection,
  thresholds: ChartThresholds = DEFAULT_CHART_THRESHOLDS,
): Thermometer[] {
  const rows: [string, number, number][] = [
    ["Types per namespace", summary.mean_types_per_namespace, thresholds.noc_high],
    ["SLOC per type", summary.mean_sloc_per_type, thresholds.sloc_type_high],
    ["Methods per type", summary.mean_methods_per_type, thresholds.nom_low],
    ["Complexity per type", summary.mean_cyclo_per_type, thresholds.wmc_high],
  ];
  return rows.map(([label, value, limit]) => ({
    label,
    value,
    limit,
    ratio: Math.min(value / limit, 1.25),
    over: value >= limit,
  }));
}

// -- availability ---------------------------------------------------------------

export function namespacesOf(dataset: Dataset): string[] {
  return [...new Set(dataset.document.types.map((row) => row.namespace))].sort();
}

export function describeState(state: ViewState): string {
  const parts = [`chart=${state.chart}`, `top=${state.topN}`];
  if (state.namespace) parts.push(`namespace=${state.namespace}`);
  return parts.join(" ");
}
