/** The CLI's contextual sort orders, reproduced for client-side filtering.
 *
 * The arrays in report.json already arrive in context order; this exists so
 * interactive re-sorting by another metric keeps the CLI's tie-break
 * discipline (remaining default keys, then element name ascending), and so
 * top-N over the default metric provably matches the CLI's `--top N`.
 */

import type { MethodRow, TypeRow } from "./types.js";

type Row = Record<string, unknown>;

const DEFAULT_CHAINS: Record<string, string[]> = {
  types: ["sloc", "wmc", "nom"],
  methods: ["cyclo", "nbd", "mloc", "calls"],
  namespaces: ["noc"],
  namespace_coupling: ["distance", "ce"],
  type_coupling: ["i_dep", "fan_in"],
};

export function elementName(context: string, row: Row): string {
  if (context === "methods") {
    const r = row as unknown as MethodRow;
    return `${qualify(r.namespace, r.type)}.${r.method}`;
  }
  if (context === "types" || context === "type_coupling") {
    const r = row as unknown as TypeRow;
    return qualify(r.namespace, r.type);
  }
  return String(row.namespace ?? "");
}

function qualify(namespace: string, type: string): string {
  return namespace && namespace !== "<default>" ? `${namespace}.${type}` : type;
}

/** Sort rows by the selected metric, falling back to the context's default
 * key chain and finally the element name. With the context's primary metric
 * selected this reproduces the CLI order exactly. */
export function sortRows<T extends Row>(rows: T[], context: string, metric?: string): T[] {
  const chain = DEFAULT_CHAINS[context] ?? [];
  const keys: string[] = [];
  if (metric) keys.push(metric);
  for (const key of chain) {
    if (!keys.includes(key)) keys.push(key);
  }
  const sorted = [...rows];
  sorted.sort((a, b) => {
    for (const key of keys) {
      const av = Number(a[key] ?? 0);
      const bv = Number(b[key] ?? 0);
      if (av !== bv) return bv - av; // descending
    }
    const an = elementName(context, a);
    const bn = elementName(context, b);
    return an < bn ? -1 : an > bn ? 1 : 0;
  });
  return sorted;
}

export function takeTop<T extends Row>(rows: T[], context: string, n: number, metric?: string): T[] {
  return sortRows(rows, context, metric).slice(0, Math.max(0, n));
}
