/** Dataset loading: config resolution, report.json, CSV fallback.
 *
 * The dashboard never computes a metric itself; everything displayed comes
 * out of the files the CLI wrote. Loading problems resolve to an error
 * value naming the failing file so the page can show a banner instead of
 * going blank.
 */

import type { Dataset, ReportDocument } from "./types.js";

export type Fetcher = (path: string) => Promise<string>;

export type LoadResult =
  | { ok: true; dataset: Dataset }
  | { ok: false; error: string };

const CORE_SECTIONS = ["summary", "types", "methods", "namespace_coupling", "dependencies"] as const;

/** Sections that make a dataset unusable when absent. */
const HARD_SECTIONS = new Set(["summary", "types"]);

export async function loadDataset(
  fetcher: Fetcher,
  basePath = "datasets",
): Promise<LoadResult> {
  const configPath = `${basePath}/config.json`;
  let active: string;
  try {
    const parsed = JSON.parse(await fetcher(configPath));
    active = parsed.active;
    if (typeof active !== "string" || !active) {
      return { ok: false, error: `${configPath}: missing "active" project name` };
    }
  } catch (err) {
    return { ok: false, error: `${configPath}: ${describe(err)}` };
  }

  const reportPath = `${basePath}/${active}/report.json`;
  let document: ReportDocument | null = null;
  try {
    document = JSON.parse(await fetcher(reportPath)) as ReportDocument;
  } catch {
    document = null; // fall back to the CSV set
  }
  if (document === null) {
    const fallback = await loadCsvDataset(fetcher, `${basePath}/${active}`);
    if (!fallback.ok) {
      return {
        ok: false,
        error: `${reportPath}: not loadable and CSV fallback failed (${fallback.error})`,
      };
    }
    document = fallback.document;
  }

  const missing = CORE_SECTIONS.filter((section) => !(section in document!) || document![section] == null);
  const hardMissing = missing.filter((section) => HARD_SECTIONS.has(section));
  if (hardMissing.length > 0) {
    return { ok: false, error: `${reportPath}: missing section(s) ${hardMissing.join(", ")}` };
  }
  return {
    ok: true,
    dataset: {
      project: document.project ?? active,
      document,
      missingSections: missing,
    },
  };
}

function describe(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}

// ---------------------------------------------------------------------------
// CSV fallback
// ---------------------------------------------------------------------------

/** Minimal RFC-4180 parser: quoted fields, doubled quotes, LF/CRLF rows. */
export function parseCsv(text: string): string[][] {
  const rows: string[][] = [];
  let row: string[] = [];
  let field = "";
  let quoted = false;
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (quoted) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
        i += 1;
        continue;
      }
      field += ch;
      i += 1;
      continue;
    }
    if (ch === '"' && field === "") {
      quoted = true;
      i += 1;
    } else if (ch === ",") {
      row.push(field);
      field = "";
      i += 1;
    } else if (ch === "\n" || ch === "\r") {
      if (ch === "\r" && text[i + 1] === "\n") i += 1;
      row.push(field);
      rows.push(row);
      row = [];
      field = "";
      i += 1;
    } else {
      field += ch;
      i += 1;
    }
  }
  if (field !== "" || row.length > 0) {
    row.push(field);
    rows.push(row);
  }
  return rows;
}

function records(text: string): Record<string, string>[] {
  const rows = parseCsv(text);
  if (rows.length === 0) return [];
  const header = rows[0];
  return rows.slice(1).map((cells) => {
    const rec: Record<string, string> = {};
    header.forEach((name, idx) => {
      rec[name] = cells[idx] ?? "";
    });
    return rec;
  });
}

const num = (value: string): number => Number(value);

async function loadCsvDataset(
  fetcher: Fetcher,
  dir: string,
): Promise<{ ok: true; document: ReportDocument } | { ok: false; error: string }> {
  const read = async (name: string) => records(await fetcher(`${dir}/${name}`));
  try {
    const summaryRows = await read("summary.csv");
    const summary = Object.fromEntries(
      summaryRows.map((r) => [r.metric, num(r.value)]),
    ) as unknown as ReportDocument["summary"];

    const types = (await read("types.csv")).map((r) => ({
      namespace: r.namespace,
      type: r.type,
      sloc: num(r.sloc), nom: num(r.nom), npm: num(r.npm), wmc: num(r.wmc),
      dep: num(r.dep), i_dep: num(r.i_dep), fan_in: num(r.fan_in),
      fan_out: num(r.fan_out), noa: num(r.noa),
    }));
    const methods = (await read("methods.csv")).map((r) => ({
      namespace: r.namespace, type: r.type, method: r.method,
      mloc: num(r.mloc), cyclo: num(r.cyclo), calls: num(r.calls),
      nbd: num(r.nbd), param: num(r.param),
    }));
    const namespaces = (await read("namespaces.csv")).map((r) => ({
      namespace: r.namespace, noc: num(r.noc), nac: num(r.nac),
    }));
    const coupling = (await read("namespace-coupling.csv")).map((r) => ({
      namespace: r.namespace, ca: num(r.ca), ce: num(r.ce),
      instability: num(r.instability), abstractness: num(r.abstractness),
      distance: num(r.distance),
    }));

    const external = new Map<string, string[]>();
    const internal = new Map<string, string[]>();
    for (const r of await read("dependencies.csv")) {
      const bucket = r.kind === "internal" ? internal : external;
      const list = bucket.get(r.from_type) ?? [];
      list.push(r.to_type);
      bucket.set(r.from_type, list);
    }
    const entries = (m: Map<string, string[]>) =>
      [...m.entries()]
        .sort((a, b) => (a[0] < b[0] ? -1 : 1))
        .map(([type, depends_on]) => ({ type, depends_on }));

    return {
      ok: true,
      document: {
        project: "",
        generated_at: null,
        summary,
        namespaces,
        types,
        methods,
        namespace_coupling: coupling,
        // the CSV set carries no cycle grouping; pairs still drive the chord
        dependencies: { external: entries(external), internal: entries(internal), cycles: [] },
      },
    };
  } catch (err) {
    return { ok: false, error: describe(err) };
  }
}

/** Fetcher for the browser. */
export function httpFetcher(): Fetcher {
  return async (path) => {
    const response = await fetch(path);
    if (!response.ok) {
      throw new Error(`${path}: HTTP ${response.status}`);
    }
    return response.text();
  };
}
