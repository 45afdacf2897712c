import { readFile } from "node:fs/promises";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { Fetcher } from "../src/data.js";
import type { Dataset, ReportDocument } from "../src/types.js";
import { loadDataset } from "../src/data.js";

export const FRONTEND_ROOT = dirname(dirname(fileURLToPath(import.meta.url)));

/** Serves the real datasets/ folder exactly as a web server would. */
export function fileFetcher(root = FRONTEND_ROOT): Fetcher {
  return async (path) => readFile(join(root, path), "utf-8");
}

/** A fetcher over an in-memory file map, for error/fallback scenarios. */
export function mapFetcher(files: Record<string, string>): Fetcher {
  return async (path) => {
    if (!(path in files)) {
      throw new Error(`${path}: not found`);
    }
    return files[path];
  };
}

export async function fixtureDataset(): Promise<Dataset> {
  const result = await loadDataset(fileFetcher());
  if (!result.ok) {
    throw new Error(`fixture dataset failed to load: ${result.error}`);
  }
  return result.dataset;
}

export async function fixtureDocument(): Promise<ReportDocument> {
  return (await fixtureDataset()).document;
}
