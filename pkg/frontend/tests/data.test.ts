import { describe, expect, it } from "vitest";
import { readFile } from "node:fs/promises";
import { join } from "node:path";

import { loadDataset, parseCsv } from "../src/data.js";
import { FRONTEND_ROOT, fileFetcher, mapFetcher } from "./helpers.js";

describe("loadDataset", () => {
  it("loads the fixture dataset produced by the CLI", async () => {
    const result = await loadDataset(fileFetcher());
    expect(result.ok).toBe(true);
    if (!result.ok) return;
    expect(result.dataset.project).toBe("corpus");
    expect(result.dataset.document.types).toHaveLength(17);
    expect(result.dataset.missingSections).toEqual([]);
  });

  it("reports a missing project folder with the failing file name", async () => {
    const result = await loadDataset(
      mapFetcher({ "datasets/config.json": '{"active": "ghost"}' }),
    );
    expect(result.ok).toBe(false);
    if (result.ok) return;
    expect(result.error).toContain("datasets/ghost/report.json");
  });

  it("reports a broken config with its file name", async () => {
    const result = await loadDataset(mapFetcher({ "datasets/config.json": "}{" }));
    expect(result.ok).toBe(false);
    if (result.ok) return;
    expect(result.error).toContain("datasets/config.json");
  });

  it("rejects a config without an active project", async () => {
    const result = await loadDataset(mapFetcher({ "datasets/config.json": "{}" }));
    expect(result.ok).toBe(false);
  });

  it("falls back to the CSV set when report.json is absent", async () => {
    const dir = join(FRONTEND_ROOT, "datasets", "fixture");
    const files: Record<string, string> = {
      "datasets/config.json": '{"active": "fixture"}',
    };
    for (const name of [
      "summary.csv", "types.csv", "methods.csv", "namespaces.csv",
      "namespace-coupling.csv", "dependencies.csv",
    ]) {
      files[`datasets/fixture/${name}`] = await readFile(join(dir, name), "utf-8");
    }
    const result = await loadDataset(mapFetcher(files));
    expect(result.ok).toBe(true);
    if (!result.ok) return;
    const viaJson = await loadDataset(fileFetcher());
    if (!viaJson.ok) throw new Error("json load failed");
    // same rows in the same order as the JSON document
    expect(result.dataset.document.types).toEqual(viaJson.dataset.document.types);
    expect(result.dataset.document.methods).toEqual(viaJson.dataset.document.methods);
    expect(result.dataset.document.summary).toEqual(viaJson.dataset.document.summary);
    const internal = Object.fromEntries(
      result.dataset.document.dependencies.internal.map((e) => [e.type, e.depends_on]),
    );
    expect(internal["app.Main"]).toEqual(["app.model.Item", "app.util.Strings"]);
  });

  it("flags missing optional sections but still loads", async () => {
    const report = JSON.parse(
      await readFile(join(FRONTEND_ROOT, "datasets", "fixture", "report.json"), "utf-8"),
    );
    delete report.methods;
    const result = await loadDataset(
      mapFetcher({
        "datasets/config.json": '{"active": "p"}',
        "datasets/p/report.json": JSON.stringify(report),
      }),
    );
    expect(result.ok).toBe(true);
    if (!result.ok) return;
    expect(result.dataset.missingSections).toEqual(["methods"]);
  });

  it("treats a missing types section as fatal", async () => {
    const result = await loadDataset(
      mapFetcher({
        "datasets/config.json": '{"active": "p"}',
        "datasets/p/report.json": '{"summary": {}}',
      }),
    );
    expect(result.ok).toBe(false);
  });
});

describe("parseCsv", () => {
  it("parses quoted fields with commas and doubled quotes", () => {
    const rows = parseCsv('a,b\n"x, y","he said ""hi"""\n');
    expect(rows).toEqual([
      ["a", "b"],
      ["x, y", 'he said "hi"'],
    ]);
  });

  it("handles crlf and missing trailing newline", () => {
    expect(parseCsv("a,b\r\n1,2")).toEqual([
      ["a", "b"],
      ["1", "2"],
    ]);
  });
});
