/** The d3 runtime is provided as a global: a vendored UMD bundle in the
 * browser (script tag before the app module), the npm package injected onto
 * globalThis in tests. Late binding keeps module import order irrelevant. */

export function getD3(): any {
  const d3 = (globalThis as any).d3;
  if (!d3) {
    throw new Error("d3 runtime is not loaded (expected vendor/d3.min.js)");
  }
  return d3;
}
