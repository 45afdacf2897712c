/** Top-N bar chart for a selected metric, in the CLI's reporting order. */

import { getD3 } from "./d3ref.js";
import { barsData } from "./layout.js";
import type { ReportDocument, ViewState } from "../types.js";

const WIDTH = 860;
const ROW = 30;

export function renderBars(
  container: HTMLElement,
  document_: ReportDocument,
  context: "types" | "methods",
  state: ViewState,
): void {
  const d3 = getD3();
  container.innerHTML = "";
  const bars = barsData(document_, context, state.metric, state.topN, state.namespace);

  if (bars.length === 0) {
    const empty = document.createElement("p");
    empty.className = "chart-placeholder";
    empty.textContent = "No rows to chart for this selection.";
    container.appendChild(empty);
    return;
  }

  const height = bars.length * ROW + 30;
  const svg = d3
    .select(container)
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${height}`)
    .attr("class", "chart chart-bars");

  const labelWidth = 340;
  const max = Math.max(...bars.map((b) => b.value), 1);
  const scale = (value: number) => ((WIDTH - labelWidth - 90) * value) / max;

  const row = svg
    .selectAll("g")
    .data(bars)
    .enter()
    .append("g")
    .attr("transform", (_: unknown, i: number) => `translate(0,${i * ROW + 20})`);

  row
    .append("text")
    .attr("class", "bar-label")
    .attr("x", labelWidth - 10)
    .attr("y", ROW / 2)
    .attr("text-anchor", "end")
    .text((d: any) => d.label);

  row
    .append("rect")
    .attr("class", "bar")
    .attr("x", labelWidth)
    .attr("y", 6)
    .attr("height", ROW - 12)
    .attr("width", (d: any) => Math.max(scale(d.value), 1));

  row
    .append("text")
    .attr("class", "bar-value")
    .attr("x", (d: any) => labelWidth + Math.max(scale(d.value), 1) + 8)
    .attr("y", ROW / 2)
    .text((d: any) => String(d.value));

  svg
    .append("text")
    .attr("class", "chart-caption")
    .attr("x", labelWidth)
    .attr("y", 12)
    .text(`${context}: top ${bars.length} by ${state.metric.toUpperCase()}`);
}
