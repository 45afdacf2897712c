/** Code resonance: one bubble per type, clustered by namespace, area
 * proportional to SLOC, red when WMC crosses the complexity threshold. */

import { getD3 } from "./d3ref.js";
import { namespaceHierarchy } from "./layout.js";
import type { TypeRow, ViewState } from "../types.js";

const WIDTH = 900;
const HEIGHT = 620;

export function typeTooltip(row: TypeRow): string {
  return [
    `${row.namespace}.${row.type}`,
    `SLOC ${row.sloc}`,
    `NOM ${row.nom}`,
    `NPM ${row.npm}`,
    `WMC ${row.wmc}`,
    `DEP ${row.dep}`,
    `I-DEP ${row.i_dep}`,
    `FAN-IN ${row.fan_in}`,
    `FAN-OUT ${row.fan_out}`,
    `NOA ${row.noa}`,
  ].join("\n");
}

export function renderResonance(
  container: HTMLElement,
  types: TypeRow[],
  state: ViewState,
): void {
  const d3 = getD3();
  container.innerHTML = "";
  const svg = d3
    .select(container)
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "chart chart-resonance");

  const root = d3
    .hierarchy(namespaceHierarchy(types, state.namespace))
    .sum((d: any) => d.value ?? 0)
    .sort((a: any, b: any) => b.value - a.value);
  d3.pack().size([WIDTH, HEIGHT]).padding(6)(root);

  const node = svg
    .selectAll("g")
    .data(root.descendants().filter((d: any) => d.depth > 0))
    .enter()
    .append("g")
    .attr("transform", (d: any) => `translate(${d.x},${d.y})`);

  node
    .append("circle")
    .attr("r", (d: any) => d.r)
    .attr("class", (d: any) => {
      if (d.children) return "ns-circle";
      const red = d.data.row.wmc >= state.complexityThreshold;
      return red ? "bubble red" : "bubble";
    });

  // Hover reveals the full per-type metrics row.
  node
    .filter((d: any) => !d.children)
    .append("title")
    .text((d: any) => typeTooltip(d.data.row));

  node
    .filter((d: any) => Boolean(d.children))
    .append("text")
    .attr("class", "ns-label")
    .attr("dy", (d: any) => -d.r - 4)
    .attr("text-anchor", "middle")
    .text((d: any) => d.data.name);

  node
    .filter((d: any) => !d.children && d.r > 16)
    .append("text")
    .attr("class", "bubble-label")
    .attr("dy", "0.32em")
    .attr("text-anchor", "middle")
    .text((d: any) => d.data.name);
}
