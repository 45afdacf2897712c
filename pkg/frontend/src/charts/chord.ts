/** Chord diagram of namespace-to-namespace internal dependency volumes. */

import { getD3 } from "./d3ref.js";
import { chordData } from "./layout.js";
import type { DependenciesSection } from "../types.js";

const SIZE = 600;

export function renderChord(container: HTMLElement, dependencies: DependenciesSection): void {
  const d3 = getD3();
  container.innerHTML = "";
  const { namespaces, matrix } = chordData(dependencies);
  const total = matrix.flat().reduce((a, b) => a + b, 0);

  if (namespaces.length === 0 || total === 0) {
    const empty = document.createElement("p");
    empty.className = "chart-placeholder";
    empty.textContent = "No internal dependencies between types: nothing to draw.";
    container.appendChild(empty);
    return;
  }

  const svg = d3
    .select(container)
    .append("svg")
    .attr("viewBox", `${-SIZE / 2} ${-SIZE / 2} ${SIZE} ${SIZE}`)
    .attr("class", "chart chart-chord");

  const outer = SIZE / 2 - 60;
  const inner = outer - 18;
  const chords = d3
    .chord()
    .padAngle(0.05)
    .sortSubgroups(d3.descending)(matrix);
  const color = d3.scaleOrdinal(d3.schemeTableau10).domain(namespaces);

  const group = svg
    .append("g")
    .selectAll("g")
    .data(chords.groups)
    .enter()
    .append("g");

  group
    .append("path")
    .attr("class", "chord-arc")
    .attr("fill", (d: any) => color(namespaces[d.index]))
    .attr("d", d3.arc().innerRadius(inner).outerRadius(outer));

  group
    .append("text")
    .attr("class", "chord-label")
    .each((d: any) => {
      d.angle = (d.startAngle + d.endAngle) / 2;
    })
    .attr("transform", (d: any) => {
      const rotate = (d.angle * 180) / Math.PI - 90;
      const flip = d.angle > Math.PI ? "rotate(180)" : "";
      return `rotate(${rotate}) translate(${outer + 6},0) ${flip}`;
    })
    .attr("text-anchor", (d: any) => (d.angle > Math.PI ? "end" : "start"))
    .text((d: any) => namespaces[d.index]);

  svg
    .append("g")
    .selectAll("path")
    .data(chords)
    .enter()
    .append("path")
    .attr("class", "chord-ribbon")
    .attr("fill", (d: any) => color(namespaces[d.source.index]))
    .attr("d", d3.ribbon().radius(inner))
    .append("title")
    .text(
      (d: any) =>
        `${namespaces[d.source.index]} -> ${namespaces[d.target.index]}: ` +
        `${matrix[d.source.index][d.target.index]} dependency edge(s)`,
    );
}
