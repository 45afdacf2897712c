/** Zoomable circle packing: namespace -> type hierarchy sized by SLOC.
 * Clicking a namespace zooms into it; clicking the background zooms out. */

import { getD3 } from "./d3ref.js";
import { namespaceHierarchy } from "./layout.js";
import { typeTooltip } from "./resonance.js";
import type { TypeRow } from "../types.js";

const SIZE = 640;

export function renderPacking(container: HTMLElement, types: TypeRow[]): void {
  const d3 = getD3();
  container.innerHTML = "";
  const svg = d3
    .select(container)
    .append("svg")
    .attr("viewBox", `${-SIZE / 2} ${-SIZE / 2} ${SIZE} ${SIZE}`)
    .attr("class", "chart chart-packing");

  const root = d3
    .hierarchy(namespaceHierarchy(types))
    .sum((d: any) => d.value ?? 0)
    .sort((a: any, b: any) => b.value - a.value);
  d3.pack().size([SIZE, SIZE]).padding(4)(root);

  let focus = root;
  let view: [number, number, number] = [root.x, root.y, root.r * 2];

  const node = svg
    .selectAll("circle")
    .data(root.descendants())
    .enter()
    .append("circle")
    .attr("class", (d: any) =>
      d.depth === 0 ? "pack-root" : d.children ? "pack-namespace" : "pack-leaf",
    )
    .on("click", (event: Event, d: any) => {
      const target = d.children ? d : d.parent ?? root;
      if (target !== focus) {
        focus = target;
        zoomTo([focus.x, focus.y, focus.r * 2]);
      }
      event.stopPropagation();
    });

  node
    .filter((d: any) => !d.children)
    .append("title")
    .text((d: any) => typeTooltip(d.data.row));

  const label = svg
    .selectAll("text")
    .data(root.descendants().filter((d: any) => d.depth > 0))
    .enter()
    .append("text")
    .attr("class", (d: any) => (d.children ? "pack-ns-label" : "pack-leaf-label"))
    .attr("text-anchor", "middle")
    .text((d: any) => d.data.name);

  svg.on("click", () => {
    focus = root;
    zoomTo([root.x, root.y, root.r * 2]);
  });

  function zoomTo(next: [number, number, number]): void {
    view = next;
    const k = SIZE / view[2];
    node
      .attr("transform", (d: any) => `translate(${(d.x - view[0]) * k},${(d.y - view[1]) * k})`)
      .attr("r", (d: any) => d.r * k);
    label.attr(
      "transform",
      (d: any) => `translate(${(d.x - view[0]) * k},${(d.y - view[1]) * k})`,
    );
  }

  zoomTo(view);
}
