/** Thermometer gauges: the summary means against their thresholds. */

import { getD3 } from "./d3ref.js";
import { thermometerData, ChartThresholds } from "./layout.js";
import type { SummarySection } from "../types.js";

const WIDTH = 860;
const HEIGHT = 320;
const TUBE_HEIGHT = 200;
const TUBE_WIDTH = 26;

export function renderThermometer(
  container: HTMLElement,
  summary: SummarySection,
  thresholds?: ChartThresholds,
): void {
  const d3 = getD3();
  container.innerHTML = "";
  const gauges = thermometerData(summary, thresholds);
  const svg = d3
    .select(container)
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "chart chart-thermometer");

  const step = WIDTH / gauges.length;
  const gauge = svg
    .selectAll("g")
    .data(gauges)
    .enter()
    .append("g")
    .attr("class", "thermometer")
    .attr("transform", (_: unknown, i: number) => `translate(${i * step + step / 2},30)`);

  gauge
    .append("rect")
    .attr("class", "thermo-track")
    .attr("x", -TUBE_WIDTH / 2)
    .attr("width", TUBE_WIDTH)
    .attr("height", TUBE_HEIGHT)
    .attr("rx", TUBE_WIDTH / 2);

  gauge
    .append("rect")
    .attr("class", (d: any) => (d.over ? "thermo-fill over" : "thermo-fill"))
    .attr("x", -TUBE_WIDTH / 2 + 4)
    .attr("width", TUBE_WIDTH - 8)
    .attr("y", (d: any) => TUBE_HEIGHT - (TUBE_HEIGHT * d.ratio) / 1.25)
    .attr("height", (d: any) => (TUBE_HEIGHT * d.ratio) / 1.25)
    .attr("rx", (TUBE_WIDTH - 8) / 2);

  // threshold line sits at ratio 1.0 of the drawable range
  gauge
    .append("line")
    .attr("class", "thermo-limit")
    .attr("x1", -TUBE_WIDTH)
    .attr("x2", TUBE_WIDTH)
    .attr("y1", TUBE_HEIGHT - TUBE_HEIGHT / 1.25)
    .attr("y2", TUBE_HEIGHT - TUBE_HEIGHT / 1.25);

  gauge
    .append("text")
    .attr("class", "thermo-value")
    .attr("y", TUBE_HEIGHT + 24)
    .attr("text-anchor", "middle")
    .text((d: any) => `${d.value} / ${d.limit}`);

  gauge
    .append("text")
    .attr("class", "thermo-label")
    .attr("y", TUBE_HEIGHT + 44)
    .attr("text-anchor", "middle")
    .text((d: any) => d.label);
}
