/** DOM wiring: hash routing between the designer and monitor views.
 * All state lives in the view models; this file only renders and forwards
 * events.
 */

import { HttpApi } from "./api.js";
import { DesignerViewModel } from "./designer.js";
import { MonitorViewModel } from "./monitor.js";
import { curveSvg, monitorPlotSvg } from "./plot.js";
import type { DesignRequest } from "./types.js";

const api = new HttpApi("");
const designer = new DesignerViewModel(api);
const monitor = new MonitorViewModel(api);

const app = document.getElementById("app") as HTMLElement;

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function fieldRow(label: string, name: string, value: string, error?: string,
                  attrs = ""): string {
  return `
    <label class="field">
      <span>${label}</span>
      <input name="${name}" value="${esc(value)}" ${attrs}>
      <span class="fielderror">${error ? esc(error) : ""}</span>
    </label>`;
}

function renderDesigner(): void {
  const p = designer.params;
  const e = designer.fieldErrors;
  app.innerHTML = `
  <section class="designer">
    <h2>Chart designer</h2>
    <form id="design-form">
      <label class="field"><span>side</span>
        <select name="side">
          <option value="upper" ${p.side === "upper" ? "selected" : ""}>upper (detect increase)</option>
          <option value="lower" ${p.side === "lower" ? "selected" : ""}>lower (detect decrease)</option>
        </select><span class="fielderror"></span>
      </label>
      ${fieldRow("sample size n", "n", String(p.n), e.n)}
      ${fieldRow("CV of X (gamma_x)", "gamma_x", String(p.gamma_x), e.gamma_x)}
      ${fieldRow("CV of Y (gamma_y)", "gamma_y", String(p.gamma_y), e.gamma_y)}
      ${fieldRow("in-control ratio z0", "z0", String(p.z0), e.z0)}
      ${fieldRow("correlation rho0", "rho0", String(p.rho0), e.rho0)}
      ${fieldRow("inspections I", "horizon_inspections",
                 String(p.horizon_inspections), e.horizon_inspections)}
      ${fieldRow("shifted correlation rho1 (blank = rho0)", "rho1",
                 designer.rho1 === null ? "" : String(designer.rho1),
                 designer.rho1Error ?? undefined)}
    </form>
    <div class="limitline">${designer.busy ? "computing…" : esc(designer.limitLabel())}</div>
    <div class="apierror">${designer.apiError ? esc(designer.apiError) : ""}</div>
    <div id="curve" class="plot">${curveSvg(designer.curve, p.horizon_inspections)}</div>
    <button id="open-monitor" ${designer.committedChartId() ? "" : "disabled"}>
      Create chart &amp; monitor
    </button>
  </section>`;

  const form = document.getElementById("design-form") as HTMLFormElement;
  form.addEventListener("change", (ev) => {
    const input = ev.target as HTMLInputElement | HTMLSelectElement;
    const name = input.name;
    if (name === "rho1") {
      designer.setRho1(input.value.trim() === "" ? null : Number(input.value));
    } else if (name === "side") {
      designer.setParam("side", input.value as DesignRequest["side"]);
    } else if (name === "n" || name === "horizon_inspections") {
      designer.setParam(name, Number(input.value));
    } else {
      designer.setParam(name as keyof DesignRequest, Number(input.value) as never);
    }
    void designer.refresh().then(renderIfDesigner);
    renderIfDesigner();
  });
  const open = document.getElementById("open-monitor") as HTMLButtonElement;
  open.addEventListener("click", () => {
    const id = designer.committedChartId();
    if (id) window.location.hash = `#monitor/${id}`;
  });
}

function renderIfDesigner(): void {
  if (!window.location.hash.startsWith("#monitor/")) renderDesigner();
}

function renderMonitor(): void {
  const chart = monitor.chart;
  const statusClass = monitor.status ?? "none";
  app.innerHTML = `
  <section class="monitor">
    <h2>Monitoring${chart ? ` — chart ${esc(chart.id.slice(0, 8))}` : ""}</h2>
    <div class="banner ${statusClass}">${esc(monitor.bannerText())}</div>
    <div class="apierror">${monitor.apiError ? esc(monitor.apiError) : ""}</div>
    <div id="runchart" class="plot">
      ${monitorPlotSvg(monitor.points(), monitor.limit(), monitor.horizon)}
    </div>
    <div class="meta">
      inspections: ${monitor.inspectionsDone} / ${monitor.horizon};
      signals at: ${monitor.signalIndices().join(", ") || "none"}
    </div>
    <form id="entry-form">
      <label class="field"><span>label (e.g. box size)</span>
        <input name="label" value=""></label>
      <label class="field"><span>${monitor.sampleSize} lines of "x,y"</span>
        <textarea name="pairs" rows="${Math.max(monitor.sampleSize, 2)}"
          ${monitor.entryEnabled ? "" : "disabled"}></textarea>
        <span class="fielderror">${monitor.entryError ? esc(monitor.entryError) : ""}</span>
      </label>
      <button type="submit" ${monitor.entryEnabled ? "" : "disabled"}>Submit inspection</button>
      <button type="button" id="reset-chart">Reset (new run)</button>
      <a href="#designer">back to designer</a>
    </form>
  </section>`;

  const form = document.getElementById("entry-form") as HTMLFormElement;
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    const pairs = (form.elements.namedItem("pairs") as HTMLTextAreaElement).value;
    const label = (form.elements.namedItem("label") as HTMLInputElement).value || undefined;
    void monitor.submitSample(pairs, label).then(renderMonitor);
  });
  (document.getElementById("reset-chart") as HTMLButtonElement).addEventListener(
    "click", () => void monitor.reset().then(renderMonitor));
}

function route(): void {
  const hash = window.location.hash;
  const m = /^#monitor\/(.+)$/.exec(hash);
  if (m) {
    void monitor.load(m[1]).then(renderMonitor);
  } else {
    renderDesigner();
    void designer.refresh().then(renderIfDesigner);
  }
}

window.addEventListener("hashchange", route);
route();
