/** Studio wiring: map picker, token authoring, dial, generation grid,
 * history replay, and corpus export. All model work happens server-side;
 * this page only authors requests and renders responses. */

import { ApiClient, ServiceError } from "./api";
import { CanvasView, attachTokenGestures } from "./canvas";
import { DrawOp, mapDrawOps, scenarioDrawOps } from "./scene";
import {
  HistoryEntry,
  SessionState,
  agentCounts,
  buildRequest,
  draftToPayload,
  exportCorpus,
  makeDraft,
  meanAgentCount,
  newSession,
  serializeRequest,
} from "./session";
import { GenerationRequest, GenerationResponse, MapGeometry } from "./types";

const qs = new URLSearchParams(window.location.search);
const api = new ApiClient(qs.get("service") ?? "");

const el = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
};

let session: SessionState = newSession();
let mapGeometry: MapGeometry | null = null;
let mapOps: DrawOp[] = [];
let editor: CanvasView | null = null;
let config: Awaited<ReturnType<ApiClient["config"]>> | null = null;

function status(text: string, isError = false): void {
  const node = el<HTMLDivElement>("status");
  node.textContent = text;
  node.className = isError ? "status error" : "status";
}

function tokenDraftOps(): DrawOp[] {
  return session.drafts.map((d) => ({
    kind: "box" as const,
    cx: d.x, cy: d.y, heading: d.heading, length: d.length, width: d.width,
    fill: "rgba(255,158,44,0.35)", stroke: "#ff9e2c", lineWidth: 0.4,
  }));
}

function redrawEditor(): void {
  if (!editor) return;
  editor.clear();
  editor.render(mapOps);
  editor.render(tokenDraftOps());
}

function renderTokenList(): void {
  const list = el<HTMLDivElement>("token-list");
  list.innerHTML = "";
  session.drafts.forEach((d, idx) => {
    const row = document.createElement("div");
    row.className = "token-row";
    row.innerHTML =
      `<b>#${idx}</b> (${d.x.toFixed(1)}, ${d.y.toFixed(1)}) ` +
      `θ=${d.heading.toFixed(2)} ` +
      `<label>v0 <input data-k="currentSpeed" data-i="${idx}" type="number"
         step="0.5" value="${d.currentSpeed ?? ""}" placeholder="-"></label>` +
      `<label>v2 <input data-k="finalSpeed" data-i="${idx}" type="number"
         step="0.5" value="${d.finalSpeed ?? ""}" placeholder="-"></label>` +
      `<label>L <input data-k="length" data-i="${idx}" type="number"
         step="0.1" value="${d.length}"></label>` +
      `<label>W <input data-k="width" data-i="${idx}" type="number"
         step="0.1" value="${d.width}"></label>` +
      `<button data-del="${idx}">x</button>`;
    list.appendChild(row);
  });
  list.querySelectorAll("input").forEach((input) => {
    input.addEventListener("change", () => {
      const i = Number(input.dataset.i);
      const key = input.dataset.k as "currentSpeed" | "finalSpeed" | "length" | "width";
      const value = input.value === "" ? null : Number(input.value);
      if (key === "length" || key === "width") {
        session.drafts[i][key] = value ?? session.drafts[i][key];
      } else {
        session.drafts[i][key] = value;
      }
      redrawEditor();
    });
  });
  list.querySelectorAll("button[data-del]").forEach((btn) => {
    btn.addEventListener("click", () => {
      session.drafts.splice(Number((btn as HTMLElement).dataset.del), 1);
      renderTokenList();
      redrawEditor();
    });
  });
}

function renderResults(response: GenerationResponse): void {
  const grid = el<HTMLDivElement>("results");
  grid.innerHTML = "";
  response.scenarios.forEach((scn, i) => {
    const cell = document.createElement("div");
    cell.className = "result-cell";
    const canvas = document.createElement("canvas");
    canvas.width = 320;
    canvas.height = 320;
    cell.appendChild(canvas);
    const label = document.createElement("div");
    const matched = scn.agents.filter((a) => a.token_matched).length;
    label.textContent =
      `sample ${i}: ${scn.agents.length} agents, ${matched} token-matched`;
    cell.appendChild(label);
    grid.appendChild(cell);
    const view = new CanvasView(canvas, scn.view.extent);
    view.clear();
    view.render(mapOps);
    view.render(scenarioDrawOps(scn));
  });
}

function renderHistory(): void {
  const list = el<HTMLDivElement>("history");
  list.innerHTML = "";
  session.history.forEach((entry, idx) => {
    const row = document.createElement("div");
    row.className = "history-row";
    const btn = document.createElement("button");
    btn.textContent = `replay ${idx}`;
    btn.addEventListener("click", () => {
      // re-render from the stored response: identical scenes by purity
      renderResults(entry.response);
      status(`replayed ${entry.label}`);
    });
    row.appendChild(btn);
    const span = document.createElement("span");
    span.textContent = ` ${entry.label}`;
    row.appendChild(span);
    list.appendChild(row);
  });
}

async function selectMap(mapId: string): Promise<void> {
  mapGeometry = await api.mapGeometry(mapId);
  mapOps = mapDrawOps(mapGeometry);
  session.mapId = mapId;
  redrawEditor();
}

let inflight = false;
let queued: GenerationRequest | null = null;

async function generate(): Promise<void> {
  const request = buildRequest(session);
  if (inflight) {
    queued = request; // coalesce to the latest edit
    return;
  }
  inflight = true;
  status("generating...");
  try {
    const response = await api.generate(request);
    const entry: HistoryEntry = {
      request,
      response,
      label: `seed ${request.seed}, p_mask ${request.p_mask}, ` +
        `${request.tokens.length} tokens -> ` +
        `${agentCounts(response).join("/")} agents`,
    };
    session.history.push(entry);
    renderResults(response);
    renderHistory();
    status(`done (${response.n_steps} steps)`);
  } catch (err) {
    if (err instanceof ServiceError) {
      status(`service rejected the request: ${JSON.stringify(err.detail)}`, true);
    } else {
      status(`service unreachable: ${err}`, true);
    }
  } finally {
    inflight = false;
    if (queued) {
      const next = queued;
      queued = null;
      if (serializeRequest(next) !== serializeRequest(buildRequest(session))) {
        void generate();
      }
    }
  }
}

async function dialSweep(): Promise<void> {
  const values = [0.0, 0.1, 0.3, 0.5, 0.7, 0.9];
  const rows: { p: number; mean: number }[] = [];
  status("dial sweep running...");
  for (const p of values) {
    const request = { ...buildRequest(session), p_mask: p };
    const response = await api.generate(request);
    rows.push({ p, mean: meanAgentCount(response) });
  }
  const table = el<HTMLTableElement>("sweep-table");
  table.innerHTML =
    "<tr><th>p_mask</th>" + rows.map((r) => `<td>${r.p}</td>`).join("") + "</tr>" +
    "<tr><th>mean agents</th>" +
    rows.map((r) => `<td>${r.mean.toFixed(1)}</td>`).join("") + "</tr>";
  status("dial sweep done");
}

function exportScenarios(): void {
  const last = session.history[session.history.length - 1];
  if (!last || !config) {
    status("nothing to export yet", true);
    return;
  }
  const body = exportCorpus(last.response.scenarios, config.horizon, config.extent);
  const blob = new Blob([body], { type: "application/jsonl" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = `scenarios_seed${last.request.seed}.jsonl`;
  a.click();
}

async function init(): Promise<void> {
  try {
    const health = await api.health();
    config = await api.config();
    status(`connected to ${health.model}`);
  } catch (err) {
    status(`service unavailable: ${err}`, true);
    return;
  }
  const canvas = el<HTMLCanvasElement>("editor");
  editor = new CanvasView(canvas, config.extent);
  attachTokenGestures(editor, (g) => {
    if (mapGeometry) {
      const half = config!.extent / 2;
      if (Math.abs(g.x) > half || Math.abs(g.y) > half) {
        status("token placed outside the view extent", true);
        return;
      }
    }
    session.drafts.push(makeDraft(g.x, g.y, g.heading));
    renderTokenList();
    redrawEditor();
  });

  const picker = el<HTMLSelectElement>("map-picker");
  const maps = await api.maps();
  maps.slice(0, 200).forEach((m) => {
    const opt = document.createElement("option");
    opt.value = m.map_id;
    opt.textContent = `${m.map_id} (${m.style})`;
    picker.appendChild(opt);
  });
  picker.addEventListener("change", () => void selectMap(picker.value));
  if (maps.length) await selectMap(maps[0].map_id);

  const dial = el<HTMLInputElement>("p-mask");
  dial.addEventListener("input", () => {
    session.pMask = Number(dial.value);
    el<HTMLSpanElement>("p-mask-value").textContent = dial.value;
  });
  el<HTMLInputElement>("seed").addEventListener("change", (ev) => {
    session.seed = Number((ev.target as HTMLInputElement).value);
  });
  el<HTMLInputElement>("num-samples").addEventListener("change", (ev) => {
    session.numSamples = Number((ev.target as HTMLInputElement).value);
  });
  el<HTMLButtonElement>("generate").addEventListener("click", () => void generate());
  el<HTMLButtonElement>("sweep").addEventListener("click", () => void dialSweep());
  el<HTMLButtonElement>("export").addEventListener("click", exportScenarios);
  el<HTMLButtonElement>("clear-tokens").addEventListener("click", () => {
    session.drafts = [];
    renderTokenList();
    redrawEditor();
  });
}

window.addEventListener("load", () => void init());
