/** Authoring session state: token drafts, the global dial, history.
 *
 * Drafts serialize to the exact service payload; building a request is a
 * pure function of the session state, so submitting the same state twice
 * produces byte-identical request bodies.
 */

import { GenerationRequest, GenerationResponse, TokenPayload } from "./types";

export interface TokenDraft {
  id: number;
  x: number; // meters, view frame (scene center = origin)
  y: number;
  heading: number; // radians
  length: number;
  width: number;
  currentSpeed: number | null;
  finalSpeed: number | null;
  headingToFinal: number | null;
}

export interface HistoryEntry {
  request: GenerationRequest;
  response: GenerationResponse;
  label: string;
}

export const DEFAULT_DRAFT = {
  length: 4.8,
  width: 2.4,
  currentSpeed: 5.0 as number | null,
  finalSpeed: null as number | null,
  headingToFinal: null as number | null,
};

let nextId = 1;

export function makeDraft(x: number, y: number, heading = 0): TokenDraft {
  return { id: nextId++, x, y, heading, ...DEFAULT_DRAFT };
}

export function draftToPayload(draft: TokenDraft): TokenPayload {
  const payload: TokenPayload = {
    x_m: draft.x,
    y_m: draft.y,
    heading_rad: draft.heading,
    length_m: draft.length,
    width_m: draft.width,
  };
  if (draft.currentSpeed !== null) payload.current_speed_mps = draft.currentSpeed;
  if (draft.finalSpeed !== null) payload.final_speed_mps = draft.finalSpeed;
  if (draft.headingToFinal !== null) payload.heading_to_final_rad = draft.headingToFinal;
  return payload;
}

export function payloadToDraft(payload: TokenPayload): TokenDraft {
  return {
    id: nextId++,
    x: payload.x_m,
    y: payload.y_m,
    heading: payload.heading_rad,
    length: payload.length_m,
    width: payload.width_m,
    currentSpeed: payload.current_speed_mps ?? null,
    finalSpeed: payload.final_speed_mps ?? null,
    headingToFinal: payload.heading_to_final_rad ?? null,
  };
}

export interface SessionState {
  mapId: string;
  drafts: TokenDraft[];
  pMask: number;
  seed: number;
  numSamples: number;
  nSteps: number | null;
  threshold: number | null;
  history: HistoryEntry[];
}

export function newSession(mapId = ""): SessionState {
  return {
    mapId,
    drafts: [],
    pMask: 0.5,
    seed: 0,
    numSamples: 2,
    nSteps: null,
    threshold: null,
    history: [],
  };
}

export function buildRequest(state: SessionState): GenerationRequest {
  const sampler: { n_steps?: number; threshold?: number } = {};
  if (state.nSteps !== null) sampler.n_steps = state.nSteps;
  if (state.threshold !== null) sampler.threshold = state.threshold;
  return {
    map_id: state.mapId,
    tokens: state.drafts.map(draftToPayload),
    p_mask: state.pMask,
    num_samples: state.numSamples,
    seed: state.seed,
    sampler,
  };
}

export function serializeRequest(request: GenerationRequest): string {
  // stable key order via explicit construction; JSON.stringify preserves
  // insertion order, so identical states give identical bytes
  return JSON.stringify(request);
}

/** Scenario agent counts per sample, for the dial-sweep table. */
export function agentCounts(response: GenerationResponse): number[] {
  return response.scenarios.map((s) => s.agents.length);
}

export function meanAgentCount(response: GenerationResponse): number {
  const counts = agentCounts(response);
  return counts.reduce((a, b) => a + b, 0) / Math.max(counts.length, 1);
}

/** Corpus-file download body for the current scenario set (one record per
 * line, matching the scenario corpus schema). */
export function exportCorpus(
  scenarios: GenerationResponse["scenarios"],
  horizon: number,
  extent: number,
): string {
  const header = JSON.stringify({ schema_version: 1, T: horizon, extent });
  const lines = scenarios.map((s) =>
    JSON.stringify({
      map_id: s.map_id,
      seed: s.seed,
      view: s.view,
      agents: s.agents.map((a) => ({
        is_av: a.is_av,
        box: a.box,
        traj: a.traj,
      })),
    }),
  );
  return [header, ...lines].join("\n") + "\n";
}
