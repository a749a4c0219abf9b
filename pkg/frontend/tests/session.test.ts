import { describe, expect, it } from "vitest";

import {
  agentCounts,
  buildRequest,
  draftToPayload,
  exportCorpus,
  makeDraft,
  meanAgentCount,
  newSession,
  payloadToDraft,
  serializeRequest,
} from "../src/session";
import { GenerationResponse, TokenPayload } from "../src/types";

describe("token drafts", () => {
  it("round-trips draft -> payload -> draft", () => {
    const draft = makeDraft(12.5, -3.25, 0.7);
    draft.currentSpeed = 6.0;
    draft.finalSpeed = 8.5;
    const payload = draftToPayload(draft);
    const back = payloadToDraft(payload);
    expect(back.x).toBe(draft.x);
    expect(back.y).toBe(draft.y);
    expect(back.heading).toBe(draft.heading);
    expect(back.length).toBe(draft.length);
    expect(back.width).toBe(draft.width);
    expect(back.currentSpeed).toBe(draft.currentSpeed);
    expect(back.finalSpeed).toBe(draft.finalSpeed);
    expect(back.headingToFinal).toBe(draft.headingToFinal);
    expect(draftToPayload(back)).toEqual(payload);
  });

  it("omits unset optional speeds from the payload", () => {
    const draft = makeDraft(0, 0, 0);
    draft.currentSpeed = null;
    const payload = draftToPayload(draft);
    expect("current_speed_mps" in payload).toBe(false);
    expect("final_speed_mps" in payload).toBe(false);
    const required: (keyof TokenPayload)[] = [
      "x_m", "y_m", "heading_rad", "length_m", "width_m"];
    for (const key of required) expect(payload[key]).toBeDefined();
  });
});

describe("request building", () => {
  it("same session state serializes to identical bytes", () => {
    const make = () => {
      const s = newSession("urban-grid:0001");
      const d = makeDraft(5, 6, 0.1);
      d.currentSpeed = 4;
      s.drafts = [d];
      s.pMask = 0.3;
      s.seed = 42;
      s.numSamples = 3;
      return serializeRequest(buildRequest(s));
    };
    expect(make()).toBe(make());
  });

  it("request embeds every knob", () => {
    const s = newSession("campus:0002");
    s.pMask = 0.9;
    s.seed = 7;
    s.nSteps = 16;
    s.threshold = 0.75;
    const req = buildRequest(s);
    expect(req.map_id).toBe("campus:0002");
    expect(req.p_mask).toBe(0.9);
    expect(req.seed).toBe(7);
    expect(req.sampler).toEqual({ n_steps: 16, threshold: 0.75 });
  });
});

function fakeResponse(counts: number[]): GenerationResponse {
  return {
    seed: 1,
    p_mask: 0.5,
    n_steps: 32,
    model: "m",
    scenarios: counts.map((n) => ({
      map_id: "m0",
      seed: 1,
      view: { cx: 0, cy: 0, extent: 64, rot: 0 },
      agents: Array.from({ length: n }, (_, i) => ({
        is_av: i === 0,
        box: { cx: i, cy: 0, heading: 0, length: 4.8, width: 2.4, probability: 0.9 },
        traj: [[i, 0, 0], [i, 0, 0], [i, 0, 0], [i, 0, 0], [i, 0, 0]],
        token_matched: false,
        matched_token_index: null,
      })),
    })),
  };
}

describe("response summaries", () => {
  it("counts agents per sample", () => {
    expect(agentCounts(fakeResponse([3, 5]))).toEqual([3, 5]);
    expect(meanAgentCount(fakeResponse([3, 5]))).toBe(4);
  });

  it("exports the corpus schema with a header line", () => {
    const body = exportCorpus(fakeResponse([2]).scenarios, 2, 64);
    const lines = body.trimEnd().split("\n");
    expect(lines.length).toBe(2);
    const header = JSON.parse(lines[0]);
    expect(header).toEqual({ schema_version: 1, T: 2, extent: 64 });
    const record = JSON.parse(lines[1]);
    expect(record.agents.length).toBe(2);
    expect(record.agents[0].box.length).toBe(4.8);
    expect(record.view.extent).toBe(64);
  });
});
