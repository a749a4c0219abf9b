import { describe, expect, it } from "vitest";

import { mapDrawOps, scenarioDrawOps, trajectoryColor, COLORS } from "../src/scene";
import { MapGeometry, ScenarioJson } from "../src/types";

const scenario: ScenarioJson = {
  map_id: "m0",
  seed: 3,
  view: { cx: 10, cy: -5, extent: 64, rot: 0 },
  agents: [
    {
      is_av: true,
      box: { cx: 10, cy: -5, heading: 0.3, length: 4.8, width: 2.4, probability: 0.95 },
      traj: [[2, -5, 0.3], [6, -5, 0.3], [10, -5, 0.3], [14, -5, 0.3], [18, -5, 0.3]],
      token_matched: false,
      matched_token_index: null,
    },
    {
      is_av: false,
      box: { cx: 20, cy: 0, heading: 1.2, length: 4.6, width: 2.3, probability: 0.88 },
      traj: [[20, 0, 1.2], [20, 0, 1.2], [20, 0, 1.2], [20, 0, 1.2], [20, 0, 1.2]],
      token_matched: true,
      matched_token_index: 0,
    },
  ],
};

describe("scenario rendering", () => {
  it("is a pure function of the payload", () => {
    const a = scenarioDrawOps(scenario);
    const b = scenarioDrawOps(JSON.parse(JSON.stringify(scenario)));
    expect(a).toEqual(b);
  });

  it("renders boxes in view-relative coordinates", () => {
    const ops = scenarioDrawOps(scenario);
    const boxes = ops.filter((o) => o.kind === "box");
    expect(boxes.length).toBe(2);
    const av = boxes[0] as Extract<(typeof ops)[0], { kind: "box" }>;
    expect(av.cx).toBe(0);         // AV sits at the view center
    expect(av.cy).toBe(0);
    expect(av.stroke).toBe(COLORS.av);
  });

  it("highlights token-matched agents", () => {
    const ops = scenarioDrawOps(scenario);
    const boxes = ops.filter((o) => o.kind === "box") as
      Extract<(typeof ops)[0], { kind: "box" }>[];
    expect(boxes[1].stroke).toBe(COLORS.tokenMatched);
  });

  it("colors trajectories from pink (past) to blue (future)", () => {
    const first = trajectoryColor(0);
    const last = trajectoryColor(1);
    expect(first).toBe(`rgb(${COLORS.trajectoryPast.join(",")})`);
    expect(last).toBe(`rgb(${COLORS.trajectoryFuture.join(",")})`);
    const ops = scenarioDrawOps(scenario);
    const segs = ops.filter((o) => o.kind === "segment") as
      Extract<(typeof ops)[0], { kind: "segment" }>[];
    expect(segs.length).toBe(8);   // 4 segments per agent
    expect(segs[0].stroke).not.toBe(segs[3].stroke);
  });

  it("clamps the ramp outside [0, 1]", () => {
    expect(trajectoryColor(-1)).toBe(trajectoryColor(0));
    expect(trajectoryColor(2)).toBe(trajectoryColor(1));
  });
});

describe("map rendering", () => {
  const geo: MapGeometry = {
    map_id: "m0",
    style: "campus",
    extent: 64,
    lanes: [{ points: [[0, 0, 0], [10, 0, 0]] }],
    drivable: [[[0, 0], [10, 0], [10, 10], [0, 10]]],
    junctions: [],
    parking: [[[2, 2], [4, 2], [4, 4], [2, 4]]],
  };

  it("emits one op per layer element", () => {
    const ops = mapDrawOps(geo);
    expect(ops.filter((o) => o.kind === "polygon").length).toBe(2);
    expect(ops.filter((o) => o.kind === "polyline").length).toBe(1);
  });
});
