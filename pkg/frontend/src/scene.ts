/** Pure scene rendering: scenario/map payloads -> draw operations.
 *
 * Every rendered value traces to a response field; the draw-op list is a
 * pure function of the payload, which makes replayed history entries
 * render identically and keeps the renderer testable without a canvas.
 */

import { AgentJson, MapGeometry, ScenarioJson } from "./types";

export type DrawOp =
  | { kind: "polygon"; points: number[][]; fill: string }
  | { kind: "polyline"; points: number[][]; stroke: string; width: number }
  | { kind: "box"; cx: number; cy: number; heading: number; length: number;
      width: number; fill: string; stroke: string; lineWidth: number }
  | { kind: "segment"; x0: number; y0: number; x1: number; y1: number;
      stroke: string; width: number };

export const COLORS = {
  drivable: "#2b2f36",
  junction: "#3a3f48",
  parking: "#33414d",
  lane: "#5a6472",
  agent: "#3fb950",
  agentEdge: "#1f6f33",
  av: "#e3b341",
  tokenMatched: "#ff9e2c",
  trajectoryPast: [255, 105, 180] as const, // pink
  trajectoryFuture: [80, 140, 255] as const, // blue
};

/** Past -> future color ramp (pink to blue), fraction in [0, 1]. */
export function trajectoryColor(fraction: number): string {
  const f = Math.min(Math.max(fraction, 0), 1);
  const a = COLORS.trajectoryPast;
  const b = COLORS.trajectoryFuture;
  const mix = a.map((v, i) => Math.round(v + (b[i] - v) * f));
  return `rgb(${mix[0]},${mix[1]},${mix[2]})`;
}

export function mapDrawOps(geo: MapGeometry): DrawOp[] {
  const ops: DrawOp[] = [];
  for (const poly of geo.drivable) {
    ops.push({ kind: "polygon", points: poly, fill: COLORS.drivable });
  }
  for (const poly of geo.junctions) {
    ops.push({ kind: "polygon", points: poly, fill: COLORS.junction });
  }
  for (const poly of geo.parking) {
    ops.push({ kind: "polygon", points: poly, fill: COLORS.parking });
  }
  for (const lane of geo.lanes) {
    ops.push({
      kind: "polyline",
      points: lane.points.map((p) => [p[0], p[1]]),
      stroke: COLORS.lane,
      width: 0.3,
    });
  }
  return ops;
}

function agentOps(agent: AgentJson, view: ScenarioJson["view"]): DrawOp[] {
  const ops: DrawOp[] = [];
  // trajectory segments colored past (pink) to future (blue)
  const n = agent.traj.length;
  for (let i = 0; i + 1 < n; i++) {
    ops.push({
      kind: "segment",
      x0: agent.traj[i][0] - view.cx,
      y0: agent.traj[i][1] - view.cy,
      x1: agent.traj[i + 1][0] - view.cx,
      y1: agent.traj[i + 1][1] - view.cy,
      stroke: trajectoryColor(n > 1 ? (i + 0.5) / (n - 1) : 0.5),
      width: 0.35,
    });
  }
  const stroke = agent.is_av
    ? COLORS.av
    : agent.token_matched
      ? COLORS.tokenMatched
      : COLORS.agentEdge;
  ops.push({
    kind: "box",
    cx: agent.box.cx - view.cx,
    cy: agent.box.cy - view.cy,
    heading: agent.box.heading,
    length: agent.box.length,
    width: agent.box.width,
    fill: COLORS.agent,
    stroke,
    lineWidth: agent.is_av || agent.token_matched ? 0.5 : 0.25,
  });
  return ops;
}

/** Draw ops for one generated scenario, in view-relative meters. */
export function scenarioDrawOps(scn: ScenarioJson): DrawOp[] {
  const ops: DrawOp[] = [];
  for (const agent of scn.agents) {
    ops.push(...agentOps(agent, scn.view));
  }
  return ops;
}
