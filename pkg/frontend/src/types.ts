/** Payload types mirroring the generation service API (api/v1). */

export interface TokenPayload {
  x_m: number;
  y_m: number;
  heading_rad: number;
  length_m: number;
  width_m: number;
  current_speed_mps?: number;
  final_speed_mps?: number;
  heading_to_final_rad?: number;
}

export interface SamplerOverrides {
  n_steps?: number;
  threshold?: number;
}

export interface GenerationRequest {
  map_id: string;
  tokens: TokenPayload[];
  p_mask: number;
  num_samples: number;
  seed: number;
  sampler: SamplerOverrides;
}

export interface BoxJson {
  cx: number;
  cy: number;
  heading: number;
  length: number;
  width: number;
  probability: number;
}

export interface AgentJson {
  is_av: boolean;
  box: BoxJson;
  traj: number[][]; // (2T+1) x [x, y, heading]
  token_matched: boolean;
  matched_token_index: number | null;
}

export interface ViewJson {
  cx: number;
  cy: number;
  extent: number;
  rot: number;
}

export interface ScenarioJson {
  map_id: string;
  seed: number;
  view: ViewJson;
  agents: AgentJson[];
}

export interface GenerationResponse {
  seed: number;
  p_mask: number;
  n_steps: number;
  model: string;
  scenarios: ScenarioJson[];
}

export interface MapListEntry {
  map_id: string;
  style: string;
}

export interface MapGeometry {
  map_id: string;
  style: string;
  extent: number;
  lanes: { points: number[][] }[];
  drivable: number[][][];
  junctions: number[][][];
  parking: number[][][];
}

export interface ServiceConfig {
  model: string;
  extent: number;
  horizon: number;
  token_features: string[];
  p_mask_bins: number;
  default_threshold: number;
  default_n_steps: number;
}
