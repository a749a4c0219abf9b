/** Thin client for the generation service. */

import {
  GenerationRequest,
  GenerationResponse,
  MapGeometry,
  MapListEntry,
  ServiceConfig,
} from "./types";
import { serializeRequest } from "./session";

export class ServiceError extends Error {
  constructor(
    public status: number,
    public detail: unknown,
  ) {
    super(`service error ${status}: ${JSON.stringify(detail)}`);
  }
}

export class ApiClient {
  constructor(public baseUrl: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const res = await fetch(`${this.baseUrl}/api/v1${path}`);
    if (!res.ok) throw new ServiceError(res.status, await res.json().catch(() => null));
    return (await res.json()) as T;
  }

  health(): Promise<{ status: string; model: string }> {
    return this.get("/health");
  }

  config(): Promise<ServiceConfig> {
    return this.get("/config");
  }

  async maps(): Promise<MapListEntry[]> {
    return (await this.get<{ maps: MapListEntry[] }>("/maps")).maps;
  }

  mapGeometry(mapId: string): Promise<MapGeometry> {
    return this.get(`/maps/${encodeURIComponent(mapId)}`);
  }

  async generate(request: GenerationRequest): Promise<GenerationResponse> {
    const res = await fetch(`${this.baseUrl}/api/v1/generate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: serializeRequest(request),
    });
    if (!res.ok) throw new ServiceError(res.status, await res.json().catch(() => null));
    return (await res.json()) as GenerationResponse;
  }
}
