// Thin typed client over the play service; every game rule decision
// (legality, closures, evaluations) comes from the server.

import type { FamilyInfo, GameState, MoveEval } from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

export class GameApi {
  constructor(private readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = await res.json().catch(() => ({}));
    if (!res.ok) {
      const message =
        typeof body === "object" && body !== null && "error" in body
          ? String((body as { error: unknown }).error)
          : `request failed with status ${res.status}`;
      throw new ApiError(res.status, message);
    }
    return body as T;
  }

  listFamilies(): Promise<FamilyInfo[]> {
    return this.request<FamilyInfo[]>("/api/families");
  }

  createGame(body: {
    graph?: string;
    family?: { name: string; params: number[]; seed?: number };
    humanSide: "first" | "second";
    engine: "oracle" | "fast";
  }): Promise<GameState> {
    return this.request<GameState>("/api/games", {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  getState(id: string): Promise<GameState> {
    return this.request<GameState>(`/api/games/${id}`);
  }

  listMoves(id: string): Promise<MoveEval[]> {
    return this.request<MoveEval[]>(`/api/games/${id}/moves`);
  }

  playMove(id: string, vertex: number): Promise<GameState> {
    return this.request<GameState>(`/api/games/${id}/moves`, {
      method: "POST",
      body: JSON.stringify({ vertex }),
    });
  }

  engineMove(id: string): Promise<{ vertex: number; state: GameState }> {
    return this.request<{ vertex: number; state: GameState }>(
      `/api/games/${id}/engine-move`,
      { method: "POST", body: JSON.stringify({}) },
    );
  }
}
