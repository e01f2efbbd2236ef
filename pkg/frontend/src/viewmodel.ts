// The board view model is a pure function of the latest server state
// plus view toggles, so a refresh mid-game reconstructs the identical
// board from a GET. Rendering consumes this; no DOM in here.

import { layoutGraph, type Layout } from "./layout.js";
import type { GameState, MoveEval } from "./types.js";

export type Badge = "winning" | "losing" | "unknown" | null;

export interface VertexView {
  vertex: number;
  inPlayground: boolean;
  legal: boolean;
  badge: Badge;
  justAbsorbed: boolean; // closure delta of the last move, for the flash
  lastPlayed: boolean;
}

export interface BoardViewModel {
  layout: Layout;
  vertices: VertexView[];
  edges: [number, number][];
  banner: string;
  humanTurn: boolean;
  finished: boolean;
  historyLines: string[];
  warnings: string[];
}

export interface ViewOptions {
  showEvaluations: boolean;
}

export function closureDelta(state: GameState): Set<number> {
  // vertices the last closure absorbed beyond the clicked one
  const last = state.history[state.history.length - 1];
  if (!last) return new Set();
  const before =
    state.history.length >= 2
      ? new Set(state.history[state.history.length - 2]!.playground)
      : new Set<number>();
  const delta = new Set<number>();
  for (const v of last.playground) {
    if (!before.has(v) && v !== last.vertex) delta.add(v);
  }
  return delta;
}

export function banner(state: GameState): string {
  if (state.finished) {
    const engineSide = state.humanSide === "first" ? "second" : "first";
    const loserName = state.loser === state.humanSide ? "you" : "the engine";
    return `game over: ${loserName} (${state.loser} player) must move on a full board and lose${
      state.loser === engineSide ? " — you win!" : ""
    }`;
  }
  return state.toMove === state.humanSide
    ? "your move: pick a highlighted vertex"
    : "engine to move";
}

export function buildBoardViewModel(
  state: GameState,
  moves: MoveEval[] | null,
  options: ViewOptions,
): BoardViewModel {
  const layout = layoutGraph(state.graph);
  const playground = new Set(state.playground);
  const legal = new Map<number, MoveEval>();
  if (moves && !state.finished) {
    for (const m of moves) legal.set(m.vertex, m);
  }
  const delta = closureDelta(state);
  const last = state.history[state.history.length - 1];
  const humanTurn = !state.finished && state.toMove === state.humanSide;

  const vertices: VertexView[] = [];
  for (let v = 0; v < state.graph.n; v++) {
    const mv = legal.get(v);
    let badge: Badge = null;
    if (mv && options.showEvaluations) {
      badge = mv.winning === null ? "unknown" : mv.winning ? "winning" : "losing";
    }
    vertices.push({
      vertex: v,
      inPlayground: playground.has(v),
      legal: legal.has(v),
      badge,
      justAbsorbed: delta.has(v),
      lastPlayed: last !== undefined && last.vertex === v,
    });
  }
  const historyLines = state.history.map(
    (h, i) =>
      `${i + 1}. ${h.side} plays ${h.vertex} -> {${h.playground.join(",")}}`,
  );
  return {
    layout,
    vertices,
    edges: state.graph.edges,
    banner: banner(state),
    humanTurn,
    finished: state.finished,
    historyLines,
    warnings: state.warnings,
  };
}
