// Wire types for the play service API.

export interface GraphJson {
  format: string;
  n: number;
  edges: [number, number][];
}

export interface HistoryEntry {
  side: "first" | "second";
  vertex: number;
  playground: number[];
}

export interface GameState {
  id: string;
  graph: GraphJson;
  playground: number[];
  toMove: "first" | "second";
  humanSide: "first" | "second";
  engine: "oracle" | "fast";
  finished: boolean;
  loser: "first" | "second" | null;
  history: HistoryEntry[];
  warnings: string[];
}

export interface MoveEval {
  vertex: number;
  playground: number[];
  grundy: number | null;
  winning: boolean | null;
}

export interface FamilyInfo {
  name: string;
  params: string[];
  seeded: boolean;
  description: string;
}
