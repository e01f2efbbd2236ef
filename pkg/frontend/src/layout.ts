// Vertex placement. Bipartite graphs get the two-row layout (first
// color class on top); anything else falls back to a circle. Pure
// geometry: no game rules live here.

import type { GraphJson } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export interface Layout {
  positions: Point[];
  width: number;
  height: number;
  bipartite: boolean;
}

const H_GAP = 72;
const ROW_GAP = 140;
const PAD = 48;

export function twoColor(graph: GraphJson): number[] | null {
  const adj: number[][] = Array.from({ length: graph.n }, () => []);
  for (const [u, v] of graph.edges) {
    adj[u]!.push(v);
    adj[v]!.push(u);
  }
  const color = new Array<number>(graph.n).fill(-1);
  for (let root = 0; root < graph.n; root++) {
    if (color[root] !== -1) continue;
    color[root] = 0;
    const queue = [root];
    while (queue.length) {
      const u = queue.shift()!;
      for (const v of adj[u]!) {
        if (color[v] === -1) {
          color[v] = 1 - color[u]!;
          queue.push(v);
        } else if (color[v] === color[u]) {
          return null;
        }
      }
    }
  }
  return color;
}

export function layoutGraph(graph: GraphJson): Layout {
  const color = twoColor(graph);
  if (color !== null && graph.n > 1) {
    return twoRowLayout(graph, color);
  }
  return circleLayout(graph);
}

function twoRowLayout(graph: GraphJson, color: number[]): Layout {
  const top: number[] = [];
  const bottom: number[] = [];
  for (let v = 0; v < graph.n; v++) {
    (color[v] === 0 ? top : bottom).push(v);
  }
  const cols = Math.max(top.length, bottom.length);
  const width = PAD * 2 + Math.max(0, cols - 1) * H_GAP;
  const positions: Point[] = new Array(graph.n);
  const place = (row: number[], y: number) => {
    const offset = ((cols - row.length) * H_GAP) / 2;
    row.forEach((v, i) => {
      positions[v] = { x: PAD + offset + i * H_GAP, y };
    });
  };
  place(top, PAD);
  place(bottom, PAD + ROW_GAP);
  return { positions, width, height: PAD * 2 + ROW_GAP, bipartite: true };
}

function circleLayout(graph: GraphJson): Layout {
  const r = Math.max(80, graph.n * 18);
  const cx = r + PAD;
  const cy = r + PAD;
  const positions: Point[] = [];
  for (let v = 0; v < graph.n; v++) {
    const angle = (2 * Math.PI * v) / Math.max(1, graph.n) - Math.PI / 2;
    positions.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return { positions, width: 2 * (r + PAD), height: 2 * (r + PAD), bipartite: false };
}
