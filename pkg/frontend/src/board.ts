// SVG rendering of a BoardViewModel plus click plumbing. Dumb by
// design: everything it draws comes from the view model.

import type { BoardViewModel } from "./viewmodel.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const R = 17;

export interface BoardHandlers {
  onVertexClick(vertex: number): void;
  onIllegalClick(vertex: number, reason: string): void;
}

export function renderBoard(
  host: HTMLElement,
  vm: BoardViewModel,
  handlers: BoardHandlers,
): void {
  host.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${vm.layout.width} ${vm.layout.height}`);
  svg.setAttribute("width", String(vm.layout.width));
  svg.setAttribute("height", String(vm.layout.height));

  for (const [u, v] of vm.edges) {
    const a = vm.layout.positions[u]!;
    const b = vm.layout.positions[v]!;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y));
    line.setAttribute("class", "edge");
    svg.appendChild(line);
  }

  for (const view of vm.vertices) {
    const p = vm.layout.positions[view.vertex]!;
    const group = document.createElementNS(SVG_NS, "g");
    const classes = ["vertex"];
    if (view.inPlayground) classes.push("playground");
    if (view.legal) classes.push("legal");
    if (view.justAbsorbed) classes.push("absorbed");
    if (view.lastPlayed) classes.push("last-played");
    if (view.badge) classes.push(`badge-${view.badge}`);
    group.setAttribute("class", classes.join(" "));

    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(p.x));
    circle.setAttribute("cy", String(p.y));
    circle.setAttribute("r", String(R));
    group.appendChild(circle);

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y + 5));
    label.setAttribute("text-anchor", "middle");
    label.textContent = String(view.vertex);
    group.appendChild(label);

    if (view.badge) {
      const badge = document.createElementNS(SVG_NS, "text");
      badge.setAttribute("x", String(p.x));
      badge.setAttribute("y", String(p.y - R - 6));
      badge.setAttribute("text-anchor", "middle");
      badge.setAttribute("class", "badge");
      badge.textContent =
        view.badge === "winning" ? "win" : view.badge === "losing" ? "lose" : "?";
      group.appendChild(badge);
    }

    group.addEventListener("click", () => {
      if (!vm.humanTurn) {
        handlers.onIllegalClick(view.vertex, "engine to move");
      } else if (view.inPlayground) {
        handlers.onIllegalClick(view.vertex, "vertex already in the playground");
      } else if (!view.legal) {
        handlers.onIllegalClick(view.vertex, "distance > 2 from the playground");
      } else {
        handlers.onVertexClick(view.vertex);
      }
    });
    svg.appendChild(group);
  }
  host.appendChild(svg);
}
