// Application wiring: pickers, fetch/render loop, click handling.
// One mutation in flight at a time; extra clicks are ignored until the
// current request resolves.

import { ApiError, GameApi } from "./api.js";
import { renderBoard } from "./board.js";
import type { FamilyInfo, GameState, MoveEval } from "./types.js";
import { buildBoardViewModel } from "./viewmodel.js";

const api = new GameApi("");

interface AppState {
  game: GameState | null;
  moves: MoveEval[] | null;
  showEvaluations: boolean;
  busy: boolean;
  note: string;
}

const app: AppState = {
  game: null,
  moves: null,
  showEvaluations: true,
  busy: false,
  note: "",
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function refreshMoves(): Promise<void> {
  if (!app.game || app.game.finished) {
    app.moves = null;
    return;
  }
  app.moves = await api.listMoves(app.game.id);
}

function render(): void {
  const host = el<HTMLDivElement>("board");
  const bannerEl = el<HTMLDivElement>("banner");
  const historyEl = el<HTMLUListElement>("history");
  const noteEl = el<HTMLDivElement>("note");
  noteEl.textContent = app.note;
  if (!app.game) {
    bannerEl.textContent = "configure a game and press start";
    host.textContent = "";
    historyEl.textContent = "";
    return;
  }
  const vm = buildBoardViewModel(app.game, app.moves, {
    showEvaluations: app.showEvaluations,
  });
  bannerEl.textContent = vm.banner + (app.busy ? " …" : "");
  historyEl.textContent = "";
  for (const line of vm.historyLines) {
    const li = document.createElement("li");
    li.textContent = line;
    historyEl.appendChild(li);
  }
  if (vm.warnings.length) {
    app.note = vm.warnings.join("; ");
    noteEl.textContent = app.note;
  }
  renderBoard(host, vm, {
    onVertexClick: (vertex) => void playHuman(vertex),
    onIllegalClick: (_vertex, reason) => {
      app.note = reason;
      noteEl.textContent = reason;
    },
  });
  el<HTMLButtonElement>("engine-move").disabled =
    app.busy || app.game.finished || app.game.toMove === app.game.humanSide;
}

async function playHuman(vertex: number): Promise<void> {
  if (!app.game || app.busy) return;
  app.busy = true;
  render();
  try {
    app.game = await api.playMove(app.game.id, vertex);
    app.note = "";
    app.moves = null;
    render();
    if (!app.game.finished && app.game.toMove !== app.game.humanSide) {
      const reply = await api.engineMove(app.game.id);
      app.game = reply.state;
    }
    await refreshMoves();
  } catch (err) {
    app.note = err instanceof ApiError ? err.message : String(err);
  } finally {
    app.busy = false;
    render();
  }
}

async function engineMove(): Promise<void> {
  if (!app.game || app.busy) return;
  app.busy = true;
  render();
  try {
    const reply = await api.engineMove(app.game.id);
    app.game = reply.state;
    await refreshMoves();
    app.note = `engine played ${reply.vertex}`;
  } catch (err) {
    app.note = err instanceof ApiError ? err.message : String(err);
  } finally {
    app.busy = false;
    render();
  }
}

async function startGame(): Promise<void> {
  if (app.busy) return;
  app.busy = true;
  app.note = "";
  try {
    const familyName = el<HTMLSelectElement>("family").value;
    const uploaded = el<HTMLTextAreaElement>("graph-text").value.trim();
    const humanSide = el<HTMLSelectElement>("side").value as "first" | "second";
    const engine = el<HTMLSelectElement>("engine").value as "oracle" | "fast";
    const body =
      uploaded.length > 0
        ? { graph: uploaded, humanSide, engine }
        : {
            family: {
              name: familyName,
              params: el<HTMLInputElement>("params")
                .value.split(/[\s,]+/)
                .filter((t) => t.length)
                .map(Number),
              seed: 0,
            },
            humanSide,
            engine,
          };
    app.game = await api.createGame(body);
    app.moves = null;
    await refreshMoves();
  } catch (err) {
    app.note = err instanceof ApiError ? err.message : String(err);
  } finally {
    app.busy = false;
    render();
  }
}

async function boot(): Promise<void> {
  let families: FamilyInfo[] = [];
  try {
    families = await api.listFamilies();
  } catch {
    app.note = "service unreachable; start it with: p3game serve --ui frontend";
  }
  const select = el<HTMLSelectElement>("family");
  for (const fam of families) {
    const opt = document.createElement("option");
    opt.value = fam.name;
    opt.textContent = `${fam.name} (${fam.params.join(", ")})`;
    select.appendChild(opt);
  }
  select.value = families.some((f) => f.name === "ladder") ? "ladder" : select.value;
  el<HTMLButtonElement>("start").addEventListener("click", () => void startGame());
  el<HTMLButtonElement>("engine-move").addEventListener("click", () => void engineMove());
  el<HTMLInputElement>("show-evals").addEventListener("change", (ev) => {
    app.showEvaluations = (ev.target as HTMLInputElement).checked;
    render();
  });
  render();
}

void boot();
