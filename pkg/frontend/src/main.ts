/** DOM wiring: buttons in, schematic and status out. */

import { HttpDanceApi } from "./api.js";
import { GameController, GameView } from "./game.js";
import { renderTangleSchematic } from "./schematic.js";

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function render(view: GameView): void {
  const status = element<HTMLParagraphElement>("status");
  const banner = element<HTMLParagraphElement>("banner");
  const history = element<HTMLParagraphElement>("history");
  const drawing = element<HTMLDivElement>("drawing");
  const hint = element<HTMLParagraphElement>("hint");
  const errorBox = element<HTMLParagraphElement>("error");

  for (const id of ["turn", "add", "hint-btn", "reset"]) {
    element<HTMLButtonElement>(id).disabled = view.busy || view.sessionId === null;
  }
  element<HTMLButtonElement>("new-game").disabled = view.busy;

  if (view.sessionId === null) {
    status.textContent = "no game yet - enter a target like 3/2 and start";
    banner.textContent = "";
    history.textContent = "";
    hint.textContent = "";
    drawing.innerHTML = "";
  } else {
    status.textContent = `current ${view.currentFraction}  ->  target ${view.targetFraction}`;
    banner.textContent = view.solvedFlag ? "solved! the dancers reached the target." : "";
    history.textContent = view.moveHistory ? `moves: ${view.moveHistory}` : "moves: (none yet)";
    hint.textContent = view.hintMove ? `hint: ${view.hintMove === "T" ? "turn" : "add"}` : "";
    drawing.innerHTML = renderTangleSchematic(view.canonicalVector);
  }
  errorBox.textContent = view.error ?? "";
}

function start(): void {
  const params = new URLSearchParams(window.location.search);
  const base = params.get("api") ?? `http://${window.location.hostname || "127.0.0.1"}:8642`;
  const controller = new GameController(new HttpDanceApi(base), render);

  element<HTMLButtonElement>("new-game").addEventListener("click", () => {
    const target = element<HTMLInputElement>("target").value.trim();
    void controller.dispatch({ kind: "newGame", target });
  });
  element<HTMLButtonElement>("turn").addEventListener("click", () => void controller.dispatch({ kind: "turn" }));
  element<HTMLButtonElement>("add").addEventListener("click", () => void controller.dispatch({ kind: "add" }));
  element<HTMLButtonElement>("hint-btn").addEventListener("click", () => void controller.dispatch({ kind: "hint" }));
  element<HTMLButtonElement>("reset").addEventListener("click", () => void controller.dispatch({ kind: "reset" }));

  render(controller.snapshot());
}

document.addEventListener("DOMContentLoaded", start);
