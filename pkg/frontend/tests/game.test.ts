import { describe, expect, it } from "vitest";

import { ApiError, DanceApi, GameState, MoveName } from "../src/api.js";
import { GameController } from "../src/game.js";
import { renderTangleSchematic } from "../src/schematic.js";

// Frozen from a live tanglekit server: target 3/2 played from scratch,
// plus the turn-at-zero state. The client never computes these itself.
const TRANSCRIPT: Record<string, Omit<GameState, "sessionId">> = {
  "": { current: "0", target: "3/2", canonical: [0], history: "", solved: false },
  A: { current: "1", target: "3/2", canonical: [1], history: "A", solved: false },
  AA: { current: "2", target: "3/2", canonical: [2], history: "AA", solved: false },
  AAT: { current: "-1/2", target: "3/2", canonical: [0, -1, -1], history: "AAT", solved: false },
  AATA: { current: "1/2", target: "3/2", canonical: [0, 1, 1], history: "AATA", solved: false },
  AATAA: { current: "3/2", target: "3/2", canonical: [1, 1, 1], history: "AATAA", solved: true },
  T: { current: "inf", target: "3/2", canonical: [], history: "T", solved: false },
};

class ScriptedApi implements DanceApi {
  history = "";
  sessions = 0;
  deleted: string[] = [];

  private currentState(): GameState {
    const entry = TRANSCRIPT[this.history];
    if (!entry) throw new ApiError(500, `transcript has no state for ${JSON.stringify(this.history)}`);
    return { sessionId: `s${this.sessions}`, ...entry };
  }

  async newGame(target: string): Promise<GameState> {
    if (target !== "3/2") throw new ApiError(400, "not a fraction");
    this.sessions += 1;
    this.history = "";
    return this.currentState();
  }

  async state(): Promise<GameState> {
    return this.currentState();
  }

  async move(sessionId: string, move: MoveName): Promise<GameState> {
    if (sessionId !== `s${this.sessions}`) throw new ApiError(404, "no such session");
    this.history += move;
    return this.currentState();
  }

  async hint(): Promise<MoveName> {
    return "A";
  }

  async remove(sessionId: string): Promise<void> {
    this.deleted.push(sessionId);
  }
}

describe("GameController", () => {
  it("plays the scripted 3/2 game to the solved banner", async () => {
    const controller = new GameController(new ScriptedApi());
    let view = await controller.dispatch({ kind: "newGame", target: "3/2" });
    expect(view.currentFraction).toBe("0");
    expect(view.canonicalVector).toEqual([0]);

    const moves = ["add", "add", "turn", "add", "add"] as const;
    for (const kind of moves) {
      view = await controller.dispatch({ kind });
    }
    expect(view.solvedFlag).toBe(true);
    expect(view.currentFraction).toBe("3/2");
    expect(view.moveHistory).toBe("AATAA");
    expect(view.canonicalVector).toEqual([1, 1, 1]);
  });

  it("shows the infinite state after a turn at zero, with its schematic", async () => {
    const controller = new GameController(new ScriptedApi());
    await controller.dispatch({ kind: "newGame", target: "3/2" });
    const view = await controller.dispatch({ kind: "turn" });
    expect(view.currentFraction).toBe("inf");
    expect(view.canonicalVector).toEqual([]);
    expect(renderTangleSchematic(view.canonicalVector)).toContain('data-strand="upright"');
  });

  it("displays hints without applying them", async () => {
    const controller = new GameController(new ScriptedApi());
    await controller.dispatch({ kind: "newGame", target: "3/2" });
    const view = await controller.dispatch({ kind: "hint" });
    expect(view.hintMove).toBe("A");
    expect(view.moveHistory).toBe("");
    const afterMove = await controller.dispatch({ kind: "add" });
    expect(afterMove.hintMove).toBeNull(); // stale suggestion cleared
  });

  it("surfaces server errors inline and keeps no session", async () => {
    const controller = new GameController(new ScriptedApi());
    const view = await controller.dispatch({ kind: "newGame", target: "wat" });
    expect(view.error).toBe("not a fraction");
    expect(view.sessionId).toBeNull();
  });

  it("reset abandons the session and starts over at the same target", async () => {
    const api = new ScriptedApi();
    const controller = new GameController(api);
    await controller.dispatch({ kind: "newGame", target: "3/2" });
    await controller.dispatch({ kind: "add" });
    const view = await controller.dispatch({ kind: "reset" });
    expect(api.deleted).toEqual(["s1"]);
    expect(view.sessionId).toBe("s2");
    expect(view.currentFraction).toBe("0");
    expect(view.moveHistory).toBe("");
  });

  it("blocks concurrent requests while one is in flight", async () => {
    let release: (() => void) | null = null;
    const api = new ScriptedApi();
    const slow: DanceApi = {
      ...api,
      newGame: (target: string) =>
        new Promise<GameState>((resolve) => {
          release = () => resolve({ sessionId: "s1", ...TRANSCRIPT[""]! });
        }),
      move: api.move.bind(api),
      hint: api.hint.bind(api),
      state: api.state.bind(api),
      remove: api.remove.bind(api),
    };
    const busySeen: boolean[] = [];
    const controller = new GameController(slow, (view) => busySeen.push(view.busy));
    const pending = controller.dispatch({ kind: "newGame", target: "3/2" });
    const ignored = await controller.dispatch({ kind: "add" }); // dropped: busy
    expect(ignored.sessionId).toBeNull();
    release!();
    const settled = await pending;
    expect(settled.busy).toBe(false);
    expect(settled.sessionId).toBe("s1");
    expect(busySeen[0]).toBe(true);
    expect(busySeen[busySeen.length - 1]).toBe(false);
  });
});
