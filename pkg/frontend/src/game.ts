/**
 * Game controller: server-authoritative state machine for one session.
 *
 * Every number shown on screen originates from a server response; the
 * controller performs no tangle arithmetic. One request in flight at a
 * time: move buttons are disabled while busy.
 */

import { ApiError, DanceApi, GameState, MoveName } from "./api.js";

export interface GameView {
  sessionId: string | null;
  currentFraction: string | null;
  targetFraction: string | null;
  /** Canonical vector of the current state; [] marks the infinite tangle. */
  canonicalVector: number[] | null;
  moveHistory: string;
  solvedFlag: boolean;
  /** Server-suggested next move, displayed but never auto-applied. */
  hintMove: MoveName | null;
  busy: boolean;
  error: string | null;
}

export type UserAction =
  | { kind: "newGame"; target: string }
  | { kind: "turn" }
  | { kind: "add" }
  | { kind: "hint" }
  | { kind: "reset" };

const IDLE_VIEW: GameView = {
  sessionId: null,
  currentFraction: null,
  targetFraction: null,
  canonicalVector: null,
  moveHistory: "",
  solvedFlag: false,
  hintMove: null,
  busy: false,
  error: null,
};

export class GameController {
  private view: GameView = { ...IDLE_VIEW };

  constructor(private readonly api: DanceApi, private readonly onChange?: (view: GameView) => void) {}

  snapshot(): GameView {
    return { ...this.view, canonicalVector: this.view.canonicalVector?.slice() ?? null };
  }

  async dispatch(action: UserAction): Promise<GameView> {
    if (this.view.busy) {
      return this.snapshot(); // one in-flight request at a time
    }
    switch (action.kind) {
      case "newGame":
        return this.guard(async () => {
          this.adoptState(await this.api.newGame(action.target));
        });
      case "turn":
      case "add":
        return this.guard(async () => {
          const id = this.requireSession();
          const move: MoveName = action.kind === "turn" ? "T" : "A";
          this.adoptState(await this.api.move(id, move));
        });
      case "hint":
        return this.guard(async () => {
          const id = this.requireSession();
          this.view.hintMove = await this.api.hint(id);
        });
      case "reset":
        return this.guard(async () => {
          const target = this.view.targetFraction;
          const old = this.view.sessionId;
          if (target === null) {
            this.view = { ...IDLE_VIEW };
            return;
          }
          if (old !== null) {
            await this.api.remove(old).catch(() => undefined); // best effort
          }
          this.adoptState(await this.api.newGame(target));
        });
    }
  }

  private requireSession(): string {
    if (this.view.sessionId === null) {
      throw new ApiError(0, "no game in progress");
    }
    return this.view.sessionId;
  }

  private adoptState(state: GameState): void {
    this.view = {
      sessionId: state.sessionId,
      currentFraction: state.current,
      targetFraction: state.target,
      canonicalVector: state.canonical.slice(),
      moveHistory: state.history,
      solvedFlag: state.solved,
      hintMove: null, // a fresh state invalidates the previous suggestion
      busy: this.view.busy,
      error: null,
    };
  }

  private async guard(work: () => Promise<void>): Promise<GameView> {
    this.view.busy = true;
    this.view.error = null;
    this.notify();
    try {
      await work();
    } catch (err) {
      this.view.error = err instanceof Error ? err.message : String(err);
    } finally {
      this.view.busy = false;
      this.notify();
    }
    return this.snapshot();
  }

  private notify(): void {
    this.onChange?.(this.snapshot());
  }
}
