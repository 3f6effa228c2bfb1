/**
 * Typed client for the dance endpoints of the tanglekit HTTP API.
 *
 * The server owns all tangle arithmetic; this client only moves JSON.
 */

export type MoveName = "T" | "A";

export interface GameState {
  sessionId: string;
  /** Display form of the current fraction, e.g. "3/2" or "inf". */
  current: string;
  target: string;
  /** Canonical vector of the current state; [] marks the infinite tangle. */
  canonical: number[];
  /** Compact move word, e.g. "AATAA". */
  history: string;
  solved: boolean;
}

export interface DanceApi {
  newGame(target: string): Promise<GameState>;
  state(sessionId: string): Promise<GameState>;
  move(sessionId: string, move: MoveName): Promise<GameState>;
  hint(sessionId: string): Promise<MoveName>;
  remove(sessionId: string): Promise<void>;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

async function decode<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const message =
      typeof (body as { error?: unknown }).error === "string"
        ? (body as { error: string }).error
        : `request failed with status ${response.status}`;
    throw new ApiError(response.status, message);
  }
  return body as T;
}

export class HttpDanceApi implements DanceApi {
  constructor(private readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await fetch(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    return decode<T>(response);
  }

  async newGame(target: string): Promise<GameState> {
    return this.post<GameState>("/api/dance", { target });
  }

  async state(sessionId: string): Promise<GameState> {
    const response = await fetch(this.url(`/api/dance/${sessionId}`));
    return decode<GameState>(response);
  }

  async move(sessionId: string, move: MoveName): Promise<GameState> {
    return this.post<GameState>(`/api/dance/${sessionId}/move`, { move });
  }

  async hint(sessionId: string): Promise<MoveName> {
    const response = await fetch(this.url(`/api/dance/${sessionId}/hint`));
    const body = await decode<{ move: MoveName }>(response);
    return body.move;
  }

  async remove(sessionId: string): Promise<void> {
    const response = await fetch(this.url(`/api/dance/${sessionId}`), { method: "DELETE" });
    await decode<unknown>(response);
  }
}
