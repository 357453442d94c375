/** Thin fetch client for the session service. The UI never computes kernel
 * semantics; every state change goes through these calls. */

import { MovesPayload, Scene, StatePayload, Step } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function expect<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = await response.json();
      if (body && typeof body.error === "string") detail = body.error;
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return response.json() as Promise<T>;
}

export class ServiceClient {
  constructor(private base: string = "") {}

  async createSession(documentText: string): Promise<StatePayload> {
    return expect(await fetch(`${this.base}/sessions`, {
      method: "POST",
      body: documentText,
    }));
  }

  async state(session: string): Promise<StatePayload> {
    return expect(await fetch(`${this.base}/sessions/${session}/state`));
  }

  async moves(session: string, height: number, coords: number[]): Promise<MovesPayload> {
    const params = new URLSearchParams({ height: String(height) });
    if (coords.length) params.set("coords", coords.join(","));
    return expect(await fetch(`${this.base}/sessions/${session}/moves?${params}`));
  }

  async apply(session: string, step: Step): Promise<StatePayload> {
    return expect(await fetch(`${this.base}/sessions/${session}/apply`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(step),
    }));
  }

  async undo(session: string): Promise<StatePayload> {
    return expect(await fetch(`${this.base}/sessions/${session}/undo`, { method: "POST" }));
  }

  async projection(session: string): Promise<Scene> {
    return expect(await fetch(`${this.base}/sessions/${session}/projection`));
  }

  async exportDocument(session: string): Promise<string> {
    const response = await fetch(`${this.base}/sessions/${session}/document`);
    if (!response.ok) throw new ApiError(response.status, response.statusText);
    return response.text();
  }
}
