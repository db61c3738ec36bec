// Thin typed client for the activityforge HTTP API. The teacher token is
// held in memory only (never persisted); all grading verdicts come from
// the server.

import type {
  ActivityRecord,
  ActivitySummary,
  AnswerShape,
  EditPatch,
  GradingResult,
  Kind,
  PlayableView,
  Violation,
} from "./types.js";
import { TrafficRecorder } from "./traffic.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: { error?: string; violations?: Violation[] } | null,
  ) {
    super(body?.error ?? `HTTP ${status}`);
  }

  get violations(): Violation[] {
    return this.body?.violations ?? [];
  }
}

export class ApiClient {
  private token: string | null = null;

  constructor(
    private base: string = "",
    private recorder: TrafficRecorder | null = null,
  ) {}

  setToken(token: string | null): void {
    this.token = token;
  }

  private async request<T>(
    method: string,
    path: string,
    body: unknown,
    label: string,
    auth: boolean,
  ): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    if (auth && this.token) headers["Authorization"] = `Bearer ${this.token}`;
    const response = await fetch(this.base + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    let parsed: unknown = null;
    const text = await response.text();
    if (text) {
      try {
        parsed = JSON.parse(text);
      } catch {
        parsed = text;
      }
    }
    this.recorder?.record({
      label,
      method,
      path,
      status: response.status,
      response: parsed,
    });
    if (!response.ok) {
      throw new ApiError(response.status, parsed as ApiError["body"]);
    }
    return parsed as T;
  }

  // ---- teacher surface ----

  createFromText(kind: Kind, text: string, params: Record<string, unknown>, seed: number) {
    return this.request<ActivityRecord>(
      "POST", "/activities/from-text", { kind, text, params, seed }, "teacher", true,
    );
  }

  createFromVocabulary(kind: Kind, tags: string[], params: Record<string, unknown>, seed: number) {
    return this.request<ActivityRecord>(
      "POST", "/activities/from-vocabulary", { kind, tags, params, seed }, "teacher", false,
    );
  }

  getActivity(id: string) {
    return this.request<ActivityRecord>("GET", `/activities/${id}`, undefined, "teacher", true);
  }

  patchActivity(id: string, edits: EditPatch) {
    return this.request<ActivityRecord>(
      "PATCH", `/activities/${id}`, { edits }, "teacher", true,
    );
  }

  publish(id: string) {
    return this.request<ActivityRecord>(
      "POST", `/activities/${id}/publish`, undefined, "teacher", true,
    );
  }

  // ---- student surface (anonymous) ----

  playable(id: string) {
    return this.request<PlayableView>(
      "GET", `/activities/${id}/playable`, undefined, "student", false,
    );
  }

  submitAnswer(id: string, answer: AnswerShape) {
    return this.request<GradingResult>(
      "POST", `/activities/${id}/answers`, { answer }, "student", false,
    );
  }

  listActivities(state?: string, kind?: string) {
    const query = new URLSearchParams();
    if (state) query.set("state", state);
    if (kind) query.set("kind", kind);
    const suffix = query.toString() ? `?${query}` : "";
    return this.request<{ activities: ActivitySummary[] }>(
      "GET", `/activities${suffix}`, undefined, "student", false,
    );
  }
}
