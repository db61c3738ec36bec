// Records API traffic so tests (and the invariant they encode) can prove
// the student session never receives answer-key material.

export interface TrafficEntry {
  label: string; // "teacher" | "student"
  method: string;
  path: string;
  status: number;
  response: unknown;
}

// keys that only ever appear in answer-key bearing payloads
export const ANSWER_KEY_FIELDS = new Set([
  "shown_order",
  "answer",
  "answer_span",
  "correct_index",
  "placements",
  "resolved_text",
  "unplaced",
]);

export class TrafficRecorder {
  entries: TrafficEntry[] = [];

  record(entry: TrafficEntry): void {
    this.entries.push(entry);
  }

  byLabel(label: string): TrafficEntry[] {
    return this.entries.filter((e) => e.label === label);
  }
}

function collectKeys(value: unknown, into: Set<string>): void {
  if (Array.isArray(value)) {
    for (const item of value) collectKeys(item, into);
  } else if (value !== null && typeof value === "object") {
    for (const [key, nested] of Object.entries(value as Record<string, unknown>)) {
      into.add(key);
      collectKeys(nested, into);
    }
  }
}

/** Every JSON key, at any depth, seen in the given entries' responses. */
export function responseKeys(entries: TrafficEntry[]): Set<string> {
  const keys = new Set<string>();
  for (const entry of entries) collectKeys(entry.response, keys);
  return keys;
}

/** Answer-key fields leaked to the given traffic; empty means clean. */
export function leakedAnswerKeys(entries: TrafficEntry[]): string[] {
  const seen = responseKeys(entries);
  return [...seen].filter((k) => ANSWER_KEY_FIELDS.has(k)).sort();
}
