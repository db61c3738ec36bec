// Teacher-side working copy of a draft. Local edits accumulate as a
// pending patch and are never presented as saved until the PATCH
// round-trips; a 422 keeps the edits pending and surfaces the service's
// violations verbatim.

import type { ActivityRecord, EditPatch, Violation } from "./types.js";
import { ApiClient, ApiError } from "./api.js";

export type SaveState = "clean" | "dirty" | "saving" | "rejected";

export class DraftEditor {
  pending: EditPatch = {};
  saveState: SaveState = "clean";
  violations: Violation[] = [];

  constructor(public record: ActivityRecord) {}

  get hasPendingEdits(): boolean {
    return Object.keys(this.pending).length > 0;
  }

  private markDirty(): void {
    this.saveState = "dirty";
    this.violations = [];
  }

  editSentence(index: number, text: string): void {
    const edits = (this.pending.sentences ??= []);
    const existing = edits.find((e) => e.index === index);
    if (existing) existing.text = text;
    else edits.push({ index, text });
    this.markDirty();
  }

  editClue(placement: number, clue: string): void {
    const edits = (this.pending.clues ??= []);
    const existing = edits.find((e) => e.placement === placement);
    if (existing) existing.clue = clue;
    else edits.push({ placement, clue });
    this.markDirty();
  }

  editGridCell(row: number, col: number, letter: string): void {
    const edits = (this.pending.cells ??= []);
    const existing = edits.find((e) => e.row === row && e.col === col);
    if (existing) existing.letter = letter;
    else edits.push({ row, col, letter });
    this.markDirty();
  }

  editQaItem(index: number, fields: { question?: string; answer?: string }): void {
    const edits = (this.pending.items ??= []);
    const existing = edits.find((e) => e["index"] === index);
    if (existing) Object.assign(existing, fields);
    else edits.push({ index, ...fields });
    this.markDirty();
  }

  removeQaItem(index: number): void {
    const removals = (this.pending.remove ??= []);
    if (!removals.includes(index)) removals.push(index);
    this.markDirty();
  }

  /** Push pending edits; resolves true when the server accepted them. */
  async save(client: ApiClient): Promise<boolean> {
    if (!this.hasPendingEdits) return true;
    this.saveState = "saving";
    try {
      this.record = await client.patchActivity(this.record.id, this.pending);
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) {
        this.violations = err.violations;
        this.saveState = "rejected"; // edits stay pending for correction
        return false;
      }
      this.saveState = "dirty";
      throw err;
    }
    this.pending = {};
    this.violations = [];
    this.saveState = "clean";
    return true;
  }

  /** Publishing requires a clean (round-tripped) state by construction. */
  async publish(client: ApiClient): Promise<ActivityRecord> {
    if (this.saveState !== "clean") {
      throw new Error("save pending edits before publishing");
    }
    this.record = await client.publish(this.record.id);
    return this.record;
  }
}
