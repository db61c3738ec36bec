import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { DraftEditor } from "../src/state.js";
import type { ActivityRecord } from "../src/types.js";

const record: ActivityRecord = {
  id: "d1",
  kind: "storygame",
  payload: { sentences: ["One.", "Two.", "Three."], shown_order: [2, 0, 1] },
  state: "draft",
  origin: "text",
  created_at: "2026-01-01T00:00:00Z",
  seed: 1,
  source_text_hash: "ff",
};

afterEach(() => vi.unstubAllGlobals());

describe("DraftEditor", () => {
  it("accumulates edits and is dirty until saved", () => {
    const editor = new DraftEditor({ ...record });
    expect(editor.saveState).toBe("clean");
    editor.editSentence(0, "A new opening.");
    editor.editSentence(0, "A better opening.");
    expect(editor.saveState).toBe("dirty");
    expect(editor.pending.sentences).toEqual([{ index: 0, text: "A better opening." }]);
  });

  it("only reports clean after the PATCH round-trips", async () => {
    const patched = { ...record, payload: { ...record.payload, sentences: ["X.", "Two.", "Three."] } };
    vi.stubGlobal("fetch", vi.fn(async () => new Response(JSON.stringify(patched), { status: 200 })));
    const editor = new DraftEditor({ ...record });
    editor.editSentence(0, "X.");
    const saving = editor.save(new ApiClient(""));
    expect(editor.saveState).toBe("saving"); // not clean while in flight
    await expect(saving).resolves.toBe(true);
    expect(editor.saveState).toBe("clean");
    expect(editor.record).toEqual(patched);
    expect(editor.hasPendingEdits).toBe(false);
  });

  it("keeps edits pending and shows violations verbatim on 422", async () => {
    vi.stubGlobal("fetch", vi.fn(async () =>
      new Response(
        JSON.stringify({ error: "edit rejected", violations: [{ rule: "EMPTY_SENTENCE", message: "sentences must be non-empty" }] }),
        { status: 422 },
      ),
    ));
    const editor = new DraftEditor({ ...record });
    editor.editSentence(1, "   ");
    await expect(editor.save(new ApiClient(""))).resolves.toBe(false);
    expect(editor.saveState).toBe("rejected");
    expect(editor.hasPendingEdits).toBe(true);
    expect(editor.violations).toEqual([
      { rule: "EMPTY_SENTENCE", message: "sentences must be non-empty" },
    ]);
  });

  it("refuses to publish with unsaved edits", async () => {
    const editor = new DraftEditor({ ...record });
    editor.editSentence(0, "Unsaved.");
    await expect(editor.publish(new ApiClient(""))).rejects.toThrow(/save pending edits/);
  });
});
