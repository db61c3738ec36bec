// Teacher workspace: paste a text, pick a kind, inspect the generated
// draft's diagnostics, edit, save, publish. Every text-derived activity
// passes through this screen; publish is an explicit click and only
// enabled once edits have round-tripped.

import { ApiClient, ApiError } from "./api.js";
import { clear, el } from "./dom.js";
import { DraftEditor } from "./state.js";
import type { Kind, Violation } from "./types.js";

const TEXT_KINDS: Kind[] = ["crossword", "wordsearch", "storygame", "qa"];

export function createTeacherWorkspace(client: ApiClient): HTMLElement {
  const root = el("div", { class: "teacher" });
  const tokenInput = el("input", { type: "password", placeholder: "teacher token" });
  tokenInput.addEventListener("change", () => client.setToken(tokenInput.value || null));

  const textArea = el("textarea", { rows: "8", placeholder: "Paste the lesson text here" });
  const kindSelect = el("select");
  for (const kind of TEXT_KINDS) kindSelect.append(el("option", { value: kind, text: kind }));
  const seedInput = el("input", { type: "number", value: "0" });
  const generateButton = el("button", { type: "button", text: "Generate draft" });
  const status = el("p", { class: "status" });
  const draftPane = el("div", { class: "draft-pane" });

  generateButton.addEventListener("click", async () => {
    status.textContent = "generating…";
    try {
      const record = await client.createFromText(
        kindSelect.value as Kind, textArea.value, {}, Number(seedInput.value) || 0,
      );
      status.textContent = `draft ${record.id} created`;
      renderDraft(new DraftEditor(record));
    } catch (err) {
      status.textContent = err instanceof ApiError ? err.message : String(err);
    }
  });

  function violationList(violations: Violation[]): HTMLElement {
    const list = el("ul", { class: "violations" });
    for (const v of violations) list.append(el("li", { text: `${v.rule}: ${v.message}` }));
    return list;
  }

  function renderDraft(editor: DraftEditor): void {
    clear(draftPane);
    const payload = editor.record.payload as Record<string, unknown>;
    const saveButton = el("button", { type: "button", text: "Save edits" });
    const publishButton = el("button", { type: "button", text: "Publish" });
    const draftStatus = el("p", { class: "status", text: `state: ${editor.record.state}` });
    const violationsPane = el("div");

    const diagnostics = payload["diagnostics"];
    if (diagnostics !== undefined) {
      draftPane.append(
        el("details", {}, [
          el("summary", { text: "Generation diagnostics" }),
          el("pre", { text: JSON.stringify(diagnostics, null, 2) }),
        ]),
      );
    }

    // kind-specific edit surfaces
    if (editor.record.kind === "storygame") {
      const sentences = payload["sentences"] as string[];
      sentences.forEach((sentence, index) => {
        const input = el("input", { type: "text", value: sentence });
        input.addEventListener("change", () => editor.editSentence(index, input.value));
        draftPane.append(el("div", { class: "edit-row" }, [input]));
      });
    } else if (editor.record.kind === "qa") {
      const items = payload["items"] as { question: string; answer: string }[];
      items.forEach((item, index) => {
        const question = el("input", { type: "text", value: item.question });
        const answer = el("input", { type: "text", value: item.answer });
        question.addEventListener("change", () => editor.editQaItem(index, { question: question.value }));
        answer.addEventListener("change", () => editor.editQaItem(index, { answer: answer.value }));
        draftPane.append(el("div", { class: "edit-row" }, [question, answer]));
      });
    } else if (editor.record.kind === "crossword" || editor.record.kind === "wordsearch") {
      const grid = payload["grid"] as { cells: string[]; placements: { word: string; clue?: string }[] };
      draftPane.append(el("pre", { class: "grid-preview", text: grid.cells.join("\n") }));
      grid.placements.forEach((placement, index) => {
        if (editor.record.kind !== "crossword") return;
        const clue = el("input", { type: "text", value: placement.clue ?? "" });
        clue.addEventListener("change", () => editor.editClue(index, clue.value));
        draftPane.append(
          el("div", { class: "edit-row" }, [el("span", { text: placement.word }), clue]),
        );
      });
    }

    saveButton.addEventListener("click", async () => {
      const accepted = await editor.save(client);
      draftStatus.textContent = accepted
        ? "all edits saved"
        : "rejected by the verifier:";
      clear(violationsPane);
      if (!accepted) violationsPane.append(violationList(editor.violations));
    });

    publishButton.addEventListener("click", async () => {
      try {
        const record = await editor.publish(client);
        draftStatus.textContent = `published; students can open #/play/${record.id}`;
      } catch (err) {
        draftStatus.textContent = err instanceof Error ? err.message : String(err);
      }
    });

    draftPane.append(saveButton, publishButton, draftStatus, violationsPane);
  }

  root.append(
    el("h1", { text: "Teacher workspace" }),
    el("div", { class: "controls" }, [tokenInput, kindSelect, seedInput, generateButton]),
    textArea,
    status,
    draftPane,
  );
  return root;
}
