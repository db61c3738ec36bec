// Crossword player: one input per fillable cell, numbered clue list.
// getAnswer() returns the full-grid answer shape the server grades.

import { el } from "../dom.js";
import type { CrosswordAnswer, PlayableCrossword } from "../types.js";

export interface CrosswordPlayer {
  element: HTMLElement;
  getAnswer(): CrosswordAnswer;
}

export function createCrosswordPlayer(view: PlayableCrossword): CrosswordPlayer {
  const { width, height, cells } = view.grid;
  const inputs = new Map<string, HTMLInputElement>();
  const numberAt = new Map<string, number>();
  for (const clue of view.clues) {
    const key = `${clue.row},${clue.col}`;
    if (!numberAt.has(key)) numberAt.set(key, clue.number);
  }

  const table = el("table", { class: "crossword-grid" });
  for (let r = 0; r < height; r++) {
    const tr = el("tr");
    for (let c = 0; c < width; c++) {
      const cell = cells[r]?.[c] ?? "#";
      const td = el("td", { class: cell === "#" ? "blocked" : "fillable" });
      if (cell !== "#") {
        const number = numberAt.get(`${r},${c}`);
        if (number !== undefined) {
          td.append(el("span", { class: "cell-number", text: String(number) }));
        }
        const input = el("input", { maxlength: "1", "data-row": String(r), "data-col": String(c) });
        inputs.set(`${r},${c}`, input);
        td.append(input);
      }
      tr.append(td);
    }
    table.append(tr);
  }

  const clueList = el("ol", { class: "clue-list" });
  for (const clue of view.clues) {
    clueList.append(
      el("li", {
        text: `${clue.number} ${clue.direction} (${clue.length}): ${clue.clue ?? ""}`,
      }),
    );
  }

  function getAnswer(): CrosswordAnswer {
    const rows: string[] = [];
    for (let r = 0; r < height; r++) {
      let row = "";
      for (let c = 0; c < width; c++) {
        if ((cells[r]?.[c] ?? "#") === "#") {
          row += "#";
        } else {
          const value = inputs.get(`${r},${c}`)?.value.trim().toUpperCase() ?? "";
          row += /^[A-Z]$/.test(value) ? value : ".";
        }
      }
      rows.push(row);
    }
    return { cells: rows };
  }

  const element = el("div", { class: "player crossword" }, [table, clueList]);
  return { element, getAnswer };
}
