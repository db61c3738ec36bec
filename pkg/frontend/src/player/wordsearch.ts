// Word-search player: the student marks a word by clicking its first and
// last letters; any straight compass line whose letters spell a target
// word is accepted (the server also accepts any true occurrence).

import { el } from "../dom.js";
import type { FoundWord, PlayableWordsearch, WordsearchAnswer } from "../types.js";

const DIRECTIONS: Record<string, [number, number]> = {
  e: [0, 1], se: [1, 1], s: [1, 0], sw: [1, -1],
  w: [0, -1], nw: [-1, -1], n: [-1, 0], ne: [-1, 1],
};

export interface WordsearchPlayer {
  element: HTMLElement;
  markSelection(r1: number, c1: number, r2: number, c2: number): FoundWord | null;
  getAnswer(): WordsearchAnswer;
}

export function directionBetween(
  r1: number, c1: number, r2: number, c2: number,
): { name: string; length: number } | null {
  const dr = Math.sign(r2 - r1);
  const dc = Math.sign(c2 - c1);
  const steps = Math.max(Math.abs(r2 - r1), Math.abs(c2 - c1));
  if (dr === 0 && dc === 0) return null;
  // the span must be a straight compass line
  if (r2 - r1 !== dr * steps || c2 - c1 !== dc * steps) return null;
  const name = Object.keys(DIRECTIONS).find(
    (d) => DIRECTIONS[d]![0] === dr && DIRECTIONS[d]![1] === dc,
  );
  return name ? { name, length: steps + 1 } : null;
}

export function createWordsearchPlayer(view: PlayableWordsearch): WordsearchPlayer {
  const { cells } = view.grid;
  const targets = new Set(view.words.map((w) => w.toLowerCase()));
  const found = new Map<string, FoundWord>();

  const wordList = el("ul", { class: "word-list" });
  const wordItems = new Map<string, HTMLLIElement>();
  for (const word of view.words) {
    const item = el("li", { text: word });
    wordItems.set(word.toLowerCase(), item);
    wordList.append(item);
  }

  function markSelection(r1: number, c1: number, r2: number, c2: number): FoundWord | null {
    const line = directionBetween(r1, c1, r2, c2);
    if (!line) return null;
    const [dr, dc] = DIRECTIONS[line.name]!;
    let letters = "";
    for (let i = 0; i < line.length; i++) {
      letters += cells[r1 + i * dr]?.[c1 + i * dc] ?? "";
    }
    const word = letters.toLowerCase();
    if (!targets.has(word)) return null;
    const record: FoundWord = { word, row: r1, col: c1, direction: line.name };
    found.set(word, record);
    wordItems.get(word)?.classList.add("found");
    return record;
  }

  let selection: [number, number] | null = null;
  const table = el("table", { class: "wordsearch-grid" });
  cells.forEach((rowText, r) => {
    const tr = el("tr");
    for (let c = 0; c < rowText.length; c++) {
      const td = el("td", { text: rowText[c] ?? "", "data-row": String(r), "data-col": String(c) });
      td.addEventListener("click", () => {
        if (selection === null) {
          selection = [r, c];
          td.classList.add("selecting");
        } else {
          const [r1, c1] = selection;
          selection = null;
          table.querySelectorAll(".selecting").forEach((n) => n.classList.remove("selecting"));
          markSelection(r1, c1, r, c);
        }
      });
      tr.append(td);
    }
    table.append(tr);
  });

  return {
    element: el("div", { class: "player wordsearch" }, [table, wordList]),
    markSelection,
    getAnswer: () => ({ found: [...found.values()] }),
  };
}
