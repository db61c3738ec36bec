// Story player: the delivered sentences are the shuffled display order;
// each card keeps its original shown-position id while the student drags
// (or nudges) cards around. The proposed order submitted to the server is
// the sequence of shown-position ids, top to bottom.

import { el } from "../dom.js";
import type { PlayableStory, StoryAnswer } from "../types.js";

export interface StoryPlayer {
  element: HTMLElement;
  order(): number[];
  move(fromSlot: number, toSlot: number): void;
  getAnswer(): StoryAnswer;
}

export function createStoryPlayer(view: PlayableStory): StoryPlayer {
  // order[k] = shown-position of the card currently at slot k
  let order = view.sentences.map((_, i) => i);

  const list = el("ol", { class: "story-cards" });

  function render(): void {
    list.textContent = "";
    order.forEach((shownPos, slot) => {
      const card = el("li", { class: "story-card", draggable: "true" }, [
        el("span", { class: "story-text", text: view.sentences[shownPos] ?? "" }),
      ]);
      const up = el("button", { type: "button", text: "↑" });
      const down = el("button", { type: "button", text: "↓" });
      up.addEventListener("click", () => move(slot, slot - 1));
      down.addEventListener("click", () => move(slot, slot + 1));
      card.addEventListener("dragstart", (event) => {
        (event as DragEvent).dataTransfer?.setData("text/plain", String(slot));
      });
      card.addEventListener("dragover", (event) => event.preventDefault());
      card.addEventListener("drop", (event) => {
        event.preventDefault();
        const from = Number((event as DragEvent).dataTransfer?.getData("text/plain"));
        if (Number.isInteger(from)) move(from, slot);
      });
      card.append(up, down);
      list.append(card);
    });
  }

  function move(fromSlot: number, toSlot: number): void {
    if (
      fromSlot === toSlot ||
      fromSlot < 0 || fromSlot >= order.length ||
      toSlot < 0 || toSlot >= order.length
    ) {
      return;
    }
    const next = [...order];
    const [card] = next.splice(fromSlot, 1);
    next.splice(toSlot, 0, card!);
    order = next;
    render();
  }

  render();
  return {
    element: el("div", { class: "player story" }, [list]),
    order: () => [...order],
    move,
    getAnswer: () => ({ order: [...order] }),
  };
}
