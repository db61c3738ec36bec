// Q&A player: free-text inputs, one per question, in question order.

import { el } from "../dom.js";
import type { PlayableQa, QaAnswer } from "../types.js";

export interface QaPlayer {
  element: HTMLElement;
  setAnswer(index: number, text: string): void;
  getAnswer(): QaAnswer;
}

export function createQaPlayer(view: PlayableQa): QaPlayer {
  const inputs: HTMLInputElement[] = [];
  const list = el("ol", { class: "qa-items" });
  for (const question of view.questions) {
    const input = el("input", { type: "text", "data-index": String(question.index) });
    inputs.push(input);
    list.append(el("li", {}, [el("p", { text: question.question }), input]));
  }
  return {
    element: el("div", { class: "player qa" }, [list]),
    setAnswer: (index, text) => {
      const input = inputs[index];
      if (input) input.value = text;
    },
    getAnswer: () => ({ answers: inputs.map((i) => i.value) }),
  };
}
