// Image-choice player: four asset options per prompt word, single select.
// Assets resolve to /assets/{id}; the server only knows opaque ids.

import { el } from "../dom.js";
import type { ImageChoiceAnswer, PlayableImageChoice } from "../types.js";

export interface ImageChoicePlayer {
  element: HTMLElement;
  choose(itemIndex: number, optionIndex: number): void;
  getAnswer(): ImageChoiceAnswer;
}

export function createImageChoicePlayer(view: PlayableImageChoice): ImageChoicePlayer {
  const choices: number[] = view.items.map(() => -1);
  const groups: HTMLElement[] = [];

  const list = el("ol", { class: "imagechoice-items" });
  view.items.forEach((item, itemIndex) => {
    const group = el("div", { class: "options" });
    groups.push(group);
    item.options.forEach((asset, optionIndex) => {
      const button = el("button", { type: "button", "data-option": String(optionIndex) }, [
        el("img", { src: `/assets/${asset}`, alt: `option ${optionIndex + 1}` }),
      ]);
      button.addEventListener("click", () => choose(itemIndex, optionIndex));
      group.append(button);
    });
    list.append(el("li", {}, [el("p", { text: item.prompt_word }), group]));
  });

  function choose(itemIndex: number, optionIndex: number): void {
    if (itemIndex < 0 || itemIndex >= choices.length) return;
    choices[itemIndex] = optionIndex;
    const group = groups[itemIndex];
    group?.querySelectorAll("button").forEach((b, i) => {
      b.classList.toggle("chosen", i === optionIndex);
    });
  }

  return {
    element: el("div", { class: "player imagechoice" }, [list]),
    choose,
    getAnswer: () => ({ choices: [...choices] }),
  };
}
