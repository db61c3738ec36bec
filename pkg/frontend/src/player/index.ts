// Kind dispatch for the student player. Unknown or malformed payloads get
// a graceful unsupported-activity screen instead of a crash.

import { el } from "../dom.js";
import type { AnswerShape, PlayableView } from "../types.js";
import { createCrosswordPlayer } from "./crossword.js";
import { createImageChoicePlayer } from "./imagechoice.js";
import { createQaPlayer } from "./qa.js";
import { createStoryPlayer } from "./story.js";
import { createWordsearchPlayer } from "./wordsearch.js";

export interface Player {
  element: HTMLElement;
  getAnswer(): AnswerShape;
}

export interface RenderedPlayer {
  element: HTMLElement;
  getAnswer: (() => AnswerShape) | null; // null on the unsupported screen
}

function unsupported(reason: string): RenderedPlayer {
  return {
    element: el("div", { class: "player unsupported" }, [
      el("h2", { text: "This activity cannot be played here" }),
      el("p", { text: reason }),
    ]),
    getAnswer: null,
  };
}

export function renderPlayer(view: PlayableView | Record<string, unknown>): RenderedPlayer {
  const kind = (view as { kind?: string }).kind;
  try {
    switch (kind) {
      case "crossword":
        return createCrosswordPlayer(view as never);
      case "wordsearch":
        return createWordsearchPlayer(view as never);
      case "storygame":
        return createStoryPlayer(view as never);
      case "qa":
        return createQaPlayer(view as never);
      case "imagechoice":
        return createImageChoicePlayer(view as never);
      default:
        return unsupported(`unknown activity kind "${kind ?? "?"}"`);
    }
  } catch (err) {
    return unsupported(`malformed payload: ${(err as Error).message}`);
  }
}
