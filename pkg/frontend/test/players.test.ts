// @vitest-environment happy-dom
// Player components must emit exactly the answer shapes the grading
// endpoint accepts, for any payload the service can verify.

import { describe, expect, it } from "vitest";

import { renderPlayer } from "../src/player/index.js";
import { createCrosswordPlayer } from "../src/player/crossword.js";
import { createImageChoicePlayer } from "../src/player/imagechoice.js";
import { createQaPlayer } from "../src/player/qa.js";
import { createStoryPlayer } from "../src/player/story.js";
import { createWordsearchPlayer, directionBetween } from "../src/player/wordsearch.js";

describe("story player", () => {
  const view = {
    playable: true as const,
    id: "s1",
    kind: "storygame" as const,
    sentences: ["Shown first.", "Shown second.", "Shown third.", "Shown fourth."],
  };

  it("renders one reorderable card per sentence", () => {
    const player = createStoryPlayer(view);
    expect(player.element.querySelectorAll(".story-card")).toHaveLength(4);
    expect(player.order()).toEqual([0, 1, 2, 3]);
  });

  it("moving a card produces the server's order shape", () => {
    const player = createStoryPlayer(view);
    player.move(0, 2);
    expect(player.getAnswer()).toEqual({ order: [1, 2, 0, 3] });
    player.move(3, 0);
    expect(player.getAnswer()).toEqual({ order: [3, 1, 2, 0] });
  });

  it("ignores out-of-range moves", () => {
    const player = createStoryPlayer(view);
    player.move(-1, 2);
    player.move(0, 99);
    expect(player.getAnswer()).toEqual({ order: [0, 1, 2, 3] });
  });
});

describe("crossword player", () => {
  const view = {
    playable: true as const,
    id: "c1",
    kind: "crossword" as const,
    grid: { width: 3, height: 3, cells: ["...", "#.#", "#.#"] },
    clues: [
      { number: 1, row: 0, col: 0, direction: "across" as const, length: 3, clue: "first clue" },
      { number: 2, row: 0, col: 1, direction: "down" as const, length: 3, clue: "second clue" },
    ],
  };

  it("renders inputs for fillable cells and a numbered clue list", () => {
    const player = createCrosswordPlayer(view);
    expect(player.element.querySelectorAll("input")).toHaveLength(5);
    expect(player.element.querySelectorAll(".clue-list li")).toHaveLength(2);
    expect(player.element.textContent).toContain("first clue");
  });

  it("emits the full-grid cells shape with '#' and '.' preserved", () => {
    const player = createCrosswordPlayer(view);
    const inputs = player.element.querySelectorAll("input");
    (inputs[0] as HTMLInputElement).value = "c";
    (inputs[1] as HTMLInputElement).value = "A";
    expect(player.getAnswer()).toEqual({ cells: ["CA.", "#.#", "#.#"] });
  });
});

describe("wordsearch player", () => {
  const view = {
    playable: true as const,
    id: "w1",
    kind: "wordsearch" as const,
    grid: { width: 3, height: 3, cells: ["CAT", "XOX", "YYW"] },
    words: ["cat", "cow"],
  };

  it("derives compass directions from two clicks", () => {
    expect(directionBetween(0, 0, 0, 2)).toEqual({ name: "e", length: 3 });
    expect(directionBetween(0, 0, 2, 2)).toEqual({ name: "se", length: 3 });
    expect(directionBetween(2, 2, 0, 0)).toEqual({ name: "nw", length: 3 });
    expect(directionBetween(0, 0, 1, 2)).toBeNull(); // not a straight line
  });

  it("accepts only target words and builds the found shape", () => {
    const player = createWordsearchPlayer(view);
    expect(player.markSelection(0, 0, 0, 2)).toEqual({
      word: "cat", row: 0, col: 0, direction: "e",
    });
    expect(player.markSelection(0, 0, 2, 2)).toEqual({
      word: "cow", row: 0, col: 0, direction: "se",
    });
    expect(player.markSelection(2, 0, 2, 1)).toBeNull(); // "YY" is no target
    expect(player.getAnswer()).toEqual({
      found: [
        { word: "cat", row: 0, col: 0, direction: "e" },
        { word: "cow", row: 0, col: 0, direction: "se" },
      ],
    });
  });
});

describe("qa player", () => {
  it("collects answers in question order", () => {
    const player = createQaPlayer({
      playable: true,
      id: "q1",
      kind: "qa",
      questions: [
        { index: 0, question: "What ate the grapes?" },
        { index: 1, question: "Where did the fox eat the grapes?" },
      ],
    });
    player.setAnswer(0, "the fox");
    player.setAnswer(1, "the garden");
    expect(player.getAnswer()).toEqual({ answers: ["the fox", "the garden"] });
  });
});

describe("imagechoice player", () => {
  it("tracks one choice per item", () => {
    const player = createImageChoicePlayer({
      playable: true,
      id: "i1",
      kind: "imagechoice",
      items: [
        { index: 0, prompt_word: "tennis", options: ["a1", "a2", "a3", "a4"] },
        { index: 1, prompt_word: "cat", options: ["b1", "b2", "b3", "b4"] },
      ],
    });
    player.choose(0, 2);
    player.choose(1, 0);
    player.choose(1, 3);
    expect(player.getAnswer()).toEqual({ choices: [2, 3] });
  });
});

describe("renderPlayer dispatch", () => {
  it("renders a graceful screen for unknown kinds", () => {
    const rendered = renderPlayer({ kind: "karaoke" });
    expect(rendered.getAnswer).toBeNull();
    expect(rendered.element.textContent).toContain("cannot be played");
  });

  it("does not crash on malformed payloads", () => {
    const rendered = renderPlayer({ kind: "crossword" }); // missing grid
    expect(rendered.getAnswer).toBeNull();
    expect(rendered.element.textContent).toContain("malformed payload");
  });

  it("dispatches known kinds", () => {
    const rendered = renderPlayer({
      playable: true, id: "s", kind: "storygame", sentences: ["A.", "B.", "C."],
    });
    expect(rendered.getAnswer).not.toBeNull();
    expect(rendered.getAnswer!()).toEqual({ order: [0, 1, 2] });
  });
});
