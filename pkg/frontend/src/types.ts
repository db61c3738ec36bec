// Mirrors of the service wire formats. The client renders any payload the
// server can verify, and produces exactly the answer shapes the grading
// endpoint accepts -- nothing more is assumed about payloads.

export type Kind = "crossword" | "wordsearch" | "storygame" | "qa" | "imagechoice";

export interface ActivityRecord {
  id: string;
  kind: Kind;
  payload: Record<string, unknown>;
  state: "draft" | "published";
  origin: "vocabulary" | "text";
  created_at: string;
  seed: number;
  source_text_hash: string | null;
}

export interface ActivitySummary {
  id: string;
  kind: Kind;
  state: string;
  origin: string;
  created_at: string;
}

export interface Violation {
  rule: string;
  message: string;
  row?: number | null;
  col?: number | null;
  word?: string | null;
}

// ---- student (stripped) payloads ----

export interface PlayableGrid {
  width: number;
  height: number;
  cells: string[];
}

export interface CrosswordClue {
  number: number;
  row: number;
  col: number;
  direction: "across" | "down";
  length: number;
  clue: string | null;
}

export interface PlayableCrossword {
  playable: true;
  id: string;
  kind: "crossword";
  grid: PlayableGrid;
  clues: CrosswordClue[];
}

export interface PlayableWordsearch {
  playable: true;
  id: string;
  kind: "wordsearch";
  grid: PlayableGrid;
  words: string[];
}

export interface PlayableStory {
  playable: true;
  id: string;
  kind: "storygame";
  sentences: string[];
}

export interface PlayableQa {
  playable: true;
  id: string;
  kind: "qa";
  questions: { index: number; question: string }[];
}

export interface PlayableImageChoice {
  playable: true;
  id: string;
  kind: "imagechoice";
  items: { index: number; prompt_word: string; options: string[] }[];
}

export type PlayableView =
  | PlayableCrossword
  | PlayableWordsearch
  | PlayableStory
  | PlayableQa
  | PlayableImageChoice;

// ---- answer shapes accepted by POST /activities/{id}/answers ----

export interface CrosswordAnswer {
  cells: string[];
}

export interface FoundWord {
  word: string;
  row: number;
  col: number;
  direction: string;
}

export interface WordsearchAnswer {
  found: FoundWord[];
}

export interface StoryAnswer {
  order: number[];
}

export interface QaAnswer {
  answers: string[];
}

export interface ImageChoiceAnswer {
  choices: number[];
}

export type AnswerShape =
  | CrosswordAnswer
  | WordsearchAnswer
  | StoryAnswer
  | QaAnswer
  | ImageChoiceAnswer;

export interface GradingResult {
  correct: boolean;
  [extra: string]: unknown;
}

// ---- teacher edit shapes (PATCH /activities/{id}) ----

export interface EditPatch {
  clues?: { placement: number; clue: string }[];
  cells?: { row: number; col: number; letter: string }[];
  sentences?: { index: number; text: string }[];
  items?: Record<string, unknown>[];
  remove?: number[];
}
