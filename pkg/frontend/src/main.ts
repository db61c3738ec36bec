// Entry point: hash routing between the teacher workspace (#/teacher) and
// the student player (#/play/{activity id}).

import { ApiClient, ApiError } from "./api.js";
import { clear, el } from "./dom.js";
import { renderPlayer } from "./player/index.js";
import { createTeacherWorkspace } from "./teacher.js";

const client = new ApiClient("");

async function renderPlayRoute(root: HTMLElement, id: string): Promise<void> {
  try {
    const view = await client.playable(id);
    const player = renderPlayer(view);
    const result = el("p", { class: "status" });
    root.append(player.element);
    if (player.getAnswer) {
      const submit = el("button", { type: "button", text: "Check my answer" });
      submit.addEventListener("click", async () => {
        const grading = await client.submitAnswer(id, player.getAnswer!());
        result.textContent = grading.correct
          ? "Correct, well done!"
          : "Not yet right, keep trying.";
      });
      root.append(submit, result);
    }
  } catch (err) {
    const message = err instanceof ApiError && err.status === 409
      ? "This activity is not published yet."
      : `Could not load the activity: ${(err as Error).message}`;
    root.append(el("p", { class: "error", text: message }));
  }
}

async function route(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) return;
  clear(root);
  const hash = window.location.hash || "#/teacher";
  const play = hash.match(/^#\/play\/([A-Za-z0-9-]+)$/);
  if (play) {
    await renderPlayRoute(root, play[1]!);
  } else {
    root.append(createTeacherWorkspace(client));
  }
}

window.addEventListener("hashchange", route);
window.addEventListener("DOMContentLoaded", route);
