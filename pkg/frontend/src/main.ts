/**
 * DOM entry point: binds the tab bar, the try-it form and the queue's
 * confirm/dismiss buttons to the App controller, then paints its markup.
 * Served same-origin by the review service, so the API base is "".
 */
import { ApiClient } from "./api.js";
import { App, type View } from "./app.js";

const api = new ApiClient("");
const app = new App(api);

const content = document.getElementById("content") as HTMLElement;
const tabs = document.querySelectorAll<HTMLButtonElement>("nav button[data-view]");
const tryForm = document.getElementById("try-form") as HTMLFormElement;
const tryInput = document.getElementById("try-text") as HTMLTextAreaElement;

function paint(): void {
  content.innerHTML = app.render();
  for (const tab of tabs) {
    tab.classList.toggle("active", tab.dataset.view === app.view);
  }
  tryForm.hidden = app.view !== "tryit";
}

for (const tab of tabs) {
  tab.addEventListener("click", async () => {
    await app.show(tab.dataset.view as View);
    paint();
  });
}

tryForm.addEventListener("submit", async (event) => {
  event.preventDefault();
  await app.tryFilter(tryInput.value);
  paint();
});

content.addEventListener("click", async (event) => {
  const button = (event.target as HTMLElement).closest("button");
  if (!button) return;
  const { action, word } = button.dataset;
  if (action === "retry") {
    await app.refresh();
  } else if ((action === "confirm" || action === "dismiss") && word) {
    await app.decide(word, action);
  } else {
    return;
  }
  paint();
});

app.start().then(paint);
