/** Bootstrap: wire the view model to the page controls. */

import { ServiceClient } from "./api.js";
import { moveLabel } from "./viewmodel.js";
import { renderScene } from "./scene-svg.js";
import { ViewModel, ViewState } from "./viewmodel.js";

const api = new ServiceClient("");
const vm = new ViewModel(api);

const el = (id: string) => document.getElementById(id) as HTMLElement;

function render(state: ViewState): void {
  const canvas = el("canvas");
  canvas.textContent = "";
  if (state.scene) {
    canvas.appendChild(renderScene(state.scene, (index) => void vm.clickVertex(index)));
  }

  const palette = el("palette");
  palette.textContent = "";
  if (state.selected) {
    const heading = document.createElement("h3");
    heading.textContent = `moves at height ${state.selected.height}`;
    palette.appendChild(heading);
    if (state.moves.length === 0) {
      const empty = document.createElement("p");
      empty.className = "note";
      empty.textContent = "no moves apply here";
      palette.appendChild(empty);
    }
    for (const move of state.moves) {
      const button = document.createElement("button");
      button.textContent = moveLabel(move);
      button.addEventListener("click", () => void vm.applyMove(move));
      palette.appendChild(button);
    }
  }

  const script = el("script-panel");
  script.textContent = "";
  state.script.forEach((step, index) => {
    const row = document.createElement("li");
    row.textContent = `${index}: ${JSON.stringify(step)}`;
    script.appendChild(row);
  });

  el("status").textContent = state.error ?? state.note ?? "";
  el("status").className = state.error ? "error" : "note";
}

vm.onChange(render);

el("load").addEventListener("click", () => {
  const text = (el("document") as HTMLTextAreaElement).value;
  void vm.load(text);
});

el("undo").addEventListener("click", () => void vm.undo());

el("export").addEventListener("click", async () => {
  const text = await vm.exportDocument();
  if (text === null) return;
  const blob = new Blob([text], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "proof.hdprf";
  link.click();
  URL.revokeObjectURL(link.href);
});
