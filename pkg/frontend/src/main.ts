import { HttpServiceClient } from "./api.js";
import type { SeedDocument } from "./model.js";
import { renderHistory, renderInspectorRows, renderQuiverSvg, renderReport } from "./render.js";
import { PlaygroundStore, type PanelId, type ViewState } from "./store.js";

const store = new PlaygroundStore(new HttpServiceClient(""));

const $ = (id: string): HTMLElement => {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el;
};

const PANEL_IDS: PanelId[] = ["left", "right", "glued"];

function parseDoc(textareaId: string): SeedDocument | null {
  const text = ($(textareaId) as HTMLTextAreaElement).value.trim();
  if (!text) {
    return null;
  }
  try {
    return JSON.parse(text) as SeedDocument;
  } catch (err) {
    showLocalError(`seed document in #${textareaId} is not valid JSON: ${String(err)}`);
    return null;
  }
}

function showLocalError(message: string): void {
  const box = $("error");
  box.textContent = message;
  box.classList.remove("hidden");
}

function render(view: ViewState): void {
  document.body.classList.toggle("pending", view.pending);
  const errorBox = $("error");
  if (view.error) {
    errorBox.textContent = view.error;
    errorBox.classList.remove("hidden");
  } else {
    errorBox.textContent = "";
    errorBox.classList.add("hidden");
  }
  for (const panelId of PANEL_IDS) {
    const panel = view[panelId];
    const host = $(`panel-${panelId}`);
    const quiver = host.querySelector(".canvas") as HTMLElement;
    const inspector = host.querySelector(".inspector tbody") as HTMLElement;
    const history = host.querySelector(".history") as HTMLElement;
    if (!panel) {
      host.classList.add("empty");
      quiver.innerHTML = "";
      inspector.innerHTML = "";
      history.textContent = "";
      continue;
    }
    host.classList.remove("empty");
    quiver.innerHTML = renderQuiverSvg(panelId, panel.seed);
    inspector.innerHTML = renderInspectorRows(panel.seed);
    history.textContent = renderHistory(panel.seed);
  }
  const badgeLeft = $("badge-left");
  const badgeRight = $("badge-right");
  const degLeft = store.selectedDegree("left");
  const degRight = store.selectedDegree("right");
  badgeLeft.textContent = view.selection.left
    ? `${view.selection.left} (deg ${degLeft})`
    : "pick a frozen vertex";
  badgeRight.textContent = view.selection.right
    ? `${view.selection.right} (deg ${degRight})`
    : "pick a frozen vertex";
  const previewBox = $("glue-preview");
  if (view.preview) {
    previewBox.innerHTML = renderQuiverSvg("glued", view.preview);
    previewBox.classList.remove("hidden");
  } else {
    previewBox.innerHTML = "";
    previewBox.classList.add("hidden");
  }
  const reportBox = $("report");
  reportBox.innerHTML = view.report ? renderReport(view.report) : "";
}

function wire(): void {
  store.subscribe(render);

  $("load-pair").addEventListener("click", () => {
    const left = parseDoc("doc-left");
    const right = parseDoc("doc-right");
    if (left && right) {
      void store.loadPair(left, right);
    }
  });
  $("load-single").addEventListener("click", () => {
    const left = parseDoc("doc-left");
    if (left) {
      void store.loadSingle(left);
    }
  });
  $("glue-preview-btn").addEventListener("click", () => void store.previewGlue());
  $("glue-submit").addEventListener("click", () => void store.submitGlue());
  for (const kind of ["theorem", "corollary", "correspondence"]) {
    $(`verify-${kind}`).addEventListener("click", () => void store.runVerify(kind));
  }
  for (const panelId of PANEL_IDS) {
    const undoBtn = document.querySelector(`#panel-${panelId} .undo`);
    undoBtn?.addEventListener("click", () => void store.undo(panelId));
  }

  // vertex clicks: mutables mutate, factor frozens feed the glue wizard
  document.addEventListener("click", (event) => {
    const target = event.target as Element | null;
    const vertexEl = target?.closest("[data-vertex]");
    if (!vertexEl) {
      return;
    }
    const vertex = vertexEl.getAttribute("data-vertex")!;
    const panelId = vertexEl.getAttribute("data-panel") as PanelId;
    if (vertexEl.hasAttribute("data-clickable")) {
      void store.clickVertex(panelId, vertex);
    } else if (panelId === "left" || panelId === "right") {
      store.selectFrozen(panelId, vertex);
      render(store.getView());
    }
  });
}

wire();
render(store.getView());
