import { describeError, type ServiceClient } from "./api.js";
import type { Report, SeedDocument, SeedState, SessionState } from "./model.js";

export type PanelId = "left" | "right" | "glued";

export interface Panel {
  session: string;
  seed: SeedState;
}

export interface GlueSelection {
  left: string | null;
  right: string | null;
}

// The whole view is a projection of service responses: the store never
// computes mutations, degrees or expression strings on its own.
export interface ViewState {
  left: Panel | null;
  right: Panel | null;
  glued: Panel | null;
  selection: GlueSelection;
  preview: SeedState | null;
  pending: boolean;
  error: string | null;
  report: Report | null;
}

function emptyView(): ViewState {
  return {
    left: null,
    right: null,
    glued: null,
    selection: { left: null, right: null },
    preview: null,
    pending: false,
    error: null,
    report: null,
  };
}

function toPanel(response: SessionState): Panel {
  return { session: response.session, seed: response.state };
}

export class PlaygroundStore {
  private view: ViewState = emptyView();
  private docs: { left: SeedDocument | null; right: SeedDocument | null } = {
    left: null,
    right: null,
  };
  private listeners = new Set<(view: ViewState) => void>();

  constructor(private readonly client: ServiceClient) {}

  getView(): ViewState {
    return this.view;
  }

  subscribe(fn: (view: ViewState) => void): () => void {
    this.listeners.add(fn);
    return () => this.listeners.delete(fn);
  }

  private commit(patch: Partial<ViewState>): void {
    this.view = { ...this.view, ...patch };
    for (const fn of this.listeners) {
      fn(this.view);
    }
  }

  // one request in flight at a time; interactions are ignored while pending
  private async run(op: () => Promise<void>): Promise<void> {
    if (this.view.pending) {
      return;
    }
    this.commit({ pending: true, error: null });
    try {
      await op();
    } catch (err) {
      this.commit({ error: describeError(err) });
    } finally {
      this.commit({ pending: false });
    }
  }

  async loadPair(leftDoc: SeedDocument, rightDoc: SeedDocument): Promise<void> {
    await this.run(async () => {
      const left = await this.client.createSession([leftDoc]);
      const right = await this.client.createSession([rightDoc]);
      this.docs = { left: leftDoc, right: rightDoc };
      this.commit({
        left: toPanel(left),
        right: toPanel(right),
        glued: null,
        selection: { left: null, right: null },
        preview: null,
        report: null,
      });
    });
  }

  async loadSingle(doc: SeedDocument): Promise<void> {
    await this.run(async () => {
      const left = await this.client.createSession([doc]);
      this.docs = { left: doc, right: null };
      this.commit({
        left: toPanel(left),
        right: null,
        glued: null,
        selection: { left: null, right: null },
        preview: null,
        report: null,
      });
    });
  }

  /** Pick a frozen vertex on one side of the glue wizard. */
  selectFrozen(side: "left" | "right", vertex: string): void {
    const panel = this.view[side];
    if (!panel) {
      return;
    }
    const v = panel.seed.vertices.find((entry) => entry.name === vertex);
    if (!v || !v.frozen) {
      return; // only frozen vertices can be glued
    }
    this.commit({ selection: { ...this.view.selection, [side]: vertex } });
  }

  /** Degree badge for the current selection on one side, from service data. */
  selectedDegree(side: "left" | "right"): number | null {
    const panel = this.view[side];
    const name = this.view.selection[side];
    if (!panel || !name) {
      return null;
    }
    const v = panel.seed.vertices.find((entry) => entry.name === name);
    return v ? v.degree : null;
  }

  async previewGlue(): Promise<void> {
    const { left, right } = this.view.selection;
    const lp = this.view.left;
    const rp = this.view.right;
    if (!lp || !rp || !left || !right) {
      return;
    }
    await this.run(async () => {
      const out = await this.client.gluePreview(lp.session, rp.session, left, right);
      this.commit({ preview: out.state });
    });
  }

  async submitGlue(): Promise<void> {
    const { left, right } = this.view.selection;
    if (!this.docs.left || !this.docs.right || !left || !right) {
      return;
    }
    const docs = [this.docs.left, this.docs.right];
    await this.run(async () => {
      const glued = await this.client.createSession(docs, { left, right });
      this.commit({ glued: toPanel(glued), preview: null, report: null });
    });
  }

  async clickVertex(panelId: PanelId, vertex: string): Promise<void> {
    const panel = this.view[panelId];
    if (!panel) {
      return;
    }
    const v = panel.seed.vertices.find((entry) => entry.name === vertex);
    if (!v || v.frozen) {
      return; // frozen vertices are not clickable
    }
    await this.run(async () => {
      const next = await this.client.mutate(panel.session, vertex);
      this.commit({ [panelId]: toPanel(next) } as Partial<ViewState>);
    });
  }

  async undo(panelId: PanelId): Promise<void> {
    const panel = this.view[panelId];
    if (!panel) {
      return;
    }
    await this.run(async () => {
      const next = await this.client.undo(panel.session);
      this.commit({ [panelId]: toPanel(next) } as Partial<ViewState>);
    });
  }

  async runVerify(kind: string): Promise<void> {
    const glued = this.view.glued;
    if (!glued) {
      return;
    }
    await this.run(async () => {
      const report = await this.client.verify(glued.session, kind, { depth: 4 });
      this.commit({ report });
    });
  }
}
