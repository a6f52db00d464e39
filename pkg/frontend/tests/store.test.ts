import { describe, expect, it } from "vitest";

import type { SeedDocument, SessionState } from "../src/model.js";
import { renderQuiverSvg } from "../src/render.js";
import { PlaygroundStore } from "../src/store.js";
import { FakeServiceClient, BlockingClient, fixture } from "./fake.js";

const docLeft = fixture<SeedDocument>("doc_left");
const docRight = fixture<SeedDocument>("doc_right");
const docRightDeg2 = fixture<SeedDocument>("doc_right_deg2");

async function gluedStore() {
  const client = new FakeServiceClient();
  const store = new PlaygroundStore(client);
  await store.loadPair(docLeft, docRight);
  store.selectFrozen("left", "x3");
  store.selectFrozen("right", "y3");
  await store.submitGlue();
  return { client, store };
}

describe("loading and gluing", () => {
  it("loads the example pair into factor panels", async () => {
    const { store } = await gluedStore();
    const view = store.getView();
    expect(view.left?.seed.vertices.map((v) => v.name)).toEqual(["x1", "x2", "x3"]);
    expect(view.right?.seed.vertices.map((v) => v.name)).toEqual(["y1", "y2", "y3"]);
  });

  it("shows degree badges for the wizard selection", async () => {
    const client = new FakeServiceClient();
    const store = new PlaygroundStore(client);
    await store.loadPair(docLeft, docRight);
    store.selectFrozen("left", "x3");
    store.selectFrozen("right", "y3");
    expect(store.selectedDegree("left")).toBe(1);
    expect(store.selectedDegree("right")).toBe(1);
  });

  it("refuses to select mutable vertices for gluing", async () => {
    const client = new FakeServiceClient();
    const store = new PlaygroundStore(client);
    await store.loadPair(docLeft, docRight);
    store.selectFrozen("left", "x1");
    expect(store.getView().selection.left).toBeNull();
  });

  it("produces the glued path quiver with the proxy vertex", async () => {
    const { store } = await gluedStore();
    const seed = store.getView().glued!.seed;
    expect(seed.vertices.map((v) => v.name)).toEqual(["x1", "x2", "y1", "y2", "z"]);
    expect(seed.proxy).toBe("z");
    const arrows = seed.arrows.map((a) => `${a.from}>${a.to}`).sort();
    expect(arrows).toEqual(["x1>z", "x2>x1", "y1>y2", "z>y1"]);
    const z = seed.vertices.find((v) => v.name === "z")!;
    expect(z.frozen).toBe(true);
  });

  it("shows the inline degree mismatch error and keeps the view intact", async () => {
    const client = new FakeServiceClient();
    const store = new PlaygroundStore(client);
    await store.loadPair(docLeft, docRightDeg2);
    store.selectFrozen("left", "x3");
    store.selectFrozen("right", "y3");
    await store.submitGlue();
    const view = store.getView();
    expect(view.error).toBe("degree mismatch: 1 != 2");
    expect(view.glued).toBeNull();
    expect(view.left).not.toBeNull();
  });
});

describe("mutation flow", () => {
  it("clicking x1 twice returns the displayed state to the initial quiver", async () => {
    const { store } = await gluedStore();
    const initial = store.getView().glued!.seed;
    const initialSvg = renderQuiverSvg("glued", initial);

    await store.clickVertex("glued", "x1");
    const once = store.getView().glued!.seed;
    expect(once.vertices[0].value).toBe("x1^-1*x2 + x1^-1*z");
    expect(once.history).toEqual(["x1"]);

    await store.clickVertex("glued", "x1");
    const twice = store.getView().glued!.seed;
    expect(twice.vertices).toEqual(initial.vertices);
    expect(twice.arrows).toEqual(initial.arrows);
    expect(renderQuiverSvg("glued", twice)).toBe(initialSvg);
    expect(twice.history).toEqual(["x1", "x1"]);
  });

  it("displayed expressions equal the service strings byte for byte", async () => {
    const { store } = await gluedStore();
    await store.clickVertex("glued", "x1");
    const recorded = fixture<SessionState>("glued_mutate_x1");
    const shown = store.getView().glued!.seed.vertices.map((v) => v.value);
    expect(shown).toEqual(recorded.state.vertices.map((v) => v.value));
  });

  it("ignores clicks on frozen vertices", async () => {
    const { client, store } = await gluedStore();
    const before = [...client.calls];
    await store.clickVertex("glued", "z");
    await store.clickVertex("glued", "x2");
    expect(client.calls).toEqual(before);
  });

  it("undo drops the last mutation", async () => {
    const { store } = await gluedStore();
    await store.clickVertex("glued", "x1");
    await store.clickVertex("glued", "x1");
    await store.undo("glued");
    const seed = store.getView().glued!.seed;
    expect(seed.history).toEqual(["x1"]);
    expect(seed.vertices[0].value).toBe("x1^-1*x2 + x1^-1*z");
  });

  it("surfaces conflict errors inline instead of swallowing them", async () => {
    const { store } = await gluedStore();
    await store.undo("glued"); // nothing to undo yet
    expect(store.getView().error).toBe("nothing to undo");
  });

  it("allows only one in-flight request", async () => {
    const client = new BlockingClient();
    const store = new PlaygroundStore(client);
    await store.loadPair(docLeft, docRight);
    store.selectFrozen("left", "x3");
    store.selectFrozen("right", "y3");
    await store.submitGlue();
    const mutations = () => client.calls.filter((c) => c.startsWith("mutate")).length;
    const first = store.clickVertex("glued", "x1");
    expect(store.getView().pending).toBe(true);
    await store.clickVertex("glued", "x1"); // ignored while pending
    client.release();
    await first;
    expect(mutations()).toBe(1);
    expect(store.getView().pending).toBe(false);
  });
});

describe("verification", () => {
  it("renders the theorem and corollary reports from the service", async () => {
    const { store } = await gluedStore();
    await store.runVerify("theorem");
    expect(store.getView().report?.status).toBe("ok");
    await store.runVerify("corollary");
    const report = store.getView().report!;
    expect(report.kappa).toBe(7);
    expect(report.K).toBe(4);
  });
});
