import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { layeredLayout } from "../src/layout.js";
import { renderErrorBanner, renderGraph, renderPairCard } from "../src/render.js";
import { Explorer } from "../src/state.js";
import type { PairSummary } from "../src/types.js";
import { loadExchanges, makeFetch } from "./recorded.js";

const cyc2 = loadExchanges("cyc2-session");
const rootPair = (cyc2[0].response as any).pair as PairSummary;

async function walkedExplorer() {
  const ex = new Explorer(new ApiClient("", makeFetch(cyc2)));
  const root = await ex.loadSession(cyc2[0].body as Record<string, unknown>);
  const k1 = (await ex.mutateAt(0)).key;
  await ex.goTo(root.key);
  await ex.mutateAt(1);
  await ex.goTo(k1);
  await ex.mutateAt(1);
  return ex;
}

describe("pair card rendering", () => {
  it("shows every summand label, g-vector and badge from the payload", () => {
    const html = renderPairCard(rootPair);
    expect(html).toContain(`data-key="${rootPair.key}"`);
    expect(html).toContain(rootPair.label);
    for (const s of rootPair.summands) {
      expect(html).toContain(s.label);
      expect(html).toContain(`g = (${s.gvector.join(", ")})`);
      expect(html).toContain(`dims (${s.dims.join(", ")})`);
    }
    for (const p of rootPair.positions) {
      expect(html).toContain(`badge ${p.direction}`);
    }
  });

  it("renders support badges", () => {
    const bottom = (cyc2[4].response as any).pair as PairSummary;
    const html = renderPairCard(bottom);
    for (const v of bottom.support) {
      expect(html).toContain(`e${v}`);
    }
  });

  it("escapes markup in error banners", () => {
    expect(renderErrorBanner('<b>"x"</b>')).toBe(
      '<div class="error-banner">&lt;b&gt;&quot;x&quot;&lt;/b&gt;</div>'
    );
  });
});

describe("layered layout", () => {
  it("puts the root alone on layer zero and points edges downward", async () => {
    const ex = await walkedExplorer();
    const nodes = ex.nodeKeys().map((key) => ({
      key,
      label: ex.cardFor(key)!.label,
    }));
    const placed = layeredLayout(nodes, ex.edges(), ex.rootKey);
    const layerOf = new Map(placed.map((p) => [p.key, p.layer]));
    expect(layerOf.get(ex.rootKey!)).toBe(0);
    expect(placed.filter((p) => p.layer === 0)).toHaveLength(1);
    for (const e of ex.edges()) {
      expect(layerOf.get(e.to)!).toBeGreaterThan(layerOf.get(e.from)!);
    }
  });

  it("handles a single root node", () => {
    const placed = layeredLayout([{ key: "r", label: "root" }], [], "r");
    expect(placed).toEqual([{ key: "r", label: "root", x: 0, y: 0, layer: 0 }]);
  });
});

describe("graph view", () => {
  it("draws one node per visited pair and one line per edge", async () => {
    const ex = await walkedExplorer();
    const nodes = ex.nodeKeys().map((key) => ({
      key,
      label: ex.cardFor(key)!.label,
    }));
    const svg = renderGraph(nodes, ex.edges(), ex.rootKey, ex.current!.key);
    expect(svg.match(/<circle /g)).toHaveLength(4);
    expect(svg.match(/<line /g)).toHaveLength(3);
    expect(svg.match(/node current/g)).toHaveLength(1);
    for (const key of ex.nodeKeys()) {
      expect(svg).toContain(ex.cardFor(key)!.label);
    }
  });
});
