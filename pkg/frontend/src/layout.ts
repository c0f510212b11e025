import type { ExploredEdge } from "./state.js";

export interface PlacedNode {
  key: string;
  label: string;
  x: number;
  y: number;
  layer: number;
}

const LAYER_HEIGHT = 90;
const NODE_SPACING = 140;

/**
 * Order-faithful layered layout: the layer of a node is the longest chain
 * of left mutations leading to it from the root, so arrows always point
 * downward.  Cheap and stable for the few dozen nodes of a manual walk.
 */
export function layeredLayout(
  nodes: { key: string; label: string }[],
  edges: ExploredEdge[],
  rootKey: string | null
): PlacedNode[] {
  const depth = new Map<string, number>();
  for (const n of nodes) depth.set(n.key, 0);
  if (rootKey !== null && !depth.has(rootKey)) depth.set(rootKey, 0);
  // relax |V| times; the explored subgraph is acyclic (it is a sub-order)
  for (let i = 0; i < nodes.length; i++) {
    let changed = false;
    for (const e of edges) {
      const d = (depth.get(e.from) ?? 0) + 1;
      if (d > (depth.get(e.to) ?? 0)) {
        depth.set(e.to, d);
        changed = true;
      }
    }
    if (!changed) break;
  }

  const byLayer = new Map<number, { key: string; label: string }[]>();
  for (const n of nodes) {
    const layer = depth.get(n.key) ?? 0;
    const bucket = byLayer.get(layer) ?? [];
    bucket.push(n);
    byLayer.set(layer, bucket);
  }

  const placed: PlacedNode[] = [];
  for (const [layer, bucket] of byLayer) {
    bucket.sort((a, b) => (a.key < b.key ? -1 : a.key > b.key ? 1 : 0));
    bucket.forEach((n, i) => {
      placed.push({
        key: n.key,
        label: n.label,
        x: (i - (bucket.length - 1) / 2) * NODE_SPACING,
        y: layer * LAYER_HEIGHT,
        layer,
      });
    });
  }
  placed.sort((a, b) => a.layer - b.layer || (a.key < b.key ? -1 : 1));
  return placed;
}
