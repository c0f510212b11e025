import { layeredLayout, type PlacedNode } from "./layout.js";
import type { ExploredEdge } from "./state.js";
import type { PairSummary } from "./types.js";

function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/**
 * Pair card markup.  Every number and label is copied verbatim from the
 * server payload — the card is a view, not a calculator.
 */
export function renderPairCard(pair: PairSummary): string {
  const summands = pair.summands
    .map(
      (s) =>
        `<li class="summand">` +
        `<span class="label">${esc(s.label)}</span>` +
        `<span class="dims">dims (${s.dims.join(", ")})</span>` +
        `<span class="gvec">g = (${s.gvector.join(", ")})</span>` +
        `</li>`
    )
    .join("");
  const support = pair.support
    .map((v) => `<span class="support-badge">e${esc(v)}</span>`)
    .join("");
  const positions = pair.positions
    .map(
      (p) =>
        `<button class="position" data-index="${p.index}">` +
        `<span class="badge ${p.direction}">${p.direction}</span> ` +
        `${esc(p.label)}</button>`
    )
    .join("");
  return (
    `<div class="pair-card" data-key="${esc(pair.key)}">` +
    `<h2>${esc(pair.label)}</h2>` +
    `<ul class="summands">${summands}</ul>` +
    `<div class="support">${support}</div>` +
    `<div class="positions">${positions}</div>` +
    `</div>`
  );
}

export function renderErrorBanner(message: string): string {
  return `<div class="error-banner">${esc(message)}</div>`;
}

/** SVG of the explored subgraph, left mutations pointing downward. */
export function renderGraph(
  nodes: { key: string; label: string }[],
  edges: ExploredEdge[],
  rootKey: string | null,
  currentKey: string | null
): string {
  const placed = layeredLayout(nodes, edges, rootKey);
  const byKey = new Map<string, PlacedNode>(placed.map((p) => [p.key, p]));
  const xs = placed.map((p) => p.x);
  const minX = Math.min(0, ...xs) - 80;
  const maxX = Math.max(0, ...xs) + 80;
  const maxY = Math.max(0, ...placed.map((p) => p.y)) + 50;

  const lines = edges
    .map((e) => {
      const a = byKey.get(e.from);
      const b = byKey.get(e.to);
      if (!a || !b) return "";
      return `<line class="edge" x1="${a.x}" y1="${a.y + 14}" x2="${b.x}" y2="${b.y - 14}" marker-end="url(#arrow)"/>`;
    })
    .join("");
  const circles = placed
    .map((p) => {
      const cls = p.key === currentKey ? "node current" : "node";
      return (
        `<g class="${cls}" data-key="${esc(p.key)}">` +
        `<circle cx="${p.x}" cy="${p.y}" r="14"/>` +
        `<text x="${p.x}" y="${p.y + 28}" text-anchor="middle">${esc(p.label)}</text>` +
        `</g>`
      );
    })
    .join("");
  return (
    `<svg class="graph-view" viewBox="${minX} -40 ${maxX - minX} ${maxY + 40}">` +
    `<defs><marker id="arrow" orient="auto" markerWidth="8" markerHeight="8" refX="6" refY="3">` +
    `<path d="M0,0 L6,3 L0,6 z"/></marker></defs>` +
    lines +
    circles +
    `</svg>`
  );
}
