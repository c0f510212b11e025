export { ApiClient, ServerError } from "./api.js";
export type { FetchLike } from "./api.js";
export { Explorer } from "./state.js";
export type { ExploredEdge } from "./state.js";
export { layeredLayout } from "./layout.js";
export type { PlacedNode } from "./layout.js";
export { renderErrorBanner, renderGraph, renderPairCard } from "./render.js";
export type {
  AlgebraFile,
  Direction,
  GraphArrow,
  GraphDoc,
  GraphVertex,
  MutateResponse,
  OrderResponse,
  PairSummary,
  PositionInfo,
  SessionResponse,
  SummandInfo,
} from "./types.js";
