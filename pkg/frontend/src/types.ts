// Shapes of the server payloads.  The client never computes any of these
// values itself; everything below arrives over the wire.

export interface SummandInfo {
  dims: number[];
  gvector: number[];
  label: string;
}

export type Direction = "left" | "right";

export interface PositionInfo {
  index: number;
  kind: "module" | "support";
  direction: Direction;
  label: string;
}

export interface PairSummary {
  key: string;
  label: string;
  summands: SummandInfo[];
  support: string[];
  positions: PositionInfo[];
}

export interface SessionResponse {
  sessionId: string;
  rootKey: string;
  pair: PairSummary;
}

export interface MutateResponse {
  newKey: string;
  direction: Direction;
  pair: PairSummary;
}

export interface GraphVertex {
  key: string;
  label: string;
  summands: { dims: number[]; gvector: number[] }[];
  support: string[];
}

export interface GraphArrow {
  from: string;
  to: string;
  position: number;
}

export interface GraphDoc {
  vertices: GraphVertex[];
  arrows: GraphArrow[];
  complete: boolean;
}

export interface OrderResponse {
  leq: boolean;
  geq: boolean;
}

// algebra files are opaque to the client; they go straight to the server
export type AlgebraFile = Record<string, unknown>;
