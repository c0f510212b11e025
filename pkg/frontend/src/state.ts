import { ApiClient } from "./api.js";
import type {
  AlgebraFile,
  GraphDoc,
  OrderResponse,
  PairSummary,
} from "./types.js";

export interface ExploredEdge {
  from: string; // larger pair (left mutations point downward)
  to: string;
  position: number;
}

/**
 * Client-side session state: the current pair card plus the subgraph
 * walked so far.  Pair summaries are cached by key so that clicking a
 * previously visited node never re-contacts the server, and only one
 * mutation request may be in flight at a time.
 */
export class Explorer {
  private client: ApiClient;
  private sessionId: string | null = null;
  rootKey: string | null = null;
  current: PairSummary | null = null;
  private cards = new Map<string, PairSummary>();
  private edgeSet = new Map<string, ExploredEdge>();
  private busy = false;

  constructor(client: ApiClient) {
    this.client = client;
  }

  get inFlight(): boolean {
    return this.busy;
  }

  nodeKeys(): string[] {
    return [...this.cards.keys()];
  }

  edges(): ExploredEdge[] {
    return [...this.edgeSet.values()];
  }

  cardFor(key: string): PairSummary | undefined {
    return this.cards.get(key);
  }

  async loadSession(algebra: AlgebraFile): Promise<PairSummary> {
    const res = await this.client.newSession(algebra);
    this.sessionId = res.sessionId;
    this.rootKey = res.rootKey;
    this.cards.clear();
    this.edgeSet.clear();
    this.cards.set(res.rootKey, res.pair);
    this.current = res.pair;
    return res.pair;
  }

  private requireSession(): string {
    if (this.sessionId === null || this.current === null) {
      throw new Error("no active session");
    }
    return this.sessionId;
  }

  /** Mutate the current pair at one of its positions. */
  async mutateAt(position: number): Promise<PairSummary> {
    const sid = this.requireSession();
    if (this.busy) {
      throw new Error("a mutation is already in flight");
    }
    const fromKey = this.current!.key;
    this.busy = true;
    try {
      const res = await this.client.mutate(sid, fromKey, position);
      this.cards.set(res.newKey, res.pair);
      // edges always point from the larger pair to the smaller one
      const edge: ExploredEdge =
        res.direction === "left"
          ? { from: fromKey, to: res.newKey, position }
          : { from: res.newKey, to: fromKey, position };
      this.edgeSet.set(`${edge.from}>${edge.to}`, edge);
      this.current = res.pair;
      return res.pair;
    } finally {
      this.busy = false;
    }
  }

  /** Back-navigation: jump to any visited node (served from the cache). */
  async goTo(key: string): Promise<PairSummary> {
    const cached = this.cards.get(key);
    if (cached) {
      this.current = cached;
      return cached;
    }
    const sid = this.requireSession();
    const pair = await this.client.getPair(sid, key);
    this.cards.set(key, pair);
    this.current = pair;
    return pair;
  }

  /** The server's view of the explored subgraph. */
  fetchGraph(): Promise<GraphDoc> {
    return this.client.getGraph(this.requireSession());
  }

  compare(a: string, b: string): Promise<OrderResponse> {
    return this.client.getOrder(this.requireSession(), a, b);
  }
}
