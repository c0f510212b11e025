"""Mutation of support tau-tilting pairs and exchange-graph enumeration.

Left mutation replaces a summand X not in Fac(rest) by the cokernel of its
minimal left approximation (or, when the cokernel vanishes, enlarges the
support).  Right mutation is performed by passing to the opposite algebra
through the dagger duality, left-mutating there, and coming back.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from . import modules, pairs
from .errors import (
    ExchangeAssertionFailed,
    Inconclusive,
    NotComplete,
    NotTauRigid,
    HasseMismatch,
)

log = logging.getLogger(__name__)

MAX_VERTICES = 100_000
MAX_DEPTH = 10_000


def _rest(pair, index):
    return [m for i, m in enumerate(pair.summands) if i != index]


def position_direction(pair, position):
    """'left' or 'right' for a position, without mutating.

    A module summand mutates left iff it is not in Fac of the other module
    summands; support positions always mutate right.
    """
    kind, val = position
    if kind == "support":
        return "right"
    rest = _rest(pair, val)
    x = pair.summands[val]
    if not rest:
        return "right" if x.total_dim == 0 else "left"
    u, _, _ = modules.direct_sum(pair.algebra, rest)
    return "right" if modules.in_fac(x, u) else "left"


def _left_mutate(pair, index):
    """Left mutation at module summand `index`; returns the new TauPair."""
    A = pair.algebra
    x = pair.summands[index]
    rest = _rest(pair, index)
    f, target, _copies = modules.minimal_left_approximation(x, rest)
    y, _ = modules.map_cokernel(f)
    if y.total_dim == 0:
        candidates = [
            v
            for v in range(A.n_vertices)
            if v not in pair.support and all(r.dims[v] == 0 for r in rest)
        ]
        if len(candidates) != 1:
            raise ExchangeAssertionFailed(
                f"expected a unique new support vertex, found {candidates} "
                f"(pair {pair.label()}, position {index})"
            )
        return pairs.check_pair(
            A, rest, tuple(pair.support) + (candidates[0],)
        )
    dec = modules.decompose(y)
    if len(dec) != 1:
        raise ExchangeAssertionFailed(
            f"exchange cokernel decomposes into {len(dec)} isomorphism "
            f"types (pair {pair.label()}, position {index})"
        )
    y1, mult = dec[0]
    if mult > 1:
        log.warning(
            "exchange cokernel has multiplicity %d (dims %s); proceeding "
            "with a single copy",
            mult,
            y1.dims,
        )
    return pairs.check_pair(A, rest + [y1], pair.support)


def _exchanged_position(before, after):
    """Position of `after` that does not occur among `before`'s positions."""
    seen = list(before.g_vectors())
    for pos, g in zip(after.positions(), after.g_vectors()):
        if g in seen:
            seen.remove(g)
        else:
            return pos
    raise ExchangeAssertionFailed("mutation produced an identical pair")


def mutate(pair, position, verify=True):
    """Mutate at a position; returns (new pair, direction, new position).

    `position` is ('module', summand index) or ('support', vertex index),
    or an integer indexing pair.positions().
    """
    if not pair.is_support_tau_tilting:
        raise NotComplete("only support tau-tilting pairs can be mutated")
    if isinstance(position, int):
        position = pair.positions()[position]
    direction = position_direction(pair, position)
    if direction == "left":
        result = _left_mutate(pair, position[1])
    else:
        dag, pmap = pairs.dagger(pair)
        dpos = pmap[position]
        if dpos[0] != "module":
            raise ExchangeAssertionFailed(
                "support position did not transport to a module summand"
            )
        ddir = position_direction(dag, dpos)
        if ddir != "left":
            raise ExchangeAssertionFailed(
                "transported position fails to mutate left over the "
                "opposite algebra"
            )
        mutated = _left_mutate(dag, dpos[1])
        back, _ = pairs.dagger(mutated)
        result = pairs.check_pair(
            pair.algebra, list(back.summands), back.support
        )
    new_position = _exchanged_position(pair, result)
    if verify:
        _verify_mutation(pair, position, result, new_position, direction)
    return result, direction, new_position



def _verify_mutation(pair, position, result, new_position, direction):
    if not result.is_support_tau_tilting:
        raise ExchangeAssertionFailed("mutation result is not complete")
    # all positions but the exchanged one are shared
    old = list(pair.g_vectors())
    new = list(result.g_vectors())
    for g in new:
        if g in old:
            old.remove(g)
    if len(old) != 1:
        raise ExchangeAssertionFailed(
            f"mutation changed {len(old)} positions instead of one"
        )
    # involution
    back, back_dir, _ = mutate(result, new_position, verify=False)
    if back.key() != pair.key():
        raise ExchangeAssertionFailed("re-mutation does not return the input")
    if back_dir == direction:
        raise ExchangeAssertionFailed("inverse mutation has the same direction")
    # direction agrees with the order
    lower, upper = (result, pair) if direction == "left" else (pair, result)
    if not pairs.leq(lower, upper) or pairs.leq(upper, lower):
        raise ExchangeAssertionFailed("direction disagrees with the order")


@dataclass
class ExchangeGraph:
    algebra: object
    vertices: dict  # canonical key -> TauPair
    arrows: list  # (source key, target key, source position index)
    complete: bool

    def sorted_keys(self):
        return sorted(self.vertices)

    def degree(self, key):
        return sum(1 for a in self.arrows if a[0] == key or a[1] == key)


def enumerate_pairs(algebra, max_vertices=MAX_VERTICES, max_depth=MAX_DEPTH):
    """Breadth-first search of the exchange graph by left mutations.

    Starts at (Lambda, 0); every element of the finite poset is reachable
    from the maximum along covers, so left mutations alone find everything.
    """
    root = pairs.regular_pair(algebra)
    vertices = {root.key(): root}
    arrows = []
    queue = deque([(root.key(), 0)])
    complete = True
    while queue:
        key, depth = queue.popleft()
        if depth >= max_depth:
            complete = False
            continue
        pair = vertices[key]
        for idx, pos in enumerate(pair.positions()):
            if position_direction(pair, pos) != "left":
                continue
            child, _, _ = mutate(pair, pos, verify=False)
            ckey = child.key()
            arrows.append((key, ckey, idx))
            if ckey not in vertices:
                if len(vertices) >= max_vertices:
                    complete = False
                    continue
                vertices[ckey] = child
                queue.append((ckey, depth + 1))
    arrows.sort()
    return ExchangeGraph(algebra, vertices, arrows, complete)


def verify_hasse(graph):
    """Check the enumerated arrows against the order-theoretic covers.

    Recomputes leq on all vertex pairs, asserts the arrows are exactly the
    covering relations, each vertex meets n arrows, and the graph has the
    regular pair as unique source and the zero pair as unique sink.
    """
    if not graph.complete:
        raise HasseMismatch("graph is not complete; cannot verify")
    keys = graph.sorted_keys()
    vs = graph.vertices
    n = graph.algebra.n_vertices
    below = {
        (a, b): pairs.leq(vs[a], vs[b])
        for a in keys
        for b in keys
        if a != b
    }
    covers = set()
    for a in keys:
        for b in keys:
            if a == b or not below[(a, b)]:
                continue
            if below[(b, a)]:
                raise HasseMismatch(f"distinct keys compare equal: {a}, {b}")
            if any(
                below[(a, c)] and below[(c, b)]
                for c in keys
                if c != a and c != b
            ):
                continue
            covers.add((b, a))  # arrow from larger to smaller
    arrow_set = {(a, b) for a, b, _ in graph.arrows}
    problems = []
    if arrow_set != covers:
        problems.append(
            f"arrows != covers: extra {sorted(arrow_set - covers)}, "
            f"missing {sorted(covers - arrow_set)}"
        )
    for k in keys:
        d = graph.degree(k)
        if d != n:
            problems.append(f"vertex {k} has degree {d}, expected {n}")
    sources = [k for k in keys if all(a[1] != k for a in graph.arrows)]
    sinks = [k for k in keys if all(a[0] != k for a in graph.arrows)]
    root_key = pairs.regular_pair(graph.algebra).key()
    zero_key = pairs.zero_pair(graph.algebra).key()
    if sources != [root_key]:
        problems.append(f"sources {sources} != [{root_key}]")
    if sinks != [zero_key]:
        problems.append(f"sinks {sinks} != [{zero_key}]")
    if problems:
        raise HasseMismatch("; ".join(problems))
    return {
        "vertices": len(keys),
        "arrows": len(graph.arrows),
        "covers": len(covers),
    }


def bongartz_completion(
    u, max_vertices=MAX_VERTICES, max_depth=MAX_DEPTH
):
    """Maximal support tau-tilting completion of a tau-rigid module U.

    Found by enumeration: among complete pairs with empty support whose
    summands contain every summand of U, the order-maximum is returned.
    """
    algebra = u.algebra
    partial = pairs.check_pair(algebra, [u], ())  # raises NotTauRigid
    wanted = {modules.g_vector(m) for m in partial.summands}
    graph = enumerate_pairs(algebra, max_vertices, max_depth)
    if not graph.complete:
        raise Inconclusive("enumeration limits exceeded before completion")
    candidates = [
        p
        for p in graph.vertices.values()
        if not p.support
        and wanted <= {modules.g_vector(m) for m in p.summands}
    ]
    if not candidates:
        raise Inconclusive("no completion found in the enumerated graph")
    best = candidates[0]
    for p in candidates[1:]:
        if pairs.leq(best, p):
            best = p
    for p in candidates:
        if not pairs.leq(p, best):
            raise ExchangeAssertionFailed(
                "completions of U have no maximum; order assertion failed"
            )
    if not classify_is_tau_tilting(best):
        raise ExchangeAssertionFailed("maximal completion is not tau-tilting")
    return best


def classify_is_tau_tilting(pair):
    return pairs.classify_pair(pair)["tauTilting"]
