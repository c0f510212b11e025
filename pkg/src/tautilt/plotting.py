"""Hasse-diagram figures for exchange graphs (matplotlib, file output)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from . import fileio


def _layers(graph):
    """Longest-path depth from the unique source, per vertex key."""
    keys = graph.sorted_keys()
    depth = {k: 0 for k in keys}
    order = list(keys)
    # relax edges |V| times: the graph is acyclic (it is a Hasse diagram)
    for _ in range(len(keys)):
        changed = False
        for a, b, _ in graph.arrows:
            if depth[b] < depth[a] + 1:
                depth[b] = depth[a] + 1
                changed = True
        if not changed:
            break
    return depth


def render_hasse(graph, path, figsize=None):
    """Draw the exchange graph layered by poset depth and save to a file."""
    depth = _layers(graph)
    g = nx.DiGraph()
    labels = {}
    for key in graph.sorted_keys():
        ks = fileio.key_to_str(key)
        g.add_node(ks)
        labels[ks] = graph.vertices[key].label()
    for a, b, _ in graph.arrows:
        g.add_edge(fileio.key_to_str(a), fileio.key_to_str(b))
    # positions: x spreads the vertices within a layer, y is minus the depth
    by_layer = {}
    for key in graph.sorted_keys():
        by_layer.setdefault(depth[key], []).append(fileio.key_to_str(key))
    pos = {}
    for layer, nodes in by_layer.items():
        for i, node in enumerate(sorted(nodes)):
            pos[node] = (i - (len(nodes) - 1) / 2.0, -layer)
    nlayers = max(by_layer) + 1 if by_layer else 1
    width = max(len(v) for v in by_layer.values()) if by_layer else 1
    if figsize is None:
        figsize = (max(4, 2.2 * width), max(3, 1.6 * nlayers))
    fig, ax = plt.subplots(figsize=figsize)
    nx.draw_networkx_edges(g, pos, ax=ax, arrows=True, edge_color="gray")
    nx.draw_networkx_nodes(
        g, pos, ax=ax, node_color="#dce6f5", node_size=1600,
        edgecolors="#43618c",
    )
    nx.draw_networkx_labels(g, pos, labels=labels, ax=ax, font_size=8)
    ax.set_axis_off()
    title = "exchange graph" + ("" if graph.complete else " (partial)")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
