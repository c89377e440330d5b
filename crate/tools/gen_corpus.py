#!/usr/bin/env python3
"""Regenerate the graph6 corpus fixtures under corpus/.

connected_nN.g6  -- every connected graph on N vertices (2 <= N <= 7), one per
                    isomorphism class, taken from the networkx graph atlas.
cubic_le10.g6    -- every connected cubic graph on 4, 6, 8 or 10 vertices.
"""
import itertools
import os
import sys

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "corpus")


def g6(g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def connected_by_order():
    by_n = {}
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n >= 2 and nx.is_connected(g):
            by_n.setdefault(n, []).append(g)
    return by_n


def cubic_graphs(n):
    """Connected simple cubic graphs on n vertices.

    Cubic multigraphs (loops allowed) are grown from the two connected ones on
    two vertices by edge insertion: subdivide two edges, possibly the same one
    twice, and join the two new vertices. Each order is deduplicated up to
    isomorphism and the simple graphs are kept at the end."""
    level = [nx.MultiGraph([(0, 1)] * 3), nx.MultiGraph([(0, 0), (0, 1), (1, 1)])]
    for m in range(4, n + 1, 2):
        nxt, buckets = [], {}
        x, y = m - 2, m - 1
        for g in level:
            edges = list(g.edges(keys=True))
            for i, j in itertools.combinations_with_replacement(range(len(edges)), 2):
                h = g.copy()
                (a, b, k1), (c, d, k2) = edges[i], edges[j]
                if i == j:
                    h.remove_edge(a, b, k1)
                    h.add_edges_from([(a, x), (x, y), (y, b), (x, y)])
                else:
                    h.remove_edge(a, b, k1)
                    h.remove_edge(c, d, k2)
                    h.add_edges_from([(a, x), (x, b), (c, y), (y, d), (x, y)])
                key = nx.weisfeiler_lehman_graph_hash(nx.Graph(h), iterations=4) + str(sorted(
                    h.number_of_edges(u, v) for u, v in set(h.edges())))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, k) for k in bucket):
                    continue
                bucket.append(h)
                nxt.append(h)
        level = nxt
    return [nx.Graph(g) for g in level if all(u != v and g.number_of_edges(u, v) == 1 for u, v in g.edges())]


def main():
    os.makedirs(OUT, exist_ok=True)
    for n, graphs in sorted(connected_by_order().items()):
        path = os.path.join(OUT, f"connected_n{n}.g6")
        with open(path, "w") as fh:
            for g in graphs:
                fh.write(g6(g) + "\n")
        print(f"{path}: {len(graphs)}", file=sys.stderr)
    path = os.path.join(OUT, "cubic_le10.g6")
    with open(path, "w") as fh:
        total = 0
        for n in (4, 6, 8, 10):
            graphs = cubic_graphs(n)
            total += len(graphs)
            print(f"cubic n={n}: {len(graphs)}", file=sys.stderr)
            for g in graphs:
                fh.write(g6(g) + "\n")
    print(f"{path}: {total}", file=sys.stderr)


if __name__ == "__main__":
    main()
