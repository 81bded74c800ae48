"""Minimum spanning tree over metric distances, and rooted-tree assembly."""

from __future__ import annotations

from .core import AffinityGraph, WeightedTree


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def minimum_spanning_tree(graph: AffinityGraph) -> list:
    """Edges of the MST of the graph under its *distance* weights.

    Kruskal with edges sorted by (distance, u, v): equal-distance ties
    resolve toward the lexicographically smallest edge, so the result is
    deterministic. Raises on a disconnected graph, naming the components.
    """
    uf = _UnionFind(graph.n)
    chosen = []
    for e in sorted(graph.edges, key=lambda e: (e.distance, e.u, e.v)):
        if uf.union(e.u, e.v):
            chosen.append(e)
            if len(chosen) == graph.n - 1:
                break
    if len(chosen) != graph.n - 1:
        comps = {}
        for x in range(graph.n):
            comps.setdefault(uf.find(x), []).append(x)
        parts = "; ".join(str(sorted(c)) for c in comps.values())
        raise ValueError(f"graph is disconnected, components: {parts}")
    return chosen


def default_root(graph: AffinityGraph) -> int:
    """Vertex of maximum weight (a central point); ties to the lower index."""
    best = 0
    for x in range(1, graph.n):
        if graph.omega[x] > graph.omega[best]:
            best = x
    return best


def build_weighted_tree(mst_edges, graph: AffinityGraph, root=None) -> WeightedTree:
    """Root the MST and attach the graph's exact weights.

    Flows are restricted to the tree edges; vertex weights and potentials
    are inherited unchanged from the affinity graph. The processing order is
    the reverse of a BFS from the root.
    """
    if root is None:
        root = default_root(graph)
    return WeightedTree.from_edges(
        n=graph.n,
        edges=[(e.u, e.v, e.flow) for e in mst_edges],
        omega=graph.omega,
        potential=graph.potential,
        root=root,
    )
