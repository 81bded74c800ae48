"""Residue reduction for minimizing subpartitions.

A minimizer found by the solver may leave vertices unused. This module
greedily absorbs whole chunks of the leftover structure back into parts, one
residue subtree at a time, never letting any part's normalized flow rise
above the optimal value. Finding the true minimum residue number is
NP-complete, so this is a documented heuristic, not an exact search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Subpartition, WeightedTree, as_fraction, normalized_flows


@dataclass(frozen=True)
class ResidueSubtree:
    """A connected component of residue vertices, together with the residue
    endpoints of the break edges that attach it to parts."""

    vertices: frozenset
    start_vertices: frozenset
    break_edges: tuple  # sorted (residue_vertex, part_vertex) pairs


def _part_of(tree: WeightedTree, sub: Subpartition):
    part_of = [-1] * tree.n
    for j, p in enumerate(sub.parts):
        for x in p:
            part_of[x] = j
    return part_of


def residue_subtrees(tree: WeightedTree, sub: Subpartition):
    """Connected components of the residue after all break edges (edges with
    an endpoint inside a part) are removed, each with its start vertices and
    incident break edges. Components are listed by smallest vertex."""
    part_of = _part_of(tree, sub)
    seen = [False] * tree.n
    components = []
    for seed in range(tree.n):
        if part_of[seed] >= 0 or seen[seed]:
            continue
        comp = [seed]
        seen[seed] = True
        head = 0
        while head < len(comp):
            x = comp[head]
            head += 1
            for y in tree.neighbors(x):
                if part_of[y] == -1 and not seen[y]:
                    seen[y] = True
                    comp.append(y)
        breaks = []
        for x in comp:
            for y in tree.neighbors(x):
                if part_of[y] >= 0:
                    breaks.append((x, y))
        components.append(ResidueSubtree(
            vertices=frozenset(comp),
            start_vertices=frozenset(x for x, _ in breaks),
            break_edges=tuple(sorted(breaks)),
        ))
    return components


def _edge_flow(tree: WeightedTree, x: int, y: int) -> Fraction:
    if tree.parent[x] == y:
        return tree.parent_flow[x]
    if tree.parent[y] == x:
        return tree.parent_flow[y]
    raise ValueError(f"({x}, {y}) is not a tree edge")


def _enlarged_flow(tree: WeightedTree, vertices, alpha: Fraction) -> Fraction:
    """Exact normalized flow of a vertex set, straight from the tree."""
    return normalized_flows(tree, (vertices,), alpha)[0]


def absorb_subtree(tree: WeightedTree, sub: Subpartition, part_index: int,
                   break_edge, subtree: ResidueSubtree, bound, alpha=0) -> frozenset:
    """Try to grow one part into one residue subtree through one break edge.

    The part and the start vertex are contracted into a single root whose
    weight is their combined weight and whose potential additionally carries
    the flows of their outside boundary (edges into the subtree itself are
    not boundary while the absorption is in progress). A leaves-to-root pass
    over the subtree then merges every vertex whose accumulated potential
    minus its parent-edge flow stays within ``bound`` times its accumulated
    weight; blocked children contribute their edge flow to the parent's
    potential instead.

    The merged candidate is accepted only if the enlarged part's exact
    normalized flow, recomputed from the tree, stays within ``bound``;
    otherwise the result is the empty set and nothing changes.
    """
    bound = as_fraction(bound)
    alpha = as_fraction(alpha)
    s, a = break_edge
    part = sub.parts[part_index]
    if s not in subtree.vertices or a not in part:
        raise ValueError(f"({s}, {a}) is not a break edge joining part "
                         f"{part_index} to the given subtree")
    _edge_flow(tree, s, a)  # validates adjacency
    blob = set(part) | {s}
    rest = subtree.vertices - {s}

    # Contracted root: combined weight, combined scaled potential, plus the
    # flows of boundary edges that do not lead into the remaining subtree.
    w_root = sum((tree.omega[x] for x in blob), Fraction(0))
    p_root = alpha * sum((tree.potential[x] for x in blob), Fraction(0))
    for x, u, f in tree.edge_list():
        if (x in blob) != (u in blob):
            outside = u if x in blob else x
            if outside not in rest:
                p_root += f

    if not rest:
        absorbed = frozenset({s})
    else:
        # Root the remaining subtree at s and process leaves first.
        parent = {s: None}
        bfs = [s]
        head = 0
        while head < len(bfs):
            x = bfs[head]
            head += 1
            for y in tree.neighbors(x):
                if y in subtree.vertices and y not in parent:
                    parent[y] = x
                    bfs.append(y)
        weight = {x: tree.omega[x] for x in rest}
        pot = {x: alpha * tree.potential[x] for x in rest}
        weight[s] = w_root
        pot[s] = p_root
        merged = {}
        for x in reversed(bfs):
            if x == s:
                continue
            u = parent[x]
            f = _edge_flow(tree, x, u)
            if pot[x] - f <= bound * weight[x]:
                merged[x] = True
                pot[u] += pot[x]
                weight[u] += weight[x]
            else:
                merged[x] = False
                pot[u] += f
        absorbed = set()
        for x in bfs:  # root first, so parents resolve before children
            if x == s:
                continue
            if merged[x] and (parent[x] == s or parent[x] in absorbed):
                absorbed.add(x)
        absorbed = frozenset(absorbed | {s})

    if _enlarged_flow(tree, part | absorbed, alpha) <= bound:
        return absorbed
    return frozenset()


def reduce_residue(tree: WeightedTree, sub: Subpartition, bound, alpha=0) -> Subpartition:
    """Shrink the residue of a subpartition without exceeding ``bound``.

    Sweeps the parts in decreasing normalized-flow order, trying to absorb
    each adjacent residue subtree through its smallest break edge; any
    success restarts the sweep (all failure marks are dropped), and the loop
    stops at a fixpoint where no subtree can join any part. The output never
    has more residue vertices than the input and its cost stays within
    ``bound``; parts keep inducing connected subtrees when the input's do.
    """
    bound = as_fraction(bound)
    alpha = as_fraction(alpha)
    current = Subpartition.from_parts(tree, sub.parts, alpha)
    if current.cost > bound:
        raise ValueError(f"input cost {current.cost} exceeds bound {bound}")
    while current.residue:
        subtrees = residue_subtrees(tree, current)
        order = sorted(range(current.k),
                       key=lambda j: (current.part_costs[j], -j), reverse=True)
        grown = None
        for j in order:
            part = current.parts[j]
            for st in subtrees:
                touching = [(s, a) for s, a in st.break_edges if a in part]
                if not touching:
                    continue
                absorbed = absorb_subtree(tree, current, j, touching[0], st,
                                          bound, alpha)
                if absorbed:
                    grown = (j, absorbed)
                    break
            if grown:
                break
        if not grown:
            break
        j, absorbed = grown
        parts = list(current.parts)
        parts[j] = parts[j] | absorbed
        current = Subpartition.from_parts(tree, parts, alpha)
    return current


def complete_labels(tree: WeightedTree, sub: Subpartition):
    """Assign every residue vertex the label of the nearest part along tree
    edges (hop distance), ties to the lower part index. Returns one label
    per vertex; part vertices keep their own part index."""
    if not sub.parts or all(not p for p in sub.parts):
        raise ValueError("need at least one nonempty part")
    labels = _part_of(tree, sub)
    queue = [x for j, p in enumerate(sub.parts) for x in sorted(p)]
    queue.sort(key=lambda x: (labels[x], x))
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in tree.neighbors(x):
            if labels[y] == -1:
                labels[y] = labels[x]
                queue.append(y)
    return labels
