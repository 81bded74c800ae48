"""Exact minimum-isoperimetry engine for weighted trees.

The decision procedure runs one leaves-to-root pass over the tree. Each
vertex carries an accumulated weight W and an accumulated potential P (its
own scaled potential plus contributions pushed up by its children); with f
the flow on its parent edge (0 at the root), the vertex either

* cuts its accumulated set off as a new part     if P + f <= N * W,
* merges its accumulated set into the parent     if P - f <  N * W,
* abandons its accumulated set to the residue    otherwise,

and in the cut and abandon branches the parent's potential absorbs f. The
answer is YES exactly when k parts are cut by the end of the pass.

The optimal value is then found by bisection: all attainable costs are
rationals on a fixed denominator lattice, so once the bracket is narrower
than the lattice separation the certified cost *is* the optimum. All
comparisons are integer arithmetic on pre-scaled weights; nothing is ever
rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .core import Quantity, Subpartition, WeightedTree, as_fraction

_UNPROCESSED, _MERGED, _ABANDONED = 0, 1, 2
_CUT_BASE = 3


@dataclass(frozen=True)
class SearchBounds:
    """Bisection bracket [lower, upper] and the number of halvings after
    which the bracket is narrower than the minimum gap between distinct
    attainable cost values."""

    lower: Quantity
    upper: Quantity
    rounds: int


class _ScaledTree:
    """Tree quantities rescaled to plain integers for the hot loop.

    With alpha = s/r in lowest terms, L1 the lcm of all flow and potential
    denominators and L2 the lcm of all weight denominators:

      weight[x]    = omega(x) * L2
      potential[x] = s * p(x) * L1          (the alpha-scaled potential)
      flow[x]      = r * phi(x, parent) * L1, 0 at the root

    so the exact test  P + f <= N * W  with N = nN/dN becomes the integer
    test  (P + f) * dN * L2 <= nN * r * L1 * W.
    """

    def __init__(self, tree: WeightedTree, alpha: Fraction):
        r, s = alpha.denominator, alpha.numerator
        dens1 = [q.denominator for q in tree.parent_flow if q is not None]
        if s != 0:
            # zero alpha wipes the potentials out of the cost lattice
            dens1 += [q.denominator for q in tree.potential]
        dens2 = [q.denominator for q in tree.omega]
        L1 = reduce(math.lcm, dens1, 1)
        L2 = reduce(math.lcm, dens2, 1)
        self.r, self.s, self.L1, self.L2 = r, s, L1, L2
        self.weight = [int(w * L2) for w in tree.omega]
        self.potential = [int(p * L1) * s for p in tree.potential]
        self.flow = [0 if f is None else int(f * L1) * r for f in tree.parent_flow]


def _check_k(tree: WeightedTree, k: int):
    if not (2 <= k <= tree.n):
        raise ValueError(f"k must be between 2 and {tree.n}, got {k}")


def _decide(tree: WeightedTree, k: int, num: int, den: int,
            scaled: _ScaledTree, stats=None):
    """One decision pass at threshold num/den. Returns the list of parts
    (vertex lists, discovery order) or None."""
    a = den * scaled.L2
    b = num * scaled.r * scaled.L1
    weight = list(scaled.weight)
    potential = list(scaled.potential)
    flow = scaled.flow
    parent = tree.parent
    status = [_UNPROCESSED] * tree.n
    found = 0
    visited = 0
    for x in tree.order:
        visited += 1
        f = flow[x]
        p = potential[x]
        rhs = weight[x] * b
        u = parent[x]
        if (p + f) * a <= rhs:
            status[x] = _CUT_BASE + found
            found += 1
            if u >= 0:
                potential[u] += f
            if found == k:
                break
        elif (p - f) * a < rhs:
            status[x] = _MERGED
            potential[u] += p
            weight[u] += weight[x]
        else:
            status[x] = _ABANDONED
            if u >= 0:
                potential[u] += f
    if stats is not None:
        stats["visited"] = visited
    if found < k:
        return None
    # Each merged vertex shares the fate of its parent's accumulated set;
    # resolve fates root-down so parents are settled first.
    group = [-1] * tree.n
    for x in reversed(tree.order):
        st = status[x]
        if st >= _CUT_BASE:
            group[x] = st - _CUT_BASE
        elif st == _MERGED:
            group[x] = group[parent[x]]
    parts = [[] for _ in range(k)]
    for x in range(tree.n):
        if group[x] >= 0:
            parts[group[x]].append(x)
    return parts


def find_subpartition(tree: WeightedTree, k: int, bound, alpha=0,
                      stats=None):
    """Decide whether some k-subpartition has cost at most ``bound``.

    Returns a certifying Subpartition (each part inducing a connected
    subtree, exact cost <= bound) or None if no such subpartition exists.
    Potentials are scaled by ``alpha``. Runs in one pass over the vertices;
    if ``stats`` is a dict, the number of visited vertices is recorded.
    """
    _check_k(tree, k)
    bound = as_fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    alpha = _check_alpha(alpha)
    scaled = _ScaledTree(tree, alpha)
    parts = _decide(tree, k, bound.numerator, bound.denominator, scaled, stats)
    if parts is None:
        return None
    return Subpartition.from_parts(tree, parts, alpha)


def _check_alpha(alpha) -> Fraction:
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    return alpha


def search_bounds(tree: WeightedTree, alpha=0) -> SearchBounds:
    """Bracket containing every attainable cost value, and the halving count
    that shrinks it below the minimum separation of distinct values.

    Every nonempty proper vertex set has normalized flow within
    [(min flow + min scaled potential) / total weight,
     (total flow + total scaled potential) / min weight].  Distinct values
    are rationals whose denominators are bounded once weights are rescaled
    to integers, which yields the separation used to size the round count.
    """
    if tree.n < 2:
        raise ValueError("bounds need a tree with at least one edge")
    alpha = _check_alpha(alpha)
    flows = [f for f in tree.parent_flow if f is not None]
    pots = [alpha * p for p in tree.potential]
    w_total = sum(tree.omega)
    w_min = min(tree.omega)
    lower = (min(flows) + min(pots)) / w_total
    upper = (sum(flows) + sum(pots)) / w_min
    scaled = _ScaledTree(tree, alpha)
    w_star = int(w_total * scaled.L2)
    # Distinct costs differ by at least L2 / (r * L1 * w_star**2).
    gap_inverse = Fraction(scaled.r * scaled.L1 * w_star * w_star, scaled.L2)
    span = (upper - lower) * gap_inverse
    if span <= 0:
        rounds = 1
    else:
        need = 2 * span  # smallest power of two >= need suffices strictly
        c = -(-need.numerator // need.denominator)
        rounds = max(1, (c - 1).bit_length())
    return SearchBounds(lower=lower, upper=upper, rounds=rounds)


def isoperimetric_number(tree: WeightedTree, k: int, alpha=0):
    """Exact minimum cost over all k-subpartitions, with a minimizer.

    Bisects the search_bounds bracket, one decision pass per round, keeping
    the most recent certificate; after the final round the bracket is too
    narrow to contain two distinct attainable values, so the certificate's
    exact cost is the optimum. Returns (value, Subpartition).
    """
    _check_k(tree, k)
    alpha = _check_alpha(alpha)
    bounds = search_bounds(tree, alpha)
    scaled = _ScaledTree(tree, alpha)
    lo, hi = bounds.lower, bounds.upper
    best = None
    for _ in range(bounds.rounds):
        mid = (lo + hi) / 2
        parts = _decide(tree, k, mid.numerator, mid.denominator, scaled)
        if parts is not None:
            hi = mid
            best = parts
        else:
            lo = mid
    if best is None:
        # Never said YES below the upper bound; the upper bound itself always
        # admits a certificate (any k-subpartition costs at most it).
        best = _decide(tree, k, hi.numerator, hi.denominator, scaled)
    sub = Subpartition.from_parts(tree, best, alpha)
    return sub.cost, sub


def isoperimetric_functional(tree: WeightedTree, functions, alpha=0) -> Quantity:
    """Evaluate the L1 isoperimetric functional over a family of pairwise
    weight-orthogonal, nonnegative, not-identically-zero vertex functions:

        max_i  (sum_{xy in E} phi(xy) |f_i(x) - f_i(y)|
                + alpha * sum_x p(x) |f_i(x)|)
               / sum_x omega(x) |f_i(x)|

    Function values must be exact numbers (ints or Fractions) so the result
    is exact; indicator functions of a subpartition reproduce its cost.
    """
    alpha = _check_alpha(alpha)
    fams = [[as_fraction(v) for v in f] for f in functions]
    if not fams:
        raise ValueError("need at least one function")
    for i, f in enumerate(fams):
        if len(f) != tree.n:
            raise ValueError(f"function {i} has {len(f)} values, tree has {tree.n}")
        if any(v < 0 for v in f):
            raise ValueError(f"function {i} takes a negative value")
        if all(v == 0 for v in f):
            raise ValueError(f"function {i} is identically zero")
    for i in range(len(fams)):
        for j in range(i + 1, len(fams)):
            inner = sum(w * fi * fj
                        for w, fi, fj in zip(tree.omega, fams[i], fams[j]))
            if inner != 0:
                raise ValueError(f"functions {i} and {j} are not orthogonal")
    best = None
    for f in fams:
        edge_term = sum(flow * abs(f[x] - f[u])
                        for x, u, flow in tree.edge_list())
        pot_term = alpha * sum(p * v for p, v in zip(tree.potential, f))
        mass = sum(w * v for w, v in zip(tree.omega, f))
        value = (edge_term + pot_term) / mass
        if best is None or value > best:
            best = value
    return best
