"""Brute-force ground truth for small trees.

Enumerates every k-subpartition directly: each vertex is assigned to the
residue or to one of k parts, with part labels in first-use order so that
permutations of the same family are counted once. No pruning beyond the
feasibility of finishing with k nonempty parts; the point is to be obviously
correct, not fast.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .core import Subpartition, WeightedTree, as_fraction

MAX_ORACLE_N = 13
MAX_OUTLIER_N = 8


def _scaled(tree: WeightedTree, alpha: Fraction):
    dens = [q.denominator for q in tree.omega]
    dens += [q.denominator for q in tree.potential]
    dens += [q.denominator for q in tree.parent_flow if q is not None]
    scale = reduce(math.lcm, dens, 1)
    weight = [int(w * scale) for w in tree.omega]
    pot = [int(p * scale) for p in tree.potential]
    flow = [0 if f is None else int(f * scale) for f in tree.parent_flow]
    return weight, pot, flow, alpha.numerator, alpha.denominator


def _scan(tree: WeightedTree, k: int, alpha, collect: bool, guard: int):
    """Exhaustive scan of all k-subpartitions.

    Returns (numerator, denominator, achievers, min_residue, support) where
    numerator/denominator is the exact minimum cost, achievers is the list
    of minimizing assignment tuples when ``collect`` (entry -1 = residue),
    min_residue the smallest residue count among minimizers, and support the
    set of vertices appearing in at least one minimizer.
    """
    n = tree.n
    if n > guard:
        raise ValueError(f"enumeration guard: n={n} exceeds {guard}")
    if not (2 <= k <= n):
        raise ValueError(f"k must be between 2 and {n}, got {k}")
    alpha = as_fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    weight, pot, flow, s, r = _scaled(tree, alpha)
    # Edges closed once both endpoints are assigned: keyed by the larger index.
    prior = [[] for _ in range(n)]
    for x, u, _f in tree.edge_list():
        hi, lo = (x, u) if x > u else (u, x)
        prior[hi].append((lo, flow[x]))

    assign = [-2] * n
    wsum = [0] * k
    psum = [0] * k
    bsum = [0] * k

    best_num, best_den = None, None
    achievers = []
    min_residue = None
    support = set()

    def record(res_cnt):
        nonlocal best_num, best_den, min_residue
        num, den = 0, 1
        for j in range(k):
            nj = r * bsum[j] + s * psum[j]
            dj = r * wsum[j]
            if nj * den > num * dj:
                num, den = nj, dj
        if best_num is not None:
            diff = num * best_den - best_num * den
            if diff > 0:
                return
            if diff < 0:
                achievers.clear()
                support.clear()
                min_residue = None
        best_num, best_den = num, den
        if collect:
            achievers.append(tuple(assign))
        if min_residue is None or res_cnt < min_residue:
            min_residue = res_cnt
        support.update(x for x in range(n) if assign[x] >= 0)

    def rec(v, opened, res_cnt):
        if opened + (n - v) < k:
            return  # cannot open k parts with the vertices left
        if v == n:
            if opened == k:
                record(res_cnt)
            return
        edges = prior[v]
        # residue
        assign[v] = -1
        for u, f in edges:
            ju = assign[u]
            if ju >= 0:
                bsum[ju] += f
        rec(v + 1, opened, res_cnt + 1)
        for u, f in edges:
            ju = assign[u]
            if ju >= 0:
                bsum[ju] -= f
        # existing parts, plus one fresh part while fewer than k are open
        top = opened if opened < k else k - 1
        for c in range(top + 1):
            assign[v] = c
            wsum[c] += weight[v]
            psum[c] += pot[v]
            for u, f in edges:
                ju = assign[u]
                if ju != c:
                    bsum[c] += f
                    if ju >= 0:
                        bsum[ju] += f
            rec(v + 1, opened + (1 if c == opened else 0), res_cnt)
            for u, f in edges:
                ju = assign[u]
                if ju != c:
                    bsum[c] -= f
                    if ju >= 0:
                        bsum[ju] -= f
            wsum[c] -= weight[v]
            psum[c] -= pot[v]
        assign[v] = -2

    rec(0, 0, 0)
    return best_num, best_den, achievers, min_residue, support


def _to_subpartition(tree, assignment, k, alpha):
    parts = [[] for _ in range(k)]
    for x, j in enumerate(assignment):
        if j >= 0:
            parts[j].append(x)
    return Subpartition.from_parts(tree, parts, alpha)


def brute_force_isoperimetry(tree: WeightedTree, k: int, alpha=0):
    """Exact minimum cost over all k-subpartitions, by enumeration, together
    with every minimizing subpartition (parts ordered by smallest member)."""
    num, den, achievers, _res, _sup = _scan(tree, k, alpha, True, MAX_ORACLE_N)
    alpha = as_fraction(alpha)
    subs = [_to_subpartition(tree, a, k, alpha) for a in achievers]
    return Fraction(num, den), subs


def brute_force_min_residue(tree: WeightedTree, k: int, alpha=0) -> int:
    """Smallest residue number over all minimizing k-subpartitions."""
    _num, _den, _ach, min_residue, _sup = _scan(tree, k, alpha, False, MAX_ORACLE_N)
    return min_residue


def brute_force_outliers(tree: WeightedTree, k: int, alpha, beta_grid) -> frozenset:
    """Vertices that intersect no minimizer at any grid scale >= alpha.

    Exact per grid point: at each beta the union of all minimizers' supports
    is computed by full enumeration; a vertex is reported exactly when it
    avoids every one of those unions.
    """
    if tree.n > MAX_OUTLIER_N:
        raise ValueError(f"enumeration guard: n={tree.n} exceeds {MAX_OUTLIER_N}")
    alpha = as_fraction(alpha)
    betas = sorted({as_fraction(b) for b in beta_grid if as_fraction(b) >= alpha})
    betas = [alpha] + [b for b in betas if b != alpha]
    covered = set()
    for beta in betas:
        _n, _d, _a, _r, support = _scan(tree, k, beta, False, MAX_OUTLIER_N)
        covered |= support
    return frozenset(range(tree.n)) - covered
