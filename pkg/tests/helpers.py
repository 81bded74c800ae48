"""Shared fixtures and generators for the test suite."""

from fractions import Fraction

from treeiso import WeightedTree


def path_tree(n=4, root=None, omega=None, potential=None, flows=None):
    """Path 0-1-...-(n-1) with unit weights unless overridden."""
    if root is None:
        root = n - 1
    omega = [Fraction(w) for w in (omega or [1] * n)]
    potential = [Fraction(p) for p in (potential or [0] * n)]
    flows = [Fraction(f) for f in (flows or [1] * (n - 1))]
    edges = [(i, i + 1, flows[i]) for i in range(n - 1)]
    return WeightedTree.from_edges(n, edges, omega, potential, root=root)


def p3_tree(root=0):
    """Path a-b-c with unit weights and flows, potentials (0, 0, 10)."""
    return path_tree(3, root=root, potential=[0, 0, 10])


def star_tree(root=0):
    """The 13-vertex star: center weight 1; spokes 18, 18, 19, 1 and eight
    14s; unit flows; zero potentials. Vertex 0 is the center, 1..3 the heavy
    spokes, 4 the light spoke, 5..12 the medium spokes."""
    w = [1, 18, 18, 19, 1] + [14] * 8
    edges = [(0, i, Fraction(1)) for i in range(1, 13)]
    return WeightedTree.from_edges(
        13, edges, [Fraction(x) for x in w], [Fraction(0)] * 13, root=root)


def random_tree(rng, n, wmax=16, fmax=16, pmax=8, root=None):
    """Random recursive tree with integer weights."""
    edges = [(rng.randrange(i), i, Fraction(rng.randint(1, fmax)))
             for i in range(1, n)]
    omega = [Fraction(rng.randint(1, wmax)) for _ in range(n)]
    potential = [Fraction(rng.randint(0, pmax)) for _ in range(n)]
    if root is None:
        root = rng.randrange(n)
    return WeightedTree.from_edges(n, edges, omega, potential, root=root)


def part_is_connected(tree, part):
    """Whether a vertex set induces a connected subtree."""
    part = set(part)
    if not part:
        return False
    seed = next(iter(part))
    seen = {seed}
    stack = [seed]
    while stack:
        x = stack.pop()
        for y in tree.neighbors(x):
            if y in part and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == part
