"""Seeded random generators for module-composed and bipartite distance-hereditary graphs."""

from __future__ import annotations

import random

from .graph import Graph
from .modular import COJOIN, JOIN, decompose_mask


def _flatten(node, out: list) -> None:
    out.append(node)
    for child in node[2] or ():
        _flatten(child, out)


def _relabel(n: int, nbrs: list[set[int]], rng: random.Random) -> tuple[Graph, list[int]]:
    perm = list(range(n))
    rng.shuffle(perm)
    adj = [frozenset()] * n
    for v in range(n):
        adj[perm[v]] = frozenset(perm[u] for u in nbrs[v])
    return Graph(n, tuple(adj)), perm


def random_module_composed(
    n: int,
    seed: int,
    empty_probability: float = 0.05,
    union_probability: float = 0.25,
) -> tuple[Graph, tuple[int, ...]]:
    """Grow a module-composed graph and return it with its insertion order.

    Each new vertex sees either nothing, the vertex set of a uniformly chosen
    node of the current decomposition tree, or the union of a random subset of
    children of a join/co-join node.  All three are modules.  Vertex labels
    are shuffled so the insertion order is not simply ``0..n-1``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    masks = [0]
    for v in range(1, n):
        tree = decompose_mask(masks, (1 << v) - 1)
        nodes: list = []
        _flatten(tree, nodes)
        r = rng.random()
        degenerate = [node for node in nodes if node[0] in (JOIN, COJOIN)]
        if r < empty_probability:
            seen = 0
        elif r < empty_probability + union_probability and degenerate:
            _, _, children = rng.choice(degenerate)
            k = rng.randint(1, len(children))
            seen = 0
            for child in rng.sample(children, k):
                seen |= child[1]
        else:
            seen = rng.choice(nodes)[1]
        masks.append(seen)
        bit = 1 << v
        x = seen
        while x:
            low = x & -x
            masks[low.bit_length() - 1] |= bit
            x ^= low
    nbrs = [set() for _ in range(n)]
    for v, m in enumerate(masks):
        u = 0
        while m:
            if m & 1:
                nbrs[v].add(u)
            m >>= 1
            u += 1
    g, perm = _relabel(n, nbrs, rng)
    return g, tuple(perm[v] for v in range(n))


def random_bipartite_dh(n: int, seed: int, twin_probability: float = 0.5) -> Graph:
    """Grow a bipartite distance-hereditary graph from K1.

    Each step adds a pendant vertex on a random existing vertex or, with
    ``twin_probability``, a false twin (same neighbourhood, non-adjacent).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    nbrs: list[set[int]] = [set()]
    for v in range(1, n):
        x = rng.randrange(v)
        if v > 1 and rng.random() < twin_probability:
            nbrs.append(set(nbrs[x]))
            for u in nbrs[x]:
                nbrs[u].add(v)
        else:
            nbrs.append({x})
            nbrs[x].add(v)
    g, _ = _relabel(n, nbrs, rng)
    return g
