"""Bipartite distance-hereditary graphs: BFS level test, independent module-sequences, Lex-BFS.

These routines run on adjacency sets only (no bitsets), so they stay linear
and handle graphs with hundreds of thousands of vertices.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class BfsLevels:
    start: int
    levels: tuple[frozenset[int], ...]
    level_of: dict[int, int]

    def __len__(self) -> int:
        return len(self.levels)


def is_bipartite(g: Graph) -> tuple[int, ...] | None:
    """A proper 2-colouring as a tuple of 0/1 per vertex, or None."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return tuple(color)


def bfs_levels(g: Graph, u: int) -> BfsLevels:
    """Distance levels N_0(u), N_1(u), ... of the component containing ``u``."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    level_of = {u: 0}
    layers = [[u]]
    while True:
        nxt = []
        k = len(layers)
        for v in layers[-1]:
            for w in g.adj[v]:
                if w not in level_of:
                    level_of[w] = k
                    nxt.append(w)
        if not nxt:
            break
        layers.append(nxt)
    return BfsLevels(u, tuple(frozenset(layer) for layer in layers), level_of)


def _bdh_component(g: Graph, u: int) -> list[int] | None:
    """Level test from ``u``; on success the independent module-sequence of u's component."""
    levels = bfs_levels(g, u)
    level_of = levels.level_of
    adj = g.adj
    up: dict[int, frozenset[int]] = {}
    for k, layer in enumerate(levels.levels):
        for v in layer:
            ups = []
            for w in adj[v]:
                lw = level_of[w]
                if lw == k:
                    return None  # edge inside a level
                if lw == k - 1:
                    ups.append(w)
            up[v] = frozenset(ups)

    # N(x) ∩ N_{k-2} must agree across the upper neighbours x of each vertex
    interned: dict[frozenset[int], int] = {}
    up_id = {v: interned.setdefault(s, len(interned)) for v, s in up.items()}
    for layer in levels.levels[2:]:
        for v in layer:
            it = iter(up[v])
            first = up_id[next(it)]
            for x in it:
                if up_id[x] != first:
                    return None

    order = [u] + sorted(levels.levels[1]) if len(levels) > 1 else [u]
    for layer in levels.levels[2:]:
        # upper neighbourhoods within a level must be pairwise nested or disjoint;
        # scanning by decreasing size, each set must lie inside one earlier set or none
        ranked = sorted(layer, key=lambda v: (-len(up[v]), v))
        holder: dict[int, int] = {}
        for v in ranked:
            owners = {holder.get(x, -1) for x in up[v]}
            if len(owners) > 1:
                return None
            for x in up[v]:
                holder[x] = v
        order.extend(ranked)
    return order


def _component_starts(g: Graph, start: int | None) -> list[int]:
    seen = [False] * g.n
    starts = []
    candidates = ([start] if start is not None else []) + list(range(g.n))
    for s in candidates:
        if seen[s]:
            continue
        starts.append(s)
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return starts


def independent_module_sequence(g: Graph, start: int | None = None) -> tuple[int, ...] | None:
    """Insertion order in which every vertex sees an independent module, or None.

    Built per component from the BFS levels: levels 0 and 1 in BFS order, deeper
    levels sorted so larger upper neighbourhoods come first.  ``start`` picks the
    BFS root of its own component; other components start at their least vertex.
    """
    if start is not None and not 0 <= start < g.n:
        raise ValueError(f"vertex {start} out of range")
    order: list[int] = []
    for s in _component_starts(g, start):
        part = _bdh_component(g, s)
        if part is None:
            return None
        order.extend(part)
    return tuple(order)


def check_bdh(g: Graph, start: int | None = None) -> bool:
    """True iff ``g`` is bipartite and distance hereditary."""
    return independent_module_sequence(g, start) is not None


class _Cell:
    __slots__ = ("members", "prev", "next", "stamp", "split")

    def __init__(self):
        self.members: set[int] = set()
        self.prev: _Cell | None = None
        self.next: _Cell | None = None
        self.stamp = -1
        self.split: _Cell | None = None


def lex_bfs(g: Graph, start: int = 0, rng: random.Random | None = None) -> tuple[int, ...]:
    """Lexicographic BFS visit order from ``start``.

    Ties are broken by smallest vertex index, or uniformly at random when an
    ``rng`` is given.  Disconnected graphs continue with the next unvisited
    vertex chosen by the same rule.
    """
    if not 0 <= start < g.n:
        raise ValueError(f"vertex {start} out of range")
    head = _Cell()
    head.members = set(range(g.n))
    cell_of = [head] * g.n
    visited = [False] * g.n
    order: list[int] = []
    for step in range(g.n):
        while not head.members:
            head = head.next
            head.prev = None
        if step == 0:
            v = start
        elif rng is None:
            v = min(head.members)
        else:
            v = rng.choice(sorted(head.members))
        head.members.discard(v)
        visited[v] = True
        order.append(v)
        # pull each unvisited neighbour into a fresh cell just ahead of its old one
        for w in g.adj[v]:
            if visited[w]:
                continue
            old = cell_of[w]
            if old.stamp != step:
                old.stamp = step
                fresh = _Cell()
                fresh.next = old
                fresh.prev = old.prev
                if old.prev is not None:
                    old.prev.next = fresh
                else:
                    head = fresh
                old.prev = fresh
                old.split = fresh
            old.members.discard(w)
            old.split.members.add(w)
            cell_of[w] = old.split
    return tuple(order)
