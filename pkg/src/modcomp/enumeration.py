"""Streams of labeled graphs as adjacency-bitmask lists.

Graphs are encoded internally by an edge code: bit ``p`` set iff the ``p``-th
vertex pair (in ``combinations(range(n), 2)`` order) is an edge.  All counts
are labeled counts; nothing is reduced up to isomorphism.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator


@lru_cache(maxsize=None)
def pair_table(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(pair_table(n))}


def code_to_masks(code: int, n: int) -> list[int]:
    pairs = pair_table(n)
    masks = [0] * n
    while code:
        low = code & -code
        i, j = pairs[low.bit_length() - 1]
        masks[i] |= 1 << j
        masks[j] |= 1 << i
        code ^= low
    return masks


def masks_to_code(masks: list[int]) -> int:
    index = _pair_index(len(masks))
    code = 0
    for i, m in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if m >> j & 1:
                code |= 1 << index[(i, j)]
    return code


def all_graphs(n: int) -> Iterator[list[int]]:
    """Every labeled graph on ``n`` vertices (2^(n choose 2) of them)."""
    for code in range(1 << (n * (n - 1) // 2)):
        yield code_to_masks(code, n)


def _cross_code(n: int, side: int) -> int:
    index = _pair_index(n)
    code = 0
    for i, j in pair_table(n):
        if (side >> i & 1) != (side >> j & 1):
            code |= 1 << index[(i, j)]
    return code


def bipartite_codes(n: int) -> list[int]:
    """Edge codes of every labeled bipartite graph on ``n`` vertices, sorted."""
    if n == 0:
        return [0]
    seen = set()
    rest = (1 << n) - 1
    # vertex 0 fixed on side A; each colouring allows any subset of its cross pairs
    for side in range(0, 1 << n, 2):
        side_a = side | 1
        if side_a == rest:
            seen.add(0)
            continue
        cross = _cross_code(n, side_a)
        sub = cross
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & cross
    return sorted(seen)


def bipartite_graphs(n: int) -> Iterator[list[int]]:
    for code in bipartite_codes(n):
        yield code_to_masks(code, n)


def cograph_codes(n: int) -> Iterator[int]:
    """Edge codes of every labeled cograph on ``n`` vertices.

    A cograph on two or more vertices is disconnected or has a disconnected
    complement, never both, so each arises exactly once from: a connected
    block holding the least vertex plus any cograph on the rest, or the
    complement of such a disconnected one.
    """
    if n == 0:
        yield 0
        return
    index = _pair_index(n)

    @lru_cache(maxsize=None)
    def clique_code(s: int) -> int:
        vs = [v for v in range(n) if s >> v & 1]
        code = 0
        for a, b in combinations(vs, 2):
            code |= 1 << index[(a, b)]
        return code

    @lru_cache(maxsize=None)
    def disconnected(s: int) -> tuple[int, ...]:
        low = s & -s
        others = s ^ low
        out = []
        sub = (others - 1) & others  # proper subsets of the others
        while True:
            block = low | sub
            tails = everything(s & ~block)
            for head in connected(block):
                out.extend(head | tail for tail in tails)
            if sub == 0:
                break
            sub = (sub - 1) & others
        return tuple(out)

    @lru_cache(maxsize=None)
    def connected(s: int) -> tuple[int, ...]:
        if s & (s - 1) == 0:
            return (0,)
        full = clique_code(s)
        return tuple(code ^ full for code in disconnected(s))

    @lru_cache(maxsize=None)
    def everything(s: int) -> tuple[int, ...]:
        if s & (s - 1) == 0:
            return (0,)
        return connected(s) + disconnected(s)

    full = (1 << n) - 1
    if n == 1:
        yield 0
        return
    # stream the top level instead of materialising it
    low = 1
    others = full ^ low
    top = clique_code(full)
    for flip in (False, True):
        sub = (others - 1) & others
        while True:
            block = low | sub
            tails = everything(full & ~block)
            for head in connected(block):
                for tail in tails:
                    yield (head | tail) ^ top if flip else head | tail
            if sub == 0:
                break
            sub = (sub - 1) & others


def cographs(n: int) -> Iterator[list[int]]:
    for code in cograph_codes(n):
        yield code_to_masks(code, n)


FAMILIES = {
    "all": all_graphs,
    "bipartite": bipartite_graphs,
    "cograph": cographs,
}
