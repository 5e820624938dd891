"""Immutable simple graphs on vertices ``0..n-1`` plus the named graphs used throughout.

Adjacency is stored as a tuple of frozensets.  Algorithms that work on small
graphs use the lazily computed ``masks`` view, where ``masks[v]`` is an int
with bit ``u`` set iff ``u`` is adjacent to ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"self-loop at {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        g = cls(len(masks), tuple(frozenset(iter_bits(m)) for m in masks))
        g.__dict__["masks"] = tuple(masks)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(nb) for nb in self.adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[U]`` with vertices renumbered by increasing old index, and the old->new map."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in keep)
    return Graph(len(keep), adj), index


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    gone = set(removed)
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - nb - {v} for v, nb in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    adj = g1.adj + tuple(frozenset(u + shift for u in nb) for nb in g2.adj)
    return Graph(g1.n + g2.n, adj)


def join(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    left = frozenset(range(shift))
    right = frozenset(range(shift, shift + g2.n))
    adj = tuple(nb | right for nb in g1.adj) + tuple(
        frozenset(u + shift for u in nb) | left for nb in g2.adj
    )
    return Graph(g1.n + g2.n, adj)


# --- edge-list text format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines are comments."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative vertex or edge count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex index out of range [0, {n})", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing header line 'n m'")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges but {len(edges)} were given")
    return Graph.from_edges(header[0], edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


# --- named graphs ---------------------------------------------------------


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("P_n needs n >= 1")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("C_n needs n >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def anticycle(k: int) -> Graph:
    return complement(cycle(k))


def clique(k: int) -> Graph:
    if k < 1:
        raise ValueError("K_n needs n >= 1")
    return Graph.from_edges(k, combinations(range(k), 2))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    if leaves < 1:
        raise ValueError("a star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def house() -> Graph:
    # square 0-1-2-3 with roof vertex 4 on the edge 0-1
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])


def gem() -> Graph:
    # P4 0-1-2-3 plus a universal vertex 4
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def domino() -> Graph:
    # 2x3 grid: top row 0-1-2, bottom row 3-4-5
    return Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])


def co_k33_minus_e() -> Graph:
    # complement of K_{3,3} minus the edge 0-3: two triangles joined by the edge 0-3
    k33e = Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6) if (i, j) != (0, 3)])
    return complement(k33e)


def k_sun(k: int) -> Graph:
    """Chordal k-sun: inner cycle ``0..k-1`` fan-triangulated from 0, outer ``k..2k-1``.

    Outer vertex ``k+j`` is adjacent to inner vertices ``j`` and ``j+1 mod k``.
    For k = 3 this coincides with the complete 3-sun.
    """
    if k < 3:
        raise ValueError("k-sun needs k >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(0, i) for i in range(2, k - 1)]
    edges += [(k + j, j) for j in range(k)] + [(k + j, (j + 1) % k) for j in range(k)]
    return Graph.from_edges(2 * k, set(tuple(sorted(e)) for e in edges))


def complete_k_sun(k: int) -> Graph:
    if k < 3:
        raise ValueError("k-sun needs k >= 3")
    edges = list(combinations(range(k), 2))
    edges += [(j, k + j) for j in range(k)] + [((j + 1) % k, k + j) for j in range(k)]
    return Graph.from_edges(2 * k, edges)


def co_2c4() -> Graph:
    return complement(disjoint_union(cycle(4), cycle(4)))


_FIXED = {
    "house": house,
    "gem": gem,
    "domino": domino,
    "co_K33_minus_e": co_k33_minus_e,
    "co_2C4": co_2c4,
}

_PARAMETRIZED = {
    "C": cycle,
    "coC": anticycle,
    "P": path,
    "K": clique,
    "k_sun": k_sun,
    "complete_k_sun": complete_k_sun,
    "star": star,
}

NAMED_GRAPHS = sorted(_FIXED) + sorted(_PARAMETRIZED)


def named_graph(name: str, param: int | None = None) -> Graph:
    """Build a named graph, e.g. ``named_graph("house")`` or ``named_graph("C", 5)``.

    The compact forms ``"C5"``, ``"coC6"``, ``"K4"``, ``"P4"``, ``"star3"``,
    ``"k_sun4"`` and ``"complete_k_sun3"`` are accepted as well.
    """
    if name in _FIXED:
        if param is not None:
            raise ValueError(f"{name} takes no parameter")
        return _FIXED[name]()
    if name in _PARAMETRIZED:
        if param is None:
            raise ValueError(f"{name} needs a size parameter")
        return _PARAMETRIZED[name](param)
    # compact "C5"-style names; longest prefix wins so "coC5" is not read as "C"
    for prefix in sorted(_PARAMETRIZED, key=len, reverse=True):
        rest = name[len(prefix):]
        if name.startswith(prefix) and rest.isdigit() and param is None:
            return _PARAMETRIZED[prefix](int(rest))
    raise ValueError(f"unknown graph name {name!r}")
