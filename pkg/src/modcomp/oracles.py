"""Exponential-time reference oracles for the graph classes around module-composed graphs.

Every oracle here is a test utility with an explicit size guard; exceeding
it raises :class:`SizeGuardError` instead of silently running forever.
Negative verdicts come with a witness vertex set wherever one is cheap to
produce (the forbidden pattern found, or the subgraph with chi != omega).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import graph as gr
from .errors import SizeGuardError
from .graph import Graph, iter_bits
from .modular import COJOIN, LEAF, PRIME, decompose_mask

PATTERN_LIMIT = 10
HOST_LIMIT = 14
PERFECT_LIMIT = 9
NUMBER_LIMIT = 12


class ClassId(str, enum.Enum):
    COGRAPH = "cograph"
    TRIVIALLY_PERFECT = "triviallyPerfect"
    CO2C4_FREE = "co2C4free"
    P4_FREE = "P4free"
    C4_FREE = "C4free"
    HHD_FREE = "hhdFree"
    HHDS_FREE = "hhdsFree"
    HHDG_FREE = "hhdgFree"
    WEAKLY_CHORDAL = "weaklyChordal"
    PERFECT = "perfect"
    CHORDAL62 = "chordal62"
    HOLE_FREE = "holeFree"
    SUN_FREE = "sunFree"
    BIPARTITE = "bipartite"
    DOMINO_HOLE_FREE = "dominoHoleFree"

    def __str__(self) -> str:
        return self.value


# largest host graph each oracle accepts; None = unbounded
GUARDS: dict[ClassId, int | None] = {c: HOST_LIMIT for c in ClassId}
GUARDS[ClassId.COGRAPH] = None
GUARDS[ClassId.BIPARTITE] = None
GUARDS[ClassId.PERFECT] = PERFECT_LIMIT


@dataclass(frozen=True)
class Membership:
    verdict: bool
    witness: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.verdict


@dataclass
class ClassReport:
    results: dict[ClassId, Membership] = field(default_factory=dict)

    def __getitem__(self, c: ClassId | str) -> Membership:
        return self.results[ClassId(c)]

    def as_dict(self) -> dict:
        return {
            c.value: {
                "member": m.verdict,
                "witness": sorted(m.witness) if m.witness is not None else None,
            }
            for c, m in self.results.items()
        }


def _guard(n: int, limit: int | None, what: str) -> None:
    if limit is not None and n > limit:
        raise SizeGuardError(f"{what} is limited to {limit} vertices (got {n})")


# --- induced pattern search -----------------------------------------------


def _search_order(h: Graph) -> list[int]:
    """Pattern vertices ordered so each (when possible) touches an earlier one."""
    order: list[int] = []
    placed = set()
    for s in sorted(range(h.n), key=lambda v: -h.degree(v)):
        if s in placed:
            continue
        stack = [s]
        while stack:
            v = stack.pop()
            if v in placed:
                continue
            placed.add(v)
            order.append(v)
            stack.extend(sorted(h.adj[v] - placed, key=lambda u: h.degree(u)))
    return order


def find_induced_mask(masks: Sequence[int], n: int, h: Graph) -> int | None:
    """Backtracking embedding of ``h`` as an induced subgraph; the image as a bitmask."""
    k = h.n
    if k > n:
        return None
    if k == 0:
        return 0
    full = (1 << n) - 1
    order = _search_order(h)
    hdeg = [h.degree(v) for v in order]
    # (earlier step, must be adjacent?) for every step of the search
    links = [[(j, order[j] in h.adj[v]) for j in range(i)] for i, v in enumerate(order)]
    degs = [m.bit_count() for m in masks]
    by_degree = [0] * (max(hdeg) + 1)
    for d in range(len(by_degree)):
        by_degree[d] = sum(1 << v for v in range(n) if degs[v] >= d)
    image = [0] * k

    def extend(i: int, used: int) -> int | None:
        if i == k:
            return used
        cand = by_degree[hdeg[i]] & ~used
        for j, adjacent in links[i]:
            cand &= masks[image[j]] if adjacent else ~masks[image[j]]
            if not cand:
                return None
        cand &= full
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            found = extend(i + 1, used | low)
            if found is not None:
                return found
        return None

    return extend(0, 0)


def contains_induced(g: Graph, h: Graph) -> frozenset[int] | None:
    """A vertex set of ``g`` inducing a copy of ``h``, or None."""
    _guard(h.n, PATTERN_LIMIT, "contains_induced pattern")
    _guard(g.n, HOST_LIMIT, "contains_induced host")
    found = find_induced_mask(g.masks, g.n, h)
    return None if found is None else frozenset(iter_bits(found))


def _is_induced_cycle(masks: Sequence[int], s: int) -> bool:
    for v in iter_bits(s):
        if (masks[v] & s).bit_count() != 2:
            return False
    # 2-regular: one cycle iff connected
    low = s & -s
    seen = frontier = low
    while frontier:
        nb = 0
        for v in iter_bits(frontier):
            nb |= masks[v]
        frontier = nb & s & ~seen
        seen |= frontier
    return seen == s


def find_hole_mask(masks: Sequence[int], n: int) -> int | None:
    for s in range(1 << n):
        if s.bit_count() >= 5 and _is_induced_cycle(masks, s):
            return s
    return None


def has_hole(g: Graph) -> frozenset[int] | None:
    """An induced chordless cycle on at least five vertices, or None."""
    _guard(g.n, HOST_LIMIT, "has_hole")
    found = find_hole_mask(g.masks, g.n)
    return None if found is None else frozenset(iter_bits(found))


def _find_sun_mask(masks: Sequence[int], n: int) -> int | None:
    for k in range(3, n // 2 + 1):
        found = find_induced_mask(masks, n, gr.complete_k_sun(k))
        if found is not None:
            return found
    return None


def contains_sun(g: Graph) -> frozenset[int] | None:
    """An induced complete k-sun (k >= 3); every sun contains one."""
    _guard(g.n, HOST_LIMIT, "contains_sun")
    found = _find_sun_mask(g.masks, g.n)
    return None if found is None else frozenset(iter_bits(found))


# --- exact colouring numbers ---------------------------------------------


def _complement_masks(masks: Sequence[int], n: int) -> list[int]:
    full = (1 << n) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(masks)]


def _clique_table(masks: Sequence[int], n: int) -> list[int]:
    omega = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        a = omega[rest]
        b = 1 + omega[rest & masks[v]]
        omega[s] = a if a > b else b
    return omega


def _chromatic_table(masks: Sequence[int], n: int) -> list[int]:
    size = 1 << n
    independent = [True] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        independent[s] = independent[s ^ low] and not masks[v] & s
    chi = [0] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        # colour classes through the lowest vertex: independent subsets of its non-neighbours
        room = s & ~low & ~masks[v]
        best = n
        sub = room
        while True:
            if independent[sub]:
                c = chi[s & ~(sub | low)]
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & room
        chi[s] = best + 1
    return chi


def clique_number(g: Graph) -> int:
    _guard(g.n, NUMBER_LIMIT, "clique_number")
    return _clique_table(g.masks, g.n)[g.full_mask] if g.n else 0


def independence_number(g: Graph) -> int:
    _guard(g.n, NUMBER_LIMIT, "independence_number")
    return _clique_table(_complement_masks(g.masks, g.n), g.n)[g.full_mask] if g.n else 0


def chromatic_number(g: Graph) -> int:
    _guard(g.n, NUMBER_LIMIT, "chromatic_number")
    return _chromatic_table(g.masks, g.n)[g.full_mask] if g.n else 0


def clique_cover_number(g: Graph) -> int:
    _guard(g.n, NUMBER_LIMIT, "clique_cover_number")
    return _chromatic_table(_complement_masks(g.masks, g.n), g.n)[g.full_mask] if g.n else 0


def imperfect_subgraph_mask(masks: Sequence[int], n: int) -> int | None:
    """Smallest vertex set whose induced subgraph has chi != omega, or None if perfect."""
    omega = _clique_table(masks, n)
    chi = _chromatic_table(masks, n)
    bad = [s for s in range(1 << n) if chi[s] != omega[s]]
    return min(bad, key=lambda s: (s.bit_count(), s)) if bad else None


# --- (6,2)-chordality -----------------------------------------------------


def _hamiltonian(masks: Sequence[int], s: int) -> bool:
    start = (s & -s).bit_length() - 1
    total = s.bit_count()

    def walk(v: int, used: int, count: int) -> bool:
        if count == total:
            return bool(masks[v] >> start & 1)
        for u in iter_bits(masks[v] & s & ~used):
            if walk(u, used | (1 << u), count + 1):
                return True
        return False

    return walk(start, 1 << start, 1)


def find_weak_long_cycle_mask(masks: Sequence[int], n: int) -> int | None:
    """Vertex set of a cycle of length >= 6 with fewer than two chords, or None.

    A cycle through exactly the vertices S has |E(G[S])| - |S| chords, so it is
    enough to look for Hamiltonian subgraphs G[S] with at most |S| + 1 edges.
    """
    for s in range(1 << n):
        size = s.bit_count()
        if size < 6:
            continue
        twice_edges = 0
        for v in iter_bits(s):
            d = (masks[v] & s).bit_count()
            if d < 2:
                break
            twice_edges += d
        else:
            if twice_edges <= 2 * (size + 1) and _hamiltonian(masks, s):
                return s
    return None


# --- class membership -----------------------------------------------------


_P4 = gr.path(4)
_C4 = gr.cycle(4)
_HOUSE = gr.house()
_DOMINO = gr.domino()
_GEM = gr.gem()
_CO2C4 = gr.co_2c4()


class _Probe:
    """Memoised primitive checks on one graph, shared by all classes of a query."""

    def __init__(self, g: Graph):
        self.g = g
        self.masks = g.masks
        self._cache: dict[str, int | None] = {}

    def _get(self, key: str, compute: Callable[[], int | None]) -> int | None:
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def pattern(self, name: str, h: Graph) -> int | None:
        return self._get(name, lambda: find_induced_mask(self.masks, self.g.n, h))

    def hole(self) -> int | None:
        return self._get("hole", lambda: find_hole_mask(self.masks, self.g.n))

    def antihole(self) -> int | None:
        return self._get(
            "antihole",
            lambda: find_hole_mask(_complement_masks(self.masks, self.g.n), self.g.n),
        )

    def sun(self) -> int | None:
        return self._get("sun", lambda: _find_sun_mask(self.masks, self.g.n))

    def first(self, *checks: Callable[[], int | None]) -> Membership:
        for check in checks:
            found = check()
            if found is not None:
                return Membership(False, frozenset(iter_bits(found)))
        return Membership(True)


def _odd_cycle_vertices(g: Graph) -> frozenset[int] | None:
    """Vertex set inducing a non-bipartite subgraph (two BFS paths plus a bad edge)."""
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for s in range(g.n):
        if s in depth:
            continue
        depth[s], parent[s] = 0, -1
        queue = [s]
        for v in queue:
            for u in g.adj[v]:
                if u not in depth:
                    depth[u], parent[u] = depth[v] + 1, v
                    queue.append(u)
                elif depth[u] == depth[v]:
                    cyc = {u, v}
                    a, b = u, v
                    while a != b:
                        a, b = parent[a], parent[b]
                        cyc.update((a, b))
                    return frozenset(cyc)
    return None


def _cograph_membership(g: Graph) -> Membership:
    if g.n == 0:
        return Membership(True)
    stack = [decompose_mask(g.masks, g.full_mask)]
    while stack:
        kind, _, children = stack.pop()
        if kind == PRIME:
            # prime graphs on four or more vertices always contain an induced P4
            found = find_induced_mask(g.masks, g.n, _P4)
            return Membership(False, frozenset(iter_bits(found)))
        stack.extend(children)
    return Membership(True)


def _evaluate(probe: _Probe, c: ClassId) -> Membership:
    g = probe.g
    p = probe.pattern
    if c is ClassId.COGRAPH:
        return _cograph_membership(g)
    if c is ClassId.BIPARTITE:
        witness = _odd_cycle_vertices(g)
        return Membership(witness is None, witness)
    if c is ClassId.P4_FREE:
        return probe.first(lambda: p("P4", _P4))
    if c is ClassId.C4_FREE:
        return probe.first(lambda: p("C4", _C4))
    if c is ClassId.CO2C4_FREE:
        return probe.first(lambda: p("co2C4", _CO2C4))
    if c is ClassId.TRIVIALLY_PERFECT:
        return probe.first(lambda: p("C4", _C4), lambda: p("P4", _P4))
    if c is ClassId.HOLE_FREE:
        return probe.first(probe.hole)
    if c is ClassId.SUN_FREE:
        return probe.first(probe.sun)
    if c is ClassId.DOMINO_HOLE_FREE:
        return probe.first(lambda: p("domino", _DOMINO), probe.hole)
    hhd = (lambda: p("house", _HOUSE), probe.hole, lambda: p("domino", _DOMINO))
    if c is ClassId.HHD_FREE:
        return probe.first(*hhd)
    if c is ClassId.HHDS_FREE:
        return probe.first(*hhd, probe.sun)
    if c is ClassId.HHDG_FREE:
        return probe.first(*hhd, lambda: p("gem", _GEM))
    if c is ClassId.WEAKLY_CHORDAL:
        return probe.first(probe.hole, probe.antihole)
    if c is ClassId.PERFECT:
        found = imperfect_subgraph_mask(g.masks, g.n)
        return Membership(found is None, None if found is None else frozenset(iter_bits(found)))
    if c is ClassId.CHORDAL62:
        found = find_weak_long_cycle_mask(g.masks, g.n)
        return Membership(found is None, None if found is None else frozenset(iter_bits(found)))
    raise ValueError(f"unknown class {c!r}")


def classify(g: Graph, classes: Iterable[ClassId | str] | None = None) -> ClassReport:
    """Run the requested oracles (all of them by default) on ``g``."""
    wanted = [ClassId(c) for c in classes] if classes is not None else list(ClassId)
    for c in wanted:
        _guard(g.n, GUARDS[c], f"class {c.value}")
    probe = _Probe(g)
    return ClassReport({c: _evaluate(probe, c) for c in wanted})


def class_membership(g: Graph, c: ClassId | str) -> Membership:
    return classify(g, [c])[c]


def max_oracle_size(classes: Iterable[ClassId]) -> int | None:
    limits = [GUARDS[c] for c in classes if GUARDS[c] is not None]
    return min(limits) if limits else None


# --- cograph module-sequences ---------------------------------------------


def _cotree_sequence(node) -> list[int] | None:
    kind, vset, children = node
    if kind == LEAF:
        return [vset.bit_length() - 1]
    if kind == COJOIN:
        out: list[int] = []
        for child in children:
            part = _cotree_sequence(child)
            if part is None:
                return None
            out.extend(part)
        return out
    return _join_sequence(children)


def _join_sequence(cocomponents: list) -> list[int] | None:
    """Insertion order for the join of ``cocomponents`` (each a leaf or co-join node).

    Working outside-in: universal vertices and isolated vertices of a
    co-component go last, since each sees everything outside its own
    co-component, a module.  Stripping the isolated vertices of a co-component
    that keeps a single non-trivial component exposes that component's own
    co-components, which join the others.  Stalling means every co-component
    has two non-trivial components, i.e. an induced join of two 2K2 = co-2C4.
    """
    tail: list[int] = []
    while True:
        core = []
        peeled: list[int] = []
        universal: list[int] = []
        for node in cocomponents:
            kind, vset, children = node
            if kind == LEAF:
                universal.append(vset.bit_length() - 1)
                continue
            isolated = [c[1].bit_length() - 1 for c in children if c[0] == LEAF]
            heavy = [c for c in children if c[0] != LEAF]
            if not isolated:
                core.append(node)
                continue
            peeled.extend(isolated)
            if len(heavy) == 1:
                core.extend(heavy[0][2])
            elif len(heavy) > 1:
                rest = 0
                for c in heavy:
                    rest |= c[1]
                core.append((COJOIN, rest, heavy))
        # within one round any order works; isolated vertices first reads naturally
        peeled.extend(universal)
        if not peeled:
            return None
        tail = peeled + tail
        if len(core) <= 1:
            head = _cotree_sequence(core[0]) if core else []
            return None if head is None else head + tail
        cocomponents = core


def cograph_module_sequence(g: Graph) -> tuple[int, ...] | None:
    """Module-sequence of a cograph built along its cotree; None iff it contains co-2C4.

    Raises ``ValueError`` when ``g`` is not a cograph.
    """
    if g.n == 0:
        return ()
    tree = decompose_mask(g.masks, g.full_mask)
    stack = [tree]
    while stack:
        kind, _, children = stack.pop()
        if kind == PRIME:
            raise ValueError("graph is not a cograph")
        stack.extend(children)
    seq = _cotree_sequence(tree)
    return None if seq is None else tuple(seq)

