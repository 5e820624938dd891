"""Modules, strong modules and the modular decomposition tree.

The decomposition is the textbook recursive one: a disconnected vertex set
splits into its components (co-join node), a set whose complement is
disconnected splits into its co-components (join node), and otherwise the
maximal strong modules are found by partition refinement around one vertex
followed by module closures (prime node).  Everything works on int bitsets,
which keeps it quick for the few hundred vertices the recognizer sees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SizeGuardError
from .graph import Graph, iter_bits, to_mask

LEAF = "leaf"
JOIN = "join"
COJOIN = "cojoin"
PRIME = "prime"

STRONG_MODULE_LIMIT = 16


# --- bitset primitives ----------------------------------------------------


def is_module_mask(masks: Sequence[int], m: int, within: int) -> bool:
    """True iff ``m`` is a module of the subgraph induced by ``within`` (``m`` subset of it)."""
    if m & (m - 1) == 0 or m == within:
        return True
    outside = within & ~m
    low = m & -m
    ref = masks[low.bit_length() - 1] & outside
    rest = m ^ low
    while rest:
        b = rest & -rest
        if masks[b.bit_length() - 1] & outside != ref:
            return False
        rest ^= b
    return True


def components_mask(masks: Sequence[int], vset: int) -> list[int]:
    comps = []
    rest = vset
    while rest:
        comp = frontier = rest & -rest
        rest ^= comp
        while frontier:
            nb = 0
            for u in iter_bits(frontier):
                nb |= masks[u]
            nb &= rest
            rest ^= nb
            comp |= nb
            frontier = nb
        comps.append(comp)
    return comps


def cocomponents_mask(masks: Sequence[int], vset: int) -> list[int]:
    comps = []
    rest = vset
    while rest:
        comp = frontier = rest & -rest
        rest ^= comp
        while frontier and rest:
            nb = 0
            for u in iter_bits(frontier):
                nb |= rest & ~masks[u]
            rest ^= nb
            comp |= nb
            frontier = nb
        comps.append(comp)
    return comps


def _closure(masks: Sequence[int], vset: int, v: int, y: int, stop: int) -> int:
    """Smallest module of G[vset] containing v and y, or ``vset`` once it hits ``stop``."""
    m = (1 << v) | (1 << y)
    nv = masks[v]
    queue = [y]
    while queue:
        u = queue.pop()
        d = (masks[u] ^ nv) & vset & ~m
        if d:
            if d & stop:
                return vset
            m |= d
            queue.extend(iter_bits(d))
    return m


def _maximal_modules_avoiding(masks: Sequence[int], vset: int, v: int) -> list[int]:
    """Partition ``vset - {v}`` into the maximal modules of G[vset] not containing ``v``.

    Refinement runs on (sources, region) tasks: every source vertex splits the
    parts inside the region by its neighbourhood.  When a part splits, its two
    halves have never acted on each other, so each becomes a task for the other.
    """
    rest = vset & ~(1 << v)
    near = masks[v] & rest
    parts: dict[int, int] = {}
    owner: dict[int, int] = {}
    for part in (near, rest & ~near):
        if part:
            pid = len(parts)
            parts[pid] = part
            for u in iter_bits(part):
                owner[u] = pid
    tasks = [(rest, rest)]
    while tasks:
        sources, region = tasks.pop()
        if sources != region and sources.bit_count() > region.bit_count():
            # only sources adjacent to some but not all of the region can split it
            any_nb, all_nb = 0, -1
            for y in iter_bits(region):
                any_nb |= masks[y]
                all_nb &= masks[y]
            sources &= any_nb & ~all_nb
        for x in iter_bits(sources):
            hit = masks[x] & region & ~parts[owner[x]]
            if not hit:
                continue
            touched: dict[int, int] = {}
            for y in iter_bits(hit):
                pid = owner[y]
                touched[pid] = touched.get(pid, 0) | (1 << y)
            for pid, sub in touched.items():
                whole = parts[pid]
                if sub == whole:
                    continue
                new = len(parts)
                parts[new] = sub
                parts[pid] = other = whole & ~sub
                for u in iter_bits(sub):
                    owner[u] = new
                tasks.append((sub, other))
                tasks.append((other, sub))
    return list(parts.values())


def _prime_children(masks: Sequence[int], vset: int) -> list[int]:
    """Maximal strong modules of G[vset] when both it and its complement are connected."""
    v = (vset & -vset).bit_length() - 1
    parts = _maximal_modules_avoiding(masks, vset, v)
    # the strong module holding v is v plus every part whose closure with v stays proper
    inside = 1 << v
    outside = 0
    for part in parts:
        if part & inside:
            inside |= part
            continue
        y = (part & -part).bit_length() - 1
        closed = _closure(masks, vset, v, y, outside)
        if closed == vset:
            outside |= part
        else:
            inside |= closed | part
    # every part outside it is itself a maximal strong module
    return [inside] + [part for part in parts if not part & inside]


def decompose_mask(masks: Sequence[int], vset: int, depth: int = -1) -> tuple:
    """Nested ``(kind, vset, children)`` decomposition of G[vset].

    ``depth`` limits how many levels get expanded (negative = all); nodes
    below the limit come back as ``(None, vset, None)`` unless they are leaves.
    """
    if vset & (vset - 1) == 0:
        return (LEAF, vset, ())
    if depth == 0:
        return (None, vset, None)
    comps = components_mask(masks, vset)
    if len(comps) > 1:
        kind = COJOIN
    else:
        comps = cocomponents_mask(masks, vset)
        kind = JOIN if len(comps) > 1 else PRIME
        if kind == PRIME:
            comps = _prime_children(masks, vset)
    comps.sort(key=lambda c: c & -c)
    return (kind, vset, [decompose_mask(masks, c, depth - 1) for c in comps])


# --- public API -----------------------------------------------------------


def _checked_mask(g: Graph, vertices: Iterable[int]) -> int:
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return to_mask(vs)


def is_module(g: Graph, module: Iterable[int]) -> bool:
    """True iff every member of ``module`` has the same neighbours outside it."""
    return is_module_mask(g.masks, _checked_mask(g, module), g.full_mask)


def strong_modules_bruteforce(g: Graph) -> set[frozenset[int]]:
    """All non-empty strong modules, by enumerating every vertex subset."""
    if g.n > STRONG_MODULE_LIMIT:
        raise SizeGuardError(f"strong_modules_bruteforce limited to {STRONG_MODULE_LIMIT} vertices")
    if g.n == 0:
        return set()
    masks, full = g.masks, g.full_mask
    modules = [m for m in range(1, full + 1) if is_module_mask(masks, m, full)]
    # smallest module containing each pair: intersection of every module holding both
    pair_hull: dict[tuple[int, int], int] = {}
    for m in modules:
        members = list(iter_bits(m))
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                key = (x, y)
                pair_hull[key] = pair_hull.get(key, full) & m
    strong = set()
    for m in modules:
        ok = True
        for x in iter_bits(m):
            for y in iter_bits(full & ~m):
                hull = pair_hull[(x, y) if x < y else (y, x)]
                # a module through x and y that misses part of m overlaps m
                if hull & m != m:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            strong.add(frozenset(iter_bits(m)))
    return strong


@dataclass(frozen=True)
class MDNode:
    kind: str
    children: tuple[int, ...]
    vertices: frozenset[int]

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF

    @property
    def vertex(self) -> int:
        if not self.is_leaf:
            raise ValueError("only leaves carry a vertex")
        return next(iter(self.vertices))


@dataclass(frozen=True)
class MDTree:
    nodes: tuple[MDNode, ...]
    root: int

    def __len__(self) -> int:
        return len(self.nodes)

    def inner_nodes(self) -> list[int]:
        return [i for i, node in enumerate(self.nodes) if not node.is_leaf]

    def leaf_of(self, v: int) -> int:
        for i, node in enumerate(self.nodes):
            if node.is_leaf and v in node.vertices:
                return i
        raise KeyError(v)

    def kinds(self) -> set[str]:
        return {node.kind for node in self.nodes}


def modular_decomposition(g: Graph) -> MDTree:
    if g.n < 1:
        raise ValueError("modular decomposition needs at least one vertex")
    nested = decompose_mask(g.masks, g.full_mask)
    nodes: list[MDNode] = []

    def build(item) -> int:
        kind, vset, children = item
        kids = tuple(build(c) for c in children)
        nodes.append(MDNode(kind, kids, frozenset(iter_bits(vset))))
        return len(nodes) - 1

    root = build(nested)
    return MDTree(tuple(nodes), root)


def quotient_graph(g: Graph, tree: MDTree, node: int) -> Graph:
    """Graph on the children of ``node``, one vertex per child strong module."""
    inner = tree.nodes[node]
    if inner.is_leaf:
        raise ValueError("quotient graph is defined for inner nodes only")
    kids = [tree.nodes[c].vertices for c in inner.children]
    reps = [min(vs) for vs in kids]
    masks = g.masks
    child_masks = [to_mask(vs) for vs in kids]
    edges = [
        (i, j)
        for i in range(len(kids))
        for j in range(i + 1, len(kids))
        if masks[reps[i]] & child_masks[j]
    ]
    return Graph.from_edges(len(kids), edges)
