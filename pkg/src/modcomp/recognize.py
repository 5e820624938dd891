"""Recognition of module-composed graphs.

A module-sequence lists the vertices in insertion order: each vertex, when
inserted, must see a module of the graph induced by the vertices before it.
``recognize`` builds one by repeatedly stripping vertices found among the
children and grandchildren of the modular-decomposition root;
``brute_force_recognize`` is the exhaustive reference that tries every
removable vertex over all vertex subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import SizeGuardError
from .graph import Graph, iter_bits
from .modular import COJOIN, JOIN, LEAF, PRIME, components_mask, decompose_mask, is_module_mask

BRUTE_FORCE_LIMIT = 12

ModuleSequence = tuple[int, ...]


@dataclass(frozen=True)
class RecognitionResult:
    sequence: ModuleSequence | None

    @property
    def is_module_composed(self) -> bool:
        return self.sequence is not None

    def __bool__(self) -> bool:
        return self.sequence is not None


# --- verification ---------------------------------------------------------


def _check_permutation(g: Graph, seq: Sequence[int]) -> None:
    if len(seq) != g.n or sorted(seq) != list(range(g.n)):
        raise ValueError("sequence is not a permutation of the vertex set")


def verify_module_sequence(g: Graph, seq: Sequence[int], independent: bool = False) -> bool:
    """Check that every inserted vertex sees a module of the graph built so far.

    With ``independent=True`` the seen module must also be edgeless.
    """
    _check_permutation(g, seq)
    masks = g.masks
    prefix = 0
    for v in seq:
        seen = masks[v] & prefix
        if not is_module_mask(masks, seen, prefix):
            return False
        if independent:
            for u in iter_bits(seen):
                if masks[u] & seen:
                    return False
        prefix |= 1 << v
    return True


def verify_independent_module_sequence(g: Graph, seq: Sequence[int]) -> bool:
    return verify_module_sequence(g, seq, independent=True)


# --- modular-decomposition driven recognition -----------------------------


def _eliminable(masks: Sequence[int], kind: str, children: list) -> list[int]:
    """Vertices removable in one batch, read off the top two tree levels."""
    if kind == JOIN:
        found = [c[1].bit_length() - 1 for c in children if c[0] == LEAF]
        if found:
            return found
        for ckind, _, grand in children:
            if ckind == COJOIN:
                found.extend(gs.bit_length() - 1 for gk, gs, _ in grand if gk == LEAF)
        return found

    if kind == PRIME:
        vset = 0
        owner = {}
        for i, (_, cs, _) in enumerate(children):
            vset |= cs
            for u in iter_bits(cs):
                owner[u] = i
        # children are modules, so one representative fixes the quotient adjacency
        degree_one = []
        for i, (_, cs, _) in enumerate(children):
            rep = (cs & -cs).bit_length() - 1
            nb = masks[rep] & vset & ~cs
            other = children[owner[(nb & -nb).bit_length() - 1]][1]
            if nb & ~other == 0:
                degree_one.append(i)
        found = [children[i][1].bit_length() - 1 for i in degree_one if children[i][0] == LEAF]
        if found:
            return found
        for i in degree_one:
            ckind, _, grand = children[i]
            if ckind == COJOIN:
                found.extend(gs.bit_length() - 1 for gk, gs, _ in grand if gk == LEAF)
        return found

    return []


def _mod_com(masks: Sequence[int], vset: int) -> list[int] | None:
    stream: list[int] = []  # elimination order; the insertion order is its reverse
    while vset:
        if vset & (vset - 1) == 0:
            stream.append(vset.bit_length() - 1)
            break
        comps = components_mask(masks, vset)
        if len(comps) > 1:
            head: list[int] = []
            for comp in comps:
                part = _mod_com(masks, comp)
                if part is None:
                    return None
                head.extend(part)
            return head + stream[::-1]
        kind, _, children = decompose_mask(masks, vset, depth=2)
        batch = _eliminable(masks, kind, children)
        if not batch:
            return None
        stream.extend(batch)
        for v in batch:
            vset &= ~(1 << v)
    return stream[::-1]


def recognize(g: Graph) -> RecognitionResult:
    if g.n == 0:
        return RecognitionResult(())
    seq = _mod_com(g.masks, g.full_mask)
    return RecognitionResult(None if seq is None else tuple(seq))


# --- exhaustive reference -------------------------------------------------


def _brute(masks: Sequence[int], full: int, independent: bool) -> list[int] | None:
    memo: dict[int, list[int] | None] = {}

    def solve(s: int) -> list[int] | None:
        if s & (s - 1) == 0:
            return [s.bit_length() - 1] if s else []
        if s in memo:
            return memo[s]
        result = None
        for v in iter_bits(s):
            rest = s & ~(1 << v)
            seen = masks[v] & rest
            if not is_module_mask(masks, seen, rest):
                continue
            if independent and any(masks[u] & seen for u in iter_bits(seen)):
                continue
            sub = solve(rest)
            if sub is not None:
                result = sub + [v]
                break
        memo[s] = result
        return result

    return solve(full)


def brute_force_recognize(g: Graph, independent: bool = False) -> RecognitionResult:
    """Exact answer by trying every removable vertex on every reachable vertex subset."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise SizeGuardError(f"brute_force_recognize limited to {BRUTE_FORCE_LIMIT} vertices")
    seq = _brute(g.masks, g.full_mask, independent)
    return RecognitionResult(None if seq is None else tuple(seq))
