"""Census harness: classify many small graphs and tally every proved class inclusion.

A census streams labeled graphs (exhaustively or at random), evaluates the
recognizers and the requested class oracles on each one, and counts
violations of the implications listed in ``IMPLICATIONS``.  Reports are plain
dicts with sorted keys and no timing data, so the same config yields a
byte-identical JSON file.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from itertools import islice
from multiprocessing import Pool
from typing import Iterable, Iterator

from .bdh import independent_module_sequence
from .enumeration import FAMILIES
from .errors import SizeGuardError
from .graph import Graph
from .oracles import GUARDS, ClassId, _evaluate, _Probe, cograph_module_sequence
from .recognize import BRUTE_FORCE_LIMIT, _brute, recognize, verify_module_sequence

FORMAT_VERSION = 1

MODULE_COMPOSED = "moduleComposed"
INDEPENDENT_MC = "independentModuleComposed"
BDH = "bdh"
EXTRA_KEYS = (MODULE_COMPOSED, INDEPENDENT_MC, BDH)

EXHAUSTIVE_LIMITS = {"all": 7, "bipartite": 7, "cograph": 8}


@dataclass(frozen=True)
class Implication:
    name: str
    source: str
    premise: tuple[str, ...]
    conclusion: tuple[str, ...]


def _imp(name, source, premise, conclusion) -> Implication:
    return Implication(name, source, tuple(premise), tuple(conclusion))


MC, TP = MODULE_COMPOSED, ClassId.TRIVIALLY_PERFECT.value
IMPLICATIONS: tuple[Implication, ...] = (
    _imp("mc=>hhdsFree", "module-composed graphs are HHDS-free", [MC], ["hhdsFree"]),
    _imp("mc=>hhdFree", "HHDS-free implies HHD-free", [MC], ["hhdFree"]),
    _imp("mc=>perfect", "module-composed graphs are perfect", [MC], ["perfect"]),
    _imp("mc=>weaklyChordal", "module-composed graphs are weakly chordal", [MC], ["weaklyChordal"]),
    _imp("hhdsFree=>perfect", "HHDS-free graphs are perfect", ["hhdsFree"], ["perfect"]),
    _imp("hhdFree=>weaklyChordal", "HHD-free graphs are weakly chordal", ["hhdFree"], ["weaklyChordal"]),
    _imp("triviallyPerfect=>mc", "trivially perfect graphs are module-composed", [TP], [MC]),
    _imp("co2C4free&P4free=>mc", "(co-2C4,P4)-free graphs are module-composed", ["co2C4free", "P4free"], [MC]),
    _imp("cograph&mc=>co2C4free", "cographs: module-composed iff co-2C4-free", ["cograph", MC], ["co2C4free"]),
    _imp("cograph&co2C4free=>mc", "cographs: module-composed iff co-2C4-free", ["cograph", "co2C4free"], [MC]),
    _imp("imc=>hhdgFree", "independent module-composed graphs are HHDG-free", [INDEPENDENT_MC], ["hhdgFree"]),
    _imp("imc=>mc", "independent module-sequences are module-sequences", [INDEPENDENT_MC], [MC]),
    _imp("bipartite&mc=>hhdgFree", "bipartite: module-composed iff distance hereditary", ["bipartite", MC], ["hhdgFree"]),
    _imp("bipartite&hhdgFree=>mc", "bipartite: module-composed iff distance hereditary", ["bipartite", "hhdgFree"], [MC]),
    _imp("bipartite&mc=>dominoHoleFree", "bipartite: module-composed iff domino- and hole-free", ["bipartite", MC], ["dominoHoleFree"]),
    _imp("bipartite&dominoHoleFree=>mc", "bipartite: module-composed iff domino- and hole-free", ["bipartite", "dominoHoleFree"], [MC]),
    _imp("bipartite&mc=>chordal62", "bipartite: module-composed iff (6,2)-chordal", ["bipartite", MC], ["chordal62"]),
    _imp("bipartite&chordal62=>mc", "bipartite: module-composed iff (6,2)-chordal", ["bipartite", "chordal62"], [MC]),
    _imp("bdh=>bipartite&hhdgFree", "level test decides bipartite distance-hereditary", [BDH], ["bipartite", "hhdgFree"]),
    _imp("bipartite&hhdgFree=>bdh", "level test decides bipartite distance-hereditary", ["bipartite", "hhdgFree"], [BDH]),
    _imp("bdh=>imc", "bipartite distance-hereditary graphs are independent module-composed", [BDH], [INDEPENDENT_MC]),
    _imp("imc=>bdh", "independent module-composed graphs are bipartite distance hereditary", [INDEPENDENT_MC], [BDH]),
)


@dataclass(frozen=True)
class CensusConfig:
    mode: str = "exhaustive"  # "exhaustive" or "random"
    n_min: int = 1
    n_max: int = 5
    family: str = "all"  # exhaustive family: all, bipartite, cograph
    count: int = 0
    p: float | None = None  # edge probability; None draws one per graph
    seed: int = 0
    classes: tuple[str, ...] | None = None  # None = every class the size guards allow
    jobs: int = 1
    max_counterexamples: int = 5

    def resolved_classes(self) -> tuple[str, ...]:
        if self.classes is not None:
            return tuple(self.classes)
        keys = [c.value for c in ClassId if GUARDS[c] is None or GUARDS[c] >= self.n_max]
        return tuple(keys) + EXTRA_KEYS

    def validate(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown census mode {self.mode!r}")
        if not 0 <= self.n_min <= self.n_max:
            raise ValueError("need 0 <= n_min <= n_max")
        if self.mode == "exhaustive":
            if self.family not in EXHAUSTIVE_LIMITS:
                raise ValueError(f"unknown family {self.family!r}")
            if self.n_max > EXHAUSTIVE_LIMITS[self.family]:
                raise SizeGuardError(
                    f"exhaustive {self.family} census limited to n <= {EXHAUSTIVE_LIMITS[self.family]}"
                )
        elif self.count < 0 or (self.p is not None and not 0.0 <= self.p <= 1.0):
            raise ValueError("random census needs count >= 0 and 0 <= p <= 1")
        for key in self.resolved_classes():
            if key in EXTRA_KEYS:
                limit = BRUTE_FORCE_LIMIT if key == INDEPENDENT_MC else None
            else:
                limit = GUARDS[ClassId(key)]
            if limit is not None and self.n_max > limit:
                raise SizeGuardError(f"class {key} is limited to {limit} vertices (census n_max={self.n_max})")


@dataclass
class Tally:
    graphs: int = 0
    class_counts: dict[str, int] = field(default_factory=dict)
    checked: dict[str, int] = field(default_factory=dict)
    violations: dict[str, int] = field(default_factory=dict)
    refuting: dict[str, int] = field(default_factory=dict)  # conclusion false at all
    counterexamples: dict[str, list] = field(default_factory=dict)
    compared: int = 0
    disagreements: int = 0
    disagreement_examples: list = field(default_factory=list)
    sequence_checks: dict[str, list[int]] = field(default_factory=dict)  # name -> [checked, failed]

    def merge(self, other: Tally, limit: int) -> None:
        self.graphs += other.graphs
        for attr in ("class_counts", "checked", "violations", "refuting"):
            mine = getattr(self, attr)
            for k, v in getattr(other, attr).items():
                mine[k] = mine.get(k, 0) + v
        for k, v in other.counterexamples.items():
            room = limit - len(self.counterexamples.setdefault(k, []))
            self.counterexamples[k].extend(v[:max(room, 0)])
        self.compared += other.compared
        self.disagreements += other.disagreements
        room = limit - len(self.disagreement_examples)
        self.disagreement_examples.extend(other.disagreement_examples[:max(room, 0)])
        for k, (c, f) in other.sequence_checks.items():
            mine = self.sequence_checks.setdefault(k, [0, 0])
            mine[0] += c
            mine[1] += f


def _graph_record(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def evaluate_graph(g: Graph, keys: Iterable[str]) -> tuple[dict[str, bool], dict[str, list[int]], dict]:
    """Verdicts for ``keys`` on one graph, witnesses of negative class verdicts, and side checks."""
    keys = list(keys)
    verdicts: dict[str, bool] = {}
    witnesses: dict[str, list[int]] = {}
    extra: dict = {"sequences": {}}
    probe = _Probe(g)
    for key in keys:
        if key in EXTRA_KEYS:
            continue
        m = _evaluate(probe, ClassId(key))
        verdicts[key] = m.verdict
        if m.witness is not None:
            witnesses[key] = sorted(m.witness)

    result = recognize(g)
    verdicts[MODULE_COMPOSED] = result.is_module_composed
    if result.is_module_composed:
        extra["sequences"]["recognize"] = verify_module_sequence(g, result.sequence)
    if g.n <= BRUTE_FORCE_LIMIT:
        brute = _brute(g.masks, g.full_mask, False) is not None
        extra["brute"] = brute
        if INDEPENDENT_MC in keys:
            verdicts[INDEPENDENT_MC] = _brute(g.masks, g.full_mask, True) is not None
    if BDH in keys:
        seq = independent_module_sequence(g)
        verdicts[BDH] = seq is not None
        if seq is not None:
            extra["sequences"]["independent"] = verify_module_sequence(g, seq, independent=True)
    if verdicts.get("cograph"):
        seq = cograph_module_sequence(g)
        if seq is not None:
            extra["sequences"]["cograph"] = verify_module_sequence(g, seq)
    return verdicts, witnesses, extra


def _applicable(keys: set[str]) -> list[Implication]:
    return [imp for imp in IMPLICATIONS if set(imp.premise) | set(imp.conclusion) <= keys]


def _run_chunk(args) -> Tally:
    chunk, keys, limit = args
    keyset = set(keys) | {MODULE_COMPOSED}
    imps = _applicable(keyset)
    tally = Tally()
    for masks in chunk:
        g = Graph.from_masks(masks)
        verdicts, witnesses, extra = evaluate_graph(g, keys)
        tally.graphs += 1
        for k, v in verdicts.items():
            if v:
                tally.class_counts[k] = tally.class_counts.get(k, 0) + 1
        for imp in imps:
            if not all(verdicts[k] for k in imp.premise):
                continue
            tally.checked[imp.name] = tally.checked.get(imp.name, 0) + 1
            failed = [k for k in imp.conclusion if not verdicts[k]]
            if failed:
                tally.violations[imp.name] = tally.violations.get(imp.name, 0) + 1
                stored = tally.counterexamples.setdefault(imp.name, [])
                if len(stored) < limit:
                    record = _graph_record(g)
                    record["witness"] = {k: witnesses.get(k) for k in failed}
                    stored.append(record)
        for imp in imps:
            if not all(verdicts[k] for k in imp.conclusion):
                tally.refuting[imp.name] = tally.refuting.get(imp.name, 0) + 1
        if "brute" in extra:
            tally.compared += 1
            if extra["brute"] != verdicts[MODULE_COMPOSED]:
                tally.disagreements += 1
                if len(tally.disagreement_examples) < limit:
                    tally.disagreement_examples.append(_graph_record(g))
        for name, ok in extra["sequences"].items():
            entry = tally.sequence_checks.setdefault(name, [0, 0])
            entry[0] += 1
            entry[1] += 0 if ok else 1
    return tally


def iter_graphs(cfg: CensusConfig) -> Iterator[list[int]]:
    if cfg.mode == "exhaustive":
        for n in range(cfg.n_min, cfg.n_max + 1):
            yield from FAMILIES[cfg.family](n)
        return
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        n = rng.randint(cfg.n_min, cfg.n_max)
        p = cfg.p if cfg.p is not None else rng.random()
        masks = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < p:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        yield masks


def _chunks(it: Iterator, size: int) -> Iterator[list]:
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def recheck_counterexample(record: dict, imp: Implication) -> bool:
    """Re-run both sides of ``imp`` on a stored graph; True iff it still violates."""
    g = Graph.from_edges(record["n"], [tuple(e) for e in record["edges"]])
    verdicts, _, _ = evaluate_graph(g, set(imp.premise) | set(imp.conclusion))
    return all(verdicts[k] for k in imp.premise) and not all(verdicts[k] for k in imp.conclusion)


def run_census(cfg: CensusConfig, chunk_size: int = 2000) -> dict:
    cfg.validate()
    keys = cfg.resolved_classes()
    limit = cfg.max_counterexamples
    work = ((chunk, keys, limit) for chunk in _chunks(iter_graphs(cfg), chunk_size))
    total = Tally()
    if cfg.jobs > 1:
        with Pool(cfg.jobs) as pool:
            for part in pool.imap(_run_chunk, work):
                total.merge(part, limit)
    else:
        for args in work:
            total.merge(_run_chunk(args), limit)
    return build_report(cfg, keys, total)


def build_report(cfg: CensusConfig, keys: tuple[str, ...], total: Tally) -> dict:
    keyset = set(keys) | {MODULE_COMPOSED}
    implications = []
    for imp in _applicable(keyset):
        stored = total.counterexamples.get(imp.name, [])
        implications.append(
            {
                "name": imp.name,
                "source": imp.source,
                "premise": list(imp.premise),
                "conclusion": list(imp.conclusion),
                "checked": total.checked.get(imp.name, 0),
                "violations": total.violations.get(imp.name, 0),
                # nothing in scope ever falsified the conclusion, so the check proves little
                "vacuous": total.refuting.get(imp.name, 0) == 0,
                "counterexamples": stored,
                "counterexamples_reverified": all(recheck_counterexample(r, imp) for r in stored),
            }
        )
    config = asdict(cfg)
    config["classes"] = list(keys)
    return {
        "format_version": FORMAT_VERSION,
        "config": config,
        "graphs": total.graphs,
        "class_counts": {k: total.class_counts.get(k, 0) for k in sorted(keyset)},
        "implications": implications,
        "recognize_vs_bruteforce": {
            "compared": total.compared,
            "disagreements": total.disagreements,
            "examples": total.disagreement_examples,
        },
        "sequence_checks": {
            k: {"checked": c, "failed": f} for k, (c, f) in sorted(total.sequence_checks.items())
        },
        "total_violations": sum(total.violations.values()),
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def summarize(report: dict) -> str:
    cfg = report["config"]
    lines = [
        f"census {cfg['mode']} n={cfg['n_min']}..{cfg['n_max']} family={cfg['family']}: "
        f"{report['graphs']} labeled graphs",
        f"  module-composed: {report['class_counts'].get(MODULE_COMPOSED, 0)}",
    ]
    agree = report["recognize_vs_bruteforce"]
    lines.append(f"  recognize vs brute force: {agree['compared']} compared, {agree['disagreements']} disagreements")
    for name, entry in report["sequence_checks"].items():
        lines.append(f"  {name} sequences: {entry['checked']} verified, {entry['failed']} failed")
    for imp in report["implications"]:
        flag = " (vacuous)" if imp["vacuous"] else ""
        lines.append(f"  {imp['name']}: {imp['checked']} checked, {imp['violations']} violations{flag}")
    lines.append(f"  total violations: {report['total_violations']}")
    return "\n".join(lines)
