"""Batch search for vertices where ``Hr`` is not contained in ``Hf``.

Output is newline-delimited JSON, one line per graph, in generation order.
A conjecture violation is a finding: it is written with full witnesses and
counted in the summary but never raised.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import graph as gc
from .errors import EnumerationCapExceeded
from .semigroups import HF_CAP, RANK_CAP, containment_report

FAMILIES = ("random-connected", "random-tree", "trees", "cycles", "complete", "wheels")


def parse_range(text):
    """``"4..6"`` -> ``(4, 6)``; ``"5"`` -> ``(5, 5)``."""
    lo, sep, hi = str(text).partition("..")
    lo = int(lo)
    hi = int(hi) if sep else lo
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def family_instances(family, count, size_range, seed):
    """Deterministic list of :class:`~graphsemigroups.graph.Family` objects.

    Random families draw ``count`` graphs with ``n`` uniform in
    ``size_range``; enumerated families ignore ``count``.
    """
    lo, hi = size_range
    rng = random.Random(seed)
    if family == "random-connected":
        out = []
        for _ in range(count):
            n = rng.randint(lo, hi)
            out.append(gc.random_connected(n, rng.randrange(2**32)))
        return out
    if family == "random-tree":
        out = []
        for _ in range(count):
            n = rng.randint(lo, hi)
            out.append(gc.random_tree(n, rng.randrange(2**32)))
        return out
    if family == "trees":
        return [t for n in range(max(lo, 2), hi + 1) for t in gc.all_trees(n)]
    if family == "cycles":
        return [gc.cycle(k) for k in range(max(lo, 3), hi + 1)]
    if family == "complete":
        return [gc.complete(n) for n in range(max(lo, 2), hi + 1)]
    if family == "wheels":
        # size counts all vertices, hub included
        return [gc.wheel(n - 1) for n in range(max(lo, 4), hi + 1)]
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


@dataclass(frozen=True)
class SweepUnit:
    index: int
    family: gc.Family
    bound: int | None
    cap: int
    rank_cap: int


def run_unit(unit):
    g = unit.family.graph
    vertices = []
    violations = []
    skipped = []
    for P in range(g.n):
        try:
            rep = containment_report(g, P, unit.bound, unit.cap, unit.rank_cap)
        except EnumerationCapExceeded as exc:
            skipped.append({"vertex": P, "reason": str(exc)})
            continue
        vertices.append(rep.to_json())
        if not rep.conjecture_holds:
            violations.append(P)
    return {
        "index": unit.index,
        "name": unit.family.name,
        "graph": {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]},
        "genus": g.num_edges - g.n + 1,
        "vertices": vertices,
        "status": "VIOLATION" if violations else "ok",
        "violations": violations,
        "skipped": skipped,
    }


def conjecture_sweep(
    family,
    count,
    size_range,
    bound=None,
    seed=0,
    cap=HF_CAP,
    rank_cap=RANK_CAP,
    jobs=1,
):
    """Yield one record per graph, then a final ``{"summary": ...}`` record.

    ``bound=None`` uses the per-vertex default window ``max(2g, deg P) + 2``.
    """
    fams = family_instances(family, count, size_range, seed)
    units = [SweepUnit(i, f, bound, cap, rank_cap) for i, f in enumerate(fams)]
    summary = {"family": family, "seed": seed, "graphs": 0, "pairs": 0, "violations": [], "skipped": 0}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = pool.map(run_unit, units)
            yield from _tally(records, summary)
    else:
        yield from _tally(map(run_unit, units), summary)
    summary["violation_count"] = len(summary["violations"])
    yield {"summary": summary}


def _tally(records, summary):
    for rec in records:
        summary["graphs"] += 1
        summary["pairs"] += len(rec["vertices"])
        summary["skipped"] += len(rec["skipped"])
        summary["violations"] += [{"graph": rec["index"], "vertex": P} for P in rec["violations"]]
        yield rec


def write_jsonl(records, fh):
    """Write records as sorted-key JSON lines; return the trailing summary."""
    summary = None
    for rec in records:
        if "summary" in rec:
            summary = rec["summary"]
            continue
        fh.write(json.dumps(rec, sort_keys=True) + "\n")
    return summary
