"""Bottom-up Apriori baseline: join frequent (k-1)-itemsets, prune, count, repeat."""

from __future__ import annotations

import time
from collections import defaultdict
from itertools import combinations
from typing import Iterable

from .core import ItemSet, SupportThreshold, TransactionDb
from .support import RunMetrics, support_batch

# levels[k] maps each frequent k-itemset to its support
FrequentLevels = list[dict[ItemSet, int]]


def apriori_join(l_prev: Iterable[ItemSet]) -> set[ItemSet]:
    """Union pairs of (k-1)-itemsets that agree on their first k-2 items."""
    groups: dict[tuple[int, ...], list[tuple[int, ItemSet]]] = defaultdict(list)
    for x in l_prev:
        idx = x.indices()
        if not idx:
            continue
        groups[idx[:-1]].append((idx[-1], x))
    out: set[ItemSet] = set()
    for members in groups.values():
        members.sort(key=lambda p: p[0])
        for (_, a), (_, b) in combinations(members, 2):
            out.add(a | b)
    return out


def apriori_prune(candidates: Iterable[ItemSet], l_prev: Iterable[ItemSet]) -> set[ItemSet]:
    """Keep candidates whose every (k-1)-subset is in ``l_prev``."""
    prev = {x.bits for x in l_prev}
    kept = set()
    for c in candidates:
        if all(c.bits & ~(1 << i) in prev for i in c.indices()):
            kept.add(c)
    return kept


def mine_apriori(db: TransactionDb, min_sup: SupportThreshold) -> tuple[FrequentLevels, RunMetrics]:
    """All frequent itemsets, level by level. One database scan per non-empty candidate level.

    ``levels[0]`` holds the empty itemset (support ``len(db)``) whenever the
    threshold is attainable, which costs no scan.
    """
    metrics = RunMetrics()
    start = time.perf_counter()
    threshold = min_sup.absolute
    levels: FrequentLevels = []
    if threshold <= len(db):
        levels.append({ItemSet(0, db.width): len(db)})
        candidates = {ItemSet(1 << i, db.width) for i in range(db.width)}
        metrics.candidates_generated += len(candidates)
        while candidates:
            counts = support_batch(candidates, db, metrics)
            frequent = {c: s for c, s in counts.items() if s >= threshold}
            if not frequent:
                break
            levels.append(frequent)
            joined = apriori_join(frequent)
            metrics.candidates_generated += len(joined)
            candidates = apriori_prune(joined, frequent)
    metrics.wall_time = time.perf_counter() - start
    return levels, metrics


def frequent_family(levels: FrequentLevels) -> dict[ItemSet, int]:
    out: dict[ItemSet, int] = {}
    for level in levels:
        out.update(level)
    return out


def maximal_from_levels(levels: FrequentLevels) -> set[tuple[ItemSet, int]]:
    """Frequent itemsets with no frequent strict superset.

    With downward closure it suffices to look one level up. The empty
    itemset is kept only when nothing else is frequent.
    """
    out = set()
    for k, level in enumerate(levels):
        above = levels[k + 1] if k + 1 < len(levels) else {}
        for x, s in level.items():
            if k == 0 and len(levels) > 1:
                continue
            if not any(x.bits & y.bits == x.bits for y in above):
                out.add((x, s))
    return out
