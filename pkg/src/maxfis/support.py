"""Support counting with scan instrumentation.

One database scan is one pass over every transaction, however many
candidates that pass serves. ``support_batch`` is the only place that
performs a counting scan, so ``RunMetrics.db_scans`` is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import ItemSet, TransactionDb

# upper bound on the candidates x distinct-transactions matrix built per chunk
_CHUNK_CELLS = 1 << 22


@dataclass
class RunMetrics:
    """Counters for one mining run. Not thread-safe; callers serialize updates."""

    db_scans: int = 0
    support_calls: int = 0
    candidates_generated: int = 0
    wall_time: float = 0.0

    def as_dict(self) -> dict[str, float]:
        return {
            "db_scans": self.db_scans,
            "support_calls": self.support_calls,
            "candidates_generated": self.candidates_generated,
            "wall_time": self.wall_time,
        }


def support(x: ItemSet, db: TransactionDb) -> int:
    """Number of transactions containing ``x``; the empty itemset gives ``len(db)``."""
    db.check(x)
    m = x.bits
    return sum(1 for t in db.transactions if t.bits & m == m)


def count_masks(masks: Sequence[int], db: TransactionDb) -> list[int]:
    """Supports of raw bitmasks in a single pass over the (deduplicated) transactions."""
    if not masks:
        return []
    arrays = db.weighted_array
    if arrays is None:
        tx, weights = db.weighted
        return [sum(w for t, w in zip(tx, weights) if t & m == m) for m in masks]
    tx, weights = arrays
    if tx.size == 0:
        return [0] * len(masks)
    cand = np.array(masks, dtype=np.uint64)
    out = np.empty(len(masks), dtype=np.int64)
    step = max(1, _CHUNK_CELLS // tx.size)
    for lo in range(0, len(cand), step):
        c = cand[lo : lo + step, None]
        hit = (tx[None, :] & c) == c
        out[lo : lo + step] = hit @ weights
    return out.tolist()


def support_batch(
    xs: Iterable[ItemSet], db: TransactionDb, metrics: RunMetrics | None = None
) -> dict[ItemSet, int]:
    """Count every candidate in one scan. Adds 1 to ``db_scans`` and ``len(xs)`` to ``support_calls``."""
    cands = list(dict.fromkeys(xs))
    for x in cands:
        db.check(x)
    counts = count_masks([x.bits for x in cands], db)
    if metrics is not None:
        metrics.db_scans += 1
        metrics.support_calls += len(cands)
    return dict(zip(cands, counts))
