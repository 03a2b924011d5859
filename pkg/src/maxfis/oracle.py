"""Brute-force ground truth: enumerate every itemset of a small universe.

Deliberately shares no counting code with the miners.
"""

from __future__ import annotations

import numpy as np

from .core import ItemSet, MiningError, SupportThreshold, TransactionDb

DEFAULT_LIMIT = 20


class UniverseTooLargeError(MiningError):
    pass


def _all_supports(db: TransactionDb, limit: int) -> np.ndarray:
    n = db.width
    if n > limit:
        raise UniverseTooLargeError(f"oracle enumerates 2^n itemsets; n={n} exceeds limit {limit}")
    masks = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(1 << n, dtype=np.int64)
    for t in db.transactions:
        counts += (masks & t.bits) == masks
    return counts


def oracle_frequent(
    db: TransactionDb, min_sup: SupportThreshold, limit: int = DEFAULT_LIMIT
) -> dict[ItemSet, int]:
    """Every itemset (including the empty one) with support >= threshold, in numeric bit order."""
    counts = _all_supports(db, limit)
    hits = np.flatnonzero(counts >= min_sup.absolute)
    return {ItemSet(int(m), db.width): int(counts[m]) for m in hits}


def oracle_maximal(
    db: TransactionDb, min_sup: SupportThreshold, limit: int = DEFAULT_LIMIT
) -> set[tuple[ItemSet, int]]:
    """Frequent itemsets with no frequent strict superset.

    The empty itemset is returned only when it is the sole frequent set.
    """
    counts = _all_supports(db, limit)
    n = db.width
    masks = np.arange(1 << n, dtype=np.int64)
    frequent = counts >= min_sup.absolute
    # above[m]: some superset of m (m included) is frequent
    above = frequent.copy()
    for i in range(n):
        lacking = masks[(masks >> i & 1) == 0]
        above[lacking] |= above[lacking | (1 << i)]
    strict = np.zeros_like(frequent)
    for i in range(n):
        lacking = masks[(masks >> i & 1) == 0]
        strict[lacking] |= above[lacking | (1 << i)]
    hits = np.flatnonzero(frequent & ~strict)
    return {(ItemSet(int(m), n), int(counts[m])) for m in hits}
