"""Top-down maximal frequent itemset search (Maximal Frequent Item First).

The search starts from the longest transactions, counts their support
against the whole database, and when a level yields nothing new it moves
one cardinality down: every infrequent candidate is replaced by its
drop-one-item subsets, merged with the distinct transactions of that
smaller length. Only one level of candidates exists at any time.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass, field

from .core import ItemSet, SupportThreshold, TransactionDb, ValidationError
from .support import RunMetrics, support_batch

log = logging.getLogger(__name__)


class Mode(str, enum.Enum):
    ALL_MAXIMAL = "all_maximal"
    FIRST_ONLY = "first_only"


@dataclass(frozen=True)
class MfifConfig:
    mode: Mode = Mode.ALL_MAXIMAL
    # smallest cardinality the search descends to; >1 reproduces the
    # "maximal set covers at least half the items" shortcut
    floor_k: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.floor_k < 1:
            raise ValidationError(f"floor_k must be >= 1, got {self.floor_k}")

    def validate(self, universe_size: int) -> None:
        if universe_size >= 1 and self.floor_k > universe_size:
            raise ValidationError(f"floor_k {self.floor_k} exceeds universe size {universe_size}")


@dataclass
class LevelState:
    k: int
    candidates: frozenset[ItemSet]
    found: dict[ItemSet, int] = field(default_factory=dict)


@dataclass(frozen=True)
class MiningResult:
    """Mined itemsets with their supports, sorted by descending size then item index."""

    itemsets: tuple[tuple[ItemSet, int], ...]
    threshold: SupportThreshold
    metrics: RunMetrics
    algorithm: str
    warning: str | None = None

    @property
    def sets(self) -> frozenset[ItemSet]:
        return frozenset(x for x, _ in self.itemsets)

    @property
    def supports(self) -> dict[ItemSet, int]:
        return dict(self.itemsets)

    def __len__(self) -> int:
        return len(self.itemsets)


def sorted_pairs(pairs: dict[ItemSet, int]) -> tuple[tuple[ItemSet, int], ...]:
    return tuple(sorted(pairs.items(), key=lambda p: p[0].sort_key()))


def transaction_lengths(db: TransactionDb, metrics: RunMetrics | None = None) -> list[int]:
    """Item count of every transaction, in order. Counts as one database scan."""
    if metrics is not None:
        metrics.db_scans += 1
    return [t.cardinality for t in db.transactions]


def seed_candidates(db: TransactionDb, k: int) -> set[ItemSet]:
    """Distinct transactions with exactly ``k`` items."""
    if k < 0:
        raise ValidationError("k must be >= 0")
    return set(db.by_length.get(k, ()))


def subsets_one_smaller(x: ItemSet) -> set[ItemSet]:
    """All ``len(x)`` subsets obtained by dropping a single item."""
    return {ItemSet(x.bits & ~(1 << i), x.width) for i in x.indices()}


def _covered(bits: int, found: dict[ItemSet, int]) -> bool:
    return any(bits & f.bits == bits for f in found)


def descend(
    state: LevelState, db: TransactionDb, metrics: RunMetrics | None = None
) -> LevelState:
    """Move to level ``k - 1``.

    Candidates of the current level that are not in ``state.found`` are
    treated as infrequent and split into their drop-one subsets; those are
    merged with the length ``k - 1`` transactions, and anything already
    covered by a found itemset is discarded.
    """
    if state.k < 1:
        raise ValidationError("cannot descend below k = 0")
    pool: set[ItemSet] = set()
    for c in state.candidates:
        if c not in state.found:
            pool |= subsets_one_smaller(c)
    pool |= seed_candidates(db, state.k - 1)
    if metrics is not None:
        metrics.candidates_generated += len(pool)
    kept = frozenset(c for c in pool if not _covered(c.bits, state.found))
    return LevelState(state.k - 1, kept, state.found)


def mine_maximal(
    db: TransactionDb, min_sup: SupportThreshold, config: MfifConfig | None = None
) -> MiningResult:
    """Maximal frequent itemsets by top-down search.

    ``first_only`` stops at the first (largest) level holding a frequent
    candidate. ``all_maximal`` keeps descending to ``floor_k`` and returns
    the whole border. The empty itemset is reported only when it is the
    sole frequent itemset and the search went all the way down.
    """
    config = config or MfifConfig()
    config.validate(db.width)
    metrics = RunMetrics()
    start = time.perf_counter()
    threshold = min_sup.absolute

    def finish(found: dict[ItemSet, int], warning: str | None = None) -> MiningResult:
        metrics.wall_time = time.perf_counter() - start
        if warning:
            log.warning(warning)
        return MiningResult(sorted_pairs(found), min_sup, metrics, "mfif", warning)

    if threshold > len(db):
        return finish({}, f"threshold {threshold} exceeds database size {len(db)}; nothing is frequent")

    lengths = transaction_lengths(db, metrics)
    k = max(lengths, default=0)
    state = LevelState(k, frozenset(seed_candidates(db, k)), {})
    metrics.candidates_generated += len(state.candidates)

    while state.k >= config.floor_k:
        if state.candidates:
            counts = support_batch(state.candidates, db, metrics)
            frequent = {c: s for c, s in counts.items() if s >= threshold}
            # same-size candidates cannot contain each other, and covered ones
            # were pruned on the way in, so every hit here is maximal
            state.found.update(frequent)
            if frequent and config.mode is Mode.FIRST_ONLY:
                break
        if state.k == config.floor_k:
            break
        state = descend(state, db, metrics)

    if state.found:
        return finish(state.found)
    if config.floor_k == 1:
        # nothing non-empty is frequent, but len(db) >= threshold
        return finish({ItemSet(0, db.width): len(db)}, "only the empty itemset is frequent")
    return finish({}, f"no frequent itemset with at least {config.floor_k} items")
