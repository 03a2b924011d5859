"""Item universes, bitset itemsets, transaction databases and support thresholds.

Items are 0-indexed internally and shown 1-indexed ("I1".."In") by default,
so bit ``i`` of an itemset corresponds to column ``i`` of a 0/1 matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np


class MiningError(Exception):
    """Base class for errors raised by this package."""


class UniverseMismatchError(MiningError, ValueError):
    """Two objects built over item universes of different widths were combined."""


class ValidationError(MiningError, ValueError):
    """An argument is outside its documented domain."""


def default_labels(size: int) -> tuple[str, ...]:
    return tuple(f"I{i + 1}" for i in range(size))


@dataclass(frozen=True)
class ItemUniverse:
    size: int
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValidationError(f"universe size must be >= 0, got {self.size}")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.size))
            return
        labels = tuple(self.labels)
        if len(labels) != self.size:
            raise ValidationError(f"expected {self.size} labels, got {len(labels)}")
        if any(not lab for lab in labels):
            raise ValidationError("item labels must be non-empty")
        if len(set(labels)) != len(labels):
            raise ValidationError("item labels must be unique")
        object.__setattr__(self, "labels", labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown item {label!r}") from None

    def itemset(self, labels: Iterable[str]) -> ItemSet:
        return ItemSet.from_indices((self.index(lab) for lab in labels), self.size)

    def full(self) -> ItemSet:
        return ItemSet((1 << self.size) - 1, self.size)

    def empty(self) -> ItemSet:
        return ItemSet(0, self.size)


@dataclass(frozen=True, slots=True)
class ItemSet:
    """A set of item indices stored as an int bitmask of fixed ``width``."""

    bits: int
    width: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.width:
            raise ValidationError(f"bits {self.bits:#x} do not fit in width {self.width}")

    @classmethod
    def from_indices(cls, indices: Iterable[int], width: int) -> ItemSet:
        bits = 0
        for i in indices:
            if not 0 <= i < width:
                raise ValidationError(f"item index {i} outside universe of size {width}")
            bits |= 1 << i
        return cls(bits, width)

    @classmethod
    def from_row(cls, row: Sequence[int]) -> ItemSet:
        return cls.from_indices((i for i, v in enumerate(row) if v), len(row))

    def indices(self) -> tuple[int, ...]:
        bits, out = self.bits, []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def to_row(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.width)]

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __contains__(self, item: object) -> bool:
        return isinstance(item, int) and 0 <= item < self.width and bool(self.bits >> item & 1)

    def _check(self, other: ItemSet) -> None:
        if self.width != other.width:
            raise UniverseMismatchError(f"itemset widths differ: {self.width} vs {other.width}")

    def is_subset(self, other: ItemSet) -> bool:
        self._check(other)
        return self.bits & other.bits == self.bits

    def __le__(self, other: ItemSet) -> bool:
        return self.is_subset(other)

    def __lt__(self, other: ItemSet) -> bool:
        return self.is_subset(other) and self.bits != other.bits

    def __or__(self, other: ItemSet) -> ItemSet:
        self._check(other)
        return ItemSet(self.bits | other.bits, self.width)

    def __and__(self, other: ItemSet) -> ItemSet:
        self._check(other)
        return ItemSet(self.bits & other.bits, self.width)

    def __sub__(self, other: ItemSet) -> ItemSet:
        self._check(other)
        return ItemSet(self.bits & ~other.bits, self.width)

    def isdisjoint(self, other: ItemSet) -> bool:
        self._check(other)
        return not self.bits & other.bits

    def labels(self, universe: ItemUniverse) -> list[str]:
        return [universe.labels[i] for i in self.indices()]

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Descending cardinality, then lexicographic by item index."""
        return (-self.cardinality, self.indices())

    def __repr__(self) -> str:
        return "{" + ",".join(f"I{i + 1}" for i in self.indices()) + "}"


def cardinality(x: ItemSet) -> int:
    return x.cardinality


def is_subset(x: ItemSet, y: ItemSet) -> bool:
    return x.is_subset(y)


@dataclass(frozen=True)
class TransactionDb:
    """Immutable ordered list of transactions over one item universe."""

    universe: ItemUniverse
    transactions: tuple[ItemSet, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        txs = tuple(self.transactions)
        for pos, t in enumerate(txs):
            if t.width != self.universe.size:
                raise UniverseMismatchError(
                    f"transaction {pos} has width {t.width}, universe has {self.universe.size} items"
                )
        object.__setattr__(self, "transactions", txs)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> TransactionDb:
        width = len(rows[0]) if rows else len(labels or ())
        universe = ItemUniverse(width, tuple(labels) if labels else ())
        return cls(universe, tuple(ItemSet.from_row(r) for r in rows))

    @classmethod
    def from_masks(cls, masks: Iterable[int], width: int, labels: Sequence[str] | None = None) -> TransactionDb:
        universe = ItemUniverse(width, tuple(labels) if labels else ())
        return cls(universe, tuple(ItemSet(m, width) for m in masks))

    @property
    def width(self) -> int:
        return self.universe.size

    def __len__(self) -> int:
        return len(self.transactions)

    def __iter__(self) -> Iterator[ItemSet]:
        return iter(self.transactions)

    def __getitem__(self, i: int) -> ItemSet:
        return self.transactions[i]

    def check(self, x: ItemSet) -> None:
        if x.width != self.universe.size:
            raise UniverseMismatchError(f"itemset width {x.width} vs database universe {self.universe.size}")

    # Caches below are derived views; the dataclass itself never changes.

    @cached_property
    def weighted(self) -> tuple[list[int], list[int]]:
        """Distinct transaction masks and their multiplicities, in first-seen order."""
        counts: dict[int, int] = {}
        for t in self.transactions:
            counts[t.bits] = counts.get(t.bits, 0) + 1
        return list(counts), list(counts.values())

    @cached_property
    def weighted_array(self) -> tuple[np.ndarray, np.ndarray] | None:
        """``weighted`` as uint64 arrays, or None when the universe exceeds 64 items."""
        if self.universe.size > 64:
            return None
        masks, counts = self.weighted
        return np.array(masks, dtype=np.uint64), np.array(counts, dtype=np.int64)

    @cached_property
    def by_length(self) -> dict[int, frozenset[ItemSet]]:
        buckets: dict[int, set[ItemSet]] = {}
        for t in self.transactions:
            buckets.setdefault(t.cardinality, set()).add(t)
        return {k: frozenset(v) for k, v in buckets.items()}


def _as_fraction(value: Fraction | int | float | str) -> Fraction:
    if isinstance(value, float):
        # go through repr so 33.3 means 333/10, not its binary approximation
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class SupportThreshold:
    """Minimum support as a percentage of the database plus the absolute count it implies."""

    percent: Fraction
    absolute: int

    def __str__(self) -> str:
        pct = float(self.percent)
        pct_s = f"{pct:g}"
        return f"{pct_s}% ({self.absolute} transactions)"


def threshold_from_percent(percent: Fraction | int | float | str, db_size: int) -> SupportThreshold:
    """Convert a percentage to an absolute count: ``max(1, ceil(percent/100 * db_size))``."""
    pct = _as_fraction(percent)
    if not 0 <= pct <= 100:
        raise ValidationError(f"support percent must be within [0, 100], got {float(pct):g}")
    if db_size < 0:
        raise ValidationError("database size must be >= 0")
    absolute = max(1, math.ceil(pct * db_size / 100))
    return SupportThreshold(pct, absolute)


def threshold_from_count(count: int, db_size: int) -> SupportThreshold:
    """Absolute count threshold; the percentage is recorded for display only."""
    if count < 1:
        raise ValidationError(f"absolute support must be >= 1, got {count}")
    pct = Fraction(100 * count, db_size) if db_size else Fraction(100)
    return SupportThreshold(pct, count)
