"""Association rules X => Y from a downward-closed family of frequent itemsets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .core import ItemSet, ItemUniverse, MiningError, TransactionDb, ValidationError
from .support import RunMetrics, support_batch


class ClosureError(MiningError):
    """A rule antecedent's support is missing from the frequent family."""


@dataclass(frozen=True)
class AssociationRule:
    antecedent: ItemSet
    consequent: ItemSet
    support: int
    confidence: Fraction

    def __post_init__(self) -> None:
        if not self.antecedent or not self.consequent:
            raise ValidationError("rule sides must be non-empty")
        if not self.antecedent.isdisjoint(self.consequent):
            raise ValidationError("rule sides must be disjoint")

    def format(self, universe: ItemUniverse) -> str:
        lhs = " ".join(self.antecedent.labels(universe))
        rhs = " ".join(self.consequent.labels(universe))
        return f"{lhs} => {rhs} (sup={self.support}, conf={float(self.confidence):.3f})"


def _as_conf(value: Fraction | float | int | str) -> Fraction:
    try:
        conf = Fraction(repr(value)) if isinstance(value, float) else Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"min_conf must be a number, got {value!r}") from None
    if not 0 <= conf <= 1:
        raise ValidationError(f"min_conf must be within [0, 1], got {value}")
    return conf


def generate_rules(
    frequents: Mapping[ItemSet, int],
    min_conf: Fraction | float | int | str,
    db_size: int | None = None,
) -> list[AssociationRule]:
    """Every rule X => Y with X u Y frequent and confidence >= ``min_conf``.

    Confidence is exact: ``Fraction(support(X u Y), support(X))``. Sorted by
    confidence desc, support desc, then antecedent and consequent indices.
    ``db_size``, when given, is used to reject supports larger than the database.
    """
    conf_floor = _as_conf(min_conf)
    by_bits = {x.bits: s for x, s in frequents.items()}
    if db_size is not None and any(s > db_size for s in by_bits.values()):
        raise ValidationError(f"a support exceeds the database size {db_size}")
    num, den = conf_floor.numerator, conf_floor.denominator
    rules = []
    for z, sz in frequents.items():
        full = z.bits
        if full.bit_count() < 2:
            continue
        # proper non-empty submasks of z as antecedents
        lhs = (full - 1) & full
        while lhs:
            sx = by_bits.get(lhs)
            if sx is None:
                raise ClosureError(
                    f"support of antecedent {ItemSet(lhs, z.width)!r} missing; family is not downward closed"
                )
            if sz * den >= num * sx:
                rules.append(AssociationRule(ItemSet(lhs, z.width), ItemSet(full ^ lhs, z.width), sz, Fraction(sz, sx)))
            lhs = (lhs - 1) & full
    # int/int division is correctly rounded, so for supports far below 2**26
    # equal ratios give equal floats and distinct ratios keep their order
    rules.sort(
        key=lambda r: (
            -r.confidence.numerator / r.confidence.denominator,
            -r.support,
            r.antecedent.indices(),
            r.consequent.indices(),
        )
    )
    return rules


def expand_border(
    border: Iterable[ItemSet], db: TransactionDb, metrics: RunMetrics | None = None
) -> dict[ItemSet, int]:
    """Downward closure of a maximal border, with supports recounted in one extra scan."""
    closure: set[ItemSet] = set()
    for x in border:
        full = x.bits
        sub = full
        while True:
            closure.add(ItemSet(sub, x.width))
            if not sub:
                break
            sub = (sub - 1) & full
    return support_batch(closure, db, metrics)
