"""Maximal frequent itemset mining: top-down MFIF search, Apriori baseline, brute-force oracle."""

from .apriori import apriori_join, apriori_prune, maximal_from_levels, mine_apriori
from .core import (
    ItemSet,
    ItemUniverse,
    MiningError,
    SupportThreshold,
    TransactionDb,
    UniverseMismatchError,
    ValidationError,
    cardinality,
    is_subset,
    threshold_from_count,
    threshold_from_percent,
)
from .mfif import MfifConfig, MiningResult, Mode, mine_maximal
from .oracle import oracle_frequent, oracle_maximal
from .rules import AssociationRule, generate_rules
from .support import RunMetrics, support, support_batch

__all__ = [
    "AssociationRule",
    "ItemSet",
    "ItemUniverse",
    "MfifConfig",
    "MiningError",
    "MiningResult",
    "Mode",
    "RunMetrics",
    "SupportThreshold",
    "TransactionDb",
    "UniverseMismatchError",
    "ValidationError",
    "apriori_join",
    "apriori_prune",
    "cardinality",
    "generate_rules",
    "is_subset",
    "maximal_from_levels",
    "mine_apriori",
    "mine_maximal",
    "oracle_frequent",
    "oracle_maximal",
    "support",
    "support_batch",
    "threshold_from_count",
    "threshold_from_percent",
]
