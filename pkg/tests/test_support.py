import random

import pytest

from maxfis.core import ItemSet, TransactionDb, UniverseMismatchError
from maxfis.support import RunMetrics, support, support_batch

from .conftest import example_answer_indices, random_db


def brute_support(x: ItemSet, db: TransactionDb) -> int:
    return sum(all(i in t.indices() for i in x.indices()) for t in db)


def test_support_examples(example_db):
    assert support(ItemSet(0, 20), example_db) == 10
    # column 2 of the matrix is all ones
    assert support(ItemSet.from_indices([1], 20), example_db) == 10
    assert support(ItemSet.from_indices(example_answer_indices(), 20), example_db) == 2


def test_support_width_mismatch(example_db):
    with pytest.raises(UniverseMismatchError):
        support(ItemSet(1, 3), example_db)
    with pytest.raises(UniverseMismatchError):
        support_batch([ItemSet(1, 3)], example_db)


def test_batch_empty_candidates_still_scans(example_db):
    m = RunMetrics()
    assert support_batch([], example_db, m) == {}
    assert m.db_scans == 1 and m.support_calls == 0


def test_batch_empty_itemset(example_db):
    m = RunMetrics()
    assert support_batch([ItemSet(0, 20)], example_db, m) == {ItemSet(0, 20): 10}
    assert m.support_calls == 1


def test_batch_over_distinct_rows(example_db):
    rows = set(example_db)
    m = RunMetrics()
    counts = support_batch(rows, example_db, m)
    assert counts == {r: brute_support(r, example_db) for r in rows}
    assert counts[ItemSet.from_indices(example_answer_indices(), 20)] == 2
    assert m.db_scans == 1 and m.support_calls == len(rows) == 9


def test_batch_on_empty_db():
    db = TransactionDb.from_masks([], 4)
    assert support_batch([ItemSet(3, 4), ItemSet(0, 4)], db) == {ItemSet(3, 4): 0, ItemSet(0, 4): 0}


def test_wide_universe_fallback():
    # more than 64 items takes the pure-Python path
    width = 70
    db = TransactionDb.from_masks([(1 << 69) | 1, 1, (1 << 69)], width)
    xs = [ItemSet(1, width), ItemSet(1 << 69, width), ItemSet((1 << 69) | 1, width)]
    assert support_batch(xs, db) == {x: brute_support(x, db) for x in xs}


@pytest.mark.parametrize("seed", range(20))
def test_batch_agrees_with_single(seed):
    rng = random.Random(seed)
    db = random_db(rng)
    xs = {ItemSet(rng.getrandbits(db.width), db.width) for _ in range(30)}
    batch = support_batch(xs, db)
    for x in xs:
        assert batch[x] == support(x, db) == brute_support(x, db)


@pytest.mark.parametrize("seed", range(20))
def test_anti_monotone_and_bounded(seed):
    rng = random.Random(1000 + seed)
    db = random_db(rng)
    full = (1 << db.width) - 1
    for _ in range(50):
        y = rng.getrandbits(db.width)
        x = y & rng.getrandbits(db.width)
        sx, sy = support(ItemSet(x, db.width), db), support(ItemSet(y, db.width), db)
        assert sx >= sy
        assert sy <= len(db)
        everywhere = all(t.bits & y == y for t in db)
        assert (sy == len(db)) == everywhere
    assert support(ItemSet(full, db.width), db) == sum(t.bits == full for t in db)
