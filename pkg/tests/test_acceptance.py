"""Exit criteria for the package, one test (or test group) per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per criterion
in the terminal summary.
"""

import random
import time

import pytest

from maxfis.apriori import frequent_family, maximal_from_levels, mine_apriori
from maxfis.bench import REFERENCE_SECONDS, run_bench
from maxfis.cli import main
from maxfis.core import ItemSet, TransactionDb, threshold_from_count, threshold_from_percent
from maxfis.dataio import (
    GeneratorSpec,
    generate,
    parse_basket,
    parse_matrix,
    planted_itemset,
    write_basket,
    write_matrix,
)
from maxfis.mfif import MfifConfig, Mode, mine_maximal
from maxfis.oracle import oracle_frequent, oracle_maximal
from maxfis.support import support

from .conftest import EXAMPLE_PATH

FIRST = MfifConfig(mode=Mode.FIRST_ONLY)
N_INSTANCES = 200


def _instance(seed: int):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    m = rng.randint(1, 30)
    p = rng.uniform(0.15, 0.85)
    db = TransactionDb.from_masks([sum(1 << i for i in range(n) if rng.random() < p) for _ in range(m)], n)
    return db, threshold_from_percent(rng.randint(10, 60), m)


@pytest.fixture(scope="module")
def instances():
    return [_instance(seed) for seed in range(N_INSTANCES)]


@pytest.mark.criterion(1, "example matrix at 20% first_only gives the 12-itemset with support 2, < 1 s")
def test_c1_example_golden(capsys):
    start = time.perf_counter()
    code = main(["mine", str(EXAMPLE_PATH), "--min-sup", "20%", "--mode", "first"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[1:5] == [
        "THE FREQUENT ITEM SET IS:",
        "0 1 1 1 1 1 0 0 0 0 0 1 1 1 1 1 1 0 0 1",
        "I2 I3 I4 I5 I6 I12 I13 I14 I15 I16 I17 I20",
        "support: 2",
    ]
    assert elapsed < 1.0


@pytest.mark.criterion(2, "scan counts on the example matrix: Apriori 12, MFIF first_only 2")
def test_c2_scan_counts(example_db):
    t = threshold_from_percent(20, 10)
    _, ap = mine_apriori(example_db, t)
    res = mine_maximal(example_db, t, FIRST)
    print(f"apriori db_scans={ap.db_scans}  mfif db_scans={res.metrics.db_scans}")
    assert ap.db_scans == 12
    assert res.metrics.db_scans == 2


@pytest.mark.criterion(3, "200 random dbs: MFIF == oracle border, Apriori == oracle family, < 60 s")
def test_c3_oracle_equivalence(instances):
    start = time.perf_counter()
    for db, t in instances:
        assert set(mine_maximal(db, t).itemsets) == oracle_maximal(db, t)
        levels, _ = mine_apriori(db, t)
        assert frequent_family(levels) == oracle_frequent(db, t)
    elapsed = time.perf_counter() - start
    print(f"{len(instances)} instances in {elapsed:.2f} s")
    assert elapsed < 60


@pytest.mark.criterion(4, "maximal sets from Apriori levels == MFIF all_maximal on the same 200 dbs")
def test_c4_cross_algorithm(instances):
    for db, t in instances:
        levels, _ = mine_apriori(db, t)
        assert maximal_from_levels(levels) == set(mine_maximal(db, t).itemsets)


@pytest.mark.criterion(5, "downward closure of the MFIF border == oracle frequent family")
def test_c5_border_closure(instances):
    for db, t in instances:
        border = [x.bits for x in mine_maximal(db, t).sets]
        closure = {y for y in range(1 << db.width) if any(y & b == y for b in border)}
        assert closure == {x.bits for x in oracle_frequent(db, t)}


@pytest.mark.criterion(6, ">= 1000 random X subset Y pairs: support(X) >= support(Y)")
def test_c6_anti_monotone():
    rng = random.Random(2024)
    pairs = violations = 0
    while pairs < 1200:
        db, _ = _instance(rng.randrange(10**9))
        for _ in range(40):
            y = rng.getrandbits(db.width)
            x = y & rng.getrandbits(db.width)
            pairs += 1
            if support(ItemSet(x, db.width), db) < support(ItemSet(y, db.width), db):
                violations += 1
    print(f"{pairs} pairs, {violations} violations")
    assert violations == 0


@pytest.mark.criterion(7, "planted 12-of-20 benchmarks: MFIF fewer scans and support calls at every size, < 5 min")
def test_c7_bench_trend():
    start = time.perf_counter()
    rows = run_bench([100, 500, 5000, 10000], items=20, plant_size=12, min_sup_percent=20, seed=0)
    elapsed = time.perf_counter() - start
    by = {(r.transactions, r.algo): r for r in rows}
    for n in (100, 500, 5000, 10000):
        mf, ap = by[n, "mfif"], by[n, "apriori"]
        ref = REFERENCE_SECONDS[n]
        print(
            f"n={n:>5}  mfif {mf.seconds:.4f}s scans={mf.db_scans} calls={mf.support_calls}"
            f"  |  apriori {ap.seconds:.4f}s scans={ap.db_scans} calls={ap.support_calls}"
            f"  |  reference {ref['mfif']}s / {ref['apriori']}s"
        )
        assert mf.db_scans < ap.db_scans
        assert mf.support_calls < ap.support_calls
    assert elapsed < 300
    # the counts only mean something if MFIF actually found the plant
    plant = planted_itemset(20, 12, 0)
    db = generate(GeneratorSpec(10000, 20, (plant, 2000), 0.01, seed=0))
    assert mine_maximal(db, threshold_from_percent(20, 10000), FIRST).sets == {plant}


@pytest.mark.criterion(8, "2-item maximal set: floor_k=1 matches oracle, floor_k=10 returns empty with a warning")
def test_c8_small_maximal_set():
    plant = ItemSet.from_indices([3, 11], 20)
    db = generate(GeneratorSpec(30, 20, (plant, 10), 0.05, seed=8))
    t = threshold_from_count(10, len(db))
    expected = oracle_maximal(db, t)
    assert expected == {(plant, 10)}
    assert set(mine_maximal(db, t).itemsets) == expected
    capped = mine_maximal(db, t, MfifConfig(floor_k=10))
    assert capped.itemsets == ()
    assert capped.warning


@pytest.mark.criterion(9, "parse(write(db)) == db for 100 random dbs in both formats; gen is byte-identical")
def test_c9_round_trip_and_determinism(tmp_path):
    for seed in range(100):
        db, _ = _instance(10_000 + seed)
        assert parse_matrix(write_matrix(db), labels=db.universe.labels) == db
        assert parse_basket(write_basket(db)) == db
    outputs = []
    for name in ("a.txt", "b.txt"):
        path = tmp_path / name
        argv = ["gen", "--transactions", "10", "--items", "20", "--plant-size", "12", "--plant-count", "2",
                "--seed", "1", "--output", str(path)]
        assert main(argv) == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
