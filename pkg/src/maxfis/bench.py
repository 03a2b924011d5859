"""Timing and scan-count comparison of the top-down miner against Apriori."""

from __future__ import annotations

import csv
import io
import math
import statistics
from dataclasses import dataclass
from typing import Sequence, TextIO

from .apriori import mine_apriori
from .core import threshold_from_percent
from .dataio import GenerationError, GeneratorSpec, generate, planted_itemset
from .mfif import MfifConfig, Mode, mine_maximal

CSV_HEADER = ("transactions", "algo", "seconds", "db_scans", "candidates")

# seconds reported for the original 20-item, 12-itemset comparison; shown, never asserted
REFERENCE_SECONDS = {
    100: {"mfif": 0.016, "apriori": 0.187},
    500: {"mfif": 0.062, "apriori": 0.422},
    5000: {"mfif": 0.266, "apriori": 1.047},
    10000: {"mfif": 1.156, "apriori": 2.781},
}


@dataclass(frozen=True)
class BenchRow:
    transactions: int
    algo: str
    seconds: float
    db_scans: int
    candidates: int
    support_calls: int = 0


def run_bench(
    sizes: Sequence[int],
    items: int = 20,
    plant_size: int = 12,
    min_sup_percent: float = 20,
    noise: float = 0.01,
    seed: int = 0,
    repetitions: int = 1,
    mode: Mode = Mode.FIRST_ONLY,
) -> list[BenchRow]:
    """One MFIF row and one Apriori row per size; ``seconds`` is the median over repetitions.

    Each dataset plants ``plant_size`` items in ``min_sup_percent`` percent of
    the transactions, so the plant sits exactly at the threshold.
    """
    rows: list[BenchRow] = []
    plant = planted_itemset(items, plant_size, seed)
    for n in sizes:
        occurrences = max(1, math.ceil(n * min_sup_percent / 100))
        try:
            db = generate(GeneratorSpec(n, items, (plant, occurrences), noise, seed))
        except GenerationError as exc:
            raise GenerationError(f"size {n}: {exc}") from exc
        threshold = threshold_from_percent(min_sup_percent, n)
        timings: dict[str, list[float]] = {"mfif": [], "apriori": []}
        for _ in range(repetitions):
            res = mine_maximal(db, threshold, MfifConfig(mode=mode))
            timings["mfif"].append(res.metrics.wall_time)
            _, ap = mine_apriori(db, threshold)
            timings["apriori"].append(ap.wall_time)
        for algo, m in (("mfif", res.metrics), ("apriori", ap)):
            rows.append(
                BenchRow(n, algo, statistics.median(timings[algo]), m.db_scans, m.candidates_generated, m.support_calls)
            )
    return rows


def write_csv(rows: Sequence[BenchRow], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.transactions, r.algo, f"{r.seconds:.6f}", r.db_scans, r.candidates])


def csv_text(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def summary(rows: Sequence[BenchRow]) -> str:
    lines = [f"{'n':>6} {'algo':>8} {'seconds':>10} {'reference':>10} {'scans':>6} {'support calls':>14}"]
    for r in rows:
        ref = REFERENCE_SECONDS.get(r.transactions, {}).get(r.algo)
        ref_s = f"{ref:.3f}" if ref is not None else "-"
        lines.append(
            f"{r.transactions:>6} {r.algo:>8} {r.seconds:>10.4f} {ref_s:>10} {r.db_scans:>6} {r.support_calls:>14}"
        )
    return "\n".join(lines)
