"""Command-line interface: ``maxfis mine|rules|gen|bench``.

Exit codes: 0 success, 1 invalid input or arguments, 2 nothing frequent at
the requested threshold.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from .apriori import maximal_from_levels, mine_apriori
from .bench import csv_text, run_bench, summary
from .core import (
    MiningError,
    SupportThreshold,
    TransactionDb,
    ValidationError,
    threshold_from_count,
    threshold_from_percent,
)
from .dataio import DatasetFormat, GeneratorSpec, generate, planted_itemset, read_db, write
from .mfif import MfifConfig, Mode, mine_maximal, sorted_pairs
from .oracle import oracle_maximal
from .rules import expand_border, generate_rules
from .support import RunMetrics

EXIT_OK, EXIT_ERROR, EXIT_EMPTY = 0, 1, 2

_MODES = {"first": Mode.FIRST_ONLY, "first_only": Mode.FIRST_ONLY, "all": Mode.ALL_MAXIMAL, "all_maximal": Mode.ALL_MAXIMAL}


def parse_min_sup(text: str, db_size: int) -> SupportThreshold:
    """``"20%"`` is a percentage of the database, ``"2"`` an absolute count."""
    text = text.strip()
    if text.endswith("%"):
        try:
            return threshold_from_percent(text[:-1].strip(), db_size)
        except ValidationError:
            raise
        except ValueError:
            raise ValidationError(f"bad support percentage {text!r}") from None
    try:
        count = int(text)
    except ValueError:
        raise ValidationError(f"--min-sup must be like '20%' or an integer count, got {text!r}") from None
    return threshold_from_count(count, db_size)


def _mine(db: TransactionDb, min_sup: SupportThreshold, algo: str, mode: Mode, floor_k: int):
    """Returns (sorted (itemset, support) pairs, metrics or None, warning)."""
    if algo == "mfif":
        res = mine_maximal(db, min_sup, MfifConfig(mode=mode, floor_k=floor_k))
        return res.itemsets, res.metrics, res.warning
    if algo == "apriori":
        levels, metrics = mine_apriori(db, min_sup)
        border = dict(maximal_from_levels(levels))
        metrics_out: RunMetrics | None = metrics
    else:
        border = dict(oracle_maximal(db, min_sup))
        metrics_out = None
    border = {x: s for x, s in border.items() if len(x) >= floor_k or not x}
    if mode is Mode.FIRST_ONLY and border:
        top = max(len(x) for x in border)
        border = {x: s for x, s in border.items() if len(x) == top}
    return sorted_pairs(border), metrics_out, None


def _report(
    db: TransactionDb, pairs, min_sup: SupportThreshold, matrix: bool, algo: str, metrics: RunMetrics | None
) -> tuple[str, int]:
    lines = [f"minimum support: {min_sup}"]
    pairs = [(x, s) for x, s in pairs if len(x)]
    if not pairs:
        lines.append("NO FREQUENT ITEM SET FOUND")
        code = EXIT_EMPTY
    else:
        lines.append("THE FREQUENT ITEM SET IS:" if len(pairs) == 1 else "THE MAXIMAL FREQUENT ITEM SETS ARE:")
        for x, s in pairs:
            if matrix:
                lines.append(" ".join(map(str, x.to_row())))
            lines.append(" ".join(x.labels(db.universe)))
            lines.append(f"support: {s}")
        code = EXIT_OK
    if metrics is not None:
        lines.append(
            f"[{algo}] db_scans={metrics.db_scans} support_calls={metrics.support_calls} "
            f"candidates={metrics.candidates_generated}"
        )
    else:
        lines.append(f"[{algo}] exhaustive enumeration")
    return "\n".join(lines) + "\n", code


def cmd_mine(args: argparse.Namespace) -> int:
    db = read_db(args.input, args.format)
    min_sup = parse_min_sup(args.min_sup, len(db))
    pairs, metrics, _ = _mine(db, min_sup, args.algo, _MODES[args.mode], args.min_k)
    text, code = _report(db, pairs, min_sup, DatasetFormat(args.format) is DatasetFormat.MATRIX, args.algo, metrics)
    sys.stdout.write(text)
    if args.time and metrics is not None:
        print(f"wall time: {metrics.wall_time:.6f} s", file=sys.stderr)
    return code


def cmd_rules(args: argparse.Namespace) -> int:
    db = read_db(args.input, args.format)
    min_sup = parse_min_sup(args.min_sup, len(db))
    res = mine_maximal(db, min_sup, MfifConfig(mode=Mode.ALL_MAXIMAL))
    border = [x for x in res.sets if len(x)]
    if not border:
        print("NO FREQUENT ITEM SET FOUND")
        return EXIT_EMPTY
    frequents = expand_border(border, db, res.metrics)
    rules = generate_rules(frequents, args.min_conf, len(db))
    for rule in rules:
        print(rule.format(db.universe))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    planted = None
    if args.plant_size:
        if args.plant_count > args.transactions:
            raise ValidationError(
                f"--plant-count {args.plant_count} exceeds --transactions {args.transactions}"
            )
        planted = (planted_itemset(args.items, args.plant_size, args.seed), args.plant_count)
    db = generate(GeneratorSpec(args.transactions, args.items, planted, args.noise, args.seed))
    text = write(db, args.format)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = run_bench(
        sizes,
        items=args.items,
        plant_size=args.plant_size,
        min_sup_percent=args.min_sup,
        noise=args.noise,
        seed=args.seed,
        repetitions=args.repetitions,
        mode=_MODES[args.mode],
    )
    text = csv_text(rows)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
        print(summary(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxfis", description="Maximal frequent itemset mining.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("input", help="dataset file")
        sp.add_argument("--format", choices=[f.value for f in DatasetFormat], default="matrix")
        sp.add_argument("--min-sup", required=True, help="'20%%' (percent of transactions) or '2' (count)")

    m = sub.add_parser("mine", help="find maximal frequent itemsets")
    add_input(m)
    m.add_argument("--algo", choices=["mfif", "apriori", "oracle"], default="mfif")
    m.add_argument("--mode", choices=sorted(_MODES), default="all")
    m.add_argument("--min-k", type=int, default=1, help="smallest itemset size searched (default 1)")
    m.add_argument("--time", action="store_true", help="print mining wall time to stderr")
    m.set_defaults(func=cmd_mine)

    r = sub.add_parser("rules", help="strong association rules")
    add_input(r)
    r.add_argument("--min-conf", default="0.5", help="minimum confidence in [0, 1]")
    r.set_defaults(func=cmd_rules)

    g = sub.add_parser("gen", help="generate a synthetic dataset")
    g.add_argument("--transactions", type=int, default=10)
    g.add_argument("--items", type=int, default=20)
    g.add_argument("--plant-size", type=int, default=0, help="items in the planted set (0: no plant)")
    g.add_argument("--plant-count", type=int, default=2, help="transactions containing the plant")
    g.add_argument("--noise", type=float, default=0.05)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=[f.value for f in DatasetFormat], default="matrix")
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="compare MFIF and Apriori on planted datasets")
    b.add_argument("--sizes", default="100,500,5000,10000")
    b.add_argument("--items", type=int, default=20)
    b.add_argument("--plant-size", type=int, default=12)
    b.add_argument("--min-sup", type=float, default=20, help="percent")
    b.add_argument("--noise", type=float, default=0.01)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repetitions", type=int, default=3)
    b.add_argument("--mode", choices=sorted(_MODES), default="first")
    b.add_argument("--output", "-o")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (MiningError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
