"""Reading and writing transaction databases, plus a planted-pattern generator.

Two text formats are supported:

* ``matrix``: one transaction per line, whitespace-separated ``0``/``1``
  tokens, column ``j`` is item ``I{j+1}``.
* ``basket``: one transaction per line, comma-separated item names; a blank
  line is an empty transaction. An optional first line ``#items: a,b,c``
  fixes the universe and its order, otherwise the universe is the sorted
  set of names seen.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .core import ItemSet, ItemUniverse, MiningError, TransactionDb, ValidationError

ITEMS_HEADER = "#items:"


class ParseError(MiningError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class GenerationError(MiningError):
    pass


class DatasetFormat(str, enum.Enum):
    MATRIX = "matrix"
    BASKET = "basket"


def parse_matrix(text: str, labels: Sequence[str] | None = None) -> TransactionDb:
    """Parse 0/1 rows. Passing ``labels`` fixes the universe, which is the only way
    a database with no transactions keeps its width."""
    rows: list[list[int]] = []
    width = len(labels) if labels is not None else None
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        row = []
        for col, tok in enumerate(tokens, start=1):
            if tok not in ("0", "1"):
                raise ParseError(f"expected 0 or 1, got {tok!r}", lineno, col)
            row.append(tok == "1")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} columns, expected {width}", lineno)
        rows.append(row)
    universe = ItemUniverse(width or 0, tuple(labels) if labels else ())
    return TransactionDb(universe, tuple(ItemSet.from_row(r) for r in rows))


def write_matrix(db: TransactionDb) -> str:
    return "".join(" ".join(map(str, t.to_row())) + "\n" for t in db.transactions)


def parse_basket(text: str) -> TransactionDb:
    lines = text.splitlines()
    declared = None
    if lines and lines[0].startswith(ITEMS_HEADER):
        body = lines[0][len(ITEMS_HEADER):].strip()
        declared = [tok.strip() for tok in body.split(",")] if body else []
        lines = lines[1:]
    baskets = [{tok.strip() for tok in line.split(",") if tok.strip()} for line in lines]
    if declared is None:
        names = sorted(set().union(*baskets)) if baskets else []
    else:
        names = declared
    universe = ItemUniverse(len(names), tuple(names))
    pos = {name: i for i, name in enumerate(names)}
    txs = []
    for lineno, basket in enumerate(baskets, start=2 if declared is not None else 1):
        unknown = basket - pos.keys()
        if unknown:
            raise ParseError(f"item {sorted(unknown)[0]!r} not in declared universe", lineno)
        txs.append(ItemSet.from_indices((pos[b] for b in basket), len(names)))
    return TransactionDb(universe, tuple(txs))


def write_basket(db: TransactionDb, header: bool = True) -> str:
    labels = db.universe.labels
    for lab in labels:
        if "," in lab or "\n" in lab or lab != lab.strip():
            raise ValidationError(f"label {lab!r} cannot be written in basket format")
    out = []
    if header:
        out.append(ITEMS_HEADER + " " + ",".join(labels) + "\n")
    for t in db.transactions:
        out.append(",".join(labels[i] for i in t.indices()) + "\n")
    return "".join(out)


def parse(text: str, fmt: DatasetFormat | str) -> TransactionDb:
    fmt = DatasetFormat(fmt)
    return parse_matrix(text) if fmt is DatasetFormat.MATRIX else parse_basket(text)


def write(db: TransactionDb, fmt: DatasetFormat | str) -> str:
    fmt = DatasetFormat(fmt)
    return write_matrix(db) if fmt is DatasetFormat.MATRIX else write_basket(db)


def read_db(path: str | Path, fmt: DatasetFormat | str) -> TransactionDb:
    return parse(Path(path).read_text(encoding="utf-8"), fmt)


def write_db(db: TransactionDb, path: str | Path, fmt: DatasetFormat | str) -> None:
    Path(path).write_text(write(db, fmt), encoding="utf-8")


@dataclass(frozen=True)
class GeneratorSpec:
    transactions: int
    items: int
    planted: tuple[ItemSet, int] | None = None
    noise_density: float = 0.05
    seed: int = 0
    max_attempts: int = 20

    def __post_init__(self) -> None:
        if self.transactions < 0 or self.items < 0:
            raise ValidationError("transactions and items must be >= 0")
        if not 0 <= self.noise_density <= 1:
            raise ValidationError(f"noise_density must be within [0, 1], got {self.noise_density}")
        if self.planted is not None:
            plant, occ = self.planted
            if plant.width != self.items:
                raise ValidationError(f"planted itemset width {plant.width} != items {self.items}")
            if not plant:
                raise ValidationError("planted itemset must be non-empty")
            if not 1 <= occ <= self.transactions:
                raise ValidationError(
                    f"planted occurrences must be within [1, {self.transactions}], got {occ}"
                )


def _attempt(spec: GeneratorSpec, rng: np.random.Generator) -> np.ndarray | None:
    cells = rng.random((spec.transactions, spec.items)) < spec.noise_density
    if spec.planted is None:
        return cells
    plant, occ = spec.planted
    cols = np.array(plant.indices())
    rows = np.sort(rng.choice(spec.transactions, size=occ, replace=False))
    cells[np.ix_(rows, cols)] = True
    others = np.setdiff1d(np.arange(spec.transactions), rows)
    # noise must not complete the plant outside its chosen rows
    full = others[cells[np.ix_(others, cols)].all(axis=1)]
    if full.size:
        drop = cols[rng.integers(0, cols.size, size=full.size)]
        cells[full, drop] = False
    # an outside item present in every plant row would extend the plant at equal support
    outside = np.setdiff1d(np.arange(spec.items), cols)
    if outside.size and cells[np.ix_(rows, outside)].all(axis=0).any():
        return None
    return cells


def generate(spec: GeneratorSpec) -> TransactionDb:
    """Deterministic random database for ``spec.seed``.

    With a plant ``(X, occ)``, exactly ``occ`` transactions contain ``X`` and
    no strict superset of ``X`` reaches ``occ`` occurrences. Other cells are
    1 independently with probability ``noise_density``.
    """
    for attempt in range(spec.max_attempts):
        rng = np.random.default_rng([spec.seed, attempt])
        cells = _attempt(spec, rng)
        if cells is not None:
            return TransactionDb.from_masks(
                (int(sum(1 << int(j) for j in np.flatnonzero(row))) for row in cells), spec.items
            )
    raise GenerationError(
        f"could not plant a dominant itemset in {spec.max_attempts} attempts "
        f"(noise_density={spec.noise_density})"
    )


def planted_itemset(items: int, size: int, seed: int) -> ItemSet:
    """A seeded random choice of ``size`` items, used as a default plant."""
    if not 1 <= size <= items:
        raise ValidationError(f"plant size must be within [1, {items}], got {size}")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(items, size=size, replace=False)
    return ItemSet.from_indices((int(i) for i in chosen), items)
