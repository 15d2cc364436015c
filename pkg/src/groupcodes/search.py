"""Random search over a group ring for codes that meet best-known parameters.

Every iteration draws its coefficient vector from a Philox stream keyed by
``(seed, iteration)``, so a record can be replayed from those two numbers
alone and a search can be split across processes by iteration range.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .codes import LinearCode, code_from_gmatrix, dual
from .distance import Budget, min_distance_bz
from .formats import FormatError, GroupSpec, parse_group_spec
from .gf2linalg import BitVector, rowspace_equal
from .groupring import GroupRingElement
from .groups import FiniteGroup

__all__ = [
    "BKLCTable",
    "load_bklc",
    "SearchConfig",
    "SearchRecord",
    "sample_element",
    "random_search",
    "replay",
    "record_code",
    "dedup_by_unit",
    "write_records",
    "read_records",
]


class BKLCTable(dict):
    """``(n, k) -> d`` for best known binary linear codes."""

    def best(self, n: int, k: int) -> int | None:
        return self.get((n, k))


def load_bklc(path: str | Path) -> BKLCTable:
    """Read ``n,k,d`` rows (an optional ``n,k,d`` header line is skipped)."""
    table = BKLCTable()
    path = Path(path)
    with path.open(newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), 1):
            cells = [c.strip() for c in row]
            if not cells or not any(cells) or cells[0].startswith("#"):
                continue
            if lineno == 1 and cells == ["n", "k", "d"]:
                continue
            if len(cells) != 3:
                raise FormatError(f"{path}:{lineno}: expected 3 fields 'n,k,d'")
            try:
                n, k, d = (int(c) for c in cells)
            except ValueError as exc:
                raise FormatError(f"{path}:{lineno}: non-integer field") from exc
            if min(n, k, d) < 1 or k > n:
                raise FormatError(f"{path}:{lineno}: need positive n, k, d with k <= n")
            if d > n - k + 1:
                raise FormatError(f"{path}:{lineno}: d={d} violates the Singleton bound n-k+1={n - k + 1}")
            if (n, k) in table:
                raise FormatError(f"{path}:{lineno}: duplicate entry for (n,k)=({n},{k})")
            table[(n, k)] = d
    return table


@dataclass
class SearchConfig:
    group: GroupSpec
    iterations: int = 100
    seed: int = 0
    budget: Budget = field(default_factory=Budget.from_env)
    weight: int | None = None
    start: int = 0
    fixed_v: str | None = None
    emit_all: bool = False

    def __post_init__(self) -> None:
        if isinstance(self.group, str):
            self.group = parse_group_spec(self.group)
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")


@dataclass
class SearchRecord:
    psi: str
    group: str
    side: str
    n: int
    k: int
    lower: int
    upper: int
    certified: bool
    best_known: int | None
    seed: int
    iteration: int
    timestamp: float = 0.0

    def key(self) -> tuple:
        d = asdict(self)
        d.pop("timestamp")
        return tuple(d.values())

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> SearchRecord:
        return cls(**json.loads(line))


def sample_element(group: FiniteGroup, seed: int, iteration: int, weight: int | None = None) -> GroupRingElement:
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, iteration])))
    n = group.order
    if weight is None:
        bits = rng.integers(0, 2, size=n, dtype=np.uint8)
    else:
        if not 0 <= weight <= n:
            raise ValueError(f"weight {weight} outside 0..{n}")
        bits = np.zeros(n, dtype=np.uint8)
        bits[rng.choice(n, size=weight, replace=False)] = 1
    return GroupRingElement(group, BitVector.from_iter(bits))


def _evaluate(code: LinearCode, target: int | None, budget: Budget):
    if target is None:
        return min_distance_bz(code, budget)
    return min_distance_bz(code, budget, give_up_below=target)


def random_search(cfg: SearchConfig, table: BKLCTable, group: FiniteGroup | None = None) -> Iterator[SearchRecord]:
    """Yield a record for every code (or dual) whose distance bounds reach the
    best-known value at its ``(n, k)``; ties count.  With ``emit_all`` every
    nonzero candidate is reported."""
    group = group or cfg.group.build()
    label = str(cfg.group)
    for it in range(cfg.start, cfg.start + cfg.iterations):
        if cfg.fixed_v is not None:
            v = GroupRingElement.from_str(group, cfg.fixed_v)
        else:
            v = sample_element(group, cfg.seed, it, cfg.weight)
        c = code_from_gmatrix(v)
        for side, code in (("code", c), ("dual", dual(c))):
            if code.k < 1:
                continue
            best = table.best(code.n, code.k)
            if best is None and not cfg.emit_all:
                continue
            res = _evaluate(code, None if cfg.emit_all else best, cfg.budget)
            if not cfg.emit_all and res.upper < best:
                continue
            yield SearchRecord(
                psi=v.coeffs.to_str(),
                group=label,
                side=side,
                n=code.n,
                k=code.k,
                lower=res.lower,
                upper=res.upper,
                certified=res.certified,
                best_known=best,
                seed=cfg.seed,
                iteration=it,
                timestamp=time.time(),
            )


def replay(rec: SearchRecord, weight: int | None = None, group: FiniteGroup | None = None) -> GroupRingElement:
    """Regenerate the coefficient vector from ``(seed, iteration)``."""
    group = group or parse_group_spec(rec.group).build()
    return sample_element(group, rec.seed, rec.iteration, weight)


def record_code(rec: SearchRecord, group: FiniteGroup | None = None) -> LinearCode:
    group = group or parse_group_spec(rec.group).build()
    c = code_from_gmatrix(GroupRingElement.from_str(group, rec.psi))
    return c if rec.side == "code" else dual(c)


def dedup_by_unit(records: Iterable[SearchRecord]) -> list[SearchRecord]:
    """Drop records whose code coincides with an earlier record's code.

    Distinct vectors ``v`` and ``u v`` (``u`` a unit) give the same code, so
    raw search output is full of repeats.
    """
    groups: dict[str, FiniteGroup] = {}
    kept: list[tuple[SearchRecord, LinearCode]] = []
    for rec in records:
        g = groups.get(rec.group)
        if g is None:
            g = groups[rec.group] = parse_group_spec(rec.group).build()
        code = record_code(rec, g)
        if any(
            r.side == rec.side and (r.n, r.k) == (rec.n, rec.k) and rowspace_equal(c.gen, code.gen)
            for r, c in kept
        ):
            continue
        kept.append((rec, code))
    return [r for r, _ in kept]


def write_records(records: Iterable[SearchRecord], path: str | Path | None = None, fh=None) -> int:
    """Append records as JSON lines; returns how many were written."""
    count = 0
    if fh is None:
        with Path(path).open("a") as out:
            return write_records(records, fh=out)
    for rec in records:
        fh.write(rec.to_json() + "\n")
        fh.flush()
        count += 1
    return count


def read_records(path: str | Path) -> list[SearchRecord]:
    out = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            out.append(SearchRecord.from_json(line))
    return out
