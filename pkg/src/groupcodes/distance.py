"""Minimum distance of binary linear codes.

Three entry points:

* :func:`min_distance_bruteforce` walks every nonzero codeword (k <= 28).
* :func:`min_distance_bz` is the Brouwer-Zimmermann algorithm with disjoint
  information sets; it returns certified bounds or, when the budget runs
  out, honest lower/upper bounds with a witness for the upper one.
* :func:`find_word_of_weight_at_most` samples random information sets and
  looks for a short codeword (upper-bound witnesses for large codes).
"""

from __future__ import annotations

import logging
import math
import os
import time
from dataclasses import asdict, dataclass, field

import numba
import numpy as np

from . import _kernels
from .codes import LinearCode
from .gf2linalg import BitMatrix, BitVector, rref

log = logging.getLogger(__name__)

__all__ = [
    "Budget",
    "DistanceResult",
    "InformationSet",
    "information_sets",
    "bz_lower_bound",
    "min_distance_bruteforce",
    "min_distance_bz",
    "find_word_of_weight_at_most",
    "BRUTE_FORCE_MAX_K",
]

BRUTE_FORCE_MAX_K = 28
DEFAULT_SECONDS = 15 * 60.0
DEFAULT_WORK = 1 << 35
_CHUNK_WORK = 1 << 24
_TASK_WORK = 1 << 21


def _env_number(name: str, default, cast):
    raw = os.environ.get(name)
    return default if raw is None else cast(raw)


@dataclass(frozen=True)
class Budget:
    """Wall-clock seconds and codeword visits; ``None`` means unlimited."""

    seconds: float | None = DEFAULT_SECONDS
    work: int | None = DEFAULT_WORK
    threads: int | None = None

    @classmethod
    def from_env(cls) -> Budget:
        """Defaults, overridable by ``GROUPCODES_BUDGET_SECONDS`` / ``GROUPCODES_BUDGET_WORK``."""
        return cls(
            seconds=_env_number("GROUPCODES_BUDGET_SECONDS", DEFAULT_SECONDS, float),
            work=_env_number("GROUPCODES_BUDGET_WORK", DEFAULT_WORK, int),
        )

    @classmethod
    def unlimited(cls) -> Budget:
        return cls(None, None)


@dataclass
class DistanceResult:
    lower: int
    upper: int
    witness: BitVector
    certified: bool
    work: int = 0
    elapsed: float = 0.0
    rounds: list[tuple[int, int, int]] = field(default_factory=list)
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.witness.weight() != self.upper:
            raise ValueError("witness weight differs from the upper bound")
        if self.certified and self.lower != self.upper:
            raise ValueError("certified result must have lower == upper")

    @property
    def d(self) -> int | None:
        return self.upper if self.certified else None

    def contains(self, d: int) -> bool:
        return self.lower <= d <= self.upper

    def to_record(self) -> dict:
        rec = asdict(self)
        rec["witness"] = self.witness.to_str()
        rec.pop("rounds")
        return rec


def _set_threads(budget: Budget) -> None:
    if budget.threads:
        numba.set_num_threads(min(budget.threads, numba.config.NUMBA_NUM_THREADS))


def _witness(rows, combo, n: int) -> BitVector:
    acc = 0
    for i in combo:
        acc ^= rows[int(i)]
    return BitVector(n, acc)


def min_distance_bruteforce(c: LinearCode) -> DistanceResult:
    k = c.k
    if not 1 <= k <= BRUTE_FORCE_MAX_K:
        raise ValueError(f"brute force needs 1 <= k <= {BRUTE_FORCE_MAX_K}, got k={k}")
    t0 = time.perf_counter()
    rows = c.gen.data
    best, gi = _kernels.gray_all(_kernels.pack_rows(rows, c.n))
    pattern = int(gi) ^ (int(gi) >> 1)
    combo = [i for i in range(k) if (pattern >> i) & 1]
    w = _witness(rows, combo, c.n)
    return DistanceResult(
        int(best), int(best), w, True, work=(1 << k) - 1, elapsed=time.perf_counter() - t0
    )


@dataclass(frozen=True)
class InformationSet:
    """Generator in systematic form on ``columns`` (rank ``len(columns)``);
    the remaining ``deficit`` rows vanish on those columns."""

    columns: tuple[int, ...]
    rows: tuple[int, ...]
    deficit: int


def information_sets(gen: BitMatrix) -> list[InformationSet]:
    """Disjoint information sets chosen greedily from left to right.

    Each pass row-reduces the generator with the not-yet-used columns
    ordered first; the pivots it finds there form the next set.
    """
    n, k = gen.cols, gen.rows
    remaining = list(range(n))
    out: list[InformationSet] = []
    while remaining:
        used = set(remaining)
        order = remaining + [j for j in range(n) if j not in used]
        perm = gen.select_columns(order)
        R, r, piv = rref(perm)
        piv_in = [p for p in piv if p < len(remaining)]
        if not piv_in:
            break
        rows = R.permute_columns(order).data
        cols = tuple(order[p] for p in piv_in)
        out.append(InformationSet(cols, rows, k - len(piv_in)))
        chosen = set(cols)
        remaining = [j for j in remaining if j not in chosen]
    return out


def bz_lower_bound(done: list[int], deficits: list[int]) -> int:
    """Weight bound for codewords not yet seen: each set ``j`` fully enumerated
    up to information weight ``done[j]`` contributes ``done[j] + 1 - deficit``."""
    return max(1, sum(max(0, d + 1 - f) for d, f in zip(done, deficits)))


class _Enumerator:
    """Shared budget/time accounting for chunked kernel calls."""

    def __init__(self, budget: Budget):
        self.budget = budget
        self.work = 0
        self.t0 = time.perf_counter()
        self.exhausted = False

    def elapsed(self) -> float:
        return time.perf_counter() - self.t0

    def _over(self, extra: int) -> bool:
        b = self.budget
        if b.work is not None and self.work + extra > b.work:
            return True
        if b.seconds is not None and self.elapsed() > b.seconds:
            return True
        return False

    def run_round(self, packed: np.ndarray, w: int, stop_at: int):
        """Enumerate every weight-``w`` combination.

        Returns ``(best, combo, complete)``; ``complete`` is False when the
        budget stopped the round early (or ``stop_at`` was reached).
        """
        k = packed.shape[0]
        best, best_combo = math.inf, None
        for prefixes, plens, cost in _batches(k, w):
            if self._over(cost):
                self.exhausted = True
                return best, best_combo, False
            bests, counts, combos = _kernels.enum_tasks(packed, w, prefixes, plens, stop_at)
            self.work += int(counts.sum())
            i = int(np.argmin(bests))
            if bests[i] < best:
                best, best_combo = int(bests[i]), combos[i].copy()
                if best <= stop_at:
                    return best, best_combo, False
        return best, best_combo, True


def _prefix_tasks(k: int, w: int):
    """Lexicographic ``(prefix, cost)`` pairs covering all ``w``-subsets of
    ``range(k)``; a prefix is refined until its subtree fits ``_TASK_WORK``."""

    def rec(prefix):
        depth, last = len(prefix), prefix[-1]
        cost = math.comb(k - 1 - last, w - depth)
        if cost <= _TASK_WORK or depth == w:
            yield prefix, cost
            return
        for nxt in range(last + 1, k - (w - depth) + 1):
            yield from rec(prefix + (nxt,))

    for c0 in range(k - w + 1):
        yield from rec((c0,))


def _batches(k: int, w: int):
    batch: list[tuple[int, ...]] = []
    cost = 0

    def flush():
        arr = np.zeros((len(batch), w), dtype=np.int64)
        lens = np.empty(len(batch), dtype=np.int64)
        for i, pre in enumerate(batch):
            arr[i, : len(pre)] = pre
            lens[i] = len(pre)
        return arr, lens, cost

    for prefix, c in _prefix_tasks(k, w):
        batch.append(prefix)
        cost += c
        if cost >= _CHUNK_WORK or len(batch) >= 4096:
            yield flush()
            batch, cost = [], 0
    if batch:
        yield flush()


def min_distance_bz(
    c: LinearCode, budget: Budget | None = None, give_up_below: int | None = None
) -> DistanceResult:
    """Brouwer-Zimmermann minimum distance with disjoint information sets.

    Round ``w`` enumerates, in each contributing set, all codewords with
    information weight ``w``.  Sets whose deficit is still too large to
    contribute are skipped and caught up later, so the lower bound
    ``sum_j max(0, done_j + 1 - deficit_j)`` stays valid throughout.

    With ``give_up_below`` the search stops as soon as a codeword lighter
    than that value is found (used to discard search candidates early).
    """
    if c.k < 1:
        raise ValueError("minimum distance of the zero code is undefined")
    budget = budget or Budget()
    _set_threads(budget)
    run = _Enumerator(budget)
    n, k = c.n, c.k
    sets = information_sets(c.gen)
    packed = [_kernels.pack_rows(s.rows, n) for s in sets]
    deficits = [s.deficit for s in sets]
    done = [0] * len(sets)

    # rows of every systematic generator are free upper-bound candidates
    upper, witness = n + 1, None
    for s in sets:
        for r in s.rows:
            if 0 < r.bit_count() < upper:
                upper, witness = r.bit_count(), BitVector(n, r)
    lower = bz_lower_bound(done, deficits)
    rounds = [(0, lower, upper)]

    def finish(certified: bool) -> DistanceResult:
        lo = upper if certified else min(lower, upper)
        return DistanceResult(
            lo, upper, witness, certified, work=run.work, elapsed=run.elapsed(), rounds=rounds
        )

    if lower >= upper:
        return finish(True)
    if give_up_below is not None and upper < give_up_below:
        return finish(False)
    for w in range(1, k + 1):
        for j, s in enumerate(sets):
            if w + 1 - s.deficit <= 0:
                continue
            while done[j] < w:
                ww = done[j] + 1
                best, combo, complete = run.run_round(packed[j], ww, 0)
                if best < upper:
                    upper, witness = best, _witness(s.rows, combo, n)
                    if give_up_below is not None and upper < give_up_below:
                        return finish(lower >= upper)
                if not complete:
                    log.info("budget exhausted at set %d, weight %d", j, ww)
                    return finish(lower >= upper)
                done[j] = ww
                lower = bz_lower_bound(done, deficits)
                rounds.append((ww, lower, upper))
                if lower >= upper:
                    return finish(True)
        log.debug("w=%d lower=%d upper=%d work=%d", w, lower, upper, run.work)
    # every combination has been seen in the first (full) information set
    return finish(True)


def find_word_of_weight_at_most(
    c: LinearCode,
    target: int,
    budget: Budget | None = None,
    seed: int = 0,
    max_info_weight: int | None = None,
) -> BitVector | None:
    """Randomised information-set search for a codeword of weight ``<= target``.

    Each trial permutes the columns with a Philox stream derived from
    ``seed``, takes the systematic generator on the first independent
    columns and scans combinations of up to ``max_info_weight`` rows.
    """
    if not 1 <= target <= c.n:
        raise ValueError("target must lie in 1..n")
    if c.k < 1:
        return None
    budget = budget or Budget(seconds=60.0)
    _set_threads(budget)
    run = _Enumerator(budget)
    n, k = c.n, c.k
    if max_info_weight is None:
        # largest p with C(k, p) below one kernel chunk
        max_info_weight = 1
        while max_info_weight < k and math.comb(k, max_info_weight + 1) <= _CHUNK_WORK // 4:
            max_info_weight += 1
    rng = np.random.Generator(np.random.Philox(seed))
    trial = 0
    while not run._over(0):
        order = [int(x) for x in rng.permutation(n)] if trial else list(range(n))
        trial += 1
        R, _, _ = rref(c.gen.select_columns(order))
        rows = R.permute_columns(order).data
        for r in rows:
            if r.bit_count() <= target:
                return BitVector(n, r)
        packed = _kernels.pack_rows(rows, n)
        for p in range(2, max_info_weight + 1):
            best, combo, _ = run.run_round(packed, p, target)
            if best <= target:
                w = _witness(rows, combo, n)
                assert c.contains(w) and w.weight() == best
                return w
            if run.exhausted:
                return None
    return None
