"""Finite groups as explicit multiplication tables.

Elements are the integers ``0..n-1``.  The external (file) representation
uses 1-based indices; conversion happens at the boundary only.

The semidirect products ``(C_{n_1} x ... x C_{n_s}) x| C_m`` are laid out so
that element index ``e_1 + n_1 e_2 + n_1 n_2 e_3 + ... + N i`` is the word
``z^i y_s^{e_s} ... y_1^{e_1}`` with ``N = n_1 ... n_s``.  For one factor
this is ``x^j y^i`` at index ``i + n j``; for two factors ``z^i y^j x^k`` at
``k + n_1 j + n_1 n_2 i``.  Group-ring coefficient vectors are indexed the
same way, so published coefficient strings can be read off directly.
"""

from __future__ import annotations

import math
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

log = logging.getLogger(__name__)

__all__ = [
    "GroupError",
    "FiniteGroup",
    "SemidirectParams1",
    "SemidirectParams2",
    "Permutation",
    "make_gs",
    "make_g1",
    "make_g2",
    "cyclic_group",
    "group_from_table",
    "regular_permutations",
    "cycle_type",
]

FULL_CHECK_LIMIT = 512


class GroupError(ValueError):
    """Invalid group data or parameters."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mul: np.ndarray
    label: str = ""
    identity: int = field(init=False)
    inv: np.ndarray = field(init=False, repr=False)

    def __init__(self, mul, label: str = "", *, full_check: bool | None = None, seed: int = 0):
        table = np.array(mul, dtype=np.int64)
        _validate(table, full_check=full_check, seed=seed)
        n = table.shape[0]
        e = int(np.flatnonzero((table == np.arange(n)).all(axis=1))[0])
        inv = np.argmax(table == e, axis=1).astype(np.int64)
        table.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "mul", table)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inv", inv)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, label={self.label!r})"

    def op(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def power(self, g: int, s: int) -> int:
        if s < 0:
            g, s = int(self.inv[g]), -s
        out, base = self.identity, g
        while s:
            if s & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            s >>= 1
        return out

    def element_order(self, g: int) -> int:
        t, h = 1, g
        while h != self.identity:
            h = int(self.mul[h, g])
            t += 1
        return t

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([self.element_order(g) for g in range(self.order)], dtype=np.int64)

    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def table_1based(self) -> np.ndarray:
        return self.mul + 1


def _validate(table: np.ndarray, *, full_check: bool | None, seed: int) -> None:
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise GroupError("multiplication table must be a nonempty square array")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise GroupError("table entries out of range")
    ref = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(table[i]), ref):
            raise GroupError(f"row {i + 1} is not a permutation (not a Latin square)")
        if not np.array_equal(np.sort(table[:, i]), ref):
            raise GroupError(f"column {i + 1} is not a permutation (not a Latin square)")
    ids = np.flatnonzero((table == ref).all(axis=1) & (table.T == ref).all(axis=1))
    if ids.size == 0:
        raise GroupError("no two-sided identity element")
    if full_check is None:
        full_check = n <= FULL_CHECK_LIMIT
    if full_check:
        for a in range(n):
            lhs = table[table[a]]  # (ab)c for all b, c
            rhs = table[a][table]  # a(bc)
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                b, c = bad[0]
                raise GroupError(f"not associative at triple ({a + 1}, {b + 1}, {c + 1})")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, 10 * n))
        bad = np.flatnonzero(table[table[a, b], c] != table[a, table[b, c]])
        if bad.size:
            i = bad[0]
            raise GroupError(f"not associative at triple ({a[i] + 1}, {b[i] + 1}, {c[i] + 1})")


@dataclass(frozen=True)
class SemidirectParams1:
    """``C_n x| C_m`` with ``x^-1 y x = y^k``."""

    n: int
    m: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise GroupError("n and m must be positive")
        if not 1 <= self.k <= self.n:
            raise GroupError("k must satisfy 1 <= k <= n")
        _check_action(self.n, self.k, self.m, "k")

    @property
    def order(self) -> int:
        return self.n * self.m


@dataclass(frozen=True)
class SemidirectParams2:
    """``(C_{n1} x C_{n2}) x| C_m`` with ``z^-1 x z = x^{k1}``, ``z^-1 y z = y^{k2}``."""

    n1: int
    k1: int
    n2: int
    k2: int
    m: int

    def __post_init__(self) -> None:
        if min(self.n1, self.n2, self.m) < 1:
            raise GroupError("n1, n2 and m must be positive")
        if self.k1 < 1 or self.k2 < 1:
            raise GroupError("k1 and k2 must be positive")
        _check_action(self.n1, self.k1, self.m, "k1")
        _check_action(self.n2, self.k2, self.m, "k2")

    @property
    def order(self) -> int:
        return self.n1 * self.n2 * self.m


def _check_action(n: int, k: int, m: int, name: str) -> None:
    if math.gcd(k, n) != 1 or pow(k, m, n) != 1 % n:
        raise GroupError(f"{name}^m = {k}^{m} is not 1 mod {n}; the action is not a homomorphism")
    if n > 1 and any(pow(k, t, n) == 1 for t in range(1, m)):
        # legitimate (several published groups use k=1), just not a faithful action
        log.debug("%s=%d has multiplicative order below m=%d mod %d", name, k, m, n)


def make_gs(ns: Sequence[int], ks: Sequence[int], m: int, label: str = "") -> FiniteGroup:
    """Table of ``(C_{n_1} x ... x C_{n_s}) x| C_m`` where the generator of
    ``C_m`` acts on the ``t``-th factor by raising to ``ks[t]``.

    No primitivity check is made here; the ``make_g1``/``make_g2`` wrappers
    validate their parameters.
    """
    ns = [int(x) for x in ns]
    ks = [int(x) for x in ks]
    if len(ns) != len(ks):
        raise GroupError("ns and ks must have equal length")
    for n, k in zip(ns, ks):
        if pow(k, m, n) != 1 % n:
            raise GroupError(f"{k}^{m} is not 1 mod {n}")
    N = math.prod(ns)
    order = N * m
    idx = np.arange(order)
    top = idx // N  # exponent of the acting generator
    rest = idx % N
    coords = []
    for n in ns:
        coords.append(rest % n)
        rest = rest // n
    a_top, b_top = top[:, None], top[None, :]
    # (z^a e)(z^b f) = z^(a+b) (e^(z^b) f); each coordinate e_t -> e_t k_t^b + f_t
    new_top = (a_top + b_top) % m
    out = np.zeros((order, order), dtype=np.int64)
    stride = 1
    for t, n in enumerate(ns):
        powk = np.array([pow(ks[t], b, n) for b in range(m)], dtype=np.int64)
        e = coords[t][:, None]
        f = coords[t][None, :]
        out += ((e * powk[b_top] + f) % n) * stride
        stride *= n
    out += new_top * N
    return FiniteGroup(out, label=label)


def make_g1(p: SemidirectParams1) -> FiniteGroup:
    """``C_n x| C_m``; index ``i + n j`` (0-based) is ``x^j y^i``."""
    return make_gs([p.n], [p.k], p.m, label=f"G1({p.n},{p.m},{p.k})")


def make_g2(p: SemidirectParams2) -> FiniteGroup:
    """``(C_{n1} x C_{n2}) x| C_m``; index ``k + n1 j + n1 n2 i`` is ``z^i y^j x^k``."""
    return make_gs([p.n1, p.n2], [p.k1, p.k2], p.m, label=f"G2({p.n1},{p.k1},{p.n2},{p.k2},{p.m})")


def cyclic_group(n: int) -> FiniteGroup:
    return make_gs([n], [1], 1, label=f"C{n}")


def group_from_table(table, label: str = "", *, one_based: bool = True, full_check: bool | None = None) -> FiniteGroup:
    """Validate and wrap a Cayley table (1-based entries by default)."""
    t = np.asarray(table, dtype=np.int64)
    if one_based:
        t = t - 1
    return FiniteGroup(t, label=label, full_check=full_check)


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..n-1``; ``images[j]`` is where ``j`` is sent."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("images do not form a bijection")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        imgs = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                imgs[a] = b
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j]

    def __mul__(self, other: Permutation) -> Permutation:
        """``(p * q)(j) = p(q(j))``."""
        if other.n != self.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        out = [0] * self.n
        for j, x in enumerate(self.images):
            out[x] = j
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(j == x for j, x in enumerate(self.images))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            cyc = []
            j = s
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return tuple(out)

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles)) if self.n else 1


def regular_permutations(g: FiniteGroup) -> list[Permutation]:
    """Left-regular representation: ``perms[a]`` sends position ``j`` to ``a * g_j``."""
    return [Permutation(tuple(int(x) for x in g.mul[a])) for a in range(g.order)]


def cycle_type(p: Permutation) -> tuple[int, int, int] | None:
    """``(length, cycles, fixed points)`` when every moved point lies on a
    cycle of one common length; ``None`` for the identity or mixed lengths."""
    lengths = [len(c) for c in p.cycles]
    moved = {x for x in lengths if x > 1}
    if len(moved) != 1:
        return None
    length = moved.pop()
    return length, sum(1 for x in lengths if x == length), sum(1 for x in lengths if x == 1)
