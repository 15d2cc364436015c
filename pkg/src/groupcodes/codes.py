"""Binary linear codes and the transformations applied to them.

Positions are 0-based in this API.  Permutations act on coordinates by
sending the entry at position ``j`` to position ``p(j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterator

from .gf2linalg import (
    BitMatrix,
    BitVector,
    DimensionError,
    nullspace,
    rref,
    rowspace_equal,
    solve_membership,
)
from .groupring import GroupRingElement, sigma
from .groups import Permutation, cycle_type

if TYPE_CHECKING:
    from .distance import DistanceResult

__all__ = [
    "CodeError",
    "LinearCode",
    "code_from_gmatrix",
    "dual",
    "puncture",
    "shorten",
    "extend",
    "construction_x",
    "apply_perm",
    "is_automorphism",
    "fixed_subcode",
    "even_subcode",
    "decompose",
]


class CodeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Row space of ``gen``; ``gen`` is always kept in reduced row echelon form."""

    gen: BitMatrix
    distance: DistanceResult | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.gen.cols < 1:
            raise CodeError("code length must be positive")
        R, k, _ = rref(self.gen)
        object.__setattr__(self, "gen", R)

    @classmethod
    def from_strings(cls, rows: list[str], n: int | None = None) -> LinearCode:
        return cls(BitMatrix.from_strings(rows, n))

    @classmethod
    def zero(cls, n: int) -> LinearCode:
        return cls(BitMatrix.zeros(0, n))

    @classmethod
    def full(cls, n: int) -> LinearCode:
        return cls(BitMatrix.identity(n))

    @classmethod
    def repetition(cls, n: int) -> LinearCode:
        return cls(BitMatrix(((1 << n) - 1,), n))

    @classmethod
    def even_weight(cls, n: int) -> LinearCode:
        return dual(cls.repetition(n))

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    @property
    def params(self) -> tuple[int, int]:
        return self.n, self.k

    def with_distance(self, result: DistanceResult) -> LinearCode:
        return LinearCode(self.gen, result)

    def contains(self, w: BitVector) -> bool:
        return solve_membership(self.gen, w) is not None

    def encode(self, x: BitVector) -> BitVector:
        return self.gen.vecmul(x)

    def codewords(self) -> Iterator[BitVector]:
        """All ``2^k`` codewords (for small ``k`` only)."""
        if self.k > 24:
            raise CodeError("refusing to enumerate more than 2^24 codewords")
        cur = 0
        yield BitVector(self.n, 0)
        for i in range(1, 1 << self.k):
            cur ^= self.gen.data[(i & -i).bit_length() - 1]
            yield BitVector(self.n, cur)

    def weight_distribution(self) -> list[int]:
        out = [0] * (self.n + 1)
        for c in self.codewords():
            out[c.weight()] += 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and self.gen.data == other.gen.data

    def __hash__(self) -> int:
        return hash((self.n, self.gen.data))

    def __repr__(self) -> str:
        d = ""
        if self.distance is not None:
            r = self.distance
            d = f",{r.upper}" if r.certified else f",{r.lower}..{r.upper}"
        return f"LinearCode[{self.n},{self.k}{d}]"


def code_from_gmatrix(v: GroupRingElement) -> LinearCode:
    """The code ``C(v)`` spanned by the rows of ``sigma(v)``."""
    return LinearCode(sigma(v))


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(nullspace(c.gen))


def _check_position(c: LinearCode, position: int) -> None:
    if not 0 <= position < c.n:
        raise IndexError(f"position {position} out of range for length {c.n}")


def _drop_column(m: BitMatrix, position: int) -> BitMatrix:
    low = (1 << position) - 1
    rows = tuple((r & low) | ((r >> (position + 1)) << position) for r in m.data)
    return BitMatrix(rows, m.cols - 1)


def puncture(c: LinearCode, position: int) -> LinearCode:
    """Delete one coordinate."""
    if c.n < 2:
        raise CodeError("cannot puncture a code of length 1")
    _check_position(c, position)
    return LinearCode(_drop_column(c.gen, position))


def shorten(c: LinearCode, position: int) -> LinearCode:
    """Keep the codewords that vanish at ``position``, then delete it."""
    if c.n < 2:
        raise CodeError("cannot shorten a code of length 1")
    if c.k < 1:
        raise CodeError("cannot shorten the zero code")
    _check_position(c, position)
    bit = 1 << position
    rows = list(c.gen.data)
    piv = next((i for i, r in enumerate(rows) if r & bit), None)
    if piv is not None:
        pr = rows.pop(piv)
        rows = [r ^ pr if r & bit else r for r in rows]
    return LinearCode(_drop_column(BitMatrix(tuple(rows), c.n), position))


def extend(c: LinearCode) -> LinearCode:
    """Append an overall parity bit."""
    n = c.n
    rows = tuple(r | ((r.bit_count() & 1) << n) for r in c.gen.data)
    return LinearCode(BitMatrix(rows, n + 1))


def _completion(inner: BitMatrix, outer: BitMatrix) -> list[int]:
    """Rows of ``outer`` that extend a basis of ``inner`` to one of ``outer``."""
    span = list(inner.data)
    reps = []
    for r in outer.data:
        if solve_membership(BitMatrix(tuple(span), outer.cols), BitVector(outer.cols, r)) is None:
            span.append(r)
            reps.append(r)
    return reps


def construction_x(outer: LinearCode, inner: LinearCode, aux: LinearCode) -> LinearCode:
    """Glue ``outer`` and its subcode ``inner`` with an auxiliary code.

    The result has generator rows ``[inner | 0]`` and ``[rep_i | aux_i]``
    where ``rep_i`` run over coset representatives of ``inner`` in ``outer``.
    Its distance is at least ``min(d(inner), d(outer) + d(aux))``.
    """
    if inner.n != outer.n:
        raise DimensionError(f"inner length {inner.n} != outer length {outer.n}")
    for i, r in enumerate(inner.gen):
        if not outer.contains(r):
            raise CodeError(f"inner generator row {i + 1} is not in the outer code")
    if aux.k != outer.k - inner.k:
        raise CodeError(f"aux dimension {aux.k} != outer.k - inner.k = {outer.k - inner.k}")
    reps = _completion(inner.gen, outer.gen)
    shift = outer.n
    rows = list(inner.gen.data)
    rows.extend(rep | (a << shift) for rep, a in zip(reps, aux.gen.data))
    return LinearCode(BitMatrix(tuple(rows), outer.n + aux.n))


def apply_perm(c: LinearCode, p: Permutation) -> LinearCode:
    if p.n != c.n:
        raise DimensionError(f"permutation on {p.n} points applied to length {c.n}")
    return LinearCode(c.gen.permute_columns(p.images))


def is_automorphism(c: LinearCode, p: Permutation) -> bool:
    return rowspace_equal(c.gen, apply_perm(c, p).gen)


def _require_automorphism(c: LinearCode, p: Permutation) -> None:
    if not is_automorphism(c, p):
        raise CodeError("permutation is not an automorphism of the code")


def fixed_subcode(c: LinearCode, p: Permutation) -> LinearCode:
    """Codewords fixed by ``p``: kernel of ``x -> xG + p(xG)``."""
    _require_automorphism(c, p)
    G = c.gen
    diff = G + G.permute_columns(p.images)
    coeffs = nullspace(diff.transpose())
    return LinearCode(BitMatrix(tuple(G.vecmul(x).bits for x in coeffs), c.n))


def even_subcode(c: LinearCode, p: Permutation) -> LinearCode:
    """Codewords whose coordinate sum over every cycle of ``p`` (fixed points
    included) is even."""
    _require_automorphism(c, p)
    ct = cycle_type(p)
    if ct is None:
        raise CodeError("permutation has no uniform cycle type")
    if ct[0] % 2 == 0:
        raise CodeError(f"cycle length {ct[0]} is even")
    checks = []
    for cyc in p.cycles:
        m = 0
        for j in cyc:
            m |= 1 << j
        checks.append(m)
    h = dual(c).gen.vstack(BitMatrix(tuple(checks), c.n))
    return LinearCode(nullspace(h))


def decompose(c: LinearCode, p: Permutation) -> tuple[LinearCode, LinearCode]:
    """``(F, E)`` with ``c = F (+) E`` for an automorphism of odd uniform cycle length."""
    return fixed_subcode(c, p), even_subcode(c, p)
