"""Dense GF(2) linear algebra on bit-packed rows.

Each row is stored as a Python ``int`` whose bit ``j`` holds column ``j``
(0-based).  Python integers are arbitrary precision, so the same code
handles any width; for the lengths that occur here (n <= 128) every row
fits in two machine words and XOR / popcount are single big-int ops.

The packing is internal.  Everything that leaves the package goes through
``to_str`` / ``from_str`` with explicit '0'/'1' characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "BitVector",
    "BitMatrix",
    "DimensionError",
    "rref",
    "rank",
    "nullspace",
    "rowspace_equal",
    "solve_membership",
    "is_invertible",
]


class DimensionError(ValueError):
    """Raised when operand shapes do not agree."""


def _mask(n: int) -> int:
    return (1 << n) - 1


def _bits_from_str(s: str) -> int:
    bits = 0
    for j, ch in enumerate(s):
        if ch == "1":
            bits |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r} at position {j}")
    return bits


def _bits_to_str(bits: int, n: int) -> str:
    return "".join("1" if (bits >> j) & 1 else "0" for j in range(n))


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_str(cls, s: str) -> BitVector:
        return cls(len(s), _bits_from_str(s))

    @classmethod
    def from_iter(cls, values: Iterable[int]) -> BitVector:
        values = list(values)
        bits = 0
        for j, x in enumerate(values):
            if x & 1:
                bits |= 1 << j
        return cls(len(values), bits)

    @classmethod
    def zeros(cls, n: int) -> BitVector:
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, j: int) -> BitVector:
        if not 0 <= j < n:
            raise IndexError(j)
        return cls(n, 1 << j)

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [j for j in range(self.length) if (self.bits >> j) & 1]

    def to_str(self) -> str:
        return _bits_to_str(self.bits, self.length)

    def to_array(self) -> np.ndarray:
        return np.array([(self.bits >> j) & 1 for j in range(self.length)], dtype=np.uint8)

    def __getitem__(self, j: int) -> int:
        if not -self.length <= j < self.length:
            raise IndexError(j)
        return (self.bits >> (j % self.length)) & 1

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: BitVector) -> BitVector:
        if other.length != self.length:
            raise DimensionError(f"length {self.length} vs {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def dot(self, other: BitVector) -> int:
        if other.length != self.length:
            raise DimensionError(f"length {self.length} vs {other.length}")
        return (self.bits & other.bits).bit_count() & 1

    def __str__(self) -> str:
        return self.to_str()


@dataclass(frozen=True)
class BitMatrix:
    """Row-major GF(2) matrix; ``data[i]`` is row ``i`` packed into an int."""

    data: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError("cols must be nonnegative")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond the column count")

    # construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Iterable[int | BitVector], cols: int) -> BitMatrix:
        out = []
        for r in rows:
            if isinstance(r, BitVector):
                if r.length != cols:
                    raise DimensionError(f"row length {r.length} != {cols}")
                r = r.bits
            out.append(int(r))
        return cls(tuple(out), cols)

    @classmethod
    def from_strings(cls, rows: Sequence[str], cols: int | None = None) -> BitMatrix:
        if cols is None:
            if not rows:
                raise ValueError("cols is required for an empty matrix")
            cols = len(rows[0])
        for s in rows:
            if len(s) != cols:
                raise DimensionError(f"row {s!r} does not have {cols} columns")
        return cls(tuple(_bits_from_str(s) for s in rows), cols)

    @classmethod
    def from_array(cls, a) -> BitMatrix:
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        bits = (a.astype(np.int64) & 1).astype(np.uint8)
        rows = tuple(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in bits)
        return cls(rows, a.shape[1])

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls((0,) * rows, cols)

    # shape / access -----------------------------------------------------
    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.data), self.cols)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def __iter__(self) -> Iterator[BitVector]:
        return (BitVector(self.cols, r) for r in self.data)

    def __len__(self) -> int:
        return len(self.data)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, r in enumerate(self.data):
            for j in range(self.cols):
                if (r >> j) & 1:
                    out[i, j] = 1
        return out

    def to_strings(self) -> list[str]:
        return [_bits_to_str(r, self.cols) for r in self.data]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())

    # algebra ------------------------------------------------------------
    def transpose(self) -> BitMatrix:
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(tuple(out), self.rows)

    @property
    def T(self) -> BitMatrix:
        return self.transpose()

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")
        return BitMatrix(tuple(a ^ b for a, b in zip(self.data, other.data)), self.cols)

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in self.data:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.data[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return BitMatrix(tuple(out), other.cols)

    def vecmul(self, x: BitVector) -> BitVector:
        """Return ``x @ self`` (the row combination selected by ``x``)."""
        if x.length != self.rows:
            raise DimensionError(f"coefficient length {x.length} != rows {self.rows}")
        acc = 0
        for i, r in enumerate(self.data):
            if (x.bits >> i) & 1:
                acc ^= r
        return BitVector(self.cols, acc)

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.cols:
            raise DimensionError(f"cols {self.cols} vs {other.cols}")
        return BitMatrix(self.data + other.data, self.cols)

    def hstack(self, other: BitMatrix) -> BitMatrix:
        if self.rows != other.rows:
            raise DimensionError(f"rows {self.rows} vs {other.rows}")
        s = self.cols
        return BitMatrix(tuple(a | (b << s) for a, b in zip(self.data, other.data)), s + other.cols)

    def select_columns(self, cols: Sequence[int]) -> BitMatrix:
        out = []
        for r in self.data:
            acc = 0
            for t, j in enumerate(cols):
                if (r >> j) & 1:
                    acc |= 1 << t
            out.append(acc)
        return BitMatrix(tuple(out), len(cols))

    def permute_columns(self, images: Sequence[int]) -> BitMatrix:
        """Move column ``j`` to column ``images[j]``."""
        if len(images) != self.cols:
            raise DimensionError("permutation size does not match column count")
        out = []
        for r in self.data:
            acc = 0
            while r:
                low = r & -r
                acc |= 1 << images[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return BitMatrix(tuple(out), self.cols)

    def nonzero_rows(self) -> BitMatrix:
        return BitMatrix(tuple(r for r in self.data if r), self.cols)


def _eliminate(rows: list[int], cols: int, track: list[int] | None = None) -> list[int]:
    """In-place Gauss-Jordan elimination; returns the pivot columns.

    When ``track`` is given it is updated with the same row operations.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        bit = 1 << c
        p = next((i for i in range(r, nrows) if rows[i] & bit), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            if track is not None:
                track[r], track[p] = track[p], track[r]
        pr = rows[r]
        for i in range(nrows):
            if i != r and rows[i] & bit:
                rows[i] ^= pr
                if track is not None:
                    track[i] ^= track[r]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row echelon form over GF(2).

    Returns ``(R, rank, pivots)`` where ``R`` keeps only the ``rank``
    nonzero rows and ``pivots`` are 0-based, strictly increasing.
    """
    rows = list(m.data)
    pivots = _eliminate(rows, m.cols)
    k = len(pivots)
    return BitMatrix(tuple(rows[:k]), m.cols), k, pivots


def rank(m: BitMatrix) -> int:
    return rref(m)[1]


def is_invertible(m: BitMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.cols


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis (as rows) of ``{x : m @ x^T = 0}``."""
    R, k, pivots = rref(m)
    n = m.cols
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = 1 << f
        fb = 1 << f
        for i, p in enumerate(pivots):
            if R.data[i] & fb:
                x |= 1 << p
        basis.append(x)
    return BitMatrix(tuple(basis), n)


def rowspace_equal(a: BitMatrix, b: BitMatrix) -> bool:
    if a.cols != b.cols:
        raise DimensionError(f"cols {a.cols} vs {b.cols}")
    return rref(a)[0].data == rref(b)[0].data


def solve_membership(basis: BitMatrix, w: BitVector) -> BitVector | None:
    """Coefficients ``x`` with ``x @ basis == w``, or ``None`` if ``w`` is outside the row space."""
    if w.length != basis.cols:
        raise DimensionError(f"vector length {w.length} != cols {basis.cols}")
    rows = list(basis.data)
    track = [1 << i for i in range(len(rows))]
    pivots = _eliminate(rows, basis.cols, track)
    if len(pivots) != len(rows):
        raise ValueError("basis rows are linearly dependent")
    v, x = w.bits, 0
    for i, p in enumerate(pivots):
        if (v >> p) & 1:
            v ^= rows[i]
            x ^= track[i]
    if v:
        return None
    return BitVector(basis.rows, x)
