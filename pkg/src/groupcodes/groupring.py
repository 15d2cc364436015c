"""Binary group ring arithmetic and the group-ring matrix map.

An element ``v = sum_g a_g g`` of F_2 G is stored as its coefficient vector
in the group's canonical element order.  ``sigma(v)`` is the ``|G| x |G|``
matrix with entry ``(i, j) = a_{g_i^-1 g_j}``; row ``i`` is the coefficient
vector of ``g_i v``, so the row space is the left ideal generated by ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2linalg import BitMatrix, BitVector, is_invertible
from .groups import FiniteGroup, SemidirectParams1, SemidirectParams2

__all__ = [
    "GroupRingElement",
    "GroupMismatch",
    "gr_add",
    "gr_mul",
    "gr_power_map",
    "sigma",
    "lambda_circulant",
    "block_lambda_circulant",
    "sigma_structured_g1",
    "sigma_structured_g2",
    "is_unit",
]


class GroupMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    group: FiniteGroup
    coeffs: BitVector

    def __post_init__(self) -> None:
        if self.coeffs.length != self.group.order:
            raise ValueError(f"coefficient length {self.coeffs.length} != group order {self.group.order}")

    @classmethod
    def from_str(cls, group: FiniteGroup, s: str) -> GroupRingElement:
        return cls(group, BitVector.from_str(s))

    @classmethod
    def from_support(cls, group: FiniteGroup, elements) -> GroupRingElement:
        bits = 0
        for g in elements:
            bits ^= 1 << int(g)
        return cls(group, BitVector(group.order, bits))

    @classmethod
    def zero(cls, group: FiniteGroup) -> GroupRingElement:
        return cls(group, BitVector(group.order, 0))

    @classmethod
    def one(cls, group: FiniteGroup) -> GroupRingElement:
        return cls(group, BitVector.unit(group.order, group.identity))

    @classmethod
    def random(cls, group: FiniteGroup, rng: np.random.Generator) -> GroupRingElement:
        bits = rng.integers(0, 2, size=group.order, dtype=np.uint8)
        return cls(group, BitVector.from_iter(bits))

    def support(self) -> list[int]:
        return self.coeffs.support()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group is other.group and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.group), self.coeffs))

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        return gr_add(self, other)

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        return gr_mul(self, other)

    def __str__(self) -> str:
        return self.coeffs.to_str()


def _same_group(a: GroupRingElement, b: GroupRingElement) -> None:
    if a.group is not b.group:
        raise GroupMismatch("elements belong to different groups")


def gr_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    _same_group(a, b)
    return GroupRingElement(a.group, a.coeffs ^ b.coeffs)


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    _same_group(a, b)
    g = a.group
    bits = 0
    for h in a.support():
        for k in b.support():
            bits ^= 1 << int(g.mul[h, k])
    return GroupRingElement(g, BitVector(g.order, bits))


def gr_power_map(v: GroupRingElement, s: int) -> GroupRingElement:
    """``sum a_g g^s``; colliding images cancel in pairs."""
    g = v.group
    bits = 0
    for h in v.support():
        bits ^= 1 << g.power(h, s)
    return GroupRingElement(g, BitVector(g.order, bits))


def sigma(v: GroupRingElement) -> BitMatrix:
    g = v.group
    n = g.order
    coeffs = v.coeffs.to_array()
    # entry (i, j) = a[g_i^-1 g_j]
    idx = g.mul[g.inv]
    return BitMatrix.from_array(coeffs[idx]) if n else BitMatrix.zeros(0, 0)


def lambda_circulant(row: BitVector, lam: int) -> BitMatrix:
    """Square matrix whose row ``r`` is ``row`` shifted cyclically right by ``r * lam``."""
    n = row.length
    if n < 1:
        raise ValueError("row must be nonempty")
    a = row.to_array()
    out = np.empty((n, n), dtype=np.uint8)
    for r in range(n):
        out[r] = np.roll(a, (r * lam) % n)
    return BitMatrix.from_array(out)


def block_lambda_circulant(blocks: list[np.ndarray], lam: int) -> np.ndarray:
    """Arrange equally shaped blocks so block-row ``r`` is the block list
    shifted right by ``r * lam`` whole blocks."""
    t = len(blocks)
    rows = []
    for r in range(t):
        shift = (r * lam) % t
        rows.append([blocks[(c - shift) % t] for c in range(t)])
    return np.block(rows)


def _params_group_check(v: GroupRingElement, order: int, label: str) -> None:
    if v.group.order != order or (v.group.label and v.group.label != label):
        raise GroupMismatch(f"element does not live in {label}")


def sigma_structured_g1(v: GroupRingElement, p: SemidirectParams1) -> BitMatrix:
    """Block-circulant form ``Circ(A_1..A_m)`` with ``A_{j+1}`` the
    ``k^j``-circulant of the ``j``-th length-``n`` coefficient slice."""
    n, m, k = p.n, p.m, p.k
    _params_group_check(v, n * m, f"G1({n},{m},{k})")
    a = v.coeffs.to_array()
    blocks = []
    for j in range(m):
        sl = BitVector.from_iter(a[n * j : n * (j + 1)])
        blocks.append(lambda_circulant(sl, pow(k, j, n) or n).to_array())
    return BitMatrix.from_array(block_lambda_circulant(blocks, 1))


def sigma_structured_g2(v: GroupRingElement, p: SemidirectParams2) -> BitMatrix:
    """Two-level form: outer ``m x m`` block circulant; outer block ``i`` is a
    ``k2^i``-block-circulant of ``n2`` inner blocks; inner block ``j`` is the
    ``k1^i``-circulant of the coefficient slice at ``n1 j + n1 n2 i``.

    Both twists are governed by the outer index ``i``, because conjugating by
    ``z^i`` raises x and y to ``k1^i`` and ``k2^i`` respectively.
    """
    n1, k1, n2, k2, m = p.n1, p.k1, p.n2, p.k2, p.m
    _params_group_check(v, n1 * n2 * m, f"G2({n1},{k1},{n2},{k2},{m})")
    a = v.coeffs.to_array()
    outer = []
    for i in range(m):
        lam1 = pow(k1, i, n1) or n1
        lam2 = pow(k2, i, n2) or n2
        inner = []
        for j in range(n2):
            base = n1 * j + n1 * n2 * i
            inner.append(lambda_circulant(BitVector.from_iter(a[base : base + n1]), lam1).to_array())
        outer.append(block_lambda_circulant(inner, lam2))
    return BitMatrix.from_array(block_lambda_circulant(outer, 1))


def is_unit(v: GroupRingElement) -> bool:
    return is_invertible(sigma(v))
