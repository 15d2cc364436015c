"""Plain-text file formats.

All formats are line based, use explicit '0'/'1' characters for bits and
1-based indices for group elements and coordinates.  Lines starting with
``#`` are comments.

Cayley table::

    order 6
    1 2 3 4 5 6
    ...

Group-ring element (v-vector)::

    group g1 9 6 2            # or: group g2 n1 k1 n2 k2 m | group table <path>
    0 1 1 1 ... 11 0 1 1      # every character other than 0/1 is ignored

Generator matrix::

    54 31
    1000...0110
    ...

Permutation: the images of ``1..n`` in one line (or spread over lines).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .codes import LinearCode
from .gf2linalg import BitMatrix, BitVector
from .groupring import GroupRingElement
from .groups import (
    FiniteGroup,
    Permutation,
    SemidirectParams1,
    SemidirectParams2,
    group_from_table,
    make_g1,
    make_g2,
)

__all__ = [
    "FormatError",
    "GroupSpec",
    "parse_group_spec",
    "read_cayley_table",
    "write_cayley_table",
    "read_vfile",
    "parse_vtext",
    "write_vfile",
    "read_code",
    "write_code",
    "format_code",
    "parse_code",
    "read_permutation",
    "write_permutation",
]


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


@dataclass(frozen=True)
class GroupSpec:
    """How a group was described: ``kind`` is ``g1``, ``g2`` or ``table``."""

    kind: str
    params: tuple[int, ...] = ()
    path: str | None = None

    def build(self, base: Path | None = None) -> FiniteGroup:
        if self.kind == "g1":
            return make_g1(SemidirectParams1(*self.params))
        if self.kind == "g2":
            return make_g2(SemidirectParams2(*self.params))
        if self.kind == "table":
            p = Path(self.path)
            if base is not None and not p.is_absolute():
                p = base / p
            return read_cayley_table(p)
        raise FormatError(f"unknown group kind {self.kind!r}")

    def header(self) -> str:
        if self.kind == "table":
            return f"group table {self.path}"
        return "group " + " ".join([self.kind, *map(str, self.params)])

    def __str__(self) -> str:
        if self.kind == "table":
            return f"table:{self.path}"
        return f"{self.kind}:" + ",".join(map(str, self.params))


_ARITY = {"g1": 3, "g2": 5}


def parse_group_spec(text: str) -> GroupSpec:
    """Accept ``g1:n,m,k``, ``g2:n1,k1,n2,k2,m``, ``table:path`` or the
    whitespace form used in v-vector headers (without the ``group`` word)."""
    text = text.strip()
    if ":" in text:
        kind, rest = text.split(":", 1)
    else:
        kind, _, rest = text.partition(" ")
    kind = kind.strip().lower()
    if kind == "table":
        if not rest.strip():
            raise FormatError("table group needs a path")
        return GroupSpec("table", path=rest.strip())
    if kind not in _ARITY:
        raise FormatError(f"unknown group kind {kind!r}")
    try:
        params = tuple(int(x) for x in re.split(r"[,\s]+", rest.strip()) if x)
    except ValueError as exc:
        raise FormatError(f"bad group parameters {rest!r}") from exc
    if len(params) != _ARITY[kind]:
        raise FormatError(f"{kind} takes {_ARITY[kind]} parameters, got {len(params)}")
    return GroupSpec(kind, params)


def read_cayley_table(path: str | Path, label: str | None = None) -> FiniteGroup:
    path = Path(path)
    lines = _content_lines(path.read_text())
    if not lines:
        raise FormatError(f"{path}: empty file")
    lineno, head = lines[0]
    m = re.fullmatch(r"order\s+(\d+)", head)
    if not m:
        raise FormatError(f"{path}:{lineno}: expected 'order n'")
    n = int(m.group(1))
    rows = []
    for lineno, line in lines[1:]:
        try:
            row = [int(x) for x in line.split()]
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: non-integer entry") from exc
        if len(row) != n:
            raise FormatError(f"{path}:{lineno}: expected {n} entries, got {len(row)}")
        rows.append(row)
    if len(rows) != n:
        raise FormatError(f"{path}: expected {n} rows, got {len(rows)}")
    return group_from_table(rows, label=label or path.stem)


def write_cayley_table(group: FiniteGroup, path: str | Path) -> None:
    lines = [f"order {group.order}"]
    lines += [" ".join(str(int(x) + 1) for x in row) for row in group.mul]
    Path(path).write_text("\n".join(lines) + "\n")


def parse_vtext(text: str, base: Path | None = None) -> tuple[GroupSpec, GroupRingElement]:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty v-vector file")
    lineno, head = lines[0]
    if not head.startswith("group"):
        raise FormatError(f"line {lineno}: expected a 'group ...' header")
    spec = parse_group_spec(head[len("group") :])
    group = spec.build(base)
    bits = re.sub(r"[^01]", "", "".join(line for _, line in lines[1:]))
    if len(bits) != group.order:
        raise FormatError(f"coefficient string has {len(bits)} bits after stripping, group order is {group.order}")
    return spec, GroupRingElement.from_str(group, bits)


def read_vfile(path: str | Path) -> tuple[GroupSpec, GroupRingElement]:
    path = Path(path)
    try:
        return parse_vtext(path.read_text(), base=path.parent)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_vfile(spec: GroupSpec, v: GroupRingElement, path: str | Path) -> None:
    Path(path).write_text(spec.header() + "\n" + v.coeffs.to_str() + "\n")


def format_code(c: LinearCode) -> str:
    return "\n".join([f"{c.n} {c.k}", *c.gen.to_strings()]) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty generator file")
    lineno, head = lines[0]
    try:
        n, k = (int(x) for x in head.split())
    except ValueError as exc:
        raise FormatError(f"line {lineno}: expected 'n k'") from exc
    rows = [line.replace(" ", "") for _, line in lines[1:]]
    if len(rows) != k:
        raise FormatError(f"expected {k} rows, got {len(rows)}")
    try:
        gen = BitMatrix.from_strings(rows, n)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    code = LinearCode(gen)
    if code.k != k:
        raise FormatError(f"rows have rank {code.k}, header says {k}")
    return code


def read_code(path: str | Path) -> LinearCode:
    path = Path(path)
    try:
        return parse_code(path.read_text())
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_code(c: LinearCode, path: str | Path) -> None:
    Path(path).write_text(format_code(c))


def read_permutation(path: str | Path) -> Permutation:
    path = Path(path)
    nums = []
    for lineno, line in _content_lines(path.read_text()):
        try:
            nums.extend(int(x) for x in line.replace(",", " ").split())
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: non-integer entry") from exc
    try:
        return Permutation(tuple(x - 1 for x in nums))
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_permutation(p: Permutation, path: str | Path) -> None:
    Path(path).write_text(" ".join(str(x + 1) for x in p.images) + "\n")
