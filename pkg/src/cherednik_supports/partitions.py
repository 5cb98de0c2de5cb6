"""Integer partitions and multipartitions as plain tuples.

A partition is a weakly decreasing tuple of positive ints, ``()`` being the
empty partition. A multipartition is a tuple of partitions. Boxes are
addressed by ``(comp, col, row)`` with 0-based ``comp`` and 1-based column
and row (English convention: row ``y`` has ``parts[y-1]`` boxes).
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Box(NamedTuple):
    comp: int
    col: int
    row: int


class PartitionError(ValueError):
    pass


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate and freeze a sequence of parts (trailing zeros are dropped)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise PartitionError(f"parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise PartitionError(f"parts must be weakly decreasing: {parts}")
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def total(mp: Multipartition) -> int:
    return sum(sum(c) for c in mp)


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    """Yield ``(col, row)`` for every cell of ``lam``."""
    for y, part in enumerate(lam, start=1):
        for x in range(1, part + 1):
            yield x, y


def addable_cells(lam: Partition) -> list[tuple[int, int]]:
    """Addable corners as ``(col, row)``, in increasing column order."""
    out = []
    rows = len(lam)
    out.append((1, rows + 1))
    for y in range(rows, 0, -1):
        above = lam[y - 2] if y >= 2 else None
        if above is None or above > lam[y - 1]:
            out.append((lam[y - 1] + 1, y))
    return sorted(out)


def removable_cells(lam: Partition) -> list[tuple[int, int]]:
    """Removable corners as ``(col, row)``, in increasing column order."""
    out = []
    for y in range(1, len(lam) + 1):
        below = lam[y] if y < len(lam) else 0
        if lam[y - 1] > below:
            out.append((lam[y - 1], y))
    return sorted(out)


def addable_boxes(lam: Partition, comp: int = 0) -> list[Box]:
    return [Box(comp, x, y) for x, y in addable_cells(lam)]


def removable_boxes(lam: Partition, comp: int = 0) -> list[Box]:
    return [Box(comp, x, y) for x, y in removable_cells(lam)]


def add_cell(lam: Partition, col: int, row: int) -> Partition:
    parts = list(lam)
    if row == len(parts) + 1:
        if col != 1:
            raise PartitionError(f"cell ({col},{row}) is not addable to {lam}")
        parts.append(1)
    elif parts[row - 1] + 1 == col and (row == 1 or parts[row - 2] >= col):
        parts[row - 1] += 1
    else:
        raise PartitionError(f"cell ({col},{row}) is not addable to {lam}")
    return tuple(parts)


def remove_cell(lam: Partition, col: int, row: int) -> Partition:
    if not (1 <= row <= len(lam)) or lam[row - 1] != col:
        raise PartitionError(f"cell ({col},{row}) is not removable from {lam}")
    below = lam[row] if row < len(lam) else 0
    if below == col:
        raise PartitionError(f"cell ({col},{row}) is not removable from {lam}")
    parts = list(lam)
    parts[row - 1] -= 1
    return make_partition(parts)


def add_box(mp: Multipartition, box: Box) -> Multipartition:
    comps = list(mp)
    comps[box.comp] = add_cell(mp[box.comp], box.col, box.row)
    return tuple(comps)


def remove_box(mp: Multipartition, box: Box) -> Multipartition:
    comps = list(mp)
    comps[box.comp] = remove_cell(mp[box.comp], box.col, box.row)
    return tuple(comps)


@lru_cache(maxsize=None)
def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


def transpose_multi(mp: Multipartition) -> Multipartition:
    return tuple(transpose(c) for c in mp)


def column_multiplicities(lam: Partition) -> Counter:
    """Map column height -> number of columns of that height."""
    return Counter(transpose(lam))


def from_columns(heights) -> Partition:
    return transpose(tuple(sorted((h for h in heights if h > 0), reverse=True)))


def add_partwise(a: Partition, b: Partition) -> Partition:
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return make_partition([x + y for x, y in zip(a, b)])


def scale(lam: Partition, e: int) -> Partition:
    return tuple(e * p for p in lam)


def div_rem_e(lam: Partition, e: int) -> tuple[Partition, Partition]:
    """Split ``lam = e*quot + rem`` part-wise with ``|quot|`` maximal.

    Row-wise sums correspond to unions of column multisets, so a column
    height occurring ``c`` times contributes ``c // e`` columns to ``quot``.
    """
    if e < 1:
        raise ValueError("e must be positive")
    quot, rem = [], []
    for h, c in column_multiplicities(lam).items():
        quot += [h] * (c // e)
        rem += [h] * (c % e)
    return from_columns(quot), from_columns(rem)


def is_e_corestricted(lam: Partition, e: int) -> bool:
    return all(c < e for c in column_multiplicities(lam).values())


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    def gen(rest, largest):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def multipartitions_of(n: int, ell: int) -> tuple[Multipartition, ...]:
    """All ``ell``-multipartitions of ``n``, ordered by component sizes then parts."""
    if ell == 1:
        return tuple((p,) for p in partitions_of(n))
    out = []
    for k in range(n + 1):
        for head in partitions_of(k):
            for tail in multipartitions_of(n - k, ell - 1):
                out.append((head,) + tail)
    return tuple(out)


def multipartitions_upto(n_max: int, ell: int) -> Iterator[Multipartition]:
    for n in range(n_max + 1):
        yield from multipartitions_of(n, ell)


def render_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def render(mp: Multipartition) -> str:
    """Text form: components joined by ``|``, ``-`` for the empty partition."""
    return "|".join(render_partition(c) for c in mp)


def parse_partition(text: str, offset: int = 0) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return ()
    parts = []
    pos = offset
    for tok in text.split(","):
        tok_s = tok.strip()
        if not tok_s.isdigit() or int(tok_s) == 0:
            raise PartitionError(f"bad part {tok_s!r} at position {pos}")
        value = int(tok_s)
        if parts and value > parts[-1]:
            raise PartitionError(
                f"part {value} at position {pos} exceeds previous part {parts[-1]}")
        parts.append(value)
        pos += len(tok) + 1
    return tuple(parts)


def parse(text: str) -> Multipartition:
    """Parse ``"1,1,1|-"`` into ``((1, 1, 1), ())``."""
    comps = []
    offset = 0
    for chunk in text.split("|"):
        comps.append(parse_partition(chunk, offset))
        offset += len(chunk) + 1
    return tuple(comps)
