"""Combinatorial wall-crossing bijections.

The pair crystal on bipartitions ``(A, B)`` labels a box ``(x, y)`` of ``A``
by ``x - y`` and a box of ``B`` by ``x - y + m``. On side 1 the ``A`` box is
listed first at equal label, on side 2 the ``B`` box. ``wc_pair`` is the
unique size-preserving bijection carrying one side's crystal to the other's.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .chambers import CrossingStep
from .charged_fock import FockParam, order_value, reduce_signature
from .crystal import mullineux
from .partitions import (Multipartition, Partition, add_cell, add_partwise,
                         addable_cells, div_rem_e, remove_cell, removable_cells,
                         scale, transpose)


class WallCrossingError(RuntimeError):
    pass


Pair = tuple[Partition, Partition]


def _pair_signature(pair: Pair, label: int, m: int, side: int):
    """Entries ``(sign, slot, (col, row))`` at one label, in listing order."""
    entries = []
    for slot, lam, shift in ((0, pair[0], 0), (1, pair[1], m)):
        for x, y in addable_cells(lam):
            if x - y + shift == label:
                entries.append((1, slot, (x, y)))
        for x, y in removable_cells(lam):
            if x - y + shift == label:
                entries.append((-1, slot, (x, y)))
    order = (0, 1) if side == 1 else (1, 0)
    entries.sort(key=lambda t: order.index(t[1]))
    return entries


def _apply(pair: Pair, slot: int, cell, add: bool) -> Pair:
    out = list(pair)
    out[slot] = (add_cell if add else remove_cell)(pair[slot], *cell)
    return tuple(out)


@lru_cache(maxsize=200_000)
def pair_e_op(pair: Pair, label: int, side: int, m: int) -> Pair | None:
    for sign, slot, cell in reduce_signature(_pair_signature(pair, label, m, side)):
        if sign < 0:
            return _apply(pair, slot, cell, add=False)
    return None


@lru_cache(maxsize=200_000)
def pair_f_op(pair: Pair, label: int, side: int, m: int) -> Pair | None:
    for sign, slot, cell in reversed(reduce_signature(_pair_signature(pair, label, m, side))):
        if sign > 0:
            return _apply(pair, slot, cell, add=True)
    return None


def _removal_labels(pair: Pair, m: int) -> list[int]:
    labels = {x - y for x, y in removable_cells(pair[0])}
    labels |= {x - y + m for x, y in removable_cells(pair[1])}
    return sorted(labels)


def pair_ascend(pair: Pair, side: int, m: int) -> tuple[Pair, tuple[int, ...]]:
    word = []
    current = pair
    while True:
        for label in _removal_labels(current, m):
            nxt = pair_e_op(current, label, side, m)
            if nxt is not None:
                word.append(label)
                current = nxt
                break
        else:
            return current, tuple(word)


def rectangle(cols: int, rows: int) -> Partition:
    return (cols,) * rows if cols > 0 and rows > 0 else ()


def singular_pair(size: int, side: int, m: int) -> Pair:
    """The singular bipartition of ``size`` on ``side`` (rectangles of corner label ``m``)."""
    if size == 0:
        return ((), ())
    # side 1: A has r rows of length r + m; side 2: B has c columns and c + m rows
    r = (-m + math.isqrt(m * m + 4 * size)) // 2
    if r < 1 or r + m < 1 or r * (r + m) != size:
        raise WallCrossingError(f"no singular pair of size {size} for m={m}")
    if side == 1:
        return (rectangle(r + m, r), ())
    return ((), rectangle(r, r + m))


@lru_cache(maxsize=200_000)
def wc_pair(pair: Pair, m: int, from_side: int) -> Pair:
    """Carry ``pair`` from the ``from_side`` crystal to the other side's crystal."""
    to_side = 3 - from_side
    head, word = pair_ascend(pair, from_side, m)
    size = sum(head[0]) + sum(head[1])
    expected = singular_pair(size, from_side, m) if size else ((), ())
    if head != expected:
        raise WallCrossingError(
            f"singular head {head} of {pair} (side {from_side}, m={m}) is not {expected}")
    current = singular_pair(size, to_side, m) if size else ((), ())
    for label in reversed(word):
        nxt = pair_f_op(current, label, to_side, m)
        if nxt is None:
            raise WallCrossingError(
                f"descent failed at {current}, label {label} (side {to_side}, m={m})")
        current = nxt
    return current


def source_side(step: CrossingStep, p: FockParam) -> int:
    """Pair-crystal side seen from the step's source charges.

    A component-``j`` box (first slot) and a component-``i`` box (second slot)
    with the same label are compared by their ``v`` keys at ``source_s``.
    """
    w = step.wall
    src = p.with_charges(step.source_s)
    label = 0
    v_first = order_value(label + src.charges[w.j], w.j, src)
    v_second = order_value(label - w.m + src.charges[w.i], w.i, src)
    if v_first == v_second:
        raise WallCrossingError(f"source charges {step.source_s} lie on {w}")
    return 1 if v_first < v_second else 2


def wc_wall(mp: Multipartition, step: CrossingStep, p: FockParam) -> Multipartition:
    """Cross one wall: ``(lam_j, lam_i) -> wc_m(lam_j, lam_i)``, other components fixed."""
    w = step.wall
    a, b = wc_pair((mp[w.j], mp[w.i]), w.m, source_side(step, p))
    out = list(mp)
    out[w.j], out[w.i] = a, b
    return tuple(out)


def transport(mp: Multipartition, path, p: FockParam) -> Multipartition:
    for step in path:
        mp = wc_wall(mp, step, p)
    return mp


def reverse_path(path):
    return [step.reversed() for step in reversed(path)]


def wc_typeA(lam: Partition, e: int) -> Partition:
    """Type-A crossing from negative to positive kappa."""
    if e < 2:
        raise ValueError("e must be at least 2")
    quot, rem = div_rem_e(lam, e)
    return transpose(add_partwise(scale(transpose(quot), e), mullineux(rem, e)))
