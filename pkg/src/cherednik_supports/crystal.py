"""Signature-rule crystal on charged multipartitions.

``e_op`` removes the box of the leftmost uncancelled ``-``, ``f_op`` adds the
box of the rightmost uncancelled ``+``. With a formal kappa the same code
gives the sl_infinity crystal (residue = exact content).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .charged_fock import (FockParam, reduce_signature, residue_of,
                           signatures, to_rat, z_signature)
from .partitions import (Multipartition, Partition, add_box, is_e_corestricted,
                         remove_box)


class CrystalError(RuntimeError):
    pass


def _rat(z, p):
    return residue_of(to_rat(z), p)


@lru_cache(maxsize=200_000)
def e_op(mp: Multipartition, z, p: FockParam) -> Multipartition | None:
    red = reduce_signature(z_signature(mp, _rat(z, p), p))
    for sign, b in red:
        if sign < 0:
            return remove_box(mp, b)
    return None


@lru_cache(maxsize=200_000)
def f_op(mp: Multipartition, z, p: FockParam) -> Multipartition | None:
    red = reduce_signature(z_signature(mp, _rat(z, p), p))
    for sign, b in reversed(red):
        if sign > 0:
            return add_box(mp, b)
    return None


def _removal_residues(mp: Multipartition, p: FockParam) -> list[Fraction]:
    return sorted(z for z, sig in signatures(mp, p).items() if any(s < 0 for s, _ in sig))


def is_singular(mp: Multipartition, p: FockParam) -> bool:
    return all(e_op(mp, z, p) is None for z in _removal_residues(mp, p))


@lru_cache(maxsize=200_000)
def ascend_to_singular(mp: Multipartition, p: FockParam) -> tuple[Multipartition, tuple]:
    """Apply annihilation operators (smallest residue first) until singular.

    Returns the singular head and the residues used, in application order.
    """
    word = []
    current = mp
    while True:
        for z in _removal_residues(current, p):
            nxt = e_op(current, z, p)
            if nxt is not None:
                word.append(z)
                current = nxt
                break
        else:
            return current, tuple(word)


def descend(head: Multipartition, word, p: FockParam) -> Multipartition:
    """Undo an ascent: apply ``f_op`` along the reversed word."""
    current = head
    for z in reversed(word):
        nxt = f_op(current, z, p)
        if nxt is None:
            raise CrystalError(f"f_{z} kills {current} at {p} while replaying word {word}")
        current = nxt
    return current


def depth(mp: Multipartition, p: FockParam) -> int:
    return len(ascend_to_singular(mp, p)[1])


def all_chain_lengths(mp: Multipartition, p: FockParam) -> set[int]:
    """Lengths of every maximal annihilation chain starting at ``mp``."""
    memo: dict[Multipartition, frozenset] = {}

    def walk(x):
        if x in memo:
            return memo[x]
        lengths = set()
        for z in _removal_residues(x, p):
            y = e_op(x, z, p)
            if y is not None:
                lengths |= {k + 1 for k in walk(y)}
        memo[x] = frozenset(lengths or {0})
        return memo[x]

    return set(walk(mp))


def level_one_param(e: int) -> FockParam:
    """Level-1 charge-0 parameter with ``kappa = -1/e``."""
    return FockParam(Fraction(-1, e), (Fraction(0),))


def mullineux(lam: Partition, e: int) -> Partition:
    """Twisted-equivariant involution of the crystal component of the empty partition."""
    if not is_e_corestricted(lam, e):
        raise ValueError(f"{lam} is not {e}-co-restricted")
    p = level_one_param(e)
    head, word = ascend_to_singular((lam,), p)
    if head != ((),):
        raise CrystalError(f"{lam} does not ascend to the empty partition")
    twisted = tuple((-z) % e for z in word)
    return descend(head, twisted, p)[0]
