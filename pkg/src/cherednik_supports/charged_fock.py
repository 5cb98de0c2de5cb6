"""Charged contents, residues and signatures on a level-``ell`` Fock space.

All arithmetic is exact (:class:`fractions.Fraction`). A box ``b=(comp, x, y)``
has charged content ``x - y + s[comp]``; two boxes are equivalent when their
contents differ by an element of ``kappa^-1 Z``. Signatures list equivalent
addable (+) and removable (-) boxes in ascending order of
``v(b) = kappa*ell*cont(b) - i`` (``i`` the 1-based component number).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .partitions import Box, Multipartition, addable_boxes, cells, removable_boxes


@dataclass(frozen=True)
class GenericKappa:
    """A formal irrational kappa; ``sign`` says which side of zero it sits on."""

    sign: int = -1

    def __neg__(self):
        return GenericKappa(-self.sign)

    def __str__(self):
        return "generic-neg" if self.sign < 0 else "generic-pos"


Kappa = Union[Fraction, GenericKappa]


def to_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass ints, strings or Fractions")
    return Fraction(value)


@dataclass(frozen=True)
class FockParam:
    """Parameter ``(kappa, s_1, ..., s_ell)``.

    For ``kappa == 0`` the charges carry no information; the rank-one
    parameters ``h_1..h_ell`` (indices read mod ``ell``) go in ``h`` instead.
    """

    kappa: Kappa
    charges: tuple[Fraction, ...]
    h: tuple[Fraction, ...] | None = field(default=None)

    def __post_init__(self):
        kappa = self.kappa
        if not isinstance(kappa, GenericKappa):
            object.__setattr__(self, "kappa", to_rat(kappa))
        object.__setattr__(self, "charges", tuple(to_rat(s) for s in self.charges))
        if self.h is not None:
            object.__setattr__(self, "h", tuple(to_rat(v) for v in self.h))
            if len(self.h) != len(self.charges):
                raise ValueError("h must have one entry per component")
        if not self.charges:
            raise ValueError("need at least one charge")

    @property
    def ell(self) -> int:
        return len(self.charges)

    @property
    def is_generic(self) -> bool:
        return isinstance(self.kappa, GenericKappa)

    @property
    def is_zero(self) -> bool:
        return not self.is_generic and self.kappa == 0

    @property
    def e(self) -> int | None:
        """Denominator of kappa; ``None`` stands for infinity."""
        if self.is_generic:
            return None
        return self.kappa.denominator

    @property
    def modulus(self) -> Fraction | None:
        """Positive generator of ``kappa^-1 Z`` (``None`` when it is ``{0}``)."""
        if self.is_generic:
            return None
        if self.kappa == 0:
            raise ValueError("kappa = 0 has no residue modulus")
        return abs(1 / self.kappa)

    @property
    def kappa_sign(self) -> int:
        if self.is_generic:
            return self.kappa.sign
        return (self.kappa > 0) - (self.kappa < 0)

    def with_charges(self, charges) -> "FockParam":
        return FockParam(self.kappa, tuple(charges), self.h)

    def flipped(self) -> "FockParam":
        return FockParam(-self.kappa, tuple(-s for s in self.charges), self.h)

    def __str__(self):
        s = ",".join(str(c) for c in self.charges)
        return f"kappa={self.kappa} s=({s})"


def content(b: Box, p: FockParam) -> Fraction:
    return b.col - b.row + p.charges[b.comp]


def residue_of(value: Fraction, p: FockParam) -> Fraction:
    mod = p.modulus
    return value if mod is None else value % mod


def residue(b: Box, p: FockParam) -> Fraction:
    return residue_of(content(b, p), p)


def equivalent(b: Box, b2: Box, p: FockParam) -> bool:
    return residue(b, p) == residue(b2, p)


def order_value(cont: Fraction, comp: int, p: FockParam):
    """``v = kappa*ell*cont - i`` for a box of content ``cont`` in ``comp``.

    For a formal kappa the value ``alpha*kappa + beta`` is returned as a
    tuple comparing like the real number with ``|kappa|`` huge.
    """
    i = comp + 1
    if p.is_generic:
        alpha = p.ell * cont
        return (alpha if p.kappa.sign > 0 else -alpha, -i)
    return p.kappa * p.ell * cont - i


def order_key(b: Box, p: FockParam):
    return order_value(content(b, p), b.comp, p)


# a signature is a tuple of (sign, box) with sign +1 (addable) or -1 (removable)
Signature = tuple[tuple[int, Box], ...]


def corner_boxes(mp: Multipartition):
    """All (sign, box) corners of a multipartition."""
    for comp, lam in enumerate(mp):
        for b in addable_boxes(lam, comp):
            yield 1, b
        for b in removable_boxes(lam, comp):
            yield -1, b


def _sorted_signature(entries, p: FockParam) -> Signature:
    keyed = sorted(((order_key(b, p), sign, b) for sign, b in entries),
                   key=lambda t: t[0])
    for (k1, _, b1), (k2, _, b2) in zip(keyed, keyed[1:]):
        if k1 == k2:
            raise AssertionError(f"equivalent boxes {b1} and {b2} share v={k1} at {p}")
    return tuple((sign, b) for _, sign, b in keyed)


def signatures(mp: Multipartition, p: FockParam) -> dict[Fraction, Signature]:
    """All nonempty z-signatures of ``mp``, keyed by residue."""
    groups = defaultdict(list)
    for sign, b in corner_boxes(mp):
        groups[residue(b, p)].append((sign, b))
    return {z: _sorted_signature(entries, p) for z, entries in groups.items()}


def z_signature(mp: Multipartition, z, p: FockParam) -> Signature:
    z = residue_of(to_rat(z), p)
    entries = [(sign, b) for sign, b in corner_boxes(mp) if residue(b, p) == z]
    return _sorted_signature(entries, p)


def reduce_signature(sig):
    """Cancel adjacent ``(-, +)`` pairs until the word reads ``+...+-...-``."""
    stack = []
    for entry in sig:
        if entry[0] > 0 and stack and stack[-1][0] < 0:
            stack.pop()
        else:
            stack.append(entry)
    return tuple(stack)


def block_id(mp: Multipartition, p: FockParam) -> tuple[Fraction, ...]:
    return tuple(sorted(residue_of(x - y + p.charges[comp], p)
                        for comp, lam in enumerate(mp) for x, y in cells(lam)))


def _same_class(d: Fraction, p: FockParam) -> bool:
    # Z + kappa^-1 Z = (1/a) Z for kappa = a/e in lowest terms
    if p.is_generic:
        return d.denominator == 1
    return (d * p.kappa.numerator).denominator == 1


def component_classes(p: FockParam) -> list[tuple[int, ...]]:
    """Group 0-based component indices whose diagrams can hold equivalent boxes."""
    classes: list[list[int]] = []
    for i, s in enumerate(p.charges):
        for cls in classes:
            if _same_class(s - p.charges[cls[0]], p):
                cls.append(i)
                break
        else:
            classes.append([i])
    return [tuple(c) for c in classes]


def restrict_to_class(p: FockParam, mp: Multipartition, cls) -> tuple[FockParam, Multipartition]:
    h = None if p.h is None else tuple(p.h[i] for i in cls)
    return (FockParam(p.kappa, tuple(p.charges[i] for i in cls), h),
            tuple(mp[i] for i in cls))


def normalize_charges(p: FockParam) -> tuple[FockParam, Fraction]:
    """Shift all charges so the smallest is 0; returns the shift applied."""
    shift = -min(p.charges)
    return p.with_charges(s + shift for s in p.charges), shift
