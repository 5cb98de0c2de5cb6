"""Essential walls ``h_i - h_j = kappa*m`` in charge coordinates, and path planning.

With ``h_i = kappa*s_i - i/ell`` the wall sits at
``s_i - s_j = m + (i - j)/(kappa*ell)``. The residue condition
``s_i - s_j - m in kappa^-1 Z`` selects which ``m`` matter for the lattice
coset of the current charges.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .charged_fock import FockParam


class PathError(RuntimeError):
    pass


@dataclass(frozen=True)
class Wall:
    i: int  # 0-based, i < j
    j: int
    m: int
    n_scope: int

    def offset(self, p: FockParam) -> Fraction:
        return Fraction(self.i - self.j) / (p.kappa * p.ell)

    def __str__(self):
        return f"h{self.i + 1}-h{self.j + 1}={self.m}k"


@dataclass(frozen=True)
class CrossingStep:
    wall: Wall
    direction: int  # sign of the change of s_i - s_j
    source_s: tuple[Fraction, ...]
    target_s: tuple[Fraction, ...]

    def reversed(self) -> "CrossingStep":
        return CrossingStep(self.wall, -self.direction, self.target_s, self.source_s)


def _require_rational(p: FockParam):
    if p.is_generic or p.kappa == 0:
        raise PathError(f"walls need a nonzero rational kappa, got {p.kappa}")


def wall_position(w: Wall, p: FockParam) -> Fraction:
    """Signed distance ``(s_i - s_j) - (m + (i-j)/(kappa*ell))``."""
    _require_rational(p)
    return p.charges[w.i] - p.charges[w.j] - w.m - w.offset(p)


def essential_walls(p: FockParam, n: int) -> list[Wall]:
    _require_rational(p)
    mod = p.modulus
    walls = []
    for i in range(p.ell):
        for j in range(i + 1, p.ell):
            d = p.charges[i] - p.charges[j]
            for m in range(-n + 1, n):
                if ((d - m) / mod).denominator == 1:
                    walls.append(Wall(i, j, m, n))
    return walls


def is_asymptotic(p: FockParam, j: int, n: int) -> bool:
    sj = p.charges[j]
    return all(sj < s - n for i, s in enumerate(p.charges) if i != j)


def asymptotic_target(p: FockParam) -> int:
    """Index of the smallest charge (ties broken by smallest index)."""
    return min(range(p.ell), key=lambda i: (p.charges[i], i))


def _moves_needed(p: FockParam, j: int, n: int) -> int:
    others = [s for i, s in enumerate(p.charges) if i != j]
    if not others:
        return 0
    gap = p.charges[j] - (min(others) - n)
    return max(0, math.floor(gap / p.modulus) + 1)


def asymptotic_param(p: FockParam, j: int, n: int) -> FockParam:
    """The lattice point reached by :func:`plan_path`."""
    _require_rational(p)
    drop = _moves_needed(p, j, n) * p.modulus
    return p.with_charges(s - drop if k == j else s for k, s in enumerate(p.charges))


def plan_path(p: FockParam, j: int, n: int) -> list[CrossingStep]:
    """Lower ``s_j`` in steps of the residue modulus until asymptotic for ``n``.

    Only ``s_j`` moves, so the walls met are ordered by the value of ``s_j``
    at the crossing. Each step runs between lattice points when one lies
    strictly between consecutive walls, else between midpoints.
    """
    _require_rational(p)
    mod = p.modulus
    moves = _moves_needed(p, j, n)
    end = asymptotic_param(p, j, n)
    start_sj, end_sj = p.charges[j], end.charges[j]
    hits = []
    for w in essential_walls(p, n):
        if j not in (w.i, w.j):
            continue
        before, after = wall_position(w, p), wall_position(w, end)
        # walls are affine in s_j with slope -1 (j == w.j) or +1 (j == w.i)
        slope = 1 if j == w.i else -1
        for k in range(moves + 1):
            if wall_position(w, p.with_charges(
                    s - k * mod if q == j else s for q, s in enumerate(p.charges))) == 0:
                raise PathError(f"lattice point lies on wall {w}")
        if (before > 0) != (after > 0):
            hits.append((start_sj - before / slope, w, 1 if after > before else -1))
    hits.sort(key=lambda h: -h[0])
    for a, b in zip(hits, hits[1:]):
        if a[0] == b[0]:
            raise PathError(f"walls {a[1]} and {b[1]} are met at the same point")
    cuts = [start_sj] + [h[0] for h in hits] + [end_sj]

    def rest_point(hi, lo):
        # largest lattice value of s_j strictly inside (lo, hi), else the midpoint
        cand = start_sj - (math.floor((start_sj - hi) / mod) + 1) * mod
        return cand if cand > lo else (hi + lo) / 2

    def charges_at(sj):
        return tuple(sj if q == j else s for q, s in enumerate(p.charges))

    stops = [start_sj] + [rest_point(cuts[k], cuts[k + 1]) for k in range(1, len(cuts) - 2)]
    stops += [end_sj] if hits else []
    return [CrossingStep(w, direction, charges_at(stops[k]), charges_at(stops[k + 1]))
            for k, (_, w, direction) in enumerate(hits)]


def path_endpoint(p: FockParam, path: list[CrossingStep]) -> FockParam:
    return p.with_charges(path[-1].target_s) if path else p
