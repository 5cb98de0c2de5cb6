"""Support invariants ``(p, q)`` of simple modules labelled by multipartitions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .chambers import asymptotic_target, plan_path
from .charged_fock import (FockParam, component_classes, normalize_charges,
                           restrict_to_class)
from .crystal import depth
from .heisenberg import q_depth
from .partitions import Multipartition, multipartitions_of, render, total, transpose_multi


class SupportError(ValueError):
    pass


@dataclass(frozen=True)
class SupportResult:
    lam: Multipartition
    p: int
    q: int
    e: int | None
    trace: tuple = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return total(self.lam)

    @property
    def dim_support(self) -> int:
        return self.p + self.q

    @property
    def finite_dim(self) -> bool:
        return self.p == 0 and self.q == 0

    def as_dict(self) -> dict:
        return {"lambda": render(self.lam), "p": self.p, "q": self.q,
                "dim": self.dim_support, "finite_dim": self.finite_dim,
                "trace": list(self.trace)}


def support(lam: Multipartition, p: FockParam) -> SupportResult:
    """Dispatch on kappa: zero, formal irrational, positive (flip) or negative rational."""
    if len(lam) != p.ell:
        raise SupportError(f"{render(lam)} has {len(lam)} components, parameter has {p.ell}")
    if p.is_zero:
        q = kappa_zero_q(lam, p)
        return SupportResult(lam, 0, q, None, ({"branch": "kappa=0"},))
    if p.is_generic:
        d = depth(lam, p)
        return SupportResult(lam, d, 0, None, ({"branch": "irrational", "depth": d},))
    if p.kappa > 0:
        inner = support(transpose_multi(lam), p.flipped())
        step = {"branch": "flip", "kappa": str(-p.kappa), "lambda": render(transpose_multi(lam))}
        return SupportResult(lam, inner.p, inner.q, inner.e, (step,) + inner.trace)
    return _negative_rational(lam, p)


def _negative_rational(lam: Multipartition, p: FockParam) -> SupportResult:
    trace = []
    p_total = q_total = 0
    for cls in component_classes(p):
        sub_p, sub_lam = restrict_to_class(p, lam, cls)
        sub_p, shift = normalize_charges(sub_p)
        d = depth(sub_lam, sub_p)
        q = q_depth(sub_lam, sub_p)
        j = asymptotic_target(sub_p)
        walls = [str(step.wall) for step in plan_path(sub_p, j, total(sub_lam))]
        trace.append({"class": [c + 1 for c in cls], "shift": str(shift),
                      "asymptotic_component": cls[j] + 1, "walls": walls,
                      "depth": d, "q": q})
        p_total += d
        q_total += q
    if p.e == 1:
        # p is set to 0 by convention when e = 1
        note = {"branch": "e=1", "kac_moody_depth": p_total}
        if p.ell > 1:
            note["flag"] = "convention-extension"
        trace.append(note)
        p_total = 0
    return SupportResult(lam, p_total, q_total, p.e, tuple(trace))


def _h_value(p: FockParam, r: int) -> Fraction:
    # h_1..h_ell stored in order; indices are read mod ell (h_0 = h_ell)
    return p.h[(r - 1) % p.ell]


def _commutator_scalar(p: FockParam, exponent: int) -> Fraction:
    """Scalar of ``[y, x]`` on the line where the generator acts by ``zeta^(-exponent)``.

    ``[y,x] = 1 - 2*sum_k c(gamma^k) gamma^k`` with ``gamma`` acting on ``x`` by
    ``zeta``; the reflection sum acts on that line by ``-ell*(h_r - h_{r-1})``.
    """
    r = exponent % p.ell
    return 1 + p.ell * (_h_value(p, r) - _h_value(p, r - 1))


def rank1_lowering_scalars(p: FockParam, i: int, bound: int) -> Iterator[Fraction]:
    """Yield ``a_1..a_bound`` with ``y x^m v_i = a_m x^(m-1) v_i`` in the rank-one standard module.

    ``y x^m v = sum_{k<m} x^k [y,x] x^(m-1-k) v`` with ``y v = 0``; the
    generator acts on ``v_i`` by ``zeta^(-i)``, hence on ``x^q v_i`` by ``zeta^(q-i)``.
    """
    if p.h is None:
        raise SupportError("kappa = 0 needs the rank-one parameters h")
    for m in range(1, bound + 1):
        yield sum((_commutator_scalar(p, i - q) for q in range(m)), Fraction(0))


def rank1_finite_dimensional(p: FockParam, i: int) -> bool:
    """Whether the rank-one simple labelled by ``i`` (1-based) is finite dimensional.

    ``a_m - m`` is ``ell``-periodic (checked, not assumed), so ``a_m = 0`` has
    a solution iff ``m = -(a_r - r)`` is a positive integer congruent to ``r``.
    """
    ell = p.ell
    a = list(rank1_lowering_scalars(p, i, 2 * ell))
    offsets = [a[m - 1] - m for m in range(1, ell + 1)]
    if any(a[m + ell - 1] - (m + ell) != offsets[m - 1] for m in range(1, ell + 1)):
        raise SupportError("rank-one scalars are not ell-periodic")
    for r, b in enumerate(offsets, start=1):
        m = -b
        if m.denominator == 1 and m >= 1 and (m - r) % ell == 0:
            *_, last = rank1_lowering_scalars(p, i, int(m))
            if last != 0:
                raise SupportError(f"periodicity predicted a_{m} = 0 for i={i}, got {last}")
            return True
    return False


def kappa_zero_q(lam: Multipartition, p: FockParam) -> int:
    infinite = [i for i in range(1, p.ell + 1) if not rank1_finite_dimensional(p, i)]
    return sum(sum(lam[i - 1]) for i in infinite)


def table(p: FockParam, n: int) -> list[SupportResult]:
    return [support(lam, p) for lam in multipartitions_of(n, p.ell)]


def finite_dims(p: FockParam, n: int) -> list[Multipartition]:
    return [r.lam for r in table(p, n) if r.finite_dim]
