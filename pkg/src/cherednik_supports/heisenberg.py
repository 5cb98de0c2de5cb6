"""Level-1 sl_infinity (Heisenberg) crystal and its depth ``q``.

In an asymptotic chamber (one charge ``s_j`` far below the rest) the
operators act on the quotient ``lam'`` of ``lam^(j) = e*lam' + lam''`` as the
ordinary sl_infinity crystal on partitions, with labels the unshifted
contents ``x - y``. Elsewhere everything is pulled back along wall-crossing
transport. Parameters must have rational ``kappa < 0`` and a single class of
components.
"""
from __future__ import annotations

from dataclasses import dataclass

from .chambers import CrossingStep, asymptotic_param, asymptotic_target, is_asymptotic, plan_path
from .charged_fock import FockParam, component_classes
from .crystal import CrystalError, ascend_to_singular, descend, is_singular
from .partitions import (Multipartition, Partition, add_cell, addable_cells, div_rem_e,
                         remove_cell, removable_cells, scale, total)
from .wallcross import reverse_path, transport


class HeisenbergError(RuntimeError):
    pass


@dataclass(frozen=True)
class Frame:
    """Where a computation of size ``n`` is carried to."""

    j: int
    path: tuple[CrossingStep, ...]
    target: FockParam


def check_param(p: FockParam):
    if p.is_generic or p.kappa == 0 or p.kappa > 0:
        raise HeisenbergError(f"need rational kappa < 0, got {p.kappa}")
    if len(component_classes(p)) != 1:
        raise HeisenbergError(f"charges {p.charges} split into several classes")


def frame(p: FockParam, n: int) -> Frame:
    check_param(p)
    j = asymptotic_target(p)
    return Frame(j, tuple(plan_path(p, j, n)), asymptotic_param(p, j, n))


def _quotient(mp: Multipartition, p: FockParam, j: int) -> Partition:
    quot, rem = div_rem_e(mp[j], p.e)
    if rem:
        raise HeisenbergError(f"component {j + 1} of {mp} is not divisible by e={p.e}")
    return quot


def _check_asym(mp: Multipartition, p: FockParam, j: int, n: int):
    if not is_asymptotic(p, j, n):
        raise HeisenbergError(f"{p} is not asymptotic for component {j + 1}, n={n}")
    if not is_singular(mp, p):
        raise HeisenbergError(f"{mp} is not singular at {p}")


def _replace(mp: Multipartition, j: int, lam: Partition) -> Multipartition:
    out = list(mp)
    out[j] = lam
    return tuple(out)


def asym_e_inf(mp: Multipartition, i: int, p: FockParam, j: int) -> Multipartition | None:
    _check_asym(mp, p, j, total(mp))
    quot = _quotient(mp, p, j)
    for x, y in removable_cells(quot):
        if x - y == i:
            return _replace(mp, j, scale(remove_cell(quot, x, y), p.e))
    return None


def asym_f_inf(mp: Multipartition, i: int, p: FockParam, j: int) -> Multipartition | None:
    _check_asym(mp, p, j, total(mp) + p.e)
    quot = _quotient(mp, p, j)
    for x, y in addable_cells(quot):
        if x - y == i:
            return _replace(mp, j, scale(add_cell(quot, x, y), p.e))
    return None


def asym_a_mu(mp: Multipartition, mu: Partition, p: FockParam, j: int) -> Multipartition:
    """Put ``e*mu`` into the empty component ``j`` of a finite-dimensional label."""
    _check_asym(mp, p, j, total(mp) + p.e * sum(mu))
    if mp[j]:
        raise HeisenbergError(f"component {j + 1} of {mp} must be empty")
    return _replace(mp, j, scale(mu, p.e))


def _through_frame(mp: Multipartition, p: FockParam, n: int, act) -> Multipartition | None:
    fr = frame(p, n)
    moved = transport(mp, fr.path, p)
    head, word = ascend_to_singular(moved, fr.target)
    new_head = act(head, fr.target, fr.j)
    if new_head is None:
        return None
    try:
        back = descend(new_head, word, fr.target)
    except CrystalError as exc:
        raise HeisenbergError(f"Kac-Moody word does not replay after the Heisenberg step: {exc}")
    return transport(back, reverse_path(fr.path), p)


def e_inf(mp: Multipartition, i: int, p: FockParam) -> Multipartition | None:
    return _through_frame(mp, p, total(mp),
                          lambda h, t, j: asym_e_inf(h, i, t, j))


def f_inf(mp: Multipartition, i: int, p: FockParam) -> Multipartition | None:
    return _through_frame(mp, p, total(mp) + p.e,
                          lambda h, t, j: asym_f_inf(h, i, t, j))


def q_remark(mp: Multipartition, p: FockParam) -> int:
    """Transport, then take ``|quot|`` of the asymptotic component."""
    fr = frame(p, total(mp))
    moved = transport(mp, fr.path, p)
    return sum(div_rem_e(moved[fr.j], p.e)[0])


def q_singular(mp: Multipartition, p: FockParam) -> int:
    """Ascend to the singular head first, then transport and read ``|head^(j)|/e``."""
    fr = frame(p, total(mp))
    head, _ = ascend_to_singular(mp, p)
    moved = transport(head, fr.path, p)
    if not is_singular(moved, fr.target):
        raise HeisenbergError(f"transport of singular {head} is not singular")
    return sum(_quotient(moved, fr.target, fr.j))


def q_depth(mp: Multipartition, p: FockParam) -> int:
    a, b = q_remark(mp, p), q_singular(mp, p)
    if a != b:
        raise HeisenbergError(f"q routes disagree for {mp} at {p}: {a} vs {b}")
    return a


def inf_labels(mp: Multipartition, p: FockParam, extra: int = 0) -> list[int]:
    """Labels worth trying for ``e_inf``/``f_inf`` on ``mp``."""
    n = total(mp) + extra
    return list(range(-n, n + 1))
