
import pytest

from cherednik_supports.chambers import plan_path
from cherednik_supports.charged_fock import block_id, signatures
from cherednik_supports.crystal import depth, e_op, f_op
from cherednik_supports.partitions import multipartitions_of, multipartitions_upto, parse
from cherednik_supports.wallcross import (
    WallCrossingError, pair_ascend, pair_e_op, pair_f_op, singular_pair, transport,
    reverse_path, wc_pair, wc_typeA, wc_wall)

from conftest import param


def P(text):
    return parse(text)


def test_pair_ops_on_empty():
    for label in range(-4, 5):
        assert pair_e_op(((), ()), label, 1, -2) is None
    assert pair_f_op(((), ()), 0, 1, -2) is not None


def test_singular_rectangles_m_minus_2():
    assert pair_ascend(P("1,1,1|-"), 1, -2) == (P("1,1,1|-"), ())
    assert pair_ascend(P("-|3"), 2, -2) == (P("-|3"), ())
    assert singular_pair(3, 1, -2) == P("1,1,1|-")
    assert singular_pair(3, 2, -2) == P("-|3")
    with pytest.raises(WallCrossingError):
        singular_pair(2, 1, -2)


@pytest.mark.parametrize("m", range(-3, 4))
def test_singular_classification(m):
    for side in (1, 2):
        for n in range(7):
            singular = [x for x in multipartitions_of(n, 2)
                        if pair_ascend(x, side, m)[1] == ()]
            try:
                expected = [singular_pair(n, side, m)] if n else [((), ())]
            except WallCrossingError:
                expected = []
            assert singular == expected


def test_wc_small_sizes_fixed():
    assert wc_pair(((), ()), -2, 1) == ((), ())
    for n in (1, 2):
        for x in multipartitions_of(n, 2):
            assert wc_pair(x, -2, 1) == x and wc_pair(x, 2, 1) == x


@pytest.mark.parametrize("m", range(-3, 4))
@pytest.mark.parametrize("side", [1, 2])
def test_wc_is_size_preserving_bijection(m, side):
    for n in range(7):
        dom = multipartitions_of(n, 2)
        img = [wc_pair(x, m, side) for x in dom]
        assert sorted(img) == sorted(dom)
        assert all(wc_pair(y, m, 3 - side) == x for x, y in zip(dom, img))


@pytest.mark.parametrize("m", range(-3, 4))
def test_wc_intertwines(m):
    for x in multipartitions_upto(5, 2):
        y = wc_pair(x, m, 1)
        for label in range(-7, 8):
            ex = pair_e_op(x, label, 1, m)
            if ex is not None:
                assert wc_pair(ex, m, 1) == pair_e_op(y, label, 2, m)
            fx = pair_f_op(x, label, 1, m)
            if fx is not None and sum(map(sum, fx)) <= 5:
                assert wc_pair(fx, m, 1) == pair_f_op(y, label, 2, m)


def test_wc_minus_2_size_three_cycle():
    # forced by intertwining: a 4-cycle, not the transcribed transposition
    cycle = ["-|3", "1|2", "1,1|1", "1,1,1|-"]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert wc_pair(P(a), -2, 1) == P(b)
    for x in ("-|2,1", "-|1,1,1", "1|1,1", "2|1", "3|-", "2,1|-"):
        assert wc_pair(P(x), -2, 1) == P(x)


def test_transposition_would_break_intertwining():
    m = -2
    swap = {P("1,1,1|-"): P("-|3"), P("-|3"): P("1,1,1|-")}

    def candidate(x):
        return swap.get(x, x)
    broken = 0
    for x in multipartitions_upto(3, 2):
        for label in range(-5, 6):
            ex = pair_e_op(x, label, 1, m)
            if ex is not None and candidate(ex) != pair_e_op(candidate(x), label, 2, m):
                broken += 1
    assert broken > 0


def test_wc_m2_size_three_cycle():
    cycle = ["-|1,1,1", "1|1,1", "2|1", "3|-"]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert wc_pair(P(a), 2, 1) == P(b)


def test_wc_zero_swaps_components():
    for x in multipartitions_upto(4, 2):
        assert wc_pair(x, 0, 1) == (x[1], x[0])


def test_not_an_involution_with_same_side():
    x = P("-|3")
    assert wc_pair(wc_pair(x, -2, 1), -2, 1) != x


@pytest.mark.parametrize("m", range(-3, 4))
@pytest.mark.parametrize("side", [1, 2])
def test_orientation_relabel(m, side):
    for x in multipartitions_upto(5, 2):
        swapped = (x[1], x[0])
        y = wc_pair(x, m, side)
        assert wc_pair(swapped, -m, 3 - side) == (y[1], y[0])


@pytest.mark.parametrize("m", [-3, 3, 4])
def test_large_m_is_identity(m):
    for x in multipartitions_upto(min(abs(m), 4), 2):
        assert wc_pair(x, m, 1) == x and wc_pair(x, m, 2) == x


def _steps_around_example(n):
    return plan_path(param("-1/2", 0, 2), 1, n)


def test_wc_wall_examples():
    steps = _steps_around_example(3)
    to_chamber_1 = steps[-1]
    assert to_chamber_1.wall.m == 2
    # crossing from chamber 1 into chamber 2
    back = to_chamber_1.reversed()
    p1 = param("-1/2", 0, -4)
    assert wc_wall(P("-|3"), back, p1) == P("1|2")
    zero = steps[1]
    p3 = param("-1/2", 0, 0)
    for x in multipartitions_upto(3, 2):
        assert wc_wall(x, zero, p3) == (x[1], x[0])


def test_transport_round_trip_and_blocks():
    p = param("-1/2", 0, 2)
    path = plan_path(p, 1, 5)
    end = p.with_charges(path[-1].target_s)
    assert transport(P("2|1"), [], p) == P("2|1")
    for x in multipartitions_upto(5, 2):
        y = transport(x, path, p)
        assert transport(y, reverse_path(path), p) == x
        assert block_id(y, end) == block_id(x, p)


@pytest.mark.parametrize("k", range(4))
def test_single_wall_crossing_intertwines_crystal(k):
    p = param("-1/2", 0, 2)
    step = _steps_around_example(5)[k]
    src, tgt = p.with_charges(step.source_s), p.with_charges(step.target_s)
    for x in multipartitions_upto(5, 2):
        y = wc_wall(x, step, p)
        assert depth(y, tgt) == depth(x, src)
        for z in signatures(x, src):
            ex = e_op(x, z, src)
            if ex is not None:
                assert wc_wall(ex, step, p) == e_op(y, z, tgt)
            fx = f_op(x, z, src)
            if fx is not None and sum(map(sum, fx)) <= 5:
                assert wc_wall(fx, step, p) == f_op(y, z, tgt)


def test_step_with_ell_three():
    p = param("-1/2", 2, 1, 0)
    path = plan_path(p, 2, 3)
    assert path
    for x in multipartitions_upto(3, 3):
        y = transport(x, path, p)
        assert transport(y, reverse_path(path), p) == x


@pytest.mark.parametrize("e", [2, 3])
def test_wc_type_a(e):
    assert wc_typeA((2 * e,), e) == (2,) * e
    assert wc_typeA((e, e), e) == (1,) * (2 * e)
    assert wc_typeA((), e) == ()
