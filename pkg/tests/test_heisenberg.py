import pytest

from cherednik_supports.chambers import plan_path
from cherednik_supports.charged_fock import signatures
from cherednik_supports.crystal import e_op, f_op, level_one_param
from cherednik_supports.heisenberg import (
    HeisenbergError, asym_a_mu, asym_e_inf, asym_f_inf, e_inf, f_inf, inf_labels, q_depth,
    q_remark, q_singular)
from cherednik_supports.partitions import div_rem_e, multipartitions_upto, parse, total
from cherednik_supports.supports import support
from cherednik_supports.wallcross import transport

from conftest import param

CHAMBERS = [param("-1/2", 0, s2) for s2 in (-4, -2, 0, 2)]


def test_asym_e_inf_single_block(chamber1):
    lam = parse("-|2")
    assert asym_e_inf(lam, 0, chamber1, 1) == parse("-|-")
    assert all(asym_e_inf(lam, i, chamber1, 1) is None for i in (-2, -1, 1, 2))
    assert all(asym_e_inf(parse("1,1,1|-"), i, chamber1, 1) is None for i in range(-3, 4))


def test_asym_e_inf_removes_quotient_corner():
    p = level_one_param(2)
    assert asym_e_inf(((4, 2),), 1, p, 0) == ((2, 2),)
    assert asym_e_inf(((4, 2),), -1, p, 0) == ((4,),)
    assert asym_f_inf(((2,),), 1, p, 0) == ((4,),)


def test_asym_preconditions(chamber1):
    with pytest.raises(HeisenbergError):
        asym_e_inf(parse("-|3"), 0, chamber1, 1)          # not singular
    with pytest.raises(HeisenbergError):
        asym_e_inf(parse("-|2"), 0, param("-1/2", 0, -2), 1)  # not asymptotic


def test_asym_a_mu():
    p = param("-1/2", 0, -6)
    empty = parse("-|-")
    assert asym_a_mu(empty, (), p, 1) == empty
    assert asym_a_mu(empty, (1,), p, 1) == parse("-|2")
    out = asym_a_mu(parse("1,1,1|-"), (1,), param("-1/2", 0, -8), 1)
    assert total(out) == 3 + 2
    with pytest.raises(HeisenbergError):
        asym_a_mu(parse("-|2"), (1,), param("-1/2", 0, -8), 1)


def test_e_inf_level_one():
    p = level_one_param(2)
    assert e_inf(((2,),), 0, p) == ((),)
    assert all(e_inf(((2,),), i, p) is None for i in (-1, 1))


def test_e_inf_agrees_with_asymptotic(chamber1):
    lam = parse("-|2")
    for i in range(-2, 3):
        assert e_inf(lam, i, chamber1) == asym_e_inf(lam, i, chamber1, 1)


def test_needs_negative_rational():
    with pytest.raises(HeisenbergError):
        q_depth(parse("1|-"), param("1/2", 0, 1))


@pytest.mark.parametrize("p", CHAMBERS, ids=str)
def test_heisenberg_partial_inverses(p):
    for lam in multipartitions_upto(4, 2):
        for i in inf_labels(lam, p):
            mu = e_inf(lam, i, p)
            if mu is not None:
                assert f_inf(mu, i, p) == lam
        if total(lam) + p.e <= 5:
            for i in inf_labels(lam, p, p.e):
                nu = f_inf(lam, i, p)
                if nu is not None:
                    assert e_inf(nu, i, p) == lam


@pytest.mark.parametrize("p", CHAMBERS, ids=str)
def test_commutes_with_kac_moody(p):
    for lam in multipartitions_upto(5, 2):
        zs = list(signatures(lam, p))
        for i in inf_labels(lam, p):
            a = e_inf(lam, i, p)
            if a is None:
                continue
            for z in zs:
                b = e_op(lam, z, p)
                if b is None:
                    continue
                left, right = e_op(a, z, p), e_inf(b, i, p)
                if left is not None and right is not None:
                    assert left == right


@pytest.mark.parametrize("text, q", [("-|3", 1), ("-|1,1,1", 0), ("-|2", 1), ("1|2", 1)])
def test_q_examples(chamber1, text, q):
    assert q_depth(parse(text), chamber1) == q


def test_q_level_one():
    assert q_depth(((4, 2),), level_one_param(2)) == 3


@pytest.mark.parametrize("p", CHAMBERS + [param("-1/3", 0, -1)], ids=str)
def test_q_routes_and_crystal_invariance(p):
    for lam in multipartitions_upto(5, 2):
        q = q_remark(lam, p)
        assert q == q_singular(lam, p)
        assert support(lam, p).p + p.e * q <= total(lam)
        for z in signatures(lam, p):
            mu = f_op(lam, z, p)
            if mu is not None and total(mu) <= 5:
                assert q_depth(mu, p) == q


@pytest.mark.parametrize("p", CHAMBERS, ids=str)
def test_q_path_independent(p):
    # carry each label to either asymptotic chamber; the quotient sizes agree
    for lam in multipartitions_upto(5, 2):
        q = q_depth(lam, p)
        for j in (0, 1):
            moved = transport(lam, plan_path(p, j, total(lam)), p)
            assert sum(div_rem_e(moved[j], p.e)[0]) == q
