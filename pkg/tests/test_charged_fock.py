from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cherednik_supports.charged_fock import (
    FockParam, GenericKappa, block_id, component_classes, content, equivalent,
    normalize_charges, order_key, reduce_signature, residue, restrict_to_class,
    signatures, to_rat, z_signature)
from cherednik_supports.partitions import Box, multipartitions_upto, total

from conftest import param


def test_content_examples(chamber1):
    assert content(Box(0, 1, 1), chamber1) == 0
    assert content(Box(1, 1, 1), chamber1) == -4
    assert content(Box(1, 3, 1), chamber1) == -2
    assert content(Box(0, 1, 3), chamber1) == -2


def test_residue_examples(chamber1):
    assert equivalent(Box(0, 1, 1), Box(1, 1, 1), chamber1)
    assert not equivalent(Box(0, 1, 1), Box(0, 2, 1), chamber1)
    gen = FockParam(GenericKappa(), (0, 0))
    assert not equivalent(Box(0, 1, 1), Box(0, 3, 1), gen)
    assert residue(Box(1, 1, 1), chamber1) == 0


def test_modulus_for_non_unit_numerator():
    p = param("-2/3", 0)
    assert p.e == 3 and p.modulus == Fraction(3, 2)


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_rat(0.5)


def test_order_key_examples(chamber1):
    assert order_key(Box(0, 1, 1), chamber1) == -1
    assert order_key(Box(1, 1, 1), chamber1) == 2


def _signs(sig):
    return "".join("+" if s > 0 else "-" for s, _ in sig)


def test_z_signature_examples(chamber1):
    sig = z_signature(((), ()), 0, chamber1)
    assert _signs(sig) == "++" and [b.comp for _, b in sig] == [0, 1]
    assert [order_key(b, chamber1) for _, b in sig] == [-1, 2]
    sig = z_signature(((1, 1, 1), ()), 0, chamber1)
    assert _signs(sig) == "-+" and [order_key(b, chamber1) for _, b in sig] == [1, 2]
    assert reduce_signature(sig) == ()
    sig = z_signature(((), (3,)), 0, chamber1)
    assert _signs(sig) == "+-" and [order_key(b, chamber1) for _, b in sig] == [-1, 0]
    assert _signs(reduce_signature(sig)) == "+-"


def _word(text):
    return tuple((1 if c == "+" else -1, k) for k, c in enumerate(text))


def _brute_reduce(text):
    while "-+" in text:
        text = text.replace("-+", "", 1)
    return text


@pytest.mark.parametrize("text, expected", [("-+", ""), ("++-+", "++"), ("+-", "+-"), ("-+-++", "+")])
def test_reduce_examples(text, expected):
    assert _signs(reduce_signature(_word(text))) == expected


@given(st.text(alphabet="+-", max_size=14))
def test_reduce_matches_fixpoint(text):
    out = _signs(reduce_signature(_word(text)))
    assert out == _brute_reduce(text)
    assert "-+" not in out


PARAMS = [param("-1/2", 0, -4), param("-1/2", 0, -1), param("-1/3", 0, 2, 1),
          param("-2/3", 0, -1), param("1/2", 0, 3), FockParam(GenericKappa(), (0, 1))]


@pytest.mark.parametrize("p", PARAMS, ids=str)
def test_equivalent_boxes_have_distinct_v(p):
    n_max = 6 if p.ell <= 2 else 4
    for mp in multipartitions_upto(n_max, p.ell):
        for sig in signatures(mp, p).values():
            keys = [order_key(b, p) for _, b in sig]
            assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_block_id_examples():
    p = param("-1/2", 0, -4)
    assert block_id(((), ()), p) == ()
    assert block_id(((1,), ()), p) == block_id(((), (1,)), p)
    q = param("-1/2", 0, -1)
    assert block_id(((1,), ()), q) != block_id(((), (1,)), q)


def test_component_classes_examples():
    assert component_classes(param("-1/2", 0, -4)) == [(0, 1)]
    assert component_classes(param("-1/2", 0, "1/3")) == [(0,), (1,)]
    assert component_classes(FockParam(GenericKappa(), (0, Fraction(1, 2)))) == [(0,), (1,)]
    # Z + (3/2)Z = (1/2)Z
    assert component_classes(param("-2/3", 0, "1/2")) == [(0, 1)]


@pytest.mark.parametrize("p", [param("-1/2", 0, "1/3"), param("-1/3", 0, "1/2", 1)], ids=str)
def test_classes_never_share_residues(p):
    classes = component_classes(p)
    where = {i: k for k, cls in enumerate(classes) for i in cls}
    for mp in multipartitions_upto(5 if p.ell == 2 else 3, p.ell):
        for sig in signatures(mp, p).values():
            assert len({where[b.comp] for _, b in sig}) == 1


def test_restrict_to_class():
    p = param("-1/2", 0, "1/3")
    mp = ((2,), (1, 1))
    parts = [restrict_to_class(p, mp, cls) for cls in component_classes(p)]
    assert [sub for _, sub in parts] == [((2,),), ((1, 1),)]
    assert sum(total(sub) for _, sub in parts) == total(mp)
    single = param("-1/2", 0, -4)
    assert restrict_to_class(single, mp, (0, 1)) == (single, mp)


def test_normalize():
    p, shift = normalize_charges(param("-1/2", 3, -1))
    assert p.charges == (4, 0) and shift == 1


def test_generic_kappa_order():
    neg = FockParam(GenericKappa(-1), (0, 0))
    # kappa -> -infinity: larger content means smaller v
    assert order_key(Box(0, 2, 1), neg) < order_key(Box(0, 1, 1), neg)
    assert str(-GenericKappa(-1)) == "generic-pos"
