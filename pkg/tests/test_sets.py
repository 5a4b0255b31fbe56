from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from annbc.ring import make_johnson_ring, make_matrix_ring, make_zmod
from annbc.sets import (SubsetMask, bicommutant, commutant, is_left_faithful, is_right_faithful,
                        left_annihilator, multiples, right_annihilator, ring_kernels,
                        sandwich_set, tables)

from oracles import left_ann, right_ann

RINGS = {"Z4": make_zmod(4), "Z6": make_zmod(6), "Johnson": make_johnson_ring(),
         "M2(Z2)": make_matrix_ring(2, 2)}


def names(mask: SubsetMask) -> set[str]:
    return set(mask.labels())


def test_annihilator_examples(johnson, m22, z6):
    z4 = make_zmod(4)
    assert left_annihilator(z4, 2).indices() == [0, 2]
    assert right_annihilator(z6, 4).indices() == [0, 3]
    assert len(left_annihilator(z6, 0)) == 6 and len(right_annihilator(z6, 0)) == 6
    # e11 x = 0 exactly when the first row of x vanishes: two free entries over Z2
    first_row_zero = right_annihilator(m22, m22.index("e11"))
    assert names(first_row_zero) == {"0", "e21", "e22", "e21+e22"}
    b = johnson.index("e11+e21")
    lb = left_annihilator(johnson, b)
    assert johnson.index("e22") not in lb and johnson.zero in lb
    assert set(lb) == left_ann(johnson, b)


def test_multiples_examples(z6, johnson):
    assert multiples(z6, 2, "right").indices() == [0, 2, 4]
    assert multiples(z6, 0, "right").indices() == [0]
    rc = multiples(johnson, johnson.index("e11+e21"), "left")
    assert names(rc) == {"+".join(t for t, k in zip(("e11", "e21", "e31"), bits) if k) or "0"
                         for bits in [(i >> 2 & 1, i >> 1 & 1, i & 1) for i in range(8)]}


def test_sandwich_examples(z6, johnson):
    assert sandwich_set(z6, 0, 0, "bSx", 0).indices() == [0]
    assert sandwich_set(z6, 2, 0, "bSx", 2).indices() == [0, 2, 4]
    x, c = johnson.index("e11+e21"), johnson.index("e11+e21")
    assert x in sandwich_set(johnson, 0, c, "xSc", x)


def test_kernels(z6, johnson):
    assert ring_kernels(z6)[0].indices() == [0] and ring_kernels(z6)[1].indices() == [0]
    assert is_left_faithful(z6) and is_right_faithful(z6)
    right = ring_kernels(johnson)[1]
    assert {"0", "e31"} <= names(right)
    assert not is_right_faithful(johnson)
    z1 = make_zmod(1)
    assert len(ring_kernels(z1)[0]) == len(ring_kernels(z1)[1]) == 1


def test_commutants(z6, m22):
    assert len(commutant(z6, 1)) == 6
    e11 = m22.index("e11")
    bc = bicommutant(m22, e11)
    assert e11 in bc and m22.one in bc


@pytest.mark.parametrize("name", sorted(RINGS))
def test_masks_agree_with_scans(name):
    r = RINGS[name]
    for a in r.elements:
        assert set(left_annihilator(r, a)) == left_ann(r, a)
        assert set(right_annihilator(r, a)) == right_ann(r, a)
        assert set(multiples(r, a, "right")) == {r.mul(a, s) for s in r.elements}
        assert set(multiples(r, a, "left")) == {r.mul(s, a) for s in r.elements}
        comm = {h for h in r.elements if r.mul(h, a) == r.mul(a, h)}
        assert set(commutant(r, a)) == comm
        assert set(bicommutant(r, a)) == {x for x in r.elements
                                          if all(r.mul(x, h) == r.mul(h, x) for h in comm)}


@pytest.mark.parametrize("name", sorted(RINGS))
def test_dense_tables_agree_with_masks(name):
    r = RINGS[name]
    T = tables(r)
    for b in r.elements:
        for x in r.elements:
            assert bool(T.in_right[b, x]) == (x in multiples(r, b, "right"))
            assert bool(T.in_left[b, x]) == (x in multiples(r, b, "left"))
            assert bool(T.inc_left[b, x]) == (left_annihilator(r, b) <= left_annihilator(r, x))
            assert bool(T.inc_right[b, x]) == (right_annihilator(r, b) <= right_annihilator(r, x))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(RINGS)), st.data())
def test_annihilators_and_multiples_are_subgroups(name, data):
    r = RINGS[name]
    a = data.draw(st.integers(0, r.size - 1))
    for mask in (left_annihilator(r, a), right_annihilator(r, a), multiples(r, a, "right"),
                 multiples(r, a, "left")):
        members = list(mask)
        assert r.zero in mask
        assert all(r.sub(u, v) in mask for u in members for v in members)
    # a° is a right ideal, °a a left ideal
    s = data.draw(st.integers(0, r.size - 1))
    assert all(r.mul(t, s) in right_annihilator(r, a) for t in right_annihilator(r, a))
    assert all(r.mul(s, t) in left_annihilator(r, a) for t in left_annihilator(r, a))
    assert a in bicommutant(r, a)


def test_mask_set_operations(z6):
    a, b = SubsetMask.of(z6, [0, 2]), SubsetMask.of(z6, [0, 2, 4])
    assert a <= b and not b <= a and (a | b) == b and (a & b) == a
    assert SubsetMask.full(z6).indices() == list(range(6))
