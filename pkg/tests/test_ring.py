from __future__ import annotations

import json
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from annbc.ring import (FiniteRing, RingAxiomError, RingError, SizeCapError, adjoin_identity,
                        attach_involution, extended_mul_table, make_direct_product,
                        make_johnson_ring, make_matrix_ring, make_zmod, subring_closure,
                        transpose_involution, validate_axioms)

from oracles import is_isomorphic, matadd, matmul, parse_matrix_label


def corrupted(r: FiniteRing, x: int, y: int, value: int) -> FiniteRing:
    mul = r.mul_table.copy()
    mul[x, y] = value
    return FiniteRing(r.name, r.add_table, mul, r.zero, r.one, r.labels)


def test_zmod_basics():
    z1 = make_zmod(1)
    assert z1.size == 1 and z1.zero == z1.one == 0
    assert make_zmod(6).mul(2, 4) == 2
    assert make_zmod(4).mul(2, 2) == 0
    assert make_zmod(6).pow(2, 3) == 2


def test_pow_rejects_zero_exponent(z6):
    with pytest.raises(RingError):
        z6.pow(2, 0)


@pytest.mark.parametrize("k,n", [(1, 5), (2, 2), (2, 3)])
def test_matrix_tables_match_direct_arithmetic(k, n):
    r = make_matrix_ring(k, n)
    assert r.size == n ** (k * k)
    mats = [parse_matrix_label(l, k) for l in r.labels]
    lookup = {m: i for i, m in enumerate(mats)}
    assert len(lookup) == r.size
    for x in range(r.size):
        for y in range(0, r.size, max(1, r.size // 17)):
            assert r.mul(x, y) == lookup[matmul(mats[x], mats[y], n)]
            assert r.add(x, y) == lookup[matadd(mats[x], mats[y], n)]


def test_matrix_examples(m22):
    assert m22.mul(m22.index("e12"), m22.index("e21")) == m22.index("e11")
    assert m22.one == m22.index("e11+e22")
    m3 = make_matrix_ring(3, 2)
    assert m3.size == 512
    assert all(l in m3.labels for l in ("e11", "e21", "e22", "e31"))


def test_m1_is_zmod():
    assert is_isomorphic(make_matrix_ring(1, 5), make_zmod(5))


def test_johnson_ring(johnson):
    assert johnson.size == 16 and johnson.one is None
    assert validate_axioms(johnson).ok
    assert johnson.mul(johnson.index("e21"), johnson.index("e22")) == johnson.zero
    # elements are all F2-combinations of the four generators
    assert sorted(johnson.labels) == sorted(
        "+".join(g for g, keep in zip(("e11", "e21", "e22", "e31"), bits) if keep) or "0"
        for bits in np.ndindex(2, 2, 2, 2))


def test_subring_examples(z6, m22):
    assert subring_closure(z6, [0]).size == 1
    full = subring_closure(m22, [m22.index(g) for g in ("e11", "e12", "e21", "e22")])
    assert full.size == 16 and full.one is not None


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 7) for n in range(2, 7)
                                 if m < n and m * n <= 12 and gcd(m, n) == 1])
def test_coprime_product_is_cyclic(m, n):
    p = make_direct_product(make_zmod(m), make_zmod(n))
    assert p.size == m * n and p.one is not None
    assert is_isomorphic(p, make_zmod(m * n))


def test_product_examples(johnson):
    r = make_direct_product(make_zmod(1), make_zmod(4))
    assert is_isomorphic(r, make_zmod(4))
    jz = make_direct_product(johnson, make_zmod(2))
    assert jz.size == 32 and jz.one is None
    assert validate_axioms(jz).ok


def test_involutions(z6):
    t = attach_involution(make_matrix_ring(2, 2), transpose_involution(2, 2))
    M = t.mul_table
    star = np.array(t.star)
    assert (star[M] == M.T[star][:, star]).all()   # (xy)* = y* x*
    assert attach_involution(z6, range(6)).star == tuple(range(6))
    with pytest.raises(RingError):
        attach_involution(z6, [0, 2, 1, 3, 4, 5])


def test_validator_accepts_standard_rings(z6, ut2):
    for r in (z6, ut2, make_zmod(1), make_matrix_ring(2, 2)):
        assert validate_axioms(r).ok


def test_validator_detects_spec_corruption(z6):
    report = validate_axioms(corrupted(z6, 2, 3, 1))
    assert not report.ok
    bad = report.first_failure()
    assert bad.axiom in {"associativity", "left_distributivity", "right_distributivity"} \
        or "distrib" in bad.axiom or "assoc" in bad.axiom
    assert bad.witness is not None


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 15), st.integers(0, 15), st.integers(1, 15))
def test_single_cell_mutation_detected(x, y, shift):
    r = make_johnson_ring()
    bad = corrupted(r, x, y, (r.mul(x, y) + shift) % 16)
    report = validate_axioms(bad)
    assert not report.ok
    assert report.first_failure().witness is not None


def test_loader_refuses_corrupted_file(tmp_path, z6):
    path = tmp_path / "z6.json"
    data = json.loads(z6.to_json())
    data["mul"][2][3] = 1
    path.write_text(json.dumps(data))
    with pytest.raises(RingAxiomError):
        FiniteRing.load(path)
    assert FiniteRing.load(path, validate=False).mul(2, 3) == 1


def test_json_round_trip(tmp_path, johnson, m22t):
    for r in (johnson, m22t, make_zmod(1)):
        again = FiniteRing.from_json(r.to_json())
        assert again == r and again.to_json() == r.to_json()
        path = tmp_path / "r.json"
        r.save(path)
        assert path.read_text() == r.to_json()


def test_size_cap(monkeypatch):
    with pytest.raises(SizeCapError):
        make_zmod(2000)
    with pytest.raises(SizeCapError):
        make_matrix_ring(2, 3, cap=50)


def test_formal_identity(johnson, z6):
    assert adjoin_identity(z6).size == 6
    ext = adjoin_identity(johnson)
    assert ext.size == 17 and ext.is_formal(16)
    e31 = johnson.index("e31")
    assert ext.mul(ext.one, e31) == e31 == ext.mul(e31, ext.one)
    T = extended_mul_table(johnson)
    assert (T[:16, :16] == johnson.mul_table).all()
    assert (T[16] == np.arange(17)).all()


def test_element_resolution(johnson):
    assert johnson.index("e11+e21") == johnson.labels.index("e11+e21")
    assert johnson.index("3") == 3
    with pytest.raises(RingError):
        johnson.index("e12")
    assert johnson.add(5, johnson.neg(5)) == johnson.zero


def test_isomorphism_oracle_rejects_noncyclic():
    assert not is_isomorphic(make_direct_product(make_zmod(2), make_zmod(2)), make_zmod(4))
