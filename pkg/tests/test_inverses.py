from __future__ import annotations

import json

import numpy as np
import pytest

from annbc import inverses as inv
from annbc.lab.inventory import Inventory
from annbc.ring import make_johnson_ring, make_matrix_ring, make_upper_triangular, make_zmod

from oracles import ann_inverse_scan, bc_inverse_scan, drazin_scan, sided_ann_scan

SMALL = [make_zmod(4), make_zmod(6), make_upper_triangular(2, 2), make_johnson_ring()]


def lbl(r, cert):
    return None if cert is None else r.labels[cert.witness]


def test_bc_examples(z6, johnson):
    assert inv.bc_inverse(z6, 2, 4, 4).witness == 2
    for r in (z6, johnson, make_zmod(1)):
        assert inv.bc_inverse(r, 0, 0, 0).witness == r.zero
    i = johnson.index
    assert lbl(johnson, inv.bc_inverse(johnson, i("e11+e22"), i("e11+e21"), i("e11+e21"))) == "e11+e21"


def test_inverse_along_examples(z6):
    assert inv.inverse_along(z6, 2, 4).witness == inv.bc_inverse(z6, 2, 4, 4).witness == 2
    assert inv.inverse_along(z6, 0, 0).witness == 0
    assert inv.inverse_along(make_zmod(4), 2, 2) is None


def test_sided_bc_examples(z6, johnson):
    assert list(inv.sided_bc_inverses(z6, 2, 4, 4, "left")) == [2]
    assert list(inv.sided_bc_inverses(z6, 0, 0, 0, "right")) == [0]
    i = johnson.index
    right = inv.sided_bc_inverses(johnson, i("e11+e22"), i("e11+e21"), i("e11+e21"), "right")
    assert i("e11+e21") in right
    # the extra rann solution lies outside bR, so it is not a right (b,c)-inverse
    assert i("e11+e21+e31") not in right


def test_ann_examples(johnson, z6):
    i = johnson.index
    assert lbl(johnson, inv.ann_bc_inverse(johnson, i("e11+e22"), i("e11+e21"), i("e11+e21"))) == "e11+e21"
    assert lbl(johnson, inv.ann_bc_inverse(johnson, i("e22"), i("e22"), i("e22"))) == "e22"
    assert inv.ann_bc_inverse(z6, 0, 0, 0).witness == 0
    assert all(inv.ann_conditions(johnson, i("e22"), i("e22"), i("e22"), i("e22")).values())


def test_sided_ann_examples(johnson, z6):
    i = johnson.index
    a, b = i("e11+e22"), i("e11+e21")
    rann = inv.sided_ann_inverses(johnson, a, b, b, "rann")
    assert [johnson.labels[y] for y in rann] == ["e11+e21", "e11+e21+e31"]
    assert rann.is_regular(i("e11+e21+e31"))
    r22 = inv.sided_ann_inverses(johnson, i("e22"), i("e22"), i("e22"), "rann")
    assert i("e22+e31") in r22 and not r22.is_regular(i("e22+e31"))
    assert list(inv.sided_ann_inverses(z6, 2, 4, 4, "lann")) == [2]
    d = rann.to_dict(johnson)
    assert d["kind"] == "rann" and len(d["solutions"]) == 2


def test_compose_sided(johnson, z6):
    i = johnson.index
    a, b = i("e11+e22"), i("e11+e21")
    x, y = i("e11+e21"), i("e11+e21+e31")
    assert johnson.labels[inv.compose_sided(johnson, x, a, y, b, b)] == "e11+e21"
    assert inv.compose_sided(z6, 0, 0, 0) == 0
    assert inv.compose_sided(z6, 2, 2, 2, 4, 4) == 2
    with pytest.raises(inv.PreconditionError):
        inv.compose_sided(z6, 1, 2, 2, 4, 4)


def test_moore_penrose(m22t, m23t, m22):
    assert m23t.labels[inv.moore_penrose(m23t, m23t.index("e11")).witness] == "e11"
    assert inv.moore_penrose(m22t, 0).witness == 0
    with pytest.raises(inv.PreconditionError):
        inv.moore_penrose(m22, 0)


def test_drazin_examples():
    z4, z6, z5 = make_zmod(4), make_zmod(6), make_zmod(5)
    c = inv.drazin(z4, 2)
    assert (c.witness, c.drazin_index) == (0, 2)
    c = inv.drazin(z6, 2)
    assert (c.witness, c.drazin_index) == (2, 1)
    c = inv.drazin(z5, 1)
    assert (c.witness, c.drazin_index) == (1, 1)


def test_core_inverse(m22t):
    assert m22t.labels[inv.core_inverse(m22t, m22t.index("e11")).witness] == "e11"
    assert inv.core_inverse(m22t, 0).witness == 0
    assert inv.core_inverse(m22t, m22t.index("e12")) is None


def test_regularize(z6, johnson):
    assert inv.regularize_lann(z6, 2, 2, 4, 4) == 2
    assert inv.regularize_lann(z6, 0, 0, 0, 0) == 0
    i = johnson.index
    a, b = i("e11+e22"), i("e11+e21")
    y = inv.regularize_lann(johnson, a, i("e11+e21"), b, b)
    assert johnson.prod(y, a, y) == y and inv.is_lann(johnson, a, b, b, y)
    for x in inv.sided_ann_inverses(johnson, i("e22"), i("e22"), i("e22"), "rann"):
        y = inv.regularize_rann(johnson, i("e22"), x, i("e22"), i("e22"))
        assert y is not None and johnson.prod(y, i("e22"), y) == y


def test_certificate_json(johnson):
    i = johnson.index
    cert = inv.ann_bc_inverse(johnson, i("e22"), i("e22"), i("e22"))
    data = json.loads(cert.to_json(johnson))
    assert data["kind"] == "ann" and data["witness"] == "e22"


@pytest.mark.parametrize("r", SMALL, ids=lambda r: r.name)
def test_solvers_match_brute_force(r):
    for a in r.elements:
        for b in r.elements:
            for c in r.elements:
                ann = ann_inverse_scan(r, a, b, c)
                bc = bc_inverse_scan(r, a, b, c)
                assert len(ann) <= 1 and len(bc) <= 1
                assert lbl(r, inv.ann_bc_inverse(r, a, b, c)) == (r.labels[ann[0]] if ann else None)
                assert lbl(r, inv.bc_inverse(r, a, b, c)) == (r.labels[bc[0]] if bc else None)
                if r.size <= 8:
                    for side in ("lann", "rann"):
                        assert list(inv.sided_ann_inverses(r, a, b, c, side)) == \
                            sided_ann_scan(r, a, b, c, side)


@pytest.mark.parametrize("r", SMALL + [make_zmod(12), make_matrix_ring(2, 2)], ids=lambda r: r.name)
def test_drazin_matches_brute_force(r):
    for a in r.elements:
        cert = inv.drazin(r, a)
        want = drazin_scan(r, a)
        got = None if cert is None else (cert.witness, cert.drazin_index)
        assert got == want


@pytest.mark.parametrize("r", [make_johnson_ring(), make_matrix_ring(2, 3)], ids=lambda r: r.name)
def test_inventory_completeness_sample(r):
    """Re-solve a random 1% of triples and compare with the inventory."""
    invent = Inventory(r)
    n = r.size
    rng = np.random.default_rng(7)
    count = max(64, n ** 3 // 100)
    for a, b, c in rng.integers(0, n, size=(count, 3)).tolist():
        ann = inv.ann_bc_inverse(r, a, b, c)
        bc = inv.bc_inverse(r, a, b, c)
        assert invent.ann[a, b, c] == (-1 if ann is None else ann.witness)
        assert invent.bc[a, b, c] == (-1 if bc is None else bc.witness)
    assert len(invent.ann_certs) == int((invent.ann >= 0).sum())
