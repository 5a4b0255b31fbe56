"""Exploratory searches: one-sided multiplicity, non-regular one-sided inverses,
and reverse-order instances outside every known sufficient condition.

A search report has status "fail" when instances were found; the records
are data, not theorem violations.
"""

from __future__ import annotations

import time

import numpy as np

from ..ring import FiniteRing
from .core import Lab, TheoremReport, finalize, sort_records

TARGETS = ("nonunique-sided", "nonregular-sided", "reverse-order-open")


def _filtered(n: int, fixed: dict[str, int | None]):
    ar = np.arange(n)
    return [ar if fixed.get(k) is None else np.array([fixed[k]]) for k in ("a", "b", "c")]


def search_counterexamples(r: FiniteRing, target: str, cap: int = 100,
                           a: int | None = None, b: int | None = None, c: int | None = None,
                           only_invertible: bool = True) -> TheoremReport:
    """Scan ``r`` for instances of ``target``; optional a, b, c pin the triple.

    ``only_invertible`` restricts the one-sided targets to ann-(b,c)-invertible
    triples, where extra one-sided solutions are the surprising case.
    """
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    start = time.perf_counter()
    lab = Lab(r)
    inv = lab.inv
    rep = TheoremReport(f"search:{target}", r.name)
    records: list[dict] = []
    A, B, C = _filtered(r.size, dict(a=a, b=b, c=c))
    L = lab.label

    if target in ("nonunique-sided", "nonregular-sided"):
        M = r.mul_table
        for ai in A.tolist():
            for bi in B.tolist():
                for ci in C.tolist():
                    if only_invertible and inv.ann[ai, bi, ci] < 0:
                        continue
                    rep.tuples_scanned += 1
                    for side, table in (("lann", inv.lann), ("rann", inv.rann)):
                        sols = np.flatnonzero(table[ai, bi, ci])
                        base = {"a": L(ai), "b": L(bi), "c": L(ci)}
                        if target == "nonunique-sided" and len(sols) > 1:
                            records.append({"vars": {**base, "solutions": ", ".join(L(s) for s in sols)},
                                            "failed_clause": f"{side}.multiple"})
                        if target == "nonregular-sided":
                            for s in sols[M[M[sols, ai], sols] != sols].tolist():
                                records.append({"vars": {**base, "y": L(s)},
                                                "failed_clause": f"{side}.not_regular"})
    else:
        m = lab.m
        certs = inv.bc_certs
        keep = np.isin(certs.a, A)
        A2, B2, C2, X2 = (v[None, :] for v in (certs.a, certs.b, certs.c, certs.x))
        without_branch = 0
        for i in np.flatnonzero(keep).tolist():
            a1, b1, c1, x1 = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
            holds = inv.bc[m(a1, A2), B2, c1] == m(X2, x1)
            x1a1 = m(x1, a1)
            branch = (((x1a1 == m(a1, x1)) & (C2 == c1))
                      | ((m(X2, A2) == m(A2, X2)) & (B2 == b1))
                      | (x1a1 == m(A2, X2)))
            rep.tuples_scanned += holds.size
            without_branch += int((holds & ~branch).sum())
            for j in np.flatnonzero((~holds & ~branch)[0]).tolist():
                records.append({"vars": {"a1": L(a1), "b1": L(b1), "c1": L(c1), "x1": L(x1),
                                         "a2": L(certs.a[j]), "b2": L(certs.b[j]),
                                         "c2": L(certs.c[j]), "x2": L(certs.x[j])},
                                "failed_clause": "reverse_order.fails"})
        rep.notes.append(f"{without_branch} pairs satisfy the law with no sufficient branch")

    records = sort_records(records)
    rep.notes.append(f"{len(records)} instances found")
    rep.counterexamples = records[:cap]
    rep.elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    finalize(rep, None)
    return rep
