from __future__ import annotations

import json

import numpy as np
import pytest

from annbc.lab.core import CHECKERS, Hits, Lab, Phase, TheoremReport, register
from annbc.lab.checks import residual_identities
from annbc.lab.report import load_reports, markdown_summary, report_filename, write_reports
from annbc.lab.suite import SuiteConfig, run_checker, run_suite, theorem_ids
from annbc.ring import make_johnson_ring, make_upper_triangular, make_zmod

REPORT_KEYS = {"theorem", "ring", "tuples_scanned", "counterexamples", "status", "elapsed_ms"}


def test_uniqueness_counts(johnson, z6):
    rep = run_checker(johnson, "uniqueness")
    assert rep.status == "pass" and rep.tuples_scanned == 4096
    rep = run_checker(z6, "uniqueness")
    assert rep.status == "pass" and rep.tuples_scanned == 216
    assert run_checker(make_zmod(1), "uniqueness").status == "pass"


@pytest.mark.parametrize("theorem", theorem_ids())
def test_every_checker_passes_on_small_rings(theorem, z6, ut2):
    for r in (z6, ut2, make_zmod(1)):
        rep = run_checker(r, theorem)
        assert rep.counterexamples == [], rep.counterexamples[:3]
        assert rep.status == "pass" or rep.status.startswith("skipped: ring has no involution")


def test_mp_checker_runs_with_star(m22t):
    rep = run_checker(m22t, "mp_correspondence")
    assert rep.status == "pass" and rep.tuples_scanned > 0


def test_report_schema(z6):
    rep = run_checker(z6, "absorption")
    d = json.loads(rep.to_json())
    assert REPORT_KEYS <= set(d)
    assert isinstance(d["elapsed_ms"], int) and isinstance(d["tuples_scanned"], int)
    assert TheoremReport.from_dict(d).to_dict() == d


def test_empty_filter_and_no_rings(z6):
    assert run_suite(SuiteConfig([z6], [])) == []
    assert run_suite(SuiteConfig([], None)) == []


def test_budget_of_one_skips(z6, johnson):
    reps = run_suite(SuiteConfig([z6, johnson], ["uniqueness", "absorption"], budget=1))
    assert reps and all(r.status.startswith("skipped: budget") for r in reps)


def test_invalid_config(z6):
    with pytest.raises(ValueError):
        SuiteConfig([z6], ["no_such_theorem"])
    with pytest.raises(ValueError):
        SuiteConfig([z6], None, budget=0)
    with pytest.raises(ValueError):
        SuiteConfig([z6], None, workers=0)


def test_reports_sorted(z6, ut2):
    reps = run_suite(SuiteConfig([z6, ut2], ["uniqueness", "absorption"]))
    keys = [(r.theorem, r.ring) for r in reps]
    assert keys == sorted(keys) and len(keys) == 4


def test_worker_count_independence(johnson):
    theorems = ["intertwining_ann", "cline", "reverse_order_bc", "sided_propositions"]
    one = run_suite(SuiteConfig([johnson, make_zmod(6)], theorems, workers=1))
    four = run_suite(SuiteConfig([johnson, make_zmod(6)], theorems, workers=4))
    assert [r.to_dict(with_elapsed=False) for r in one] == \
        [r.to_dict(with_elapsed=False) for r in four]


@pytest.fixture
def false_claim():
    """A checker asserting that every element squares to itself."""

    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        a = np.arange(lo, hi)
        hits.require(lab.m(a, a) == a, "claim.idempotent", a=a)
        return hi - lo

    register("zz_false_claim", "every element is idempotent")(
        lambda lab: [Phase("all", lab.n, run)])
    yield "zz_false_claim"
    del CHECKERS["zz_false_claim"]


def test_false_claim_produces_counterexamples(false_claim):
    rep = run_checker(make_zmod(6), false_claim)
    assert rep.status == "fail"
    bad = sorted(rec["vars"]["a"] for rec in rep.counterexamples)
    assert bad == ["2", "5"]    # 2*2=4, 5*5=1 mod 6; 0,1,3,4 are idempotent
    assert all(rec["failed_clause"] == "claim.idempotent" for rec in rep.counterexamples)


def test_counterexample_cap(false_claim):
    rep = run_suite(SuiteConfig([make_zmod(64)], [false_claim], counterexample_cap=5))[0]
    assert rep.status == "fail" and len(rep.counterexamples) == 5
    assert any("failing tuples" in n for n in rep.notes)


def test_iff_reports_both_directions(z6):
    lab = Lab(z6)
    hits = Hits(lab)
    a = np.arange(6)
    hits.iff(a < 3, a < 4, "demo", a=a)
    assert [(r["failed_clause"], r["vars"]["a"]) for r in hits.records] == [("demo.bwd", "3")]


def test_formal_identity_in_y(johnson, z6):
    assert Lab(johnson).label(16) == "1" and len(Lab(johnson).Y) == 17
    assert len(Lab(johnson, include_formal_identity=False).Y) == 16
    assert len(Lab(z6).Y) == 6
    assert Lab(z6).label(-1) == "none"


@pytest.mark.parametrize("r", [make_johnson_ring(), make_upper_triangular(2, 2), make_zmod(8)],
                         ids=lambda r: r.name)
def test_residual_identities_exhaustive(r):
    lab = Lab(r)
    k = len(lab.inv.ann_certs)
    i, j, y = np.meshgrid(np.arange(k), np.arange(k), lab.Y, indexing="ij")
    assert residual_identities(lab, i.ravel(), j.ravel(), y.ravel()).all()


def test_report_files_round_trip(tmp_path, z6):
    reps = run_suite(SuiteConfig([z6], ["uniqueness", "absorption"]))
    paths = write_reports(reps, tmp_path)
    assert [p.name for p in paths] == [report_filename(r) for r in reps]
    back = load_reports(tmp_path)
    assert [r.to_dict() for r in back] == [r.to_dict() for r in reps]
    md = markdown_summary(reps)
    assert md.startswith("| theorem |") and "2 pass, 0 fail, 0 skipped" in md
