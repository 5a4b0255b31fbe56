"""Run theorem checkers over rings, optionally in parallel, with a tuple budget.

Each phase of each checker is cut into a fixed number of chunks that does
not depend on the worker count; chunk results are merged in chunk order, so
reports are identical for any number of workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..ring import FiniteRing
from . import checks  # noqa: F401  (registers the checkers)
from .core import CHECKERS, Hits, Lab, TheoremReport, finalize, sort_records


def theorem_ids() -> list[str]:
    return sorted(CHECKERS)


@dataclass
class SuiteConfig:
    rings: list[FiniteRing]
    theorems: list[str] | None = None          # None selects every checker
    budget: int = 10 ** 12
    workers: int = 1
    include_formal_identity: bool = True
    cline_max_power: int = 3
    chunks_per_phase: int = 16
    counterexample_cap: int = 100

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        unknown = sorted(set(self.theorems or ()) - set(CHECKERS))
        if unknown:
            raise ValueError(f"unknown theorem ids: {', '.join(unknown)}")

    def selected(self) -> list[str]:
        return theorem_ids() if self.theorems is None else sorted(set(self.theorems))


@dataclass
class _Chunk:
    ring: int
    theorem: str
    phase: int
    lo: int
    hi: int


@dataclass
class _Result:
    records: list[dict] = field(default_factory=list)
    total: int = 0
    scanned: int = 0
    elapsed: float = 0.0


_LABS: dict[int, Lab] = {}
_RINGS: list[FiniteRing] = []
_OPTS: dict = {}


def _init(rings: list[FiniteRing], opts: dict) -> None:
    global _RINGS, _OPTS
    _RINGS, _OPTS = rings, opts
    _LABS.clear()


def _lab(i: int) -> Lab:
    lab = _LABS.get(i)
    if lab is None:
        lab = _LABS[i] = Lab(_RINGS[i], _OPTS["include_formal_identity"], _OPTS["cline_max_power"])
    return lab


def _phases(i: int, theorem: str):
    lab = _lab(i)
    key = ("phases", theorem)
    cache = lab.__dict__.setdefault("_phase_cache", {})
    if key not in cache:
        cache[key] = CHECKERS[theorem].phases(lab)
    return cache[key]


def _run_chunk(ch: _Chunk) -> _Result:
    lab = _lab(ch.ring)
    phase = _phases(ch.ring, ch.theorem)[ch.phase]
    hits = Hits(lab, _OPTS["counterexample_cap"])
    start = time.perf_counter()
    scanned = phase.run(lab, ch.lo, ch.hi, hits)
    return _Result(hits.records, hits.total, int(scanned), time.perf_counter() - start)


def _split(size: int, parts: int) -> list[tuple[int, int]]:
    if size <= 0:
        return []
    cuts = np.linspace(0, size, min(size, parts) + 1).astype(int)
    return [(int(lo), int(hi)) for lo, hi in zip(cuts[:-1], cuts[1:]) if hi > lo]


def run_suite(config: SuiteConfig) -> list[TheoremReport]:
    """All selected checkers on all rings, sorted by theorem id then ring name."""
    theorems = config.selected()
    if not theorems or not config.rings:
        return []
    opts = {"include_formal_identity": config.include_formal_identity,
            "cline_max_power": config.cline_max_power,
            "counterexample_cap": config.counterexample_cap}
    _init(config.rings, opts)

    plans: dict[tuple[int, str], list[_Chunk]] = {}
    reports: dict[tuple[int, str], TheoremReport] = {}
    not_applicable: dict[tuple[int, str], str] = {}
    for i, ring in enumerate(config.rings):
        lab = _lab(i)
        for t in theorems:
            checker = CHECKERS[t]
            reports[i, t] = TheoremReport(t, ring.name, notes=list(checker.notes))
            reason = checker.applies(lab)
            if reason:
                not_applicable[i, t] = reason
                plans[i, t] = []
                continue
            plans[i, t] = [_Chunk(i, t, k, lo, hi)
                           for k, ph in enumerate(_phases(i, t))
                           for lo, hi in _split(ph.size, config.chunks_per_phase)]

    order = [ch for key in plans for ch in plans[key]]
    if config.workers == 1:
        results = _serial(order, plans, config.budget)
    else:
        with ProcessPoolExecutor(config.workers, initializer=_init,
                                 initargs=(config.rings, opts)) as pool:
            results = dict(zip(map(id, order), pool.map(_run_chunk, order)))

    out = []
    for key, chunks in plans.items():
        rep = reports[key]
        skipped = not_applicable.get(key)
        records: list[dict] = []
        total = 0
        elapsed = 0.0
        for n_done, ch in enumerate(chunks):
            res = results.get(id(ch))
            if res is None or rep.tuples_scanned + res.scanned > config.budget:
                skipped = f"budget of {config.budget} tuples exhausted"
                rep.notes.append(f"stopped after {n_done} of {len(chunks)} chunks")
                break
            rep.tuples_scanned += res.scanned
            records += res.records
            total += res.total
            elapsed += res.elapsed
        records = sort_records(records)
        if len(records) > config.counterexample_cap or total > len(records):
            rep.notes.append(f"{total} failing tuples; first {min(len(records), config.counterexample_cap)} kept")
        rep.counterexamples = records[:config.counterexample_cap]
        rep.elapsed_ms = int(round(elapsed * 1000))
        out.append(finalize(rep, skipped))
    out.sort(key=lambda r: (r.theorem, r.ring))
    return out


def _serial(order: list[_Chunk], plans, budget: int) -> dict[int, _Result]:
    """In-process run that stops a report once its budget is spent."""
    results: dict[int, _Result] = {}
    for chunks in plans.values():
        used = 0
        for ch in chunks:
            res = _run_chunk(ch)
            results[id(ch)] = res
            used += res.scanned
            if used > budget:
                break
    return results


def run_checker(ring: FiniteRing, theorem: str, **kwargs) -> TheoremReport:
    """Convenience wrapper: one checker on one ring."""
    return run_suite(SuiteConfig([ring], [theorem], **kwargs))[0]
