"""Shared machinery for theorem checkers: the per-ring lab and failure recording."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable

import numpy as np

from ..ring import FiniteRing, extended_mul_table
from ..sets import RingTables, tables
from .inventory import Inventory


class Lab:
    """A ring together with its tables, inventory and the R^1 index range.

    Index ``n`` stands for the formal identity when the ring has none; it is
    only ever used as a multiplier.
    """

    def __init__(self, ring: FiniteRing, include_formal_identity: bool = True,
                 cline_max_power: int = 3):
        self.ring = ring
        self.n = ring.size
        self.T: RingTables = tables(ring)
        self.inv = Inventory(ring)
        self.mx = extended_mul_table(ring)
        self.cline_max_power = cline_max_power
        unit = [] if ring.one is not None or not include_formal_identity else [self.n]
        self.Y = np.array(list(range(self.n)) + unit, dtype=np.int64)
        # index of the identity in R^1, if any
        self.unit = ring.one if ring.one is not None else (self.n if unit else None)

    def m(self, *xs):
        """Left-associated product over R^1 with numpy broadcasting."""
        mx = self.mx
        return reduce(lambda p, q: mx[p, q], xs)

    def add(self, x, y):
        return self.T.add[x, y]

    def sub(self, x, y):
        return self.T.add[x, self.T.neg[y]]

    def label(self, v: int) -> str:
        if v < 0:
            return "none"
        return "1" if v == self.n else self.ring.labels[v]

    def pow(self, a: int, k: int) -> int:
        return self.ring.pow(a, k)


class Hits:
    """Collects counterexamples for one chunk of one checker."""

    def __init__(self, lab: Lab, limit: int = 50):
        self.lab = lab
        self.limit = limit
        self.records: list[dict] = []
        self.total = 0

    def require(self, ok, clause: str, raw: dict | None = None, **vars) -> None:
        """Record every False entry of ``ok``; ``vars`` broadcast against it.

        ``raw`` holds non-element values (exponents) copied into each record.
        """
        ok = np.asarray(ok, dtype=bool)
        if ok.all():
            return
        shape = np.broadcast_shapes(ok.shape, *(np.shape(v) for v in vars.values()))
        bad = np.argwhere(~np.broadcast_to(ok, shape))
        self.total += len(bad)
        room = self.limit - len(self.records)
        if room <= 0:
            return
        full = {k: np.broadcast_to(np.asarray(v), shape) for k, v in vars.items()}
        for idx in bad[:room]:
            idx = tuple(idx)
            rec = {k: self.lab.label(int(v[idx])) for k, v in full.items()}
            rec.update({k: str(v) for k, v in (raw or {}).items()})
            self.records.append({"vars": rec, "failed_clause": clause})

    def implies(self, hyp, concl, clause: str, raw: dict | None = None, **vars) -> None:
        ok = ~np.asarray(hyp, dtype=bool) | np.asarray(concl, dtype=bool)
        self.require(ok, clause, raw, **vars)

    def iff(self, lhs, rhs, clause: str, raw: dict | None = None, **vars) -> None:
        """Both directions, reported separately."""
        self.implies(lhs, rhs, clause + ".fwd", raw, **vars)
        self.implies(rhs, lhs, clause + ".bwd", raw, **vars)


@dataclass(frozen=True)
class Phase:
    name: str
    size: int
    run: Callable[[Lab, int, int, Hits], int]


@dataclass(frozen=True)
class Checker:
    id: str
    describe: str
    phases: Callable[[Lab], list[Phase]]
    notes: tuple[str, ...] = ()
    applies: Callable[[Lab], str | None] = lambda lab: None


CHECKERS: dict[str, Checker] = {}


def register(id: str, describe: str, notes: tuple[str, ...] = (),
             applies: Callable[[Lab], str | None] | None = None):
    def wrap(fn):
        CHECKERS[id] = Checker(id, describe, fn, notes,
                               applies or (lambda lab: None))
        return fn
    return wrap


@dataclass
class TheoremReport:
    theorem: str
    ring: str
    tuples_scanned: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    status: str = "pass"
    elapsed_ms: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, with_elapsed: bool = True) -> dict:
        out = {
            "theorem": self.theorem,
            "ring": self.ring,
            "tuples_scanned": self.tuples_scanned,
            "counterexamples": self.counterexamples,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
            "notes": self.notes,
        }
        if not with_elapsed:
            del out["elapsed_ms"]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> TheoremReport:
        return cls(d["theorem"], d["ring"], d["tuples_scanned"], d["counterexamples"],
                   d["status"], d.get("elapsed_ms", 0), d.get("notes", []))


def sort_records(records: list[dict]) -> list[dict]:
    return sorted(records, key=lambda r: json.dumps(r, sort_keys=True, ensure_ascii=False))


def finalize(report: TheoremReport, skipped_reason: str | None) -> TheoremReport:
    report.counterexamples = sort_records(report.counterexamples)
    if report.counterexamples:
        report.status = "fail"
    elif skipped_reason:
        report.status = f"skipped: {skipped_reason}"
    else:
        report.status = "pass"
    return report
