"""Per-ring certificate inventories.

One vectorized pass over all triples (a, b, c) records the ann-(b,c)-inverse,
the (b,c)-inverse in both definition forms, and (lazily) every one-sided
solution set.  Checkers then enumerate certificates instead of raw tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..inverses import drazin_table
from ..ring import FiniteRing
from ..sets import RingTables, tables


def _first_or_none(block: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    count = block.sum(axis=-1)
    wit = np.where(count > 0, block.argmax(axis=-1), -1)
    return wit, count


@dataclass(frozen=True)
class Certs:
    """Parallel arrays of certificates, ascending by (a, b, c)."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    x: np.ndarray

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> Certs:
        a, b, c = np.nonzero(dense >= 0)
        return cls(a, b, c, dense[a, b, c])

    def __len__(self) -> int:
        return len(self.a)


class Inventory:
    """All certificates of one ring.

    ``ann[a, b, c]`` / ``bc[a, b, c]`` hold the witness or -1; the ``*_count``
    arrays hold the number of solutions found (uniqueness makes it 0 or 1).
    """

    def __init__(self, r: FiniteRing):
        self.ring = r
        self.T: RingTables = tables(r)
        n = r.size
        T = self.T
        M = T.mul
        ar = T.arange
        shape = (n, n, n)
        self.ann = np.empty(shape, dtype=np.int64)
        self.ann_count = np.empty(shape, dtype=np.int64)
        self.bc = np.empty(shape, dtype=np.int64)
        self.bc_count = np.empty(shape, dtype=np.int64)
        self.bc_sandwich = np.empty(shape, dtype=np.int64)
        self.bc_unit = np.empty(shape, dtype=np.int64)
        for a in range(n):
            xa = M[:, a]
            outer = M[xa, ar] == ar                   # x a x == x
            p = M[xa].T == ar[:, None]                # [b, x]: x a b == b
            q = M[M[:, a]] == ar[:, None]             # [c, x]: c a x == c
            eqs = p[:, None, :] & q[None, :, :]
            ann = eqs & T.inc_left[:, None, :] & T.inc_right[None, :, :] & outer
            self.ann[a], self.ann_count[a] = _first_or_none(ann)
            bc = eqs & T.in_right[:, None, :] & T.in_left[None, :, :]
            self.bc[a], self.bc_count[a] = _first_or_none(bc)
            sw = eqs & T.sandwich_left[:, None, :] & T.sandwich_right[None, :, :]
            self.bc_sandwich[a] = _first_or_none(sw)[0]
            unit = eqs & T.in_right1[:, None, :] & T.in_left1[None, :, :]
            self.bc_unit[a] = _first_or_none(unit)[0]
        self.drazin, self.drazin_index = drazin_table(r)

    @cached_property
    def ann_certs(self) -> Certs:
        return Certs.from_dense(self.ann)

    @cached_property
    def bc_certs(self) -> Certs:
        return Certs.from_dense(self.bc)

    def _sided(self, which: str) -> np.ndarray:
        """Boolean [a, b, c, x] arrays of one-sided solutions."""
        T = self.T
        M = T.mul
        n = T.n
        ar = T.arange
        out = np.empty((n, n, n, n), dtype=bool)
        for a in range(n):
            p = M[M[:, a]].T == ar[:, None]           # [b, x]
            q = M[M[:, a]] == ar[:, None]             # [c, x]
            if which == "lann":
                out[a] = p[:, None, :] & T.inc_right[None, :, :]
            elif which == "rann":
                out[a] = q[None, :, :] & T.inc_left[:, None, :]
            elif which == "left_bc":
                out[a] = p[:, None, :] & T.in_left[None, :, :]
            else:
                out[a] = q[None, :, :] & T.in_right[:, None, :]
        out.setflags(write=False)
        return out

    @cached_property
    def lann(self) -> np.ndarray:
        return self._sided("lann")

    @cached_property
    def rann(self) -> np.ndarray:
        return self._sided("rann")

    @cached_property
    def left_bc(self) -> np.ndarray:
        return self._sided("left_bc")

    @cached_property
    def right_bc(self) -> np.ndarray:
        return self._sided("right_bc")

    def summary(self) -> dict[str, int]:
        return {"ann": len(self.ann_certs), "bc": len(self.bc_certs)}
