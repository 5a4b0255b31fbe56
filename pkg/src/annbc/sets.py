"""Subset-valued objects of a finite ring as bitsets.

Annihilators, principal multiple-sets, sandwich sets, kernels and
(bi)commutants.  Every result is cached on the ring, keyed by operation and
element.  :class:`RingTables` holds the same information as dense boolean
matrices for vectorized scans.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterator

import numpy as np

from .ring import FiniteRing, RingError, extended_mul_table


def _bits(flags) -> int:
    out = 0
    for i in np.flatnonzero(flags).tolist():
        out |= 1 << i
    return out


class SubsetMask:
    """Set of element indices of one ring, stored as a Python int bitset."""

    __slots__ = ("ring", "bits")

    def __init__(self, ring: FiniteRing, bits: int = 0):
        if bits >> ring.size:
            raise RingError("mask has bits beyond the ring size")
        self.ring = ring
        self.bits = bits

    @classmethod
    def from_flags(cls, ring: FiniteRing, flags) -> SubsetMask:
        return cls(ring, _bits(flags))

    @classmethod
    def of(cls, ring: FiniteRing, elements) -> SubsetMask:
        bits = 0
        for e in elements:
            ring.check(e)
            bits |= 1 << int(e)
        return cls(ring, bits)

    @classmethod
    def full(cls, ring: FiniteRing) -> SubsetMask:
        return cls(ring, (1 << ring.size) - 1)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> int(x) & 1)

    def __iter__(self) -> Iterator[int]:
        bits, i = self.bits, 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubsetMask):
            return NotImplemented
        return self.bits == other.bits and self.ring is other.ring

    def __hash__(self) -> int:
        return hash(self.bits)

    def __le__(self, other: SubsetMask) -> bool:
        return self.bits & ~other.bits == 0

    def __ge__(self, other: SubsetMask) -> bool:
        return other <= self

    def __and__(self, other: SubsetMask) -> SubsetMask:
        return SubsetMask(self.ring, self.bits & other.bits)

    def __or__(self, other: SubsetMask) -> SubsetMask:
        return SubsetMask(self.ring, self.bits | other.bits)

    def issubset(self, other: SubsetMask) -> bool:
        return self <= other

    def indices(self) -> list[int]:
        return list(self)

    def labels(self) -> list[str]:
        return [self.ring.labels[i] for i in self]

    def __repr__(self) -> str:
        return f"SubsetMask({{{', '.join(self.labels())}}})"


def _cached(r: FiniteRing, key, compute) -> SubsetMask:
    cache = r._cache.setdefault("masks", {})
    mask = cache.get(key)
    if mask is None:
        mask = cache[key] = compute()
    return mask


def left_annihilator(r: FiniteRing, a: int) -> SubsetMask:
    """{x : x a = 0}"""
    r.check(a)
    return _cached(r, ("lann", a),
                   lambda: SubsetMask.from_flags(r, r.mul_table[:, a] == r.zero))


def right_annihilator(r: FiniteRing, a: int) -> SubsetMask:
    """{x : a x = 0}"""
    r.check(a)
    return _cached(r, ("rann", a),
                   lambda: SubsetMask.from_flags(r, r.mul_table[a] == r.zero))


def multiples(r: FiniteRing, b: int, side: str = "right", with_unit: bool = False) -> SubsetMask:
    """``bR`` (side="right") or ``Rb`` (side="left"); ``with_unit`` adds ``b`` itself."""
    r.check(b)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def compute():
        vals = r.mul_table[b] if side == "right" else r.mul_table[:, b]
        bits = _bits(np.bincount(vals, minlength=r.size))
        if with_unit:
            bits |= 1 << b
        return SubsetMask(r, bits)

    return _cached(r, ("mult", b, side, with_unit), compute)


def sandwich_set(r: FiniteRing, b: int, c: int, pattern: str, x: int,
                 with_unit: bool = False) -> SubsetMask:
    """``bRx`` (pattern "bSx") or ``xRc`` (pattern "xSc").

    ``c`` is ignored for "bSx" and ``b`` for "xSc".  ``with_unit`` adds the
    product with the middle factor omitted.
    """
    r.check(b, c, x)
    M = r.mul_table
    if pattern == "bSx":
        key, vals, extra = ("bSx", b, x), M[M[b], x], M[b, x]
    elif pattern == "xSc":
        key, vals, extra = ("xSc", x, c), M[M[x], c], M[x, c]
    else:
        raise ValueError(f"pattern must be 'bSx' or 'xSc', not {pattern!r}")

    def compute():
        bits = _bits(np.bincount(vals, minlength=r.size))
        if with_unit:
            bits |= 1 << int(extra)
        return SubsetMask(r, bits)

    return _cached(r, key + (with_unit,), compute)


def ring_kernels(r: FiniteRing) -> tuple[SubsetMask, SubsetMask]:
    """(°R, R°): elements killing all of R from the right / from the left."""
    M, z = r.mul_table, r.zero
    left = _cached(r, ("kernel", "left"),
                   lambda: SubsetMask.from_flags(r, (M == z).all(axis=1)))
    right = _cached(r, ("kernel", "right"),
                    lambda: SubsetMask.from_flags(r, (M == z).all(axis=0)))
    return left, right


def is_left_faithful(r: FiniteRing) -> bool:
    return ring_kernels(r)[0].bits == 1 << r.zero


def is_right_faithful(r: FiniteRing) -> bool:
    return ring_kernels(r)[1].bits == 1 << r.zero


def commutant(r: FiniteRing, a: int) -> SubsetMask:
    r.check(a)
    M = r.mul_table
    return _cached(r, ("comm", a), lambda: SubsetMask.from_flags(r, M[:, a] == M[a]))


def bicommutant(r: FiniteRing, a: int) -> SubsetMask:
    """{x : x h = h x for every h commuting with a}"""
    r.check(a)
    M = r.mul_table

    def compute():
        hs = commutant(r, a).indices()
        return SubsetMask.from_flags(r, (M[:, hs] == M[hs].T).all(axis=1))

    return _cached(r, ("bicomm", a), compute)


class RingTables:
    """Dense lookup matrices shared by the solvers and the theorem checkers.

    Membership matrices are indexed ``[generator, element]``; e.g.
    ``in_right[x, t]`` is ``t in xR`` and ``inc_left[b, x]`` is
    ``°b ⊆ °x``.
    """

    def __init__(self, r: FiniteRing):
        self.ring = r
        self.n = r.size
        self.zero = r.zero
        self.mul = r.mul_table
        self.add = r.add_table
        self.neg = r.neg_table
        self.mulx = extended_mul_table(r)
        self.arange = np.arange(r.size)

    def _from_values(self, vals: np.ndarray) -> np.ndarray:
        # vals[g, s] are the members generated by g; returns flags[g, t]
        n = self.n
        out = np.zeros((n, n), dtype=bool)
        out[np.repeat(self.arange, vals.shape[1]), vals.ravel()] = True
        return out

    @cached_property
    def in_right(self) -> np.ndarray:
        """[x, t] = t in xR"""
        return self._from_values(self.mul)

    @cached_property
    def in_left(self) -> np.ndarray:
        """[x, t] = t in Rx"""
        return self._from_values(self.mul.T)

    @cached_property
    def in_right1(self) -> np.ndarray:
        """[x, t] = t in xR^1"""
        return self.in_right | np.eye(self.n, dtype=bool)

    @cached_property
    def in_left1(self) -> np.ndarray:
        return self.in_left | np.eye(self.n, dtype=bool)

    @cached_property
    def kills_left(self) -> np.ndarray:
        """[t, a] = t a == 0, i.e. column a is °a"""
        return self.mul == self.zero

    @cached_property
    def inc_left(self) -> np.ndarray:
        """[b, x] = °b ⊆ °x"""
        z = self.kills_left.astype(np.float64)
        # count t with t in °b and t not in °x
        return (z.T @ (1.0 - z)) == 0

    @cached_property
    def inc_right(self) -> np.ndarray:
        """[c, x] = c° ⊆ x°"""
        w = (self.mul == self.zero).astype(np.float64)
        return (w @ (1.0 - w).T) == 0

    @cached_property
    def sandwich_left(self) -> np.ndarray:
        """[b, x] = x in bRx"""
        out = np.empty((self.n, self.n), dtype=bool)
        for b in range(self.n):
            out[b] = (self.mul[self.mul[b]] == self.arange[None, :]).any(axis=0)
        return out

    @cached_property
    def sandwich_right(self) -> np.ndarray:
        """[c, x] = x in xRc"""
        out = np.empty((self.n, self.n), dtype=bool)
        for c in range(self.n):
            out[c] = (self.mul[self.mul, c] == self.arange[:, None]).any(axis=1)
        return out

    @cached_property
    def left_kernel(self) -> np.ndarray:
        """[t] = t in °R"""
        return (self.mul == self.zero).all(axis=1)

    @cached_property
    def right_kernel(self) -> np.ndarray:
        """[t] = t in R°"""
        return (self.mul == self.zero).all(axis=0)

    @cached_property
    def commutes(self) -> np.ndarray:
        """[a, h] = a h == h a"""
        return self.mul == self.mul.T

    @cached_property
    def bicomm(self) -> np.ndarray:
        """[a, x] = x in comm²{a}"""
        c = self.commutes.astype(np.float64)
        # x fails for a when some h commutes with a but not with x
        return (c @ (1.0 - c).T) == 0

    @cached_property
    def right_class(self) -> np.ndarray:
        """Equal ids iff equal principal right sets xR."""
        return np.unique(self.in_right, axis=0, return_inverse=True)[1].ravel()

    @cached_property
    def left_class(self) -> np.ndarray:
        return np.unique(self.in_left, axis=0, return_inverse=True)[1].ravel()


def tables(r: FiniteRing) -> RingTables:
    t = r._cache.get("tables")
    if t is None:
        t = r._cache["tables"] = RingTables(r)
    return t
