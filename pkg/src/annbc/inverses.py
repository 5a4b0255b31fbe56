"""Verified search for generalized inverses in a finite ring.

Every solver scans candidate elements exhaustively and returns an
:class:`InverseCertificate` (or ``None`` when no solution exists).  Finding
more than one solution where uniqueness is a theorem, or disagreement
between two equivalent characterisations, raises :class:`TheoremViolation`
carrying a replayable counterexample record.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .ring import FiniteRing, RingError
from .sets import tables


class Kind(str, Enum):
    BC = "bc"
    ALONG = "along"
    LEFT_BC = "left_bc"
    RIGHT_BC = "right_bc"
    ANN_BC = "ann"
    LANN = "lann"
    RANN = "rann"
    MP = "mp"
    DRAZIN = "drazin"
    CORE = "core"


class PreconditionError(RingError):
    pass


class TheoremViolation(AssertionError):
    """A finite instance contradicting a proved statement."""

    def __init__(self, ring: FiniteRing, clause: str, **elems: int):
        self.record = {
            "vars": {k: ring.labels[v] for k, v in elems.items()},
            "failed_clause": clause,
        }
        super().__init__(f"{ring.name}: {clause} fails at {self.record['vars']}")


@dataclass(frozen=True)
class InverseCertificate:
    kind: Kind
    a: int
    b: int
    c: int
    witness: int
    conditions: dict[str, bool] = field(default_factory=dict)
    drazin_index: int | None = None

    def to_dict(self, r: FiniteRing) -> dict:
        out = {
            "kind": self.kind.value,
            "a": r.labels[self.a],
            "b": r.labels[self.b],
            "c": r.labels[self.c],
            "witness": r.labels[self.witness],
            "conditions": dict(self.conditions),
        }
        if self.drazin_index is not None:
            out["drazin_index"] = self.drazin_index
        return out

    def to_json(self, r: FiniteRing) -> str:
        return json.dumps(self.to_dict(r))


@dataclass(frozen=True)
class SidedSolutionSet:
    kind: Kind
    a: int
    b: int
    c: int
    solutions: tuple[int, ...]
    regular_flags: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.solutions)

    def __contains__(self, x: int) -> bool:
        return x in self.solutions

    def __iter__(self):
        return iter(self.solutions)

    def is_regular(self, x: int) -> bool:
        return self.regular_flags[self.solutions.index(x)]

    def to_dict(self, r: FiniteRing) -> dict:
        return {
            "kind": self.kind.value,
            "a": r.labels[self.a],
            "b": r.labels[self.b],
            "c": r.labels[self.c],
            "solutions": [{"witness": r.labels[x], "regular": reg}
                          for x, reg in zip(self.solutions, self.regular_flags)],
        }


def _solutions(flags: np.ndarray) -> list[int]:
    return np.flatnonzero(flags).tolist()


def _unique(r, sols, clause, **elems):
    if len(sols) > 1:
        raise TheoremViolation(r, clause, **elems, x=sols[0], y=sols[1])
    return sols[0] if sols else None


# ---------------------------------------------------------------------------
# (b,c)-inverses and inverses along an element


def _bc_conditions(r: FiniteRing, a: int, b: int, c: int, x: int) -> dict[str, bool]:
    T = tables(r)
    return {
        "xab=b": r.prod(x, a, b) == b,
        "cax=c": r.prod(c, a, x) == c,
        "x in bR": bool(T.in_right[b, x]),
        "x in Rc": bool(T.in_left[c, x]),
        "x in bRx": bool(T.sandwich_left[b, x]),
        "x in xRc": bool(T.sandwich_right[c, x]),
        "xax=x": r.prod(x, a, x) == x,
    }


def bc_inverse(r: FiniteRing, a: int, b: int, c: int) -> InverseCertificate | None:
    """The (b,c)-inverse: xab=b, cax=c, x in bR, x in Rc."""
    r.check(a, b, c)
    T = tables(r)
    M = T.mul
    cand = np.flatnonzero(T.in_right[b] & T.in_left[c])
    ok = (M[M[cand, a], b] == b) & (M[M[c, a], cand] == c)
    x = _unique(r, cand[ok].tolist(), "bc.unique", a=a, b=b, c=c)
    if x is None:
        return None
    cond = _bc_conditions(r, a, b, c, x)
    if not (cond["x in bRx"] and cond["x in xRc"]):
        raise TheoremViolation(r, "bc.definition_forms_agree", a=a, b=b, c=c, x=x)
    if not cond["xax=x"]:
        raise TheoremViolation(r, "bc.outer_inverse", a=a, b=b, c=c, x=x)
    return InverseCertificate(Kind.BC, a, b, c, x, cond)


def bc_inverse_sandwich(r: FiniteRing, a: int, b: int, c: int) -> int | None:
    """Solve the sandwich form xab=b, cax=c, x in bRx, x in xRc by full scan."""
    r.check(a, b, c)
    T = tables(r)
    M = T.mul
    ok = ((M[M[:, a], b] == b) & (M[M[c, a]] == c)
          & T.sandwich_left[b] & T.sandwich_right[c])
    return _unique(r, _solutions(ok), "bc.sandwich_unique", a=a, b=b, c=c)


def inverse_along(r: FiniteRing, a: int, d: int) -> InverseCertificate | None:
    """Inverse of ``a`` along ``d``: xad=d, dax=d, xR^1 ⊆ dR^1, R^1x ⊆ R^1d."""
    r.check(a, d)
    T = tables(r)
    M = T.mul
    n = r.size
    # xR^1 ⊆ dR^1 for every x, as a row of inclusions
    right_ok = ~(T.in_right1 & ~T.in_right1[d][None, :]).any(axis=1)
    left_ok = ~(T.in_left1 & ~T.in_left1[d][None, :]).any(axis=1)
    ok = (M[M[:, a], d] == d) & (M[M[d, a]] == d) & right_ok & left_ok
    x = _unique(r, _solutions(ok), "along.unique", a=a, d=d)
    bc = bc_inverse(r, a, d, d)
    if (bc is None) != (x is None) or (bc is not None and bc.witness != x):
        raise TheoremViolation(r, "along.equals_dd_inverse", a=a, d=d,
                               x=x if x is not None else bc.witness)
    if x is None:
        return None
    cond = {"xad=d": True, "dax=d": True, "xS1 in dS1": True, "S1x in S1d": True}
    return InverseCertificate(Kind.ALONG, a, d, d, x, cond)


def sided_bc_inverses(r: FiniteRing, a: int, b: int, c: int, side: str) -> SidedSolutionSet:
    """Left: yab=b and y in Rc.  Right: cay=c and y in bR."""
    r.check(a, b, c)
    T = tables(r)
    M = T.mul
    if side == "left":
        ok, kind = (M[M[:, a], b] == b) & T.in_left[c], Kind.LEFT_BC
    elif side == "right":
        ok, kind = (M[M[c, a]] == c) & T.in_right[b], Kind.RIGHT_BC
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return _sided(r, kind, a, b, c, ok)


def _sided(r, kind, a, b, c, ok) -> SidedSolutionSet:
    M = r.mul_table
    sols = _solutions(ok)
    regular = tuple(bool(M[M[x, a], x] == x) for x in sols)
    return SidedSolutionSet(kind, a, b, c, tuple(sols), regular)


# ---------------------------------------------------------------------------
# annihilator (b,c)-inverses


def ann_conditions(r: FiniteRing, a: int, b: int, c: int, x: int) -> dict[str, bool]:
    T = tables(r)
    return {
        "xax=x": r.prod(x, a, x) == x,
        "xab=b": r.prod(x, a, b) == b,
        "cax=c": r.prod(c, a, x) == c,
        "°b<=°x": bool(T.inc_left[b, x]),
        "c°<=x°": bool(T.inc_right[c, x]),
    }


def ann_solutions(r: FiniteRing, a: int, b: int, c: int) -> list[int]:
    """Every x satisfying all five annihilator conditions."""
    T = tables(r)
    M = T.mul
    xa = M[:, a]
    # cheap equations first, then the mask inclusions
    ok = (M[xa, b] == b) & (M[M[c, a]] == c)
    ok &= T.inc_left[b] & T.inc_right[c]
    ok &= M[xa, T.arange] == T.arange
    return _solutions(ok)


def ann_bc_inverse(r: FiniteRing, a: int, b: int, c: int) -> InverseCertificate | None:
    r.check(a, b, c)
    x = _unique(r, ann_solutions(r, a, b, c), "ann.unique", a=a, b=b, c=c)
    if x is None:
        return None
    return InverseCertificate(Kind.ANN_BC, a, b, c, x, ann_conditions(r, a, b, c, x))


def sided_ann_inverses(r: FiniteRing, a: int, b: int, c: int, side: str) -> SidedSolutionSet:
    """lann: xab=b and c° ⊆ x°.  rann: cay=c and °b ⊆ °y."""
    r.check(a, b, c)
    T = tables(r)
    M = T.mul
    if side == "lann":
        ok, kind = (M[M[:, a], b] == b) & T.inc_right[c], Kind.LANN
    elif side == "rann":
        ok, kind = (M[M[c, a]] == c) & T.inc_left[b], Kind.RANN
    else:
        raise ValueError(f"side must be 'lann' or 'rann', not {side!r}")
    return _sided(r, kind, a, b, c, ok)


def is_lann(r: FiniteRing, a: int, b: int, c: int, x: int) -> bool:
    return r.prod(x, a, b) == b and bool(tables(r).inc_right[c, x])


def is_rann(r: FiniteRing, a: int, b: int, c: int, y: int) -> bool:
    return r.prod(c, a, y) == c and bool(tables(r).inc_left[b, y])


def compose_sided(r: FiniteRing, x_l: int, a: int, x_r: int,
                  b: int | None = None, c: int | None = None) -> int:
    """``x_l a x_r``; with ``b, c`` given, the one-sided inputs are verified first."""
    r.check(x_l, a, x_r)
    if b is not None and c is not None:
        if not is_lann(r, a, b, c, x_l):
            raise PreconditionError(f"{r.labels[x_l]} is not a lann-inverse")
        if not is_rann(r, a, b, c, x_r):
            raise PreconditionError(f"{r.labels[x_r]} is not a rann-inverse")
    return r.prod(x_l, a, x_r)


# ---------------------------------------------------------------------------
# classical inverses


def _require_star(r: FiniteRing) -> tuple[int, ...]:
    if r.star is None:
        raise PreconditionError(f"{r.name} has no involution")
    return r.star


def moore_penrose(r: FiniteRing, a: int) -> InverseCertificate | None:
    """Unique x with axa=a, xax=x, (ax)*=ax, (xa)*=xa."""
    star = np.asarray(_require_star(r))
    r.check(a)
    M = r.mul_table
    ar = np.arange(r.size)
    ax, xa = M[a], M[:, a]
    ok = (M[ax, a] == a) & (M[xa, ar] == ar) & (star[ax] == ax) & (star[xa] == xa)
    x = _unique(r, _solutions(ok), "mp.unique", a=a)
    s = int(star[a])
    ann = ann_bc_inverse(r, a, s, s)
    if (ann is None) != (x is None) or (x is not None and ann.witness != x):
        raise TheoremViolation(r, "mp.equals_ann_star", a=a,
                               x=x if x is not None else ann.witness)
    if x is None:
        return None
    cond = {"axa=a": True, "xax=x": True, "(ax)*=ax": True, "(xa)*=xa": True}
    return InverseCertificate(Kind.MP, a, s, s, x, cond)


def _powers(r: FiniteRing, a: int, count: int) -> list[int]:
    out = [a]
    for _ in range(count - 1):
        out.append(r.mul(out[-1], a))
    return out


def drazin_table(r: FiniteRing) -> tuple[np.ndarray, np.ndarray]:
    """Drazin inverse and index of every element (-1 where none exists).

    The index uses positive exponents only, so invertible elements get 1.
    """
    cached = r._cache.get("drazin")
    if cached is not None:
        return cached
    n = r.size
    M = r.mul_table
    ar = np.arange(n)
    inv = np.full(n, -1, dtype=np.int64)
    ind = np.full(n, -1, dtype=np.int64)
    # once a^{m+1}x = a^m holds it holds for all larger m; n+1 covers the preperiod
    top = n + 1
    for a in range(n):
        cand = np.flatnonzero((M[M[ar, ar], a] == ar) & (M[a] == M[:, a]))
        pw = _powers(r, a, top + 1)
        best = []
        for x in cand.tolist():
            for m in range(1, top + 1):
                if M[pw[m], x] == pw[m - 1]:
                    best.append((m, x))
                    break
        if len(best) > 1:
            raise TheoremViolation(r, "drazin.unique", a=a, x=best[0][1], y=best[1][1])
        if best:
            ind[a], inv[a] = best[0]
    inv.setflags(write=False)
    ind.setflags(write=False)
    r._cache["drazin"] = (inv, ind)
    return inv, ind


def drazin(r: FiniteRing, a: int, cross_check: bool = True) -> InverseCertificate | None:
    """Drazin inverse with its least index m (a^{m+1}x=a^m, x²a=x, ax=xa).

    ``cross_check`` sweeps m through the ann-(a^m,a^m) and (a^m,a^m)
    characterisations and asserts they reproduce the witness and index.
    """
    r.check(a)
    inv, ind = drazin_table(r)
    x, m = int(inv[a]), int(ind[a])
    if cross_check:
        pw = _powers(r, a, r.size + 1)
        for kind, solve in (("ann", ann_bc_inverse), ("bc", bc_inverse)):
            first = next(((k + 1, cert.witness) for k, p in enumerate(pw)
                          if (cert := solve(r, a, p, p)) is not None), None)
            if first is None:
                if x >= 0:
                    raise TheoremViolation(r, f"drazin.{kind}_sweep_exists", a=a, x=x)
            elif x < 0 or first != (m, x):
                raise TheoremViolation(r, f"drazin.{kind}_sweep_matches", a=a, x=first[1])
    if x < 0:
        return None
    p = r.pow(a, m)
    cond = {"a^(m+1)x=a^m": True, "x²a=x": True, "ax=xa": True}
    return InverseCertificate(Kind.DRAZIN, a, p, p, x, cond, drazin_index=m)


def core_inverse(r: FiniteRing, a: int) -> InverseCertificate | None:
    """The (a, a*)-inverse."""
    star = _require_star(r)
    r.check(a)
    cert = bc_inverse(r, a, a, star[a])
    if cert is None:
        return None
    return InverseCertificate(Kind.CORE, a, a, star[a], cert.witness, cert.conditions)


def regularize_lann(r: FiniteRing, a: int, x_l: int, b: int, c: int) -> int | None:
    """Regular lann-(b,c)-inverse ``t x_l`` where t is the Drazin inverse of ``x_l a``."""
    r.check(a, x_l, b, c)
    if not is_lann(r, a, b, c, x_l):
        raise PreconditionError(f"{r.labels[x_l]} is not a lann-inverse")
    t = int(drazin_table(r)[0][r.mul(x_l, a)])
    if t < 0:
        return None
    y = r.mul(t, x_l)
    if not (is_lann(r, a, b, c, y) and r.prod(y, a, y) == y):
        raise TheoremViolation(r, "regularize.lann", a=a, b=b, c=c, x=x_l, y=y)
    return y


def regularize_rann(r: FiniteRing, a: int, x_r: int, b: int, c: int) -> int | None:
    """Dual of :func:`regularize_lann`: ``x_r t`` with t the Drazin inverse of ``a x_r``."""
    r.check(a, x_r, b, c)
    if not is_rann(r, a, b, c, x_r):
        raise PreconditionError(f"{r.labels[x_r]} is not a rann-inverse")
    t = int(drazin_table(r)[0][r.mul(a, x_r)])
    if t < 0:
        return None
    y = r.mul(x_r, t)
    if not (is_rann(r, a, b, c, y) and r.prod(y, a, y) == y):
        raise TheoremViolation(r, "regularize.rann", a=a, b=b, c=c, x=x_r, y=y)
    return y
