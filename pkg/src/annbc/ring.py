"""Finite rings given by explicit Cayley tables.

Elements are integer indices ``0..n-1``.  A ring need not have an identity,
and may optionally carry an involution ``star`` (an anti-automorphism of
order two).
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

DEFAULT_SIZE_CAP = int(os.environ.get("ANNBC_SIZE_CAP", "1024"))


class RingError(ValueError):
    """Invalid ring data or an operation the ring cannot support."""


class SizeCapError(RingError):
    pass


class RingAxiomError(RingError):
    def __init__(self, report: ValidationReport):
        self.report = report
        bad = report.first_failure()
        super().__init__(f"ring axiom failed: {bad.axiom} at {bad.witness}")


def _frozen(table) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class FiniteRing:
    """Immutable Cayley-table ring.

    ``add`` and ``mul`` are ``n x n`` integer arrays.  ``one`` is ``None`` for
    non-unital rings; ``star`` is ``None`` unless an involution is attached.
    """

    __slots__ = (
        "name", "size", "add_table", "mul_table", "zero", "one", "star",
        "labels", "neg_table", "ambient_indices", "_index", "_rows", "_cache",
    )

    def __init__(self, name: str, add, mul, zero: int, one: int | None,
                 labels: Sequence[str], star: Sequence[int] | None = None,
                 ambient_indices: Sequence[int] | None = None):
        add_t = _frozen(add)
        mul_t = _frozen(mul)
        n = len(labels)
        if add_t.shape != (n, n) or mul_t.shape != (n, n):
            raise RingError(f"tables must be {n}x{n}, got {add_t.shape} and {mul_t.shape}")
        if n < 1:
            raise RingError("a ring has at least one element")
        for t in (add_t, mul_t):
            if t.min() < 0 or t.max() >= n:
                raise RingError("table entry out of range")
        for v in (zero, one):
            if v is not None and not 0 <= v < n:
                raise RingError(f"element index {v} out of range")
        s = object.__setattr__
        s(self, "name", str(name))
        s(self, "size", n)
        s(self, "add_table", add_t)
        s(self, "mul_table", mul_t)
        s(self, "zero", int(zero))
        s(self, "one", None if one is None else int(one))
        s(self, "star", None if star is None else tuple(int(v) for v in star))
        s(self, "labels", tuple(str(l) for l in labels))
        s(self, "ambient_indices", None if ambient_indices is None else tuple(ambient_indices))
        # negation derived once from the add table; -1 marks a missing inverse
        neg = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(add_t == zero)
        neg[rows[::-1]] = cols[::-1]
        neg.setflags(write=False)
        s(self, "neg_table", neg)
        s(self, "_index", {l: i for i, l in enumerate(self.labels)})
        s(self, "_rows", (add_t.tolist(), mul_t.tolist()))
        s(self, "_cache", {})

    def __setattr__(self, key, value):
        raise AttributeError("FiniteRing is immutable")

    @classmethod
    def build(cls, name: str, add, mul, labels: Sequence[str], star=None,
              ambient_indices=None) -> FiniteRing:
        """Construct a ring, detecting its zero and (if any) identity."""
        add_t = np.asarray(add)
        n = len(labels)
        ar = np.arange(n)
        zeros = [z for z in range(n) if (add_t[z] == ar).all() and (add_t[:, z] == ar).all()]
        if not zeros:
            raise RingError("addition has no neutral element")
        mul_t = np.asarray(mul)
        return cls(name, add_t, mul_t, zeros[0], find_identity(mul_t), labels, star,
                   ambient_indices)

    # -- basic protocol -------------------------------------------------

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        kind = "unital" if self.one is not None else "non-unital"
        return f"FiniteRing({self.name!r}, size={self.size}, {kind})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self.name, self.size, self.labels))

    def __reduce__(self):
        return (_ring_from_state, (self.to_dict(), self.ambient_indices))

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def is_unital(self) -> bool:
        return self.one is not None

    def check(self, *xs: int) -> None:
        for x in xs:
            if not (isinstance(x, (int, np.integer)) and 0 <= x < self.size):
                raise RingError(f"{x!r} is not an element index of {self.name}")

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, ref: str | int) -> int:
        """Resolve a label (exact match) or a decimal index."""
        if isinstance(ref, (int, np.integer)):
            self.check(int(ref))
            return int(ref)
        if ref in self._index:
            return self._index[ref]
        if ref.isdigit() and int(ref) < self.size:
            return int(ref)
        raise RingError(f"unknown element {ref!r} in {self.name}")

    # -- arithmetic -----------------------------------------------------

    def add(self, x: int, y: int) -> int:
        return self._rows[0][x][y]

    def mul(self, x: int, y: int) -> int:
        return self._rows[1][x][y]

    def neg(self, x: int) -> int:
        return int(self.neg_table[x])

    def sub(self, x: int, y: int) -> int:
        return self._rows[0][x][int(self.neg_table[y])]

    def prod(self, *xs: int) -> int:
        rows = self._rows[1]
        acc = xs[0]
        for x in xs[1:]:
            acc = rows[acc][x]
        return acc

    def pow(self, x: int, k: int) -> int:
        if k < 1:
            raise RingError("exponent must be >= 1 (no a^0 in a non-unital ring)")
        rows = self._rows[1]
        acc = x
        for _ in range(k - 1):
            acc = rows[acc][x]
        return acc

    def conj(self, x: int) -> int:
        if self.star is None:
            raise RingError(f"{self.name} has no involution")
        return self.star[x]

    # -- serialization --------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "size": self.size,
            "add": self.add_table.tolist(),
            "mul": self.mul_table.tolist(),
            "zero": self.zero,
            "one": self.one,
            "star": None if self.star is None else list(self.star),
            "labels": list(self.labels),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    def save(self, path: str | os.PathLike) -> None:
        Path(path).write_text(self.to_json())

    @classmethod
    def from_dict(cls, data: dict, validate: bool = True) -> FiniteRing:
        try:
            ring = cls(data["name"], data["add"], data["mul"], data["zero"], data["one"],
                       data["labels"], data.get("star"))
        except (KeyError, TypeError) as exc:
            raise RingError(f"malformed ring data: {exc}") from exc
        if data.get("size", ring.size) != ring.size:
            raise RingError("size field disagrees with table dimensions")
        if validate:
            report = validate_axioms(ring)
            if not report.ok:
                raise RingAxiomError(report)
        return ring

    @classmethod
    def from_json(cls, text: str, validate: bool = True) -> FiniteRing:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RingError(f"not valid JSON: {exc}") from exc
        return cls.from_dict(data, validate)

    @classmethod
    def load(cls, path: str | os.PathLike, validate: bool = True) -> FiniteRing:
        return cls.from_json(Path(path).read_text(), validate)


def _ring_from_state(data: dict, ambient: tuple | None) -> FiniteRing:
    return FiniteRing(data["name"], data["add"], data["mul"], data["zero"], data["one"],
                      data["labels"], data["star"], ambient)


def find_identity(mul) -> int | None:
    mul = np.asarray(mul)
    ar = np.arange(len(mul))
    for e in range(len(mul)):
        if (mul[e] == ar).all() and (mul[:, e] == ar).all():
            return e
    return None


def arithmetic(r: FiniteRing, op: str, *args: int) -> int:
    """Dispatch ``add | mul | neg | sub | pow`` on element indices."""
    ops = {"add": r.add, "mul": r.mul, "neg": r.neg, "sub": r.sub, "pow": r.pow}
    if op not in ops:
        raise RingError(f"unknown operation {op!r}")
    elems = args[:1] if op == "pow" else args
    r.check(*elems)
    return ops[op](*args)


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    passed: bool
    witness: tuple | None = None


@dataclass
class ValidationReport:
    ring: str
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> AxiomCheck | None:
        return next((c for c in self.checks if not c.passed), None)

    def __getitem__(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "ok": self.ok,
            "checks": [{"axiom": c.axiom, "passed": c.passed,
                        "witness": None if c.witness is None else list(c.witness)}
                       for c in self.checks],
        }


def _first(mask: np.ndarray, *prefix: int) -> tuple | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(prefix) + tuple(int(v) for v in hits[0])


def _assoc_witness(t: np.ndarray) -> tuple | None:
    for x in range(len(t)):
        # (x y) z  vs  x (y z), indexed by (y, z)
        w = _first(t[t[x]] != t[x][t], x)
        if w:
            return w
    return None


def _distrib_witness(add: np.ndarray, mul: np.ndarray) -> tuple[tuple | None, tuple | None]:
    left = right = None
    for x in range(len(add)):
        row, col = mul[x], mul[:, x]
        if left is None:
            # x (y + z) vs x y + x z
            left = _first(mul[x][add] != add[row[:, None], row[None, :]], x)
        if right is None:
            # (y + z) x vs y x + z x
            right = _first(mul[add, x] != add[col[:, None], col[None, :]], x)
        if left and right:
            break
    return left, right


def validate_axioms(r: FiniteRing) -> ValidationReport:
    """Exhaustively check every ring axiom; failures carry a witness tuple."""
    A, M = r.add_table, r.mul_table
    n, z = r.size, r.zero
    ar = np.arange(n)
    rep = ValidationReport(r.name)

    def put(name, witness):
        rep.checks.append(AxiomCheck(name, witness is None, witness))

    put("add_associative", _assoc_witness(A))
    put("add_commutative", _first(A != A.T))
    zw = _first(A[z] != ar)
    put("add_zero", None if zw is None else (z,) + zw)
    put("add_inverse", _first(r.neg_table < 0))
    put("mul_associative", _assoc_witness(M))
    left, right = _distrib_witness(A, M)
    put("left_distributive", left)
    put("right_distributive", right)
    if r.one is not None:
        e = r.one
        bad = _first((M[e] != ar) | (M[:, e] != ar))
        put("one_identity", None if bad is None else (e,) + bad)
    if r.star is not None:
        for name, w in _star_witnesses(r.star, A, M).items():
            put(name, w)
    dup = [l for l in set(r.labels) if r.labels.count(l) > 1]
    put("labels_unique", None if not dup else (r.labels.index(dup[0]),))
    return rep


def _star_witnesses(star, A: np.ndarray, M: np.ndarray) -> dict[str, tuple | None]:
    s = np.asarray(star)
    n = len(A)
    out: dict[str, tuple | None] = {}
    if sorted(s.tolist()) != list(range(n)):
        missing = sorted(set(range(n)) - set(s.tolist()))
        out["star_bijective"] = (missing[0],) if missing else (0,)
        return out
    out["star_bijective"] = None
    out["star_involutive"] = _first(s[s] != np.arange(n))
    out["star_additive"] = _first(s[A] != A[s[:, None], s[None, :]])
    # (x y)* = y* x*
    out["star_antimultiplicative"] = _first(s[M] != M[s[None, :], s[:, None]])
    return out


# ---------------------------------------------------------------------------
# constructors


def _cap(size: int, cap: int | None) -> None:
    cap = DEFAULT_SIZE_CAP if cap is None else cap
    if size > cap:
        raise SizeCapError(f"ring of size {size} exceeds size cap {cap}")


def make_zmod(n: int, cap: int | None = None) -> FiniteRing:
    """The integers modulo ``n``; ``make_zmod(1)`` is the zero ring."""
    if n < 1:
        raise RingError("modulus must be positive")
    _cap(n, cap)
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return FiniteRing(f"Z{n}", add, mul, 0, 1 % n, [str(i) for i in range(n)])


def matrix_label(entries: Sequence[int], k: int) -> str:
    terms = []
    for pos, v in enumerate(entries):
        if v:
            i, j = divmod(pos, k)
            terms.append(f"{'' if v == 1 else v}e{i + 1}{j + 1}")
    return "+".join(terms) or "0"


def _matrices(k: int, n: int) -> np.ndarray:
    # row-major entries, first entry most significant
    digits = list(itertools.product(range(n), repeat=k * k))
    return np.array(digits, dtype=np.int64).reshape(-1, k, k)


def _encode(mats: np.ndarray, n: int) -> np.ndarray:
    k2 = mats.shape[-1] * mats.shape[-2]
    weights = n ** np.arange(k2 - 1, -1, -1, dtype=np.int64)
    return mats.reshape(*mats.shape[:-2], k2) @ weights


def make_matrix_ring(k: int, n: int, cap: int | None = None) -> FiniteRing:
    """Full ``k x k`` matrix ring over ``Z_n``.

    Labels are sums of unit matrices in row-major order (``"e11+e21"``).
    """
    if k < 1 or n < 1:
        raise RingError("dimension and modulus must be positive")
    size = n ** (k * k)
    _cap(size, cap)
    mats = _matrices(k, n)
    add = _encode((mats[:, None] + mats[None, :]) % n, n)
    mul = _encode(np.einsum("aij,bjk->abik", mats, mats) % n, n)
    labels = [matrix_label(m.ravel().tolist(), k) for m in mats]
    one = int(_encode(np.eye(k, dtype=np.int64)[None] % n, n)[0])
    return FiniteRing(f"M{k}(Z{n})", add, mul, 0, one if size > 1 else 0, labels)


def transpose_involution(k: int, n: int) -> list[int]:
    mats = _matrices(k, n)
    return _encode(mats.transpose(0, 2, 1), n).tolist()


def make_direct_product(r1: FiniteRing, r2: FiniteRing, cap: int | None = None) -> FiniteRing:
    n1, n2 = r1.size, r2.size
    _cap(n1 * n2, cap)
    A1, A2, M1, M2 = r1.add_table, r2.add_table, r1.mul_table, r2.mul_table
    i = np.arange(n1 * n2)
    x1, x2 = np.divmod(i, n2)
    add = A1[x1[:, None], x1[None, :]] * n2 + A2[x2[:, None], x2[None, :]]
    mul = M1[x1[:, None], x1[None, :]] * n2 + M2[x2[:, None], x2[None, :]]
    one = None
    if r1.one is not None and r2.one is not None:
        one = r1.one * n2 + r2.one
    star = None
    if r1.star is not None and r2.star is not None:
        s1, s2 = np.asarray(r1.star), np.asarray(r2.star)
        star = (s1[x1] * n2 + s2[x2]).tolist()
    labels = [f"({r1.labels[a]},{r2.labels[b]})" for a, b in zip(x1, x2)]
    return FiniteRing(f"{r1.name}x{r2.name}", add, mul, r1.zero * n2 + r2.zero, one,
                      labels, star)


def subring_closure(ambient: FiniteRing, generators: Sequence[int],
                    name: str | None = None) -> FiniteRing:
    """Smallest subring of ``ambient`` containing ``generators``.

    Elements keep ambient index order and ambient labels;
    ``ambient_indices`` maps back into the ambient ring.
    """
    if not generators:
        raise RingError("need at least one generator")
    ambient.check(*generators)
    A, M, neg = ambient.add_table, ambient.mul_table, ambient.neg_table
    inside = np.zeros(ambient.size, dtype=bool)
    inside[ambient.zero] = True
    inside[list(generators)] = True
    while True:
        idx = np.flatnonzero(inside)
        grown = inside.copy()
        grown[A[np.ix_(idx, idx)].ravel()] = True
        grown[M[np.ix_(idx, idx)].ravel()] = True
        grown[neg[idx]] = True
        if (grown == inside).all():
            break
        inside = grown
    idx = np.flatnonzero(inside)
    relabel = np.full(ambient.size, -1, dtype=np.int64)
    relabel[idx] = np.arange(len(idx))
    add = relabel[A[np.ix_(idx, idx)]]
    mul = relabel[M[np.ix_(idx, idx)]]
    if name is None:
        gens = ",".join(ambient.labels[g] for g in sorted(set(generators)))
        name = f"<{gens}> in {ambient.name}"
    star = None
    if ambient.star is not None:
        s = relabel[np.asarray(ambient.star)[idx]]
        if (s >= 0).all():
            star = s.tolist()
    labels = [ambient.labels[i] for i in idx]
    return FiniteRing(name, add, mul, int(relabel[ambient.zero]), find_identity(mul),
                      labels, star, idx.tolist())


def attach_involution(r: FiniteRing, perm: Sequence[int]) -> FiniteRing:
    """Copy of ``r`` with ``star = perm``; rejects maps that break the star laws."""
    perm = [int(v) for v in perm]
    if len(perm) != r.size:
        raise RingError(f"involution must list {r.size} images, got {len(perm)}")
    for name, w in _star_witnesses(perm, r.add_table, r.mul_table).items():
        if w is not None:
            raise RingError(f"not an involution: {name} fails at {w}")
    return FiniteRing(r.name, r.add_table, r.mul_table, r.zero, r.one, r.labels, perm,
                      r.ambient_indices)


def make_johnson_ring() -> FiniteRing:
    """The 16-element non-unital subring of M3(Z2) spanned by e11, e21, e22, e31."""
    m3 = make_matrix_ring(3, 2)
    gens = [m3.index(g) for g in ("e11", "e21", "e22", "e31")]
    return subring_closure(m3, gens, name="Johnson")


def make_upper_triangular(k: int = 2, n: int = 2) -> FiniteRing:
    mk = make_matrix_ring(k, n)
    gens = [mk.index(f"e{i + 1}{j + 1}") for i in range(k) for j in range(i, k)]
    return subring_closure(mk, gens, name=f"UT{k}(Z{n})")


# ---------------------------------------------------------------------------
# R^1


@dataclass(frozen=True)
class UnitalExtension:
    """Multiplicative monoid view R^1.

    When ``has_formal_one`` the extra element has index ``base.size``.  It is
    only a multiplier: it never takes part in addition.
    """

    base: FiniteRing
    has_formal_one: bool

    @property
    def size(self) -> int:
        return self.base.size + int(self.has_formal_one)

    @property
    def one(self) -> int:
        return self.base.size if self.has_formal_one else self.base.one

    def elements(self) -> range:
        return range(self.size)

    def is_formal(self, x: int) -> bool:
        return self.has_formal_one and x == self.base.size

    def label(self, x: int) -> str:
        return "1" if self.is_formal(x) else self.base.labels[x]

    def mul(self, x: int, y: int) -> int:
        if self.is_formal(x):
            return y
        if self.is_formal(y):
            return x
        return self.base.mul(x, y)

    @property
    def table(self) -> np.ndarray:
        return extended_mul_table(self.base)


def extended_mul_table(r: FiniteRing) -> np.ndarray:
    """``(n+1) x (n+1)`` table whose last row/column act as a formal identity."""
    key = "ext_mul"
    if key not in r._cache:
        n = r.size
        ext = np.empty((n + 1, n + 1), dtype=np.int64)
        ext[:n, :n] = r.mul_table
        ext[n, :] = np.arange(n + 1)
        ext[:, n] = np.arange(n + 1)
        ext.setflags(write=False)
        r._cache[key] = ext
    return r._cache[key]


def adjoin_identity(r: FiniteRing) -> UnitalExtension:
    return UnitalExtension(r, r.one is None)
