"""Slow, definition-level reference implementations used to cross-check the library."""

from __future__ import annotations

import re


def parse_matrix_label(label: str, k: int) -> tuple[tuple[int, ...], ...]:
    """'e11+2e21' -> nested tuple of entries (mod is applied by the caller)."""
    m = [[0] * k for _ in range(k)]
    if label != "0":
        for term in label.split("+"):
            coef, i, j = re.fullmatch(r"(\d*)e(\d)(\d)", term).groups()
            m[int(i) - 1][int(j) - 1] += int(coef or 1)
    return tuple(tuple(row) for row in m)


def matmul(p, q, n):
    k = len(p)
    return tuple(tuple(sum(p[i][t] * q[t][j] for t in range(k)) % n for j in range(k))
                 for i in range(k))


def matadd(p, q, n):
    return tuple(tuple((x + y) % n for x, y in zip(rp, rq)) for rp, rq in zip(p, q))


def _signature(r, x):
    """Invariants preserved by isomorphisms: additive order and the power sequence shape."""
    order, acc = 1, x
    while acc != r.zero:
        acc, order = r.add(acc, x), order + 1
    powers = [x]
    while (p := r.mul(powers[-1], x)) not in powers:
        powers.append(p)
    return order, len(powers), powers.index(p), r.mul(x, x) == x


def is_isomorphic(r1, r2) -> bool:
    """Backtracking search for a bijection preserving both tables.

    Each choice is closed under sums and products before branching again.
    """
    if r1.size != r2.size:
        return False
    n = r1.size
    sig1 = [_signature(r1, x) for x in range(n)]
    sig2 = [_signature(r2, x) for x in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False

    def close(image: dict[int, int]) -> dict[int, int] | None:
        changed = True
        while changed:
            changed = False
            for u, fu in list(image.items()):
                for v, fv in list(image.items()):
                    for op1, op2 in ((r1.add, r2.add), (r1.mul, r2.mul)):
                        w, fw = op1(u, v), op2(fu, fv)
                        if w in image:
                            if image[w] != fw:
                                return None
                        elif sig1[w] != sig2[fw] or fw in image.values():
                            return None
                        else:
                            image[w] = fw
                            changed = True
        return image

    def extend(image: dict[int, int]) -> bool:
        free = [x for x in range(n) if x not in image]
        if not free:
            return True
        x = free[0]
        taken = set(image.values())
        for t in range(n):
            if t in taken or sig1[x] != sig2[t]:
                continue
            nxt = close({**image, x: t})
            if nxt is not None and extend(nxt):
                return True
        return False

    start = close({r1.zero: r2.zero})
    return start is not None and extend(start)


def right_ann(r, a):
    return {t for t in r.elements if r.mul(a, t) == r.zero}


def left_ann(r, a):
    return {t for t in r.elements if r.mul(t, a) == r.zero}


def ann_inverse_scan(r, a, b, c):
    """Every x meeting the five defining conditions, by direct scan."""
    out = []
    for x in r.elements:
        if (r.prod(x, a, x) == x and r.prod(x, a, b) == b and r.prod(c, a, x) == c
                and left_ann(r, b) <= left_ann(r, x) and right_ann(r, c) <= right_ann(r, x)):
            out.append(x)
    return out


def bc_inverse_scan(r, a, b, c):
    """Every x with xab=b, cax=c, x in bR and x in Rc."""
    bR = {r.mul(b, s) for s in r.elements}
    Rc = {r.mul(s, c) for s in r.elements}
    return [x for x in r.elements
            if r.prod(x, a, b) == b and r.prod(c, a, x) == c and x in bR and x in Rc]


def sided_ann_scan(r, a, b, c, side):
    out = []
    for x in r.elements:
        if side == "lann":
            ok = r.prod(x, a, b) == b and right_ann(r, c) <= right_ann(r, x)
        else:
            ok = r.prod(c, a, x) == c and left_ann(r, b) <= left_ann(r, x)
        if ok:
            out.append(x)
    return out


def drazin_scan(r, a, max_m=None):
    """(witness, least positive index) or None."""
    n = r.size
    for m in range(1, (max_m or n + 1) + 1):
        am = r.pow(a, m)
        for x in r.elements:
            if (r.mul(r.pow(a, m + 1), x) == am and r.prod(x, x, a) == x
                    and r.mul(a, x) == r.mul(x, a)):
                return x, m
    return None
