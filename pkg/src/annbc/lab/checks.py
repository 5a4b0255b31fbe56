"""Theorem checkers.

Every checker returns a list of phases; a phase is an outer index range
processed by a function that asserts clauses through :class:`Hits` and
returns how many tuples it examined.  Outer indices are elements or
certificate positions, so the ranges split cleanly across workers.

Arrays are broadcast with the first certificate fixed per outer step, the
``y`` axis in rows and the second certificate in columns.
"""

from __future__ import annotations

import numpy as np

from .core import Hits, Lab, Phase, register

TRANSLATION_NOTE = ("centralizers restricted to translations x -> x*t, x -> t*x "
                    "with t in R^1")


def _pairs_with_y(lab: Lab, certs):
    """Row-broadcast views of a certificate list plus the y column."""
    return (certs.a[None, :], certs.b[None, :], certs.c[None, :], certs.x[None, :],
            lab.Y[:, None])


def _sided_triples(sided: np.ndarray, a: int):
    """(b, c) pairs whose one-sided solution set for ``a`` is non-empty."""
    return zip(*np.nonzero(sided[a].any(axis=-1)))


# -- one-sided inverses --------------------------------------------------------

@register("uniqueness", "at most one ann-(b,c)-inverse and one (b,c)-inverse per triple")
def _uniqueness(lab: Lab) -> list[Phase]:
    n = lab.n
    ar = lab.T.arange

    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv = lab.inv
        for a in range(lo, hi):
            hits.require(inv.ann_count[a] <= 1, "ann.at_most_one", a=a, b=ar[:, None], c=ar[None, :])
            hits.require(inv.bc_count[a] <= 1, "bc.at_most_one", a=a, b=ar[:, None], c=ar[None, :])
        return (hi - lo) * n * n

    return [Phase("triples", n, run)]


@register("sided_composition", "x_l a x_r is the ann-(b,c)-inverse for every lann/rann pair")
def _sided_composition(lab: Lab) -> list[Phase]:
    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv = lab.inv
        scanned = 0
        for a in range(lo, hi):
            both = inv.lann[a].any(axis=-1) & inv.rann[a].any(axis=-1)
            for b, c in zip(*np.nonzero(both)):
                xl = np.flatnonzero(inv.lann[a, b, c])[:, None]
                xr = np.flatnonzero(inv.rann[a, b, c])[None, :]
                comp = lab.m(xl, a, xr)
                hits.require(comp == inv.ann[a, b, c], "composition.is_ann_inverse",
                             a=a, b=b, c=c, x_l=xl, x_r=xr)
                scanned += comp.size
        return scanned

    return [Phase("triples", lab.n, run)]


@register("sided_propositions",
          "relations between one-sided and two-sided annihilator inverses")
def _sided_propositions(lab: Lab) -> list[Phase]:
    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv, T, m = lab.inv, lab.T, lab.m
        scanned = 0
        for a in range(lo, hi):
            live = inv.lann[a].any(axis=-1) | inv.rann[a].any(axis=-1)
            for b, c in zip(*np.nonzero(live)):
                x = inv.ann[a, b, c]
                V = dict(a=a, b=b, c=c)
                xl = np.flatnonzero(inv.lann[a, b, c])
                xr = np.flatnonzero(inv.rann[a, b, c])
                scanned += len(xl) + len(xr)
                # both one-sided at once: xax is the inverse, regular iff x in Rx iff x in xR
                both = np.flatnonzero(inv.lann[a, b, c] & inv.rann[a, b, c])
                if len(both):
                    w = m(both, a, both)
                    hits.require(w == x, "cor.xax_is_inverse", **V, x=both)
                    reg = w == both
                    hits.iff(reg, T.in_left[both, both], "cor.regular_iff_in_Rx", **V, x=both)
                    hits.iff(reg, T.in_right[both, both], "cor.regular_iff_in_xR", **V, x=both)
                if x < 0:
                    hits.require(len(both) == 0, "cor.sided_pair_gives_inverse", **V)
                    continue
                XL, XR = xl[:, None], xr[None, :]
                hits.iff(XL == x, T.in_left[XR, XL], "prop.lann_equals_iff_in_Rxr",
                         **V, x_l=XL, x_r=XR)
                hits.iff(XR == x, T.in_right[XL, XR], "prop.rann_equals_iff_in_xlR",
                         **V, x_l=XL, x_r=XR)
                hits.implies(T.in_left[c, xl], xl == x, "remark.lann_in_Rc_is_inverse", **V, x_l=xl)
                hits.implies(T.in_right[b, xr], xr == x, "remark.rann_in_bR_is_inverse", **V, x_r=xr)
                wl = m(xl, a, xl)
                wr = m(xr, a, xr)
                hits.require(T.inc_left[b, wl], "lemma.left_ann_b_in_left_ann_xlaxl", **V, x_l=xl)
                hits.require(m(wl, a, xl) == wl, "lemma.xlaxlaxl", **V, x_l=xl)
                hits.require(T.inc_right[c, wr], "lemma.right_ann_c_in_right_ann_xraxr", **V, x_r=xr)
                hits.require(m(xr, a, wr) == wr, "lemma.xraxraxr", **V, x_r=xr)
                hits.iff(wl == x, m(c, a, xl) == c, "prop.xlaxl_iff_caxl", **V, x_l=xl)
                hits.iff(wr == x, m(xr, a, b) == b, "prop.xraxr_iff_xrab", **V, x_r=xr)
                reg_l = wl == xl
                reg_r = wr == xr
                hits.implies(reg_l, (xl == x) == T.in_left[xl, c], "cor.regular_lann_iff_c_in_Rxl",
                             **V, x_l=xl)
                hits.implies(reg_r, (xr == x) == T.in_right[xr, b], "cor.regular_rann_iff_b_in_xrR",
                             **V, x_r=xr)
        return scanned

    return [Phase("triples", lab.n, run)]


@register("faithful_uniqueness",
          "one-sided solutions differ from the inverse by a kernel element; unique when faithful")
def _faithful_uniqueness(lab: Lab) -> list[Phase]:
    T = lab.T
    left_faithful = int(T.left_kernel.sum()) == 1
    right_faithful = int(T.right_kernel.sum()) == 1

    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv = lab.inv
        scanned = 0
        for a in range(lo, hi):
            for b, c in zip(*np.nonzero(inv.ann[a] >= 0)):
                x = inv.ann[a, b, c]
                xl = np.flatnonzero(inv.lann[a, b, c])
                xr = np.flatnonzero(inv.rann[a, b, c])
                scanned += len(xl) + len(xr)
                V = dict(a=a, b=b, c=c, x=x)
                hits.require(T.left_kernel[lab.sub(xl, x)], "lemma.lann_minus_inverse_in_left_kernel",
                             **V, x_l=xl)
                hits.require(T.right_kernel[lab.sub(xr, x)], "lemma.rann_minus_inverse_in_right_kernel",
                             **V, x_r=xr)
                if left_faithful:
                    hits.require(xl == x, "prop.left_faithful_unique", **V, x_l=xl)
                if right_faithful:
                    hits.require(xr == x, "prop.right_faithful_unique", **V, x_r=xr)
        return scanned

    return [Phase("triples", lab.n, run)]


@register("drazin_regularization",
          "t x_l is a regular lann-inverse when t is the Drazin inverse of x_l a (and dually)")
def _drazin_regularization(lab: Lab) -> list[Phase]:
    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv, m = lab.inv, lab.m
        dz = inv.drazin
        scanned = 0
        for a in range(lo, hi):
            for b, c in _sided_triples(inv.lann, a):
                xl = np.flatnonzero(inv.lann[a, b, c])
                t = dz[m(xl, a)]
                ok = t >= 0
                xl, t = xl[ok], t[ok]
                y = m(t, xl)
                good = inv.lann[a, b, c, y] & (m(y, a, y) == y)
                hits.require(good, "prop.regular_lann", a=a, b=b, c=c, x_l=xl, t=t)
                scanned += len(xl)
            for b, c in _sided_triples(inv.rann, a):
                xr = np.flatnonzero(inv.rann[a, b, c])
                t = dz[m(a, xr)]
                ok = t >= 0
                xr, t = xr[ok], t[ok]
                y = m(xr, t)
                good = inv.rann[a, b, c, y] & (m(y, a, y) == y)
                hits.require(good, "prop.regular_rann", a=a, b=b, c=c, x_r=xr, t=t)
                scanned += len(xr)
        return scanned

    return [Phase("triples", lab.n, run)]


# -- intertwining --------------------------------------------------------------

def _residuals(lab: Lab, hits: Hits, V: dict, a1, b1, c1, x1, A2, B2, C2, X2, Y) -> None:
    """The three displayed residual identities and the proof's equivalent systems.

    These hold for every pair of certificates and every y, whatever the
    hypotheses, since they use only xab=b, cax=c, xax=x.
    """
    m, sub, add = lab.m, lab.sub, lab.add
    z = lab.T.zero
    e1 = sub(m(Y, a1), m(A2, Y))
    e2 = sub(m(Y, b1), m(B2, Y))
    e3 = sub(m(Y, c1), m(C2, Y))
    tau = sub(m(Y, x1), m(X2, Y))
    x2e1x1 = m(X2, e1, x1)
    hits.require(tau == add(add(m(tau, a1, x1), m(X2, A2, tau)), x2e1x1), "residual.tau", **V)
    hits.require(m(tau, a1, b1) == sub(sub(e2, m(X2, A2, e2)), m(X2, e1, b1)),
                 "residual.tau_a1b1", **V)
    hits.require(m(C2, A2, tau) == sub(sub(e3, m(e3, a1, x1)), m(C2, e1, x1)),
                 "residual.c2a2_tau", **V)
    s1 = (x2e1x1 == z) & (m(tau, a1, x1) == z) & (m(X2, A2, tau) == z)
    s2 = (x2e1x1 == z) & (m(tau, a1, b1) == z) & (m(C2, A2, tau) == z)
    s3 = (m(C2, e1, b1) == z) & (e2 == m(X2, A2, e2)) & (e3 == m(e3, a1, x1))
    hits.iff(tau == z, s1, "proof.tau_zero_iff_system1", **V)
    hits.iff(s1, s2, "proof.system1_iff_system2", **V)
    hits.iff(s2, s3, "proof.system2_iff_system3", **V)
    for name, val in (("x2e1b1", m(X2, e1, b1)), ("c2e1x1", m(C2, e1, x1)),
                      ("c2e1b1", m(C2, e1, b1))):
        hits.iff(x2e1x1 == z, val == z, f"proof.x2e1x1_zero_iff_{name}_zero", **V)


def residual_identities(lab: Lab, i, j, y) -> np.ndarray:
    """Truth of the three residual identities for ann certificates ``i``, ``j``
    (indices into ``lab.inv.ann_certs``) and multipliers ``y``; shape (3, len).
    """
    certs = lab.inv.ann_certs
    m, sub, add = lab.m, lab.sub, lab.add
    a1, b1, c1, x1 = (v[i] for v in (certs.a, certs.b, certs.c, certs.x))
    a2, b2, c2, x2 = (v[j] for v in (certs.a, certs.b, certs.c, certs.x))
    y = np.asarray(y)
    e1, e2, e3 = sub(m(y, a1), m(a2, y)), sub(m(y, b1), m(b2, y)), sub(m(y, c1), m(c2, y))
    tau = sub(m(y, x1), m(x2, y))
    return np.stack([
        tau == add(add(m(tau, a1, x1), m(x2, a2, tau)), m(x2, e1, x1)),
        m(tau, a1, b1) == sub(sub(e2, m(x2, a2, e2)), m(x2, e1, b1)),
        m(c2, a2, tau) == sub(sub(e3, m(e3, a1, x1)), m(c2, e1, x1)),
    ])


def _intertwining_pairs(flavor: str):
    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        T, m = lab.T, lab.m
        certs = lab.inv.ann_certs if flavor == "ann" else lab.inv.bc_certs
        A2, B2, C2, X2, Y = _pairs_with_y(lab, certs)
        for i in range(lo, hi):
            a1, b1, c1, x1 = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
            V = dict(a1=a1, b1=b1, c1=c1, x1=x1, a2=A2, b2=B2, c2=C2, x2=X2, y=Y)
            yb1 = m(Y, b1)
            c2y = m(C2, Y)
            concl = m(Y, x1) == m(X2, Y)
            h1 = m(c2y, a1, b1) == m(C2, A2, yb1)
            alt2 = yb1 == m(X2, A2, yb1)
            alt3 = c2y == m(c2y, a1, x1)
            if flavor == "ann":
                h2 = T.in_right[X2, yb1]
                h3 = T.in_left[x1, c2y]
                hits.iff(concl, h1 & h2 & h3, "thm.intertwine_iff", **V)
                hits.iff(h2, alt2, "thm.yb1_in_x2R_iff_equation", **V)
                hits.iff(h3, alt3, "thm.c2y_in_Rx1_iff_equation", **V)
                cor = h1 & T.in_right[B2, yb1] & T.in_left[c1, c2y]
                hits.implies(cor, concl, "cor.sufficient", **V)
            else:
                h2 = T.in_right[B2, yb1]
                h3 = T.in_left[c1, c2y]
                hits.iff(concl, h1 & h2 & h3, "thm.intertwine_iff", **V)
                hits.iff(h2, alt2, "thm.yb1_in_b2S_iff_equation", **V)
                hits.iff(h3, alt3, "thm.c2y_in_Sc1_iff_equation", **V)
            _residuals(lab, hits, V, a1, b1, c1, x1, A2, B2, C2, X2, Y)
        return (hi - lo) * len(certs) * len(lab.Y)

    return run


@register("intertwining_ann", "y x1 = x2 y for ann-(b,c)-inverses, with residual identities")
def _intertwining_ann(lab: Lab) -> list[Phase]:
    return [Phase("pairs", len(lab.inv.ann_certs), _intertwining_pairs("ann"))]


def _dedupe(sided: np.ndarray, keep: tuple[int, ...]) -> np.ndarray:
    """Distinct rows of the chosen axes of the nonzero index tuples of ``sided``."""
    idx = np.stack(np.nonzero(sided), axis=1)
    if len(idx) == 0:
        return np.zeros((0, len(keep)), dtype=np.int64)
    return np.unique(idx[:, list(keep)], axis=0)


@register("intertwining_bc",
          "y x1 = x2 y for (b,c)-inverses; one-sided sufficiency and necessity; equal inverses")
def _intertwining_bc(lab: Lab) -> list[Phase]:
    inv = lab.inv
    certs = inv.bc_certs
    # one-sided remark: c1 and b2 never enter its conditions, so deduplicate them away
    suf1 = _dedupe(inv.right_bc, (0, 1, 3))          # right (b1,c1)-inverse: (a1, b1, x1)
    suf2 = _dedupe(inv.left_bc, (0, 2, 3))           # left (b2,c2)-inverse: (a2, c2, x2)
    M = lab.T.mul

    def regular(rows: np.ndarray) -> np.ndarray:
        a, x = rows[:, 0], rows[:, -1]
        return rows[M[M[x, a], x] == x]

    nec1 = regular(_dedupe(inv.left_bc, (0, 1, 3)))  # regular left: (a1, b1, x1)
    nec2 = regular(_dedupe(inv.right_bc, (0, 2, 3)))  # regular right: (a2, c2, x2)

    def remark(first: np.ndarray, second: np.ndarray, necessary: bool):
        def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
            m = lab.m
            A2, C2, X2 = (second[None, :, k] for k in range(3))
            Y = lab.Y[:, None]
            for i in range(lo, hi):
                a1, b1, x1 = (int(v) for v in first[i])
                V = dict(a1=a1, b1=b1, x1=x1, a2=A2, c2=C2, x2=X2, y=Y)
                yb1 = m(Y, b1)
                c2y = m(C2, Y)
                concl = m(Y, x1) == m(X2, Y)
                cond = ((m(c2y, a1, b1) == m(C2, A2, yb1)) & (yb1 == m(X2, A2, yb1))
                        & (c2y == m(c2y, a1, x1)))
                if necessary:
                    hits.implies(concl, cond, "remark.regular_sided_necessary", **V)
                else:
                    hits.implies(cond, concl, "remark.sided_sufficient", **V)
            return (hi - lo) * len(second) * len(lab.Y)
        return run

    def same_a(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        T = lab.T
        A2, B2, C2, X2 = (v[None, :] for v in (certs.a, certs.b, certs.c, certs.x))
        scanned = 0
        for i in range(lo, hi):
            a1, b1, c1, x1 = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
            same = A2 == a1
            classes = ((T.right_class[b1] == T.right_class[B2])
                       & (T.left_class[c1] == T.left_class[C2]))
            hits.implies(same, (X2 == x1) == classes, "remark.equal_iff_equal_bS_and_Sc",
                         a=a1, b1=b1, c1=c1, x1=x1, b2=B2, c2=C2, x2=X2)
            scanned += int(same.sum())
        return scanned

    return [
        Phase("pairs", len(certs), _intertwining_pairs("bc")),
        Phase("same_a_unit_y", len(certs), same_a),
        Phase("remark_sufficient", len(suf1), remark(suf1, suf2, False)),
        Phase("remark_necessary", len(nec1), remark(nec1, nec2, True)),
    ]


@register("centralizer_sufficiency",
          "translation centralizers F, G with yb1 = F(b2 y), c2 y = G(y c1) force y x1 = x2 y",
          notes=(TRANSLATION_NOTE, "y ranges over R, as in the statement"))
def _centralizer(lab: Lab) -> list[Phase]:
    certs = lab.inv.bc_certs

    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        T, m = lab.T, lab.m
        A2, B2, C2, X2 = (v[None, :] for v in (certs.a, certs.b, certs.c, certs.x))
        Y = T.arange[:, None]
        for i in range(lo, hi):
            a1, b1, c1, x1 = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
            hyp = ((m(Y, a1) == m(A2, Y))
                   & T.in_right1[m(B2, Y), m(Y, b1)]
                   & T.in_left1[m(Y, c1), m(C2, Y)])
            hits.implies(hyp, m(Y, x1) == m(X2, Y), "cor.translation_centralizers",
                         a1=a1, b1=b1, c1=c1, x1=x1, a2=A2, b2=B2, c2=C2, x2=X2, y=Y)
        return (hi - lo) * len(certs) * lab.n

    return [Phase("pairs", len(certs), run)]


def _variants(flavor: str):
    def build(lab: Lab) -> list[Phase]:
        certs = lab.inv.ann_certs if flavor == "ann" else lab.inv.bc_certs

        def pairs(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
            T, m, sub, add = lab.T, lab.m, lab.sub, lab.add
            IR, IL = T.in_right, T.in_left
            A2, B2, C2, X2, Y = _pairs_with_y(lab, certs)
            a2x2 = m(A2, X2)
            x2a2 = m(X2, A2)
            a2b2 = m(A2, B2)
            for i in range(lo, hi):
                a1, b1, c1, x1 = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
                V = dict(a1=a1, b1=b1, c1=c1, x1=x1, a2=A2, b2=B2, c2=C2, x2=X2, y=Y)
                a1x1 = m(a1, x1)
                x1a1 = m(x1, a1)
                c1a1 = m(c1, a1)
                ya1b1 = m(Y, a1, b1)
                yb1 = m(Y, b1)
                c2y = m(C2, Y)
                c2a2y = m(C2, A2, Y)
                t = [sub(m(Y, a1x1), m(a2x2, Y)), sub(m(Y, x1a1), m(x2a2, Y)),
                     sub(m(Y, a1x1), m(x2a2, Y)), sub(m(Y, x1a1), m(a2x2, Y))]
                concl = [tk == T.zero for tk in t]
                xform = [IR[a2x2, ya1b1] & IL[x1, c2y], IR[X2, yb1] & IL[x1a1, c2a2y],
                         IR[X2, ya1b1] & IL[x1, c2a2y], IR[a2x2, yb1] & IL[x1a1, c2y]]
                bform = [IR[a2b2, ya1b1] & IL[c1, c2y], IR[B2, yb1] & IL[c1a1, c2a2y],
                         IR[B2, ya1b1] & IL[c1, c2a2y], IR[a2b2, yb1] & IL[c1a1, c2y]]
                for k, part in enumerate(("i", "ii", "iii", "iv")):
                    if flavor == "ann":
                        hits.iff(concl[k], xform[k], f"thm.{part}", **V)
                        hits.implies(bform[k], concl[k], f"cor.{part}", **V)
                    else:
                        hits.iff(concl[k], bform[k], f"thm.{part}", **V)
                        hits.iff(xform[k], bform[k], f"fact.{part}_x_and_bc_forms_agree", **V)
                right = [a1x1, x1a1, a1x1, x1a1]
                left = [a2x2, x2a2, x2a2, a2x2]
                for k in range(4):
                    tk = t[k]
                    hits.require(tk == add(m(tk, right[k]), m(left[k], tk)), f"residual.tau{k + 1}", **V)
            return (hi - lo) * len(certs) * len(lab.Y)

        def no_y(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
            T, m = lab.T, lab.m
            A2, B2, C2, X2 = (v[None, :] for v in (certs.a, certs.b, certs.c, certs.x))
            a2b2 = m(A2, B2)
            for i in range(lo, hi):
                a1, b1, c1, x1 = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
                V = dict(a1=a1, b1=b1, c1=c1, x1=x1, a2=A2, b2=B2, c2=C2, x2=X2)
                c1a1 = m(c1, a1)
                s1 = m(x1, a1) == m(A2, X2)
                s3 = T.in_right[b1, a2b2] & T.in_left[C2, c1a1]
                if flavor == "ann":
                    hits.implies(s3, s1, "cor.x1a1_equals_a2x2", **V)
                else:
                    s2 = ((T.right_class[a2b2] == T.right_class[b1])
                          & (T.left_class[c1a1] == T.left_class[C2]))
                    s4 = T.in_right[a2b2, b1] & T.in_left[c1a1, C2]
                    hits.iff(s1, s2, "cor.i_iff_ii", **V)
                    hits.iff(s1, s3, "cor.i_iff_iii", **V)
                    hits.iff(s1, s4, "cor.i_iff_iv", **V)
            return (hi - lo) * len(certs)

        def masks(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
            T, m = lab.T, lab.m
            z = T.kills_left
            for i in range(lo, hi):
                a, b, c, x = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
                V = dict(a=a, b=b, c=c, x=x)
                if flavor == "ann":
                    hits.require((z[m(a, x)] == z[c]).all(), "proof.right_ann_ax_equals_right_ann_c", **V)
                    hits.require((z[:, m(x, a)] == z[:, b]).all(), "proof.left_ann_xa_equals_left_ann_b",
                                 **V)
                else:
                    hits.require(T.right_class[b] == T.right_class[x], "fact.bS_equals_xS", **V)
                    hits.require(T.left_class[c] == T.left_class[x], "fact.Sc_equals_Sx", **V)
            return hi - lo

        return [Phase("pairs", len(certs), pairs),
                Phase("pairs_unit_y", len(certs), no_y),
                Phase("single", len(certs), masks)]

    return build


register("variants_ann", "four intertwining variants for ann-(b,c)-inverses")(_variants("ann"))
register("variants_bc", "four intertwining variants for (b,c)-inverses")(_variants("bc"))


# -- Drazin --------------------------------------------------------------------

@register("drazin_ann_equivalence",
          "Drazin inverse and index agree with the ann-(a^m,a^m) and (a^m,a^m) sweeps",
          notes=("Drazin index counts positive exponents only; invertible elements get 1",))
def _drazin_ann(lab: Lab) -> list[Phase]:
    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv, T, m = lab.inv, lab.T, lab.m
        n = lab.n
        for a in range(lo, hi):
            pw = np.empty(n + 1, dtype=np.int64)
            pw[0] = a
            for k in range(1, n + 1):
                pw[k] = T.mul[pw[k - 1], a]
            d, ind = int(inv.drazin[a]), int(inv.drazin_index[a])
            for kind, table in (("cor.ann", inv.ann), ("lemma.bc", inv.bc)):
                w = table[a, pw, pw]
                found = np.flatnonzero(w >= 0)
                hits.require((len(found) > 0) == (d >= 0), f"{kind}.existence", a=a, x=d)
                if len(found) and d >= 0:
                    hits.require(w[found[0]] == d, f"{kind}.witness", a=a, x=d)
                    hits.require(found[0] + 1 == ind, f"{kind}.least_m_is_index", a=a, x=d,
                                 raw={"m": int(found[0]) + 1, "index": ind})
                # every such inverse commutes with a, hence is the Drazin inverse
                hits.require(w[found] == d, f"{kind}.every_m_gives_drazin", a=a,
                             raw={"m": [int(f) + 1 for f in found]})
            if d >= 0:
                p = int(pw[ind - 1])
                V = dict(a=a, x=d, power=p)
                hits.require(T.inc_left[p, d], "proof.left_ann_of_power", **V)
                hits.require(T.inc_right[p, d], "proof.right_ann_of_power", **V)
                hits.require((m(d, d, a) == d) & (m(a, d) == m(d, a)) & (m(pw[ind], d) == p),
                             "def.drazin_equations", **V)
        return hi - lo

    return [Phase("elements", lab.n, run)]


# -- absorption and reverse order ---------------------------------------------

@register("absorption", "x1 + x2 = x1(a1+a2)x2 = x2(a1+a2)x1 and its lemmas")
def _absorption(lab: Lab) -> list[Phase]:
    inv = lab.inv
    certs = inv.ann_certs

    def lemma_b(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        m, T = lab.m, lab.T
        scanned = 0
        for b in range(lo, hi):
            left = _dedupe(inv.lann[:, b], (0, 2))         # (a1, x1)
            xr = np.unique(np.nonzero(inv.rann[:, b])[2])  # x2
            if not len(left) or not len(xr):
                continue
            a1, x1 = left[:, :1], left[:, 1:]
            x2 = xr[None, :]
            hits.require(T.right_kernel[lab.sub(m(x1, a1, x2), x2)], "lemma.shared_b_right_kernel",
                         b=b, a1=a1, x1=x1, x2=x2)
            scanned += len(left) * len(xr)
        return scanned

    def lemma_c(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        m, T = lab.m, lab.T
        scanned = 0
        for c in range(lo, hi):
            xl = np.unique(np.nonzero(inv.lann[:, :, c])[2])  # x1
            right = _dedupe(inv.rann[:, :, c], (0, 2))        # (a2, x2)
            if not len(xl) or not len(right):
                continue
            x1 = xl[:, None]
            a2, x2 = right[None, :, 0], right[None, :, 1]
            hits.require(T.left_kernel[lab.sub(m(x1, a2, x2), x1)], "lemma.shared_c_left_kernel",
                         c=c, x1=x1, a2=a2, x2=x2)
            scanned += len(xl) * len(right)
        return scanned

    def pairs(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        m, add = lab.m, lab.add
        A2, B2, C2, X2 = (v[None, :] for v in (certs.a, certs.b, certs.c, certs.x))
        scanned = 0
        for i in range(lo, hi):
            a1, b1, c1, x1 = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
            V = dict(a1=a1, b1=b1, c1=c1, x1=x1, a2=A2, b2=B2, c2=C2, x2=X2)
            sb = B2 == b1
            sc = C2 == c1
            hits.implies(sb, (m(x1, a1, X2) == X2) & (m(X2, A2, x1) == x1), "lemma.shared_b", **V)
            hits.implies(sc, (m(x1, A2, X2) == x1) & (m(X2, a1, x1) == X2), "lemma.shared_c", **V)
            s = add(x1, X2)
            a12 = add(a1, A2)
            hits.implies(sb & sc, (s == m(x1, a12, X2)) & (s == m(X2, a12, x1)), "thm.absorption", **V)
            scanned += int((sb | sc).sum())
        return scanned

    return [Phase("lemma_shared_b", lab.n, lemma_b),
            Phase("lemma_shared_c", lab.n, lemma_c),
            Phase("pairs", len(certs), pairs)]


def _reverse(flavor: str):
    def build(lab: Lab) -> list[Phase]:
        certs = lab.inv.ann_certs if flavor == "ann" else lab.inv.bc_certs
        table = lab.inv.ann if flavor == "ann" else lab.inv.bc

        def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
            m, T = lab.m, lab.T
            A2, B2, C2, X2 = (v[None, :] for v in (certs.a, certs.b, certs.c, certs.x))
            a2x2 = m(A2, X2)
            x2a2 = m(X2, A2)
            for i in range(lo, hi):
                a1, b1, c1, x1 = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
                V = dict(a1=a1, b1=b1, c1=c1, x1=x1, a2=A2, b2=B2, c2=C2, x2=X2)
                P = m(a1, A2)
                z = m(X2, x1)
                concl = table[P, B2, c1] == z
                hyp = (m(z, P, B2) == B2) & (m(c1, P, z) == c1)
                hits.iff(concl, hyp, "thm.reverse_order_iff", **V)
                x1a1 = m(x1, a1)
                br = [(x1a1 == m(a1, x1)) & (C2 == c1),
                      (x2a2 == a2x2) & (B2 == b1),
                      x1a1 == a2x2]
                for k, part in enumerate(("i", "ii", "iii")):
                    hits.implies(br[k], concl, f"suff.{part}", **V)
                rc, lc = T.right_class, T.left_class
                c1a1 = m(c1, a1)
                a2b2 = m(A2, B2)
                if flavor == "ann":
                    hits.implies(T.in_right[b1, a2b2] & T.in_left[C2, c1a1], br[2],
                                 "suff.iii_from_memberships", **V)
                else:
                    restated = [
                        (rc[m(a1, b1)] == rc[b1]) & (lc[c1a1] == lc[c1]) & (C2 == c1),
                        (rc[a2b2] == rc[B2]) & (lc[m(C2, A2)] == lc[C2]) & (B2 == b1),
                        (rc[a2b2] == rc[b1]) & (lc[c1a1] == lc[C2]),
                    ]
                    for k, part in enumerate(("i", "ii", "iii")):
                        hits.iff(br[k], restated[k], f"restated.{part}", **V)
            return (hi - lo) * len(certs)

        return [Phase("pairs", len(certs), run)]

    return build


register("reverse_order_ann", "reverse order law for ann-(b,c)-inverses")(_reverse("ann"))
register("reverse_order_bc", "reverse order law for (b,c)-inverses")(_reverse("bc"))


# -- Cline's formula -----------------------------------------------------------

def _certs_of(table: np.ndarray, p: int):
    bs, cs = np.nonzero(table[p] >= 0)
    return bs, cs, table[p][bs, cs]


@register("cline", "Cline-type transport from a1a2 to a2a1",
          notes=("exponent n ranges over 1..cline_max_power",))
def _cline(lab: Lab) -> list[Phase]:
    n = lab.n

    def transport(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv, T, m = lab.inv, lab.T, lab.m
        scanned = 0
        for a1 in range(lo, hi):
            for a2 in range(n):
                p1, q1 = int(T.mul[a1, a2]), int(T.mul[a2, a1])
                for k in range(1, lab.cline_max_power + 1):
                    pk, qk = lab.pow(p1, k), lab.pow(q1, k)
                    bs, cs, x = _certs_of(inv.ann, lab.pow(p1, k + 1))
                    if not len(x):
                        continue
                    V = dict(a1=a1, a2=a2, b=bs, c=cs, x=x)
                    raw = {"n": k}
                    w = m(a2, x, a1)
                    B = m(a2, bs)
                    C = m(cs, a1)
                    ok = ((m(w, qk, w) == w) & (m(w, qk, B) == B) & (m(C, qk, w) == C)
                          & T.inc_left[B, w] & T.inc_right[C, w])
                    hits.require(ok, "thm.transported_conditions", raw, **V)
                    hits.require(inv.ann[qk, B, C] == w, "thm.solver_agrees", raw, **V)
                    hits.implies(m(x, pk) == m(pk, x), m(w, qk) == m(qk, w), "prop.i_commuting", raw, **V)
                    hits.implies(T.bicomm[p1, x], T.bicomm[q1, w], "prop.ii_bicommutant", raw, **V)
                    scanned += len(x)
        return scanned

    def mu_nu(flavor: str):
        def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
            inv, T, m = lab.inv, lab.T, lab.m
            table = inv.ann if flavor == "ann" else inv.bc
            pre = "cor" if flavor == "ann" else "thm_semigroup"
            U = lab.Y
            scanned = 0
            for a1 in range(lo, hi):
                for a2 in range(n):
                    p, q = int(T.mul[a1, a2]), int(T.mul[a2, a1])
                    bs, cs, x = _certs_of(table, p)
                    if not len(x):
                        continue
                    V = dict(a1=a1, a2=a2, b=bs, c=cs, x=x)
                    comm = m(x, p) == m(p, x)
                    w2 = m(a2, x, x, a1)
                    if flavor == "ann":
                        hits.implies(comm, inv.ann[m(p, p), bs, cs] == m(x, x), "cor.square", **V)
                        hits.implies(comm, inv.ann[q, m(a2, bs), m(cs, a1)] == w2,
                                     "cor.commuting_transport", **V)
                    else:
                        d = bs == cs
                        dd = m(a2, bs, a1)
                        hits.implies(comm & d, inv.bc[q, dd, dd] == w2, "thm_semigroup.d_case", **V)
                    bmu = m(bs[:, None], U[None, :])
                    nuc = m(U[None, :], cs[:, None])
                    hyp_mu = T.in_right[bmu, m(p, bs)[:, None]]
                    hyp_nu = T.in_left[nuc, m(cs, p)[:, None]]
                    G = hyp_mu[:, :, None] & hyp_nu[:, None, :]
                    Bg = m(a2, bmu)[:, :, None]
                    Cg = m(nuc, a1)[:, None, :]
                    W = dict(a1=a1, a2=a2, b=bs[:, None, None], c=cs[:, None, None],
                             x=x[:, None, None], mu=U[None, :, None], nu=U[None, None, :])
                    hits.implies(G, table[q, Bg, Cg] == w2[:, None, None], f"{pre}.mu_nu_transport", **W)
                    hits.implies(G, comm[:, None, None], f"{pre}.mu_nu_commutes", **W)
                    scanned += G.size
            return scanned
        return run

    def remark(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv, T, m = lab.inv, lab.T, lab.m
        scanned = 0
        for a1 in range(lo, hi):
            side = T.mul[T.mul[a1], a1]                   # [a] = a1 a a1
            for a2 in range(n):
                p = int(T.mul[a1, a2])
                bs, cs, x = _certs_of(inv.bc, p)
                keep = (bs == cs) & (m(x, p) == m(p, x))
                d, x = bs[keep], x[keep]
                if not len(d):
                    continue
                a3 = np.flatnonzero(side == side[a2])[None, :]
                q3 = m(a3, a1)
                w = m(a3, x[:, None], x[:, None], a1)
                dd = m(a3, d[:, None], a1)
                V = dict(a1=a1, a2=a2, a3=a3, d=d[:, None], x=x[:, None])
                hits.require(inv.bc[q3, dd, dd] == w, "remark.a3_transport", **V)
                hits.require(m(w, q3) == m(q3, w), "remark.commutes", **V)
                scanned += w.size
        return scanned

    def index(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv, T, m = lab.inv, lab.T, lab.m
        dz, ind = inv.drazin, inv.drazin_index
        ar = T.arange
        for a1 in range(lo, hi):
            p = T.mul[a1]
            q = T.mul[:, a1]
            ip, iq = ind[p], ind[q]
            both = (ip > 0) & (iq > 0)
            hits.implies(both, np.abs(ip - iq) <= 1, "drazin.index_bound", a1=a1, a2=ar)
            hits.implies(dz[p] >= 0, dz[q] == m(ar, dz[p], dz[p], a1), "drazin.cline_formula",
                         a1=a1, a2=ar)
            for a2 in np.flatnonzero(dz[p] >= 0).tolist():
                k = int(ip[a2])
                qq = int(q[a2])
                top = lab.pow(qq, k + 1)
                w = m(a2, dz[p[a2]], dz[p[a2]], a1)
                hits.require((inv.bc[qq, top, top] == w) & (iq[a2] <= k + 1),
                             "drazin.power_transport", a1=a1, a2=a2, raw={"k": k})
        return (hi - lo) * n

    return [Phase("transport", n, transport),
            Phase("corollary_mu_nu", n, mu_nu("ann")),
            Phase("semigroup_mu_nu", n, mu_nu("bc")),
            Phase("remark_a3", n, remark),
            Phase("drazin_index", n, index)]


# -- definitions and the Moore-Penrose correspondence -------------------------

@register("definition_forms",
          "sandwich and membership forms of (b,c)-invertibility agree; along-d is the (d,d)-inverse")
def _definition_forms(lab: Lab) -> list[Phase]:
    T = lab.T
    n = lab.n
    r1 = T.in_right1.astype(np.float64)
    l1 = T.in_left1.astype(np.float64)
    # [x, d]: xS^1 within dS^1, S^1x within S^1d
    within_r = (r1 @ (1.0 - r1).T) == 0
    within_l = (l1 @ (1.0 - l1).T) == 0

    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        inv, M = lab.inv, T.mul
        ar = T.arange
        b, c = ar[:, None], ar[None, :]
        for a in range(lo, hi):
            bc = inv.bc[a]
            hits.require(inv.bc_sandwich[a] == bc, "def.sandwich_form_agrees", a=a, b=b, c=c)
            hits.require(inv.bc_unit[a] == bc, "def.unit_form_agrees", a=a, b=b, c=c)
            has = bc >= 0
            hits.implies(has, inv.ann[a] == bc, "def.bc_inverse_is_ann_inverse", a=a, b=b, c=c)
            for name, w in (("bc", bc), ("ann", inv.ann[a])):
                safe = np.where(w >= 0, w, 0)
                hits.implies(w >= 0, M[M[safe, a], safe] == safe, f"def.{name}_outer", a=a, b=b, c=c)
            # inverse along d, literal conditions
            ok = ((M[M[:, a]] == ar[None, :])          # [x, d]: x a d == d
                  & (M[M[:, a]].T == ar[None, :])      # [x, d]: d a x == d
                  & within_r & within_l)
            along = np.where(ok.any(axis=0), ok.argmax(axis=0), -1)
            hits.require(ok.sum(axis=0) <= 1, "def.along_unique", a=a, d=ar)
            hits.require(along == bc[ar, ar], "def.along_is_dd_inverse", a=a, d=ar)
        return (hi - lo) * n * n

    return [Phase("elements", n, run)]


@register("facts", "membership and annihilator facts for (b,c)- and ann-(b,c)-inverses")
def _facts(lab: Lab) -> list[Phase]:
    def certs_phase(flavor: str):
        certs = lab.inv.bc_certs if flavor == "bc" else lab.inv.ann_certs

        def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
            T = lab.T
            z = T.kills_left
            for i in range(lo, hi):
                a, b, c, x = (int(certs.a[i]), int(certs.b[i]), int(certs.c[i]), int(certs.x[i]))
                V = dict(a=a, b=b, c=c, x=x)
                if flavor == "bc":
                    hits.require(T.right_class[b] == T.right_class[x], "i.bS_equals_xS", **V)
                    hits.require(T.left_class[c] == T.left_class[x], "i.Sc_equals_Sx", **V)
                else:
                    hits.require((z[:, x] == z[:, b]).all(), "ii.left_ann_x_equals_left_ann_b", **V)
                    hits.require((z[x] == z[c]).all(), "ii.right_ann_x_equals_right_ann_c", **V)
            return hi - lo
        return Phase(f"{flavor}_certificates", len(certs), run)

    def outer(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        T, m = lab.T, lab.m
        t = T.arange[None, :]
        scanned = 0
        for a in range(lo, hi):
            xs = np.flatnonzero(m(T.arange, a, T.arange) == T.arange)[:, None]
            V = dict(a=a, x=xs, t=t)
            hits.iff(T.in_right[xs, t], m(xs, a, t) == t, "iii.t_in_xS", **V)
            hits.iff(T.in_left[xs, t], m(t, a, xs) == t, "iii.t_in_Sx", **V)
            ax, xa = m(a, xs), m(xs, a)
            hits.iff(T.in_right[ax, t], m(ax, t) == t, "iii.t_in_axS", **V)
            hits.iff(T.in_left[xa, t], m(t, xa) == t, "iii.t_in_Sxa", **V)
            scanned += xs.size * lab.n
        return scanned

    return [certs_phase("bc"), certs_phase("ann"), Phase("outer_inverses", lab.n, outer)]


def _needs_star(lab: Lab) -> str | None:
    return None if lab.ring.star is not None else "ring has no involution"


@register("mp_correspondence", "Moore-Penrose inverse equals the ann-(a*,a*)- and (a*,a*)-inverse",
          applies=_needs_star)
def _mp(lab: Lab) -> list[Phase]:
    def run(lab: Lab, lo: int, hi: int, hits: Hits) -> int:
        T, inv = lab.T, lab.inv
        M = T.mul
        star = np.asarray(lab.ring.star)
        ar = T.arange
        for a in range(lo, hi):
            ax, xa = M[a], M[:, a]
            ok = ((M[ax, a] == a) & (M[xa, ar] == ar) & (star[ax] == ax) & (star[xa] == xa))
            sols = np.flatnonzero(ok)
            s = int(star[a])
            hits.require(len(sols) <= 1, "mp.unique", a=a)
            mp = int(sols[0]) if len(sols) else -1
            hits.require(inv.ann[a, s, s] == mp, "cor.mp_is_ann_inverse", a=a, a_star=s)
            hits.require(inv.bc[a, s, s] == mp, "lemma.mp_is_bc_inverse", a=a, a_star=s)
        return hi - lo

    return [Phase("elements", lab.n, run)]
