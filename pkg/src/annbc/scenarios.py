"""Self-contained reproductions of the worked examples, with expected values."""

from __future__ import annotations

from dataclasses import dataclass, field

from .inverses import ann_bc_inverse, sided_ann_inverses
from .ring import attach_involution, make_johnson_ring, make_matrix_ring, transpose_involution
from .sets import right_annihilator, tables


@dataclass
class Scenario:
    name: str
    checks: list[tuple[str, object, object]] = field(default_factory=list)

    def expect(self, what: str, got, want) -> None:
        self.checks.append((what, got, want))

    @property
    def ok(self) -> bool:
        return all(got == want for _, got, want in self.checks)

    def to_dict(self) -> dict:
        return {
            "scenario": self.name,
            "match": self.ok,
            "checks": [{"check": w, "got": g, "expected": e, "match": g == e}
                       for w, g, e in self.checks],
        }


def _rann_report(r, a, b, c) -> tuple[int | None, list[str], dict[str, bool]]:
    cert = ann_bc_inverse(r, a, b, c)
    sols = sided_ann_inverses(r, a, b, c, "rann")
    regular = {r.labels[x]: sols.is_regular(x) for x in sols}
    return cert, [r.labels[x] for x in sols], regular


def johnson_2_1() -> Scenario:
    r = make_johnson_ring()
    i = r.index
    a, b = i("e11+e22"), i("e11+e21")
    cert, rann, regular = _rann_report(r, a, b, b)
    s = Scenario("johnson-2.1")
    s.expect("ann inverse", cert and r.labels[cert.witness], "e11+e21")
    s.expect("rann solutions", rann, ["e11+e21", "e11+e21+e31"])
    s.expect("e11+e21+e31 regular", regular.get("e11+e21+e31"), True)
    s.expect("e11+e21+e31 differs from ann inverse",
             cert is not None and r.labels[cert.witness] != "e11+e21+e31", True)
    return s


def johnson_2_2() -> Scenario:
    r = make_johnson_ring()
    a = r.index("e22")
    cert, rann, regular = _rann_report(r, a, a, a)
    s = Scenario("johnson-2.2")
    s.expect("ann inverse", cert and r.labels[cert.witness], "e22")
    s.expect("e22+e31 is a rann solution", "e22+e31" in rann, True)
    s.expect("e22+e31 regular", regular.get("e22+e31"), False)
    return s


def mp_remark() -> Scenario:
    """In M2(Z2) with transpose, x = 1 solves x a a* = a* for a = e11 but
    (a*)° is not inside x°."""
    r = attach_involution(make_matrix_ring(2, 2), transpose_involution(2, 2))
    a = r.index("e11")
    s_a = r.conj(a)
    x = r.one
    s = Scenario("mp-remark")
    s.expect("x a a* = a*", r.prod(x, a, s_a) == s_a, True)
    s.expect("(a*)° inside x°", bool(tables(r).inc_right[s_a, x]), False)
    # every t with a* t = 0 but x t != 0 witnesses the failure; report the least label
    outside = sorted(r.labels[t] for t in right_annihilator(r, s_a)
                     if t not in right_annihilator(r, x))
    s.expect("witness", outside[0] if outside else None, "e21")
    s.expect("x is a lann-(a*,a*)-inverse", x in sided_ann_inverses(r, a, s_a, s_a, "lann"), False)
    return s


SCENARIOS = {"johnson-2.1": johnson_2_1, "johnson-2.2": johnson_2_2, "mp-remark": mp_remark}
