"""Command-line front end.

Exit codes: 0 success, 2 invalid input (bad flags, unknown label, ring that
fails its axioms), 3 no inverse found, 4 a theorem check failed or an example
did not match, 5 a budget skip under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import inverses as inv
from .lab.report import load_reports, markdown_summary, status_word, table_summary, write_reports
from .lab.search import TARGETS, search_counterexamples
from .lab.suite import SuiteConfig, run_suite, theorem_ids
from .ring import (FiniteRing, RingAxiomError, RingError, attach_involution, make_direct_product,
                   make_johnson_ring, make_matrix_ring, make_upper_triangular, make_zmod,
                   subring_closure, transpose_involution)
from .scenarios import SCENARIOS
from .sets import is_left_faithful, is_right_faithful

EXIT_OK, EXIT_INPUT, EXIT_NONE, EXIT_FAIL, EXIT_BUDGET = 0, 2, 3, 4, 5


class UsageError(Exception):
    """Bad input detected after argument parsing; maps to exit code 2."""


def builtin_ring(name: str) -> FiniteRing | None:
    """Rings by short name: Z6, zmod6, M2Z2, M3Z2, UT2Z2, johnson."""
    key = name.strip()
    if key.lower() == "johnson":
        return make_johnson_ring()
    if m := re.fullmatch(r"(?:Z|zmod)(\d+)", key):
        return make_zmod(int(m[1]))
    if m := re.fullmatch(r"M(\d+)\(?Z(\d+)\)?", key):
        return make_matrix_ring(int(m[1]), int(m[2]))
    if m := re.fullmatch(r"UT(\d+)\(?Z(\d+)\)?", key):
        return make_upper_triangular(int(m[1]), int(m[2]))
    return None


def resolve_ring(ref: str) -> FiniteRing:
    """A ring file path, or a built-in name."""
    path = Path(ref)
    if path.is_file():
        try:
            return FiniteRing.load(path)
        except RingAxiomError as e:
            raise UsageError(f"{ref}: {e}") from e
        except (ValueError, KeyError, TypeError) as e:
            raise UsageError(f"{ref}: not a valid ring file ({e})") from e
    r = builtin_ring(ref)
    if r is None:
        raise UsageError(f"{ref}: no such file or built-in ring")
    return r


def element(r: FiniteRing, ref: str | None, flag: str) -> int:
    if ref is None:
        raise UsageError(f"--{flag} is required for this kind")
    try:
        return r.index(ref)
    except (RingError, ValueError, KeyError, IndexError) as e:
        raise UsageError(f"--{flag}: unknown element {ref!r} in {r.name}") from e


def summary(r: FiniteRing) -> str:
    parts = [f"{r.size} elements",
             "unital" if r.one is not None else "non-unital",
             "right-faithful" if is_right_faithful(r) else "not right-faithful",
             "left-faithful" if is_left_faithful(r) else "not left-faithful"]
    if r.star is not None:
        parts.append("with involution")
    return f"{r.name}: " + ", ".join(parts)


def _emit_ring(r: FiniteRing, out: str | None) -> None:
    if out:
        r.save(out)
        print(summary(r))
    else:
        sys.stdout.write(r.to_json())
        print(summary(r), file=sys.stderr)


def _parse_perm(r: FiniteRing, text: str) -> list[int]:
    if text == "identity":
        return list(range(r.size))
    if text == "transpose":
        m = re.fullmatch(r"M(\d+)\(Z(\d+)\)", r.name)
        if not m:
            raise UsageError(f"transpose needs a full matrix ring, got {r.name}")
        return transpose_involution(int(m[1]), int(m[2]))
    return [element(r, tok, "perm") for tok in text.split(",")]


# -- verbs -------------------------------------------------------------------

def cmd_ring_make(args) -> int:
    kind, rest = args.kind, args.params
    need = {"zmod": 1, "matrix": 2, "product": 2, "sub": 2, "star": 2}[kind]
    if len(rest) != need:
        raise UsageError(f"ring-make {kind} takes {need} argument(s)")
    try:
        if kind == "zmod":
            r = make_zmod(int(rest[0]))
        elif kind == "matrix":
            r = make_matrix_ring(int(rest[0]), int(rest[1]))
        elif kind == "product":
            r = make_direct_product(resolve_ring(rest[0]), resolve_ring(rest[1]))
        elif kind == "sub":
            amb = resolve_ring(rest[0])
            gens = [element(amb, g, "generator") for g in rest[1].split(",") if g]
            r = subring_closure(amb, gens)
        else:
            base = resolve_ring(rest[0])
            r = attach_involution(base, _parse_perm(base, rest[1]))
    except ValueError as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError(str(e)) from e
    _emit_ring(r, args.out)
    return EXIT_OK


def cmd_ring_save(args) -> int:
    r = resolve_ring(args.source)
    r.save(args.dest)
    print(summary(r))
    return EXIT_OK


def cmd_ring_load(args) -> int:
    r = resolve_ring(args.file)
    if args.json:
        sys.stdout.write(r.to_json())
    else:
        print(summary(r))
    return EXIT_OK


def cmd_inv(args) -> int:
    r = resolve_ring(args.ring)
    a = element(r, args.a, "a")
    kind = args.kind
    try:
        if kind in ("bc", "ann", "lann", "rann"):
            b, c = element(r, args.b, "b"), element(r, args.c, "c")
            if kind in ("lann", "rann"):
                sols = inv.sided_ann_inverses(r, a, b, c, kind)
                print(json.dumps(sols.to_dict(r), ensure_ascii=False))
                return EXIT_OK if len(sols) else EXIT_NONE
            solve = inv.bc_inverse if kind == "bc" else inv.ann_bc_inverse
            cert = solve(r, a, b, c)
        elif kind == "along":
            cert = inv.inverse_along(r, a, element(r, args.d, "d"))
        elif kind == "mp":
            cert = inv.moore_penrose(r, a)
        elif kind == "core":
            cert = inv.core_inverse(r, a)
        else:
            cert = inv.drazin(r, a)
    except inv.PreconditionError as e:
        raise UsageError(str(e)) from e
    except inv.TheoremViolation as e:
        print(json.dumps(e.record, ensure_ascii=False))
        return EXIT_FAIL
    if cert is None:
        print("none")
        return EXIT_NONE
    print(json.dumps(cert.to_dict(r), ensure_ascii=False))
    return EXIT_OK


def _theorem_filter(text: str) -> list[str]:
    if text == "all":
        return theorem_ids()
    if text == "none":
        return []
    ids = [t.strip() for t in text.split(",") if t.strip()]
    unknown = sorted(set(ids) - set(theorem_ids()))
    if unknown:
        raise UsageError(f"unknown theorem ids: {', '.join(unknown)}; "
                         f"known: {', '.join(theorem_ids())}")
    return ids


def _print_reports(reports, fmt: str) -> None:
    if fmt == "table":
        sys.stdout.write(table_summary(reports))
    elif fmt == "markdown":
        sys.stdout.write(markdown_summary(reports))
    else:
        for rep in reports:
            print(json.dumps(rep.to_dict(), ensure_ascii=False, separators=(",", ":")))


def _exit_for(reports, strict: bool) -> int:
    if any(status_word(r) == "fail" for r in reports):
        return EXIT_FAIL
    if strict and any("budget" in r.status for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args) -> int:
    theorems = _theorem_filter(args.theorems)
    rings = [resolve_ring(ref) for ref in args.rings]
    if args.budget is not None and args.budget <= 0:
        raise UsageError("--budget must be positive")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if not theorems or not rings:
        reports = []
    else:
        cfg = SuiteConfig(rings, theorems, workers=args.jobs,
                          include_formal_identity=not args.no_formal_identity,
                          cline_max_power=args.cline_max_power)
        if args.budget is not None:
            cfg.budget = args.budget
        reports = run_suite(cfg)
    if args.out:
        write_reports(reports, args.out)
    _print_reports(reports, args.format)
    return _exit_for(reports, args.strict)


def cmd_examples(args) -> int:
    sc = SCENARIOS[args.name]()
    if args.format == "table":
        for check, got, want in sc.checks:
            mark = "ok" if got == want else "MISMATCH"
            print(f"{check:40} {str(got):30} {str(want):30} {mark}")
    else:
        print(json.dumps(sc.to_dict(), ensure_ascii=False))
    return EXIT_OK if sc.ok else EXIT_FAIL


def cmd_report(args) -> int:
    if not Path(args.dir).is_dir():
        raise UsageError(f"{args.dir}: not a directory")
    reports = load_reports(args.dir)
    _print_reports(reports, args.format)
    return _exit_for(reports, args.strict)


def cmd_search(args) -> int:
    r = resolve_ring(args.ring)
    rep = search_counterexamples(r, args.target, cap=args.cap)
    print(json.dumps(rep.to_dict(), ensure_ascii=False))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="annbc", description="Generalized inverses in finite rings.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("ring-make", help="construct a ring")
    s.add_argument("kind", choices=["zmod", "matrix", "product", "sub", "star"])
    s.add_argument("params", nargs="*",
                   help="zmod N | matrix K N | product F1 F2 | sub AMBIENT g1,g2 | star FILE PERM")
    s.add_argument("--out", help="write the ring JSON here instead of stdout")
    s.set_defaults(fn=cmd_ring_make)

    s = sub.add_parser("ring-save", help="write a ring (file or built-in name) as canonical JSON")
    s.add_argument("source")
    s.add_argument("dest")
    s.set_defaults(fn=cmd_ring_save)

    s = sub.add_parser("ring-load", help="load and validate a ring file")
    s.add_argument("file")
    s.add_argument("--json", action="store_true", help="print canonical JSON")
    s.set_defaults(fn=cmd_ring_load)

    s = sub.add_parser("inv", help="compute an inverse")
    s.add_argument("--ring", required=True)
    s.add_argument("--kind", required=True,
                   choices=["bc", "ann", "lann", "rann", "mp", "drazin", "core", "along"])
    for flag in ("a", "b", "c", "d"):
        s.add_argument(f"--{flag}")
    s.set_defaults(fn=cmd_inv)

    s = sub.add_parser("verify", help="run theorem checkers")
    s.add_argument("--rings", nargs="*", default=[])
    s.add_argument("--theorems", default="all", help="all, none, or comma-separated ids")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=int)
    s.add_argument("--out", help="directory for one JSON report per (theorem, ring)")
    s.add_argument("--strict", action="store_true", help="exit 5 when a budget skip occurs")
    s.add_argument("--format", choices=["json", "table", "markdown"], default="json")
    s.add_argument("--no-formal-identity", action="store_true",
                   help="let y range over R only, without a formal 1")
    s.add_argument("--cline-max-power", type=int, default=3)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("examples", help="reproduce a worked example")
    s.add_argument("name", choices=sorted(SCENARIOS))
    s.add_argument("--format", choices=["json", "table"], default="json")
    s.set_defaults(fn=cmd_examples)

    s = sub.add_parser("report", help="summarize a directory of reports")
    s.add_argument("dir")
    s.add_argument("--format", choices=["json", "table", "markdown"], default="json")
    s.add_argument("--strict", action="store_true")
    s.set_defaults(fn=cmd_report)

    s = sub.add_parser("search", help="exploratory counterexample search")
    s.add_argument("--ring", required=True)
    s.add_argument("--target", required=True, choices=list(TARGETS))
    s.add_argument("--cap", type=int, default=100)
    s.set_defaults(fn=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except RingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
