"""``qflag`` command line.

Exit codes: 0 every check passed, 1 a mathematical check failed,
2 usage or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from qflag.charhilb import (
    UnsupportedWeightError,
    big_cell_hilbert_series,
    flag_hilbert_series,
    gkdim,
    gorenstein_certificate,
    reciprocity_report,
)
from qflag.posets import check_wonderful, dual, interval_below
from qflag.qgrass import quantum_grassmannian, schubert_quotient_dimension, subset_label, verify_asl_axioms
from qflag.rootsys import RootSystemError, build_root_datum, parse_cartan_type
from qflag.verify import CLAIMS, run_all
from qflag.weylgroup import MAX_FULL_GROUP_RANK, BudgetError, build_minuscule_poset, symmetric_group_bruhat

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    ok: bool
    lines: list[str]
    payload: dict[str, Any]


def exact(obj: Any) -> Any:
    """Recursively turn numbers into exact strings; booleans and None stay as they are."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [exact(v) for v in obj]
    return obj


def _datum(text: str):
    letter, rank = parse_cartan_type(text)
    return build_root_datum(letter, rank)


def _mark(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# -- commands --------------------------------------------------------------

def cmd_roots(args) -> Report:
    datum = _datum(args.type)
    roots = [list(a.coords) for a in datum.positive_roots]
    mins = datum.minuscule_weights()
    lines = [
        f"{datum.name}: rank {datum.rank}, {len(roots)} positive roots",
        f"rho = {list(map(str, datum.rho.coords))} (fundamental coordinates)",
        f"highest root = {list(datum.highest_root.coords)} (simple-root coordinates)",
        f"minuscule indices: {mins if mins else 'none'}",
        "positive roots:",
    ] + [f"  {r}" for r in roots]
    payload = {"type": datum.name, "rank": datum.rank, "positive_roots": roots,
               "num_positive_roots": len(roots), "rho": list(datum.rho.coords),
               "highest_root": list(datum.highest_root.coords), "minuscule": mins,
               "cartan": [list(r) for r in datum.cartan]}
    return Report(True, lines, payload)


def cmd_wonderful(args) -> Report:
    if args.symmetric_group is not None:
        if args.type is not None or args.s is not None:
            raise UsageError("--symmetric-group takes no type or --s")
        n = args.symmetric_group
        if n < 2:
            raise UsageError("--symmetric-group needs n >= 2")
        if n - 1 > MAX_FULL_GROUP_RANK:
            raise BudgetError(f"S_{n} exceeds the full-group budget (n <= {MAX_FULL_GROUP_RANK + 1})")
        P = symmetric_group_bruhat(n)
        rep = check_wonderful(P)
        words = [P.labels[i].word_str() for i in rep.witness] if rep.witness else None
        verdict = "wonderful" if rep.is_wonderful else "not wonderful"
        lines = [f"Bruhat order of S_{n} ({P.size} elements): {verdict}"]
        if words:
            lines.append("witness z, x, y, u = " + ", ".join(words))
        payload = {"group": f"S{n}", "size": P.size, "is_wonderful": rep.is_wonderful, "witness": words}
        # the mathematical expectation is failure for n >= 4
        return Report(rep.is_wonderful, lines, payload)

    if args.type is None or args.s is None:
        raise UsageError("wonderful needs a Cartan type and --s, or --symmetric-group")
    datum = _datum(args.type)
    poset = build_minuscule_poset(datum, args.s)
    P = poset.to_finite_poset()
    targets = [("W^S", P), ("dual of W^S", dual(P))]
    if args.intervals:
        for w in range(P.size):
            sub = interval_below(P, w)
            targets += [(f"interval <= {w}", sub), (f"dual interval <= {w}", dual(sub))]
    results = []
    for name, Q in targets:
        rep = check_wonderful(Q)
        results.append({"poset": name, "size": Q.size, **rep.to_json()})
    ok = all(r["is_wonderful"] for r in results)
    failing = [r["poset"] for r in results if not r["is_wonderful"]]
    lines = [f"[{CLAIMS[1]}] {datum.name}/omega_{args.s}: {P.size} elements, "
             f"{len(targets)} posets checked: {_mark(ok)}"]
    lines += [f"  not wonderful: {name}" for name in failing]
    payload = {"type": datum.name, "s": args.s, "size": P.size, "results": results, "passed": ok}
    return Report(ok, lines, payload)


def _series_block(label: str, H) -> tuple[list[str], dict, bool]:
    cert = gorenstein_certificate(H)
    lines = [f"{label}: {H}", f"  gkdim = {gkdim(H)}",
             f"  [{CLAIMS[4]}] " + (f"H(1/t) = {cert.sign} * t^{cert.m} * H(t): PASS" if cert.holds else "FAIL")]
    return lines, {"series": H.to_json(), "text": str(H), "gkdim": gkdim(H), "gorenstein": cert.to_json()}, cert.holds


def cmd_hilbert(args) -> Report:
    datum = _datum(args.type)
    H = flag_hilbert_series(datum, args.s)
    lines, block, ok = _series_block(f"flag series {datum.name}/omega_{args.s}", H)
    payload: dict[str, Any] = {"type": datum.name, "s": args.s, "flag": block}
    if datum.type_letter in "ADE" and datum.is_minuscule(args.s):
        rec = reciprocity_report(datum, args.s)
        lines.append(f"  [{CLAIMS[5]}] r = {rec.r}, l(w^S) = {rec.length}: {_mark(rec.holds)}")
        payload["reciprocity"] = rec.to_json()
        ok = ok and rec.holds
    if args.big_cell:
        big = big_cell_hilbert_series(datum, args.s)
        more, bblock, bok = _series_block("big cell series", big)
        lines += more
        payload["big_cell"] = bblock
        ok = ok and bok
    if args.compare:
        text, sep, idx = args.compare.partition(":")
        if not sep:
            raise UsageError("--compare expects TYPE:S, e.g. D4:4")
        other_datum = _datum(text)
        try:
            other_s = int(idx)
        except ValueError:
            raise UsageError(f"bad weight index in --compare {args.compare!r}") from None
        other = flag_hilbert_series(other_datum, other_s)
        same = other == H and other.same_function(H)
        lines.append(f"[{CLAIMS[6]}] {other_datum.name}/omega_{other_s}: {other}: "
                     + ("equal" if same else "different"))
        payload["compare"] = {"type": other_datum.name, "s": other_s, "series": other.to_json(), "equal": same}
        ok = ok and same
    payload["passed"] = ok
    return Report(ok, lines, payload)


def cmd_asl(args) -> Report:
    m, n = args.grassmann
    if not 1 <= m < n:
        raise UsageError("--grassmann needs 1 <= m < n")
    rep = verify_asl_axioms(m, n, args.w, degree=args.degree)
    G = quantum_grassmannian(m, n)
    top = rep.top
    dims = []
    for d in range(args.degree + 1):
        std = len(G.standard_monomials(d, top))
        dim = schubert_quotient_dimension(m, n, top, d)
        dims.append({"degree": d, "dimension": dim, "standard_monomials": std, "equal": dim == std})
    dims_ok = all(x["equal"] for x in dims)
    ok = rep.passed and dims_ok
    where = f"G_q({m},{n})" + ("" if top == G.maximum else f" below [{subset_label(top)}]")
    lines = [f"[{CLAIMS[8]}] {where}, degree <= {args.degree}: {_mark(rep.passed)}"]
    for a in rep.axioms:
        extra = f" offending: {a.to_json()['offending']}" if a.offending else ""
        lines.append(f"  axiom {a.name}: {_mark(a.passed)} ({a.note}){extra}")
    lines.append("  dimensions: " + ", ".join(f"{x['dimension']}" for x in dims)
                 + f" vs standard monomials: {_mark(dims_ok)}")
    sign = {1: "+", -1: "-"}.get(rep.orientation, "none")
    lines.append(f"  [e_min][J] = q^(s((eps_J,eps_min) - (eps_min,eps_min))) [J][e_min] with s = {sign}")
    payload = rep.to_json()
    payload["dimensions"] = dims
    payload["passed"] = ok
    return Report(ok, lines, payload)


def cmd_verify_all(args) -> Report:
    results = run_all(args.max_rank)
    ok = all(r.passed for r in results)
    lines = []
    for c in range(1, 11):
        rs = [r for r in results if r.criterion == c]
        if not rs:
            continue
        npass = sum(r.passed for r in rs)
        lines.append(f"{c:>2}  {_mark(npass == len(rs))}  {npass}/{len(rs)}  {CLAIMS[c]}")
        lines += [f"      FAIL {r.name}: {r.detail}" for r in rs if not r.passed]
    nfail = sum(not r.passed for r in results)
    lines.append(f"{len(results)} checks, {nfail} failures")
    payload = {"max_rank": args.max_rank, "passed": ok, "failures": nfail,
               "results": [r.to_json() for r in results]}
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(exact({"schema": SCHEMA, "command": "verify-all", **payload}), fh, indent=2)
            fh.write("\n")
    return Report(ok, lines, payload)


# -- parser ----------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="qflag", description="Certify combinatorics of quantum minuscule flag manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="root datum summary")
    p.add_argument("type", help="Cartan type such as A3 or E7")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("wonderful", parents=[common], help="wonderfulness of W^S")
    p.add_argument("type", nargs="?")
    p.add_argument("--s", type=_positive)
    p.add_argument("--intervals", action="store_true", help="also check every lower interval and its dual")
    p.add_argument("--symmetric-group", type=_positive, metavar="N", help="full Bruhat order of S_N instead")
    p.set_defaults(func=cmd_wonderful)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series and Gorenstein certificate")
    p.add_argument("type")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--compare", metavar="TYPE:S")
    p.add_argument("--big-cell", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("asl", parents=[common], help="quantum ASL axioms for a Grassmannian")
    p.add_argument("--grassmann", type=_positive, nargs=2, metavar=("M", "N"), required=True)
    p.add_argument("--degree", type=_positive, default=2)
    p.add_argument("--w", help="Schubert quotient top, as a subset like 14 or 1,4, or a poset index")
    p.set_defaults(func=cmd_asl)

    p = sub.add_parser("verify-all", parents=[common], help="run the whole acceptance matrix")
    p.add_argument("--max-rank", type=_positive, default=7)
    p.add_argument("--json", metavar="PATH", help="also write machine-readable results here")
    p.set_defaults(func=cmd_verify_all)
    return parser


def _coerce_w(args) -> None:
    # a digit string shorter than m cannot be a subset, so read it as a poset index
    if getattr(args, "w", None) is not None and args.w.isdigit() and len(args.w) < args.grassmann[0]:
        args.w = int(args.w)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "asl":
        _coerce_w(args)
    func: Callable[[Any], Report] = args.func
    try:
        report = func(args)
    except BudgetError as exc:
        print(f"qflag: budget error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, RootSystemError, UnsupportedWeightError, ValueError, IndexError) as exc:
        print(f"qflag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "json":
        text = json.dumps(exact({"schema": SCHEMA, "command": args.command, **report.payload}), indent=2) + "\n"
    else:
        text = "\n".join(report.lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
