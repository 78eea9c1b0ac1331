"""Command-line entry point: ``lmdim <verb> ...``.

Exit codes: 0 success, 1 usage or input error, 2 rule not applicable,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path

from .errors import LmdError, RuleNotApplicable
from .families import build_family, parse_family
from .formulas import (
    beta_witness,
    family_closed_form,
    theorem3_corona_dimension,
    tree_corona_dimension,
    tree_profile,
)
from .graph import Graph, corona, read_edge_list, structural_invariants, write_edge_list
from .harness import SCOPES, run_sweep
from .localmetric import DEFAULT_CAP, local_metric_dimension

EXIT_OK, EXIT_USAGE, EXIT_RULE, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_source(text: str) -> Graph:
    """A graph from ``family:<spec>``, an edge-list file, or a bare family string."""
    if text.startswith("family:"):
        return build_family(text[len("family:"):])
    path = Path(text)
    if path.is_file():
        return read_edge_list(path)
    try:
        spec = parse_family(text)
    except LmdError:
        raise LmdError(f"cannot read graph source {text!r}: no such file or family") from None
    return build_family(spec)


def _family_text(text: str) -> str:
    return text[len("family:"):] if text.startswith("family:") else text


def _fmt_set(vs) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def cmd_dim(args) -> int:
    g = load_source(args.source)
    res = local_metric_dimension(g, enumerate_all=args.all_bases, cap=args.cap)
    print(f"dim_l = {res.value}, basis = {_fmt_set(res.witness)}")
    if args.all_bases:
        print(f"bases: {len(res.all_bases)}")
        for b in res.all_bases:
            print(f"  {_fmt_set(b)}")
    return EXIT_OK


def cmd_corona(args) -> int:
    g, h = load_source(args.g), load_source(args.h)
    mode = args.mode or "both"
    pred = oracle = None
    if mode in ("predict", "both"):
        pred = theorem3_corona_dimension(g, h, cap=args.cap)
    if mode in ("exact", "both"):
        oracle = local_metric_dimension(corona(g, h), cap=args.cap)
    if mode == "predict":
        print(f"predicted {pred.value}")
    elif mode == "exact":
        print(f"oracle {oracle.value}, basis = {_fmt_set(oracle.witness)}")
    else:
        verdict = "MATCH" if pred.value == oracle.value else "MISMATCH"
        print(f"predicted {pred.value}, oracle {oracle.value}, {verdict}")
    if pred is not None:
        print(f"rule {pred.rule}: " + "; ".join(pred.assumptions))
        if oracle is not None and pred.value != oracle.value:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_family(args) -> int:
    pred = family_closed_form(args.n, _family_text(args.source))
    print(f"predicted {pred.value} ({pred.rule})")
    return EXIT_OK


def cmd_delta_prime(args) -> int:
    h = load_source(args.source)
    inv = structural_invariants(h)
    best = None
    for x in inv.center:
        k, a = beta_witness(h, x)
        print(f"beta({x}) = {k}, A = {_fmt_set(a)}")
        best = k if best is None else min(best, k)
    print(f"delta' = {best}")
    return EXIT_OK


def cmd_tree(args) -> int:
    t = load_source(args.source)
    pred = tree_corona_dimension(t, args.n)
    prof = tree_profile(t)
    if prof is None:
        print(f"center = {_fmt_set(structural_invariants(t).center)} (bicentral)")
    else:
        print(f"center = {_fmt_set(prof.center)}, radius = {prof.radius}")
        for w in sorted(prof.heights):
            print(f"  branch {w}: h_w = {prof.heights[w]}, phi = {prof.phi[w]}")
        print(f"varsigma = {prof.varsigma}")
    print(f"predicted {pred.value} ({pred.rule})")
    return EXIT_OK


def cmd_verify(args) -> int:
    claims = None
    if args.claims is not None:
        claims = [c for c in args.claims.split(",") if c.strip()]
    report = run_sweep(args.scope, claims, seed=args.seed)
    if args.json:
        Path(args.json).write_text(report.to_json())
    sys.stdout.write(report.to_table(full=args.full))
    if not args.no_timestamp:
        print(f"generated {datetime.now(timezone.utc).isoformat(timespec='seconds')}")
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def cmd_build(args) -> int:
    g = build_family(_family_text(args.family))
    write_edge_list(g, args.out, comment=_family_text(args.family))
    print(f"wrote {args.out}: order {g.order}, size {g.size}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lmdim", description="Local metric dimension of corona products.")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="largest order searched exactly (cost is exponential)")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("dim", help="exact local metric dimension")
    s.add_argument("source")
    s.add_argument("--all-bases", action="store_true")
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("corona", help="predicted and/or exact dim_l of G corona H")
    s.add_argument("--g", required=True)
    s.add_argument("--h", required=True)
    m = s.add_mutually_exclusive_group()
    for flag in ("predict", "exact", "both"):
        m.add_argument(f"--{flag}", dest="mode", action="store_const", const=flag)
    s.set_defaults(func=cmd_corona)

    s = sub.add_parser("family", help="closed form for G corona <family> with |G| = n")
    s.add_argument("source")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("delta-prime", help="beta per center vertex and delta'")
    s.add_argument("source")
    s.set_defaults(func=cmd_delta_prime)

    s = sub.add_parser("tree", help="radius-3 tree profile and prediction")
    s.add_argument("source")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("verify", help="sweep every claim against the oracle")
    s.add_argument("--scope", choices=SCOPES, default="standard")
    s.add_argument("--claims", help="comma-separated claim ids or prefixes")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", metavar="PATH")
    s.add_argument("--full", action="store_true", help="list every entry, not only mismatches")
    s.add_argument("--no-timestamp", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("build", help="write a family as an edge-list file")
    s.add_argument("family")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_build)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except RuleNotApplicable as exc:
        print(f"rule not applicable: {exc}", file=sys.stderr)
        return EXIT_RULE
    except (LmdError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
