"""Command-line surface.

    bei gen <spec>
    bei primes   --graph <spec> [--json]
    bei dim      --graph <spec>
    bei classify --graph <spec> [--json]
    bei hilbert  --graph <spec> --method closed|groebner [--json]
    bei verify   [--suite <name>] [--nmax K] [--budget N] [--json]

Graph specs: line:N, cycle:N, complete:N, star:K, tree1:N, tree2:N,
file:PATH.  Text mode prints one result per line; --json switches to the
documented machine format.  Exit codes: 0 ok, 1 verification failure,
2 usage error, 3 Groebner budget exceeded.  BEI_GB_BUDGET overrides the
default S-pair budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import classify
from .cutsets import EnumerationCapError, dimension, minimal_primes
from .graphs import GraphError, graph_from_spec
from .groebner import BudgetExceededError
from .ideals import binomial_edge_ideal, hilbert_series_ideal
from .series import SeriesError
from .verify import (
    SUITE_NAMES,
    VerifyConfig,
    any_budget_failure,
    closed_form_series,
    reports_to_json_dict,
    run_all,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bei",
                                     description="binomial edge ideal toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="print the edge list of a family graph")
    gen.add_argument("spec")

    for name, desc in (("primes", "minimal primes from cut sets"),
                       ("dim", "Krull dimension of the quotient"),
                       ("classify", "approximately Cohen-Macaulay verdict"),
                       ("hilbert", "Hilbert series, closed form or Groebner")):
        p = sub.add_parser(name, help=desc)
        p.add_argument("--graph", required=True, metavar="SPEC")
        if name != "dim":
            p.add_argument("--json", action="store_true")
        if name == "hilbert":
            p.add_argument("--method", choices=("closed", "groebner"), required=True)

    ver = sub.add_parser("verify", help="run the cross-validation suites")
    ver.add_argument("--suite", choices=SUITE_NAMES)
    ver.add_argument("--nmax", type=int)
    ver.add_argument("--budget", type=int)
    ver.add_argument("--json", action="store_true")
    return parser


def _default_budget() -> int | None:
    raw = os.environ.get("BEI_GB_BUDGET")
    return int(raw) if raw else None


def _cmd_gen(args) -> int:
    g = graph_from_spec(args.spec)
    for i, j in g.sorted_edges():
        print(i, j)
    return 0


def _cmd_primes(args) -> int:
    g = graph_from_spec(args.graph)
    primes = minimal_primes(g)
    if args.json:
        print(json.dumps([pc.to_json_dict() for pc in primes]))
    else:
        for pc in primes:
            cut = "{" + ",".join(map(str, pc.cut_set)) + "}"
            comps = " ".join("{" + ",".join(map(str, c)) + "}" for c in pc.components)
            print(f"T={cut} components=[{comps}] height={pc.height} dim={pc.dim}")
    return 0


def _cmd_dim(args) -> int:
    print(dimension(graph_from_spec(args.graph)))
    return 0


def _cmd_classify(args) -> int:
    verdict = classify(graph_from_spec(args.graph))
    if args.json:
        print(json.dumps(verdict.to_json_dict()))
        return 0
    detail = verdict.reason
    if verdict.witness is not None and verdict.ring_dimension is not None:
        detail += f"; witness dim gap {verdict.ring_dimension} vs {verdict.witness.dim}"
    if verdict.necessary_condition is not None:
        detail += f"; necessary condition {'holds' if verdict.necessary_condition else 'fails'}"
    print(f"{verdict.status} ({detail})")
    return 0


def _cmd_hilbert(args) -> int:
    g = graph_from_spec(args.graph)
    if args.method == "closed":
        series = closed_form_series(g)
    else:
        series = hilbert_series_ideal(binomial_edge_ideal(g), budget=_default_budget())
    print(json.dumps(series.to_json_dict()) if args.json else series.text())
    return 0


def _cmd_verify(args) -> int:
    config = VerifyConfig(budget=args.budget if args.budget is not None
                          else _default_budget())
    if args.nmax is not None:
        config = config.clamp(args.nmax)
    suites = (args.suite,) if args.suite else SUITE_NAMES
    reports, passed = run_all(config, suites=suites)
    if args.json:
        print(json.dumps(reports_to_json_dict(reports, passed)))
    else:
        for report in reports:
            for case in report.cases:
                flag = "PASS" if case.passed else "FAIL"
                extra = f" [{case.note}]" if case.note else ""
                info = " (informative)" if not case.gating else ""
                print(f"{flag} {report.suite}: {case.instance}{info} ({case.ms:.0f} ms){extra}")
            print(f"{'PASS' if report.passed else 'FAIL'} suite {report.suite}")
        print(f"{'PASS' if passed else 'FAIL'} overall")
    if any_budget_failure(reports):
        return 3
    return 0 if passed else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {"gen": _cmd_gen, "primes": _cmd_primes, "dim": _cmd_dim,
                "classify": _cmd_classify, "hilbert": _cmd_hilbert,
                "verify": _cmd_verify}
    try:
        return handlers[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, SeriesError, EnumerationCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
