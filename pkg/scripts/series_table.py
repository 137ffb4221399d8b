#!/usr/bin/env python3
"""Print closed-form Hilbert series and multiplicities for the graph
families, optionally cross-checking small instances against the
Groebner oracle.

Usage:
    python scripts/series_table.py [--max-n N] [--check] [--check-max-n K]
"""

from __future__ import annotations

import argparse
import time

from bei import (
    binomial_edge_ideal,
    graph_from_spec,
    hilbert_series_ideal,
    multiplicity,
    series_complete,
    series_cycle,
    series_line,
    series_tree,
)

FAMILIES = [
    ("line", 2, series_line, lambda n: n + 1),
    ("complete", 1, series_complete, lambda n: n + 1),
    ("cycle", 3, series_cycle, lambda n: n + 1),
    ("tree1", 4, lambda n: series_tree(1, n), lambda n: n + 2),
    ("tree2", 6, lambda n: series_tree(2, n), lambda n: n + 2),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--check", action="store_true",
                        help="recompute small instances with the Groebner kernel")
    parser.add_argument("--check-max-n", type=int, default=6)
    args = parser.parse_args()

    for family, base, closed, dim_of in FAMILIES:
        print(f"== {family} ==")
        for n in range(base, args.max_n + 1):
            h = closed(n)
            e = multiplicity(h, dim_of(n))
            line = f"  n={n:<3} dim={dim_of(n):<4} e={e:<5} {h.text()}"
            if args.check and n <= args.check_max_n:
                t0 = time.perf_counter()
                oracle = hilbert_series_ideal(
                    binomial_edge_ideal(graph_from_spec(f"{family}:{n}")))
                verdict = "ok" if oracle == h else f"MISMATCH {oracle.text()}"
                line += f"   [oracle {verdict}, {time.perf_counter() - t0:.2f}s]"
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
