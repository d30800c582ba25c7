#!/usr/bin/env python3
"""Sweep the verification statements over the corpus and emit JSONL reports.

One report per line on stdout (or --out), then a summary line on stderr with
wall time.  Exit 1 if any report is a FAIL, 0 otherwise.

Examples:
    python scripts/run_corpus_sweep.py
    python scripts/run_corpus_sweep.py --statement 1.4 --sigma atomic
    python scripts/run_corpus_sweep.py --tags S4,wreath --out reports.jsonl
"""

import argparse
import dataclasses
import sys
import time

from sigmagraph.group import DEFAULT_LIMITS
from sigmagraph.sigma import parse_sigma_spec
from sigmagraph.verify import ALL_STATEMENTS, run_corpus_sweep
from sigmagraph.zoo import corpus, standard_partitions


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--statement", default="all",
                    help="statement id (e.g. 1.4), comma list, or 'all'")
    ap.add_argument("--sigma", default="standard",
                    help="'standard' (three partitions), 'atomic', or JSON "
                         "like '{\"classes\": [[2, 3]]}'")
    ap.add_argument("--tags", default="",
                    help="comma list of substrings; keep groups whose tag "
                         "matches any of them")
    ap.add_argument("--out", default="-", help="output path, '-' for stdout")
    ap.add_argument("--max-subgroup-order", type=int)
    ap.add_argument("--max-order", type=int)
    return ap.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    statements = (ALL_STATEMENTS if args.statement == "all"
                  else tuple(args.statement.split(",")))
    unknown = set(statements) - set(ALL_STATEMENTS)
    if unknown:
        print(f"error: unknown statement {sorted(unknown)}", file=sys.stderr)
        return 2
    partitions = (standard_partitions() if args.sigma == "standard"
                  else (parse_sigma_spec(args.sigma),))
    limits = DEFAULT_LIMITS
    if args.max_subgroup_order:
        limits = dataclasses.replace(limits,
                                     max_subgroup_order=args.max_subgroup_order)
    if args.max_order:
        limits = dataclasses.replace(limits, max_element_order=args.max_order,
                                     max_normal_order=args.max_order)
    wanted = [t for t in args.tags.split(",") if t]
    groups = [(tag, g) for tag, g in corpus()
              if not wanted or any(w in tag for w in wanted)]

    sink = sys.stdout if args.out == "-" else open(args.out, "w")
    counts = {"pass": 0, "vacuous": 0, "FAIL": 0}
    start = time.perf_counter()
    try:
        for report in run_corpus_sweep(groups, partitions, statements, limits):
            counts[report.verdict] += 1
            print(report.to_json(), file=sink)
    finally:
        if sink is not sys.stdout:
            sink.close()
    elapsed = time.perf_counter() - start
    print(f"{len(groups)} groups, {sum(counts.values())} reports in "
          f"{elapsed:.1f}s: pass={counts['pass']} vacuous={counts['vacuous']} "
          f"FAIL={counts['FAIL']}", file=sys.stderr)
    return 1 if counts["FAIL"] else 0


if __name__ == "__main__":
    sys.exit(main())
