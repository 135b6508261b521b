#!/usr/bin/env python3
"""Run the invariant checks over the enumerated corpus and print a summary table.

    python scripts/run_corpus.py --max-vertices 3 --max-arrows 4 --fields Q,F2,F3
"""
import argparse
import sys
import time

from gentle_hh1.config import CorpusConfig
from gentle_hh1.corpus import corpus
from gentle_hh1.verify import run_checks


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=3)
    ap.add_argument("--max-arrows", type=int, default=4)
    ap.add_argument("--fields", default="Q,F2,F3")
    ap.add_argument("--checks", default=None, help="comma-separated check groups")
    args = ap.parse_args(argv)

    cfg = CorpusConfig.from_strings(args.max_vertices, args.max_arrows, args.fields, args.checks)
    start = time.perf_counter()
    instances = corpus(cfg.max_vertices, cfg.max_arrows)
    tallies = run_checks(instances, cfg.field_objects, cfg.checks)
    elapsed = time.perf_counter() - start

    print(f"{len(instances)} algebras, fields {','.join(cfg.fields)}, {elapsed:.1f}s")
    width = max(len(k) for k in tallies)
    bad = 0
    for name in sorted(tallies):
        t = tallies[name]
        bad += t.failed
        extra = f"  exempt {t.exempt}" if t.exempt else ""
        print(f"  {name:<{width}}  passed {t.passed:>5}  failed {t.failed}{extra}")
        for ex in t.counterexamples:
            print(f"      {ex['algebra']} over {ex['field']}: {ex['detail']}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
