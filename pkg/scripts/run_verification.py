#!/usr/bin/env python3
"""Run every verification campaign and write reports.

Usage:
    python3 scripts/run_verification.py [--max-vertices 6] [--out reports/]

Produces one JSONL + CSV pair per campaign and prints a summary table.
Exits nonzero when any campaign records a mismatch.
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from itline.harness import (  # noqa: E402
    corpus_by_edge_cap,
    corpus_graphs,
    run_bounds_campaign,
    run_equivalence_campaign,
    run_family_suite,
    verify_theorem_induction,
    verify_theorem_main,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=6)
    parser.add_argument("--max-edges", type=int, default=7,
                        help="edge cap for the induction-step corpus")
    parser.add_argument("--out", default="reports")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--budget", type=int, default=None)
    args = parser.parse_args()

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    corpus = corpus_graphs(args.max_vertices)
    corpus_3e = [g for g in corpus if g.edge_count >= 3]
    corpus_ind = [g for g in corpus_by_edge_cap(args.max_edges) if g.edge_count >= 2]

    campaigns = [
        ("main level-2 equivalence",
         lambda: verify_theorem_main(corpus_3e, 2, node_budget=args.budget,
                                     workers=args.workers)),
        ("induction step k=2",
         lambda: verify_theorem_induction(corpus_ind, 2, node_budget=args.budget,
                                          workers=args.workers)),
        ("trail reductions",
         lambda: run_equivalence_campaign(corpus_3e, node_budget=args.budget,
                                          workers=args.workers)),
        ("bounds vs exact indices",
         lambda: run_bounds_campaign(corpus, node_budget=args.budget,
                                     workers=args.workers)),
        ("named families",
         lambda: run_family_suite(node_budget=args.budget)),
    ]

    failures = 0
    for label, runner in campaigns:
        t0 = time.monotonic()
        report = runner()
        elapsed = time.monotonic() - t0
        (outdir / f"{report.name}.jsonl").write_text(report.json_lines())
        (outdir / f"{report.name}.csv").write_text(report.summary_csv())
        summary = report.summary()
        summary["seconds"] = round(elapsed, 1)
        print(json.dumps(summary, sort_keys=True))
        if not report.ok:
            failures += 1
            for rec in report.records:
                if rec.get("agree") is False:
                    print(f"  MISMATCH {json.dumps(rec, sort_keys=True)}",
                          file=sys.stderr)
    status = f"{failures} campaign(s) failed" if failures else "all campaigns clean"
    print(f"reports written to {outdir}/; {status}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
