#!/usr/bin/env python3
"""Survey exhaustive enumeration over a grid of small configurations.

For each (s, q, dim, bound) cell the script runs the full canonical-universe
enumeration and prints one table row: universe size, number of tuples with
property (P_{q,s}), rank histogram, classification variant counts, and whether
any invariant-violation lists are non-empty.

Examples:
    python3 scripts/survey_small_universes.py
    python3 scripts/survey_small_universes.py --s 2 --q 3 4 --dim 1 2 --bound 2
    python3 scripts/survey_small_universes.py --jobs 4 --budget 2000000000
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from abtuple.exhaustive import EnumerationJob, run_enumeration, universe_size
from abtuple.tuples import BudgetExceeded


@dataclass(frozen=True)
class SurveyConfig:
    s_values: tuple[int, ...] = (2, 3)
    q_values: tuple[int, ...] = ()  # empty: use s+1 .. 2s per s
    dims: tuple[int, ...] = (1, 2)
    bounds: tuple[int, ...] = (1, 2)
    jobs: int = 1
    budget: int | None = None

    def cells(self):
        for s in self.s_values:
            qs = self.q_values or tuple(range(s + 1, 2 * s + 1))
            for q in qs:
                for dim in self.dims:
                    for bound in self.bounds:
                        yield EnumerationJob(
                            s=s,
                            q=q,
                            dim=dim,
                            bound=bound,
                            jobs=self.jobs,
                            budget=self.budget,
                        )


def fmt_hist(hist: dict) -> str:
    return ",".join(f"{k}:{v}" for k, v in sorted(hist.items())) or "-"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--s", type=int, nargs="+", default=[2, 3])
    ap.add_argument(
        "--q", type=int, nargs="*", default=[],
        help="window lengths; default s+1..2s for each s",
    )
    ap.add_argument("--dim", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--bound", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args(argv)

    cfg = SurveyConfig(
        s_values=tuple(args.s),
        q_values=tuple(args.q),
        dims=tuple(args.dim),
        bounds=tuple(args.bound),
        jobs=args.jobs,
        budget=args.budget,
    )

    header = (
        f"{'s':>2} {'q':>2} {'dim':>3} {'B':>2} {'universe':>9} "
        f"{'holders':>7} {'ranks':>14} {'variants':>28} {'clean':>5} {'sec':>6}"
    )
    print(header)
    print("-" * len(header))
    dirty = 0
    for job in cfg.cells():
        size = universe_size(job)
        start = time.perf_counter()
        try:
            rep = run_enumeration(job)
        except BudgetExceeded as exc:
            print(
                f"{job.s:>2} {job.q:>2} {job.dim:>3} {job.bound:>2} "
                f"{size:>9} skipped: {exc}"
            )
            continue
        elapsed = time.perf_counter() - start
        clean = rep["ok"]
        dirty += 0 if clean else 1
        print(
            f"{job.s:>2} {job.q:>2} {job.dim:>3} {job.bound:>2} {size:>9} "
            f"{rep['with_property']:>7} {fmt_hist(rep['ranks']):>14} "
            f"{fmt_hist(rep['variants']):>28} {str(clean):>5} {elapsed:>6.2f}"
        )
        if not clean:
            for key in ("equal_pair_missing", "unclassified", "audit_failures"):
                for item in rep[key]:
                    print(f"    {key}: {item}", file=sys.stderr)
    return 1 if dirty else 0


if __name__ == "__main__":
    sys.exit(main())
