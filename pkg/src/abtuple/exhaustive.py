"""Exhaustive desk-scale verification over canonical tuple universes.

A universe is the set of q-multisets over the value grid [-B, B]^dim, each
visited once in a canonical order: elements sorted lexicographically, with one
zero element pinned first when require_zero is set (so the universe is exactly
the multisets containing zero).  Since the property, rank, classification
variant, and audit outcomes are all invariant under position permutation,
visiting one canonical representative per multiset loses nothing.

Every tuple in the universe is tested for (P_{q,s}); holders containing zero
are then ranked, classified, checked for an equal pair, and audited.  The
report aggregates counts and quotes verbatim every tuple that is Unclassified,
fails an audit claim, or lacks an equal pair — those are counterexample
candidates for the classification lemma and force ok=false.

Work is partitioned across processes by the first free slot's grid value; the
merge is a fold in grid order, so the report (and its JSON serialization) is
byte-identical no matter how many workers ran.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb

from .classify import VARIANT_UNCLASSIFIED, classify
from .structure import audit_claims
from .tuples import (
    BudgetExceeded,
    GroupTuple,
    current_budget,
    equal_pair,
    has_property,
    property_cost,
    rank,
)
from .lattice import zero_vector

VARIANT_OUT_OF_RANGE = "out_of_range"


@dataclass(frozen=True)
class EnumerationJob:
    s: int
    q: int
    dim: int
    bound: int
    require_zero: bool = True
    jobs: int = 1
    out: str | None = None
    budget: int | None = None

    def validate(self) -> None:
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.bound < 1:
            raise ValueError("bound must be >= 1")
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if self.q < self.s + 1:
            raise ValueError("q must be at least s+1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def value_grid(dim: int, bound: int) -> list[tuple[int, ...]]:
    """All vectors in [-bound, bound]^dim in lexicographic order."""
    return list(product(range(-bound, bound + 1), repeat=dim))


def universe_size(job: EnumerationJob) -> int:
    g = (2 * job.bound + 1) ** job.dim
    free = job.q - 1 if job.require_zero else job.q
    return comb(g + free - 1, free)


def nominal_bill(job: EnumerationJob) -> int:
    """Total nominal comparison count for the property pass alone."""
    return universe_size(job) * property_cost(job.q, job.q, job.s)


def _chunk_elements(job: EnumerationJob, grid, first_idx: int):
    """Canonical tuples whose first free slot holds grid[first_idx]."""
    free = job.q - 1 if job.require_zero else job.q
    head = (zero_vector(job.dim),) if job.require_zero else ()
    lead = grid[first_idx]
    for rest in combinations_with_replacement(grid[first_idx:], free - 1):
        yield head + (lead,) + rest


def _empty_partial() -> dict:
    return {
        "tuples": 0,
        "with_property": 0,
        "without_zero": 0,
        "ranks": {},
        "variants": {},
        "equal_pair_missing": [],
        "unclassified": [],
        "audit_failures": [],
    }


def _examine(job: EnumerationJob, part: dict, elements) -> None:
    t = GroupTuple(dim=job.dim, elements=elements)
    part["tuples"] += 1
    if not has_property(t, job.q, job.s, budget=job.budget).holds:
        return
    part["with_property"] += 1
    if zero_vector(job.dim) not in elements:
        part["without_zero"] += 1
        return
    listed = [list(e) for e in elements]
    tr = rank(t)
    key = str(tr)
    part["ranks"][key] = part["ranks"].get(key, 0) + 1
    if equal_pair(t) is None:
        part["equal_pair_missing"].append({"elements": listed})
    if 2 <= job.s and job.q <= 2 * job.s:
        cls = classify(t, job.s)
        variant = cls.variant
        if variant == VARIANT_UNCLASSIFIED:
            part["unclassified"].append(
                {
                    "elements": listed,
                    "rank": tr,
                    "property_holds": cls.property_holds,
                }
            )
        report = audit_claims(t, job.s)
        if not report.all_pass:
            part["audit_failures"].append(
                {
                    "elements": listed,
                    "case": report.case,
                    "failed": [c.name for c in report.failures],
                }
            )
    else:
        variant = VARIANT_OUT_OF_RANGE
    part["variants"][variant] = part["variants"].get(variant, 0) + 1


def _process_chunk(args) -> dict:
    job, first_idx = args
    grid = value_grid(job.dim, job.bound)
    part = _empty_partial()
    for elements in _chunk_elements(job, grid, first_idx):
        _examine(job, part, elements)
    return part


def _merge(acc: dict, part: dict) -> dict:
    for key in ("tuples", "with_property", "without_zero"):
        acc[key] += part[key]
    for key in ("ranks", "variants"):
        for k, v in part[key].items():
            acc[key][k] = acc[key].get(k, 0) + v
    for key in ("equal_pair_missing", "unclassified", "audit_failures"):
        acc[key].extend(part[key])
    return acc


def run_enumeration(job: EnumerationJob) -> dict:
    """Visit the whole universe and return the JSON-ready report."""
    job.validate()
    limit = current_budget() if job.budget is None else job.budget
    bill = nominal_bill(job)
    if bill > limit:
        raise BudgetExceeded(
            f"enumeration costs {bill} nominal comparisons, budget is {limit}"
        )
    grid = value_grid(job.dim, job.bound)
    chunk_args = [(job, g) for g in range(len(grid))]
    if job.jobs == 1:
        partials = map(_process_chunk, chunk_args)
    else:
        executor = ProcessPoolExecutor(max_workers=job.jobs)
        try:
            partials = list(executor.map(_process_chunk, chunk_args))
        finally:
            executor.shutdown()
    acc = _empty_partial()
    for part in partials:
        _merge(acc, part)
    report = {
        "job": {
            "s": job.s,
            "q": job.q,
            "dim": job.dim,
            "bound": job.bound,
            "require_zero": job.require_zero,
        },
        **acc,
        "ok": not (
            acc["equal_pair_missing"] or acc["unclassified"] or acc["audit_failures"]
        ),
    }
    return report
