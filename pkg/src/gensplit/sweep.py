"""Agreement sweeps: the fast recognizer against the brute-force referee.

One sweep takes a property pair, runs both deciders over every labeled
graph up to a cutoff order (plus an optional battery of seeded random
graphs), and reports agreement counts, certificate totals, and whether any
trace blew its combinatorial budget.  A clean report is the evidence that
the bounded local search is exact for that pair; a single disagreement is a
bug by definition, so the graphs that caused one are returned verbatim.

Worker processes split each order's edge-mask range into contiguous chunks.
The count comes from the GENSPLIT_WORKERS environment variable (default 1);
chunks are deterministic, so the report does not depend on the worker count.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field, asdict
from multiprocessing import Pool
from random import Random

from .graphs import Graph, emit, graph_from_edge_mask, pair_order, random_graph
from .properties import PropertySpec, clique_bound, co_clique_bound, spec_name, subset_checker
from .ramsey import tau as ramsey_tau
from .recognizer import audit_trace, brute_force, recognize

WORKERS_ENV_VAR = "GENSPLIT_WORKERS"

# keep reports readable when something goes badly wrong
MAX_REPORTED_GRAPHS = 20


@dataclass
class PairSweepReport:
    """Outcome of one pair's sweep, JSON-ready via dataclasses.asdict."""

    p_spec: str
    q_spec: str
    n: int
    m: int
    tau: int
    max_exhaustive_order: int
    exhaustive_graphs: int = 0
    random_graphs: int = 0
    random_order_range: tuple[int, int] | None = None
    seed: int | None = None
    agreements: int = 0
    members: int = 0
    max_step2_iterations: int = 0
    disagreements: list[str] = field(default_factory=list)
    bound_violations: list[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.disagreements and not self.bound_violations

    def total_graphs(self) -> int:
        return self.exhaustive_graphs + self.random_graphs


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        raw = os.environ.get(WORKERS_ENV_VAR, "")
        if not raw:
            return 1
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(
                f"{WORKERS_ENV_VAR}={raw!r} is not an integer"
            ) from None
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    return workers


def _compare_one(g: Graph, part_spec, rest_spec, report: PairSweepReport) -> None:
    cp = subset_checker(part_spec, g)
    cq = subset_checker(rest_spec, g)
    fast = recognize(g, part_spec, rest_spec, _checkers=(cp, cq))
    referee = brute_force(g, part_spec, rest_spec, _checkers=(cp, cq))
    if fast.member == referee.member:
        report.agreements += 1
    elif len(report.disagreements) < MAX_REPORTED_GRAPHS:
        report.disagreements.append(emit("graph6", g))
    if referee.member:
        report.members += 1
    if fast.trace.step2_iterations > report.max_step2_iterations:
        report.max_step2_iterations = fast.trace.step2_iterations
    for violation in audit_trace(fast.trace, g.order):
        if len(report.bound_violations) < MAX_REPORTED_GRAPHS:
            report.bound_violations.append(f"{emit('graph6', g)}: {violation}")


def _merge(into: PairSweepReport, part: PairSweepReport) -> None:
    into.agreements += part.agreements
    into.members += part.members
    into.exhaustive_graphs += part.exhaustive_graphs
    into.max_step2_iterations = max(into.max_step2_iterations, part.max_step2_iterations)
    into.disagreements = (into.disagreements + part.disagreements)[:MAX_REPORTED_GRAPHS]
    into.bound_violations = (into.bound_violations + part.bound_violations)[:MAX_REPORTED_GRAPHS]


def _chunk_task(args) -> PairSweepReport:
    part_spec, rest_spec, order, start, stop = args
    report = PairSweepReport(
        p_spec=spec_name(part_spec), q_spec=spec_name(rest_spec),
        n=0, m=0, tau=0, max_exhaustive_order=order,
    )
    for edge_mask in range(start, stop):
        g = graph_from_edge_mask(order, edge_mask)
        _compare_one(g, part_spec, rest_spec, report)
        report.exhaustive_graphs += 1
    return report


def sweep_pair(
    part_spec: PropertySpec,
    rest_spec: PropertySpec,
    max_order: int,
    random_count: int = 0,
    random_order_range: tuple[int, int] = (10, 14),
    seed: int = 0,
    workers: int | None = None,
) -> PairSweepReport:
    """Exhaustive-plus-random agreement sweep for one property pair.

    Exhaustive over every labeled graph of order 0..max_order, then
    ``random_count`` seeded G(p, 1/2) graphs with p cycling through the
    inclusive order range.  Raises if the pair has an unbounded side (the
    recognizer would refuse every graph).
    """
    nb = clique_bound(part_spec)
    mb = co_clique_bound(rest_spec)
    if not nb.bounded or not mb.bounded:
        raise ValueError(
            f"pair ({spec_name(part_spec)}, {spec_name(rest_spec)}) has an "
            f"unbounded side; the sweep needs the recognizer to apply"
        )
    bound = ramsey_tau(mb.n, nb.n)
    report = PairSweepReport(
        p_spec=spec_name(part_spec),
        q_spec=spec_name(rest_spec),
        n=nb.n,
        m=mb.n,
        tau=bound.tau,
        max_exhaustive_order=max_order,
        random_order_range=random_order_range if random_count else None,
        seed=seed if random_count else None,
    )
    started = time.monotonic()
    nworkers = resolve_workers(workers)

    plan = []
    for order in range(max_order + 1):
        total = 1 << len(pair_order(order))
        if nworkers == 1 or total < 4096:
            plan.append((part_spec, rest_spec, order, 0, total))
        else:
            step = (total + nworkers * 4 - 1) // (nworkers * 4)
            plan.extend(
                (part_spec, rest_spec, order, lo, min(lo + step, total))
                for lo in range(0, total, step)
            )

    if nworkers == 1:
        for task in plan:
            _merge(report, _chunk_task(task))
    else:
        with Pool(nworkers) as pool:
            for part in pool.imap(_chunk_task, plan):
                _merge(report, part)

    if random_count:
        lo, hi = random_order_range
        if not 0 <= lo <= hi:
            raise ValueError(f"bad random order range {random_order_range}")
        rng = Random(seed)
        for i in range(random_count):
            order = lo + i % (hi - lo + 1)
            g = random_graph(order, 0.5, rng.getrandbits(64))
            _compare_one(g, part_spec, rest_spec, report)
            report.random_graphs += 1

    report.elapsed_seconds = round(time.monotonic() - started, 3)
    return report


def report_lines(report: PairSweepReport) -> list[str]:
    """Human-readable sweep summary, one fact per line."""
    total = report.total_graphs()
    lines = [
        f"pair: {report.p_spec} | {report.q_spec}",
        f"bounds: n={report.n} m={report.m} tau={report.tau}",
        f"exhaustive: all labeled graphs with order <= {report.max_exhaustive_order} "
        f"({report.exhaustive_graphs} graphs)",
    ]
    if report.random_graphs:
        lo, hi = report.random_order_range
        lines.append(
            f"random battery: {report.random_graphs} seeded graphs, "
            f"orders {lo}..{hi}, seed {report.seed}"
        )
    lines.append(f"agreement: {report.agreements}/{total} (members: {report.members})")
    lines.append(f"max growth iterations: {report.max_step2_iterations}")
    if report.disagreements:
        lines.append("DISAGREEMENTS: " + " ".join(report.disagreements))
    if report.bound_violations:
        lines.extend("BUDGET VIOLATION: " + v for v in report.bound_violations)
    if report.clean:
        lines.append(f"clean in {report.elapsed_seconds}s")
    return lines


def report_dict(report: PairSweepReport) -> dict:
    d = asdict(report)
    d["clean"] = report.clean
    d["total_graphs"] = report.total_graphs()
    return d
