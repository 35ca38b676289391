"""Polynomial recognizer for two-part vertex partitions, plus its oracle.

``recognize(g, part_spec, rest_spec)`` decides whether the vertex set splits
into a part inducing a member of ``part_spec`` and a rest inducing a member
of ``rest_spec``.  It only applies when ``part_spec`` excludes some complete
graph (clique bound n) and ``rest_spec`` excludes some edgeless graph
(co-clique bound m); the Ramsey threshold ``tau(m, n)`` then caps how far a
correct part can drift from a greedily grown core, which is what makes the
bounded local search below exact:

1. grow an inclusion-maximal set with no n-clique, greedily by index;
2. repeatedly trade <= tau members for one more vertex while the core
   stays inside ``part_spec``;
3. search all partitions within tau swaps of the final core.

``brute_force`` realizes the definition directly over all vertex subsets
and is the independent referee for the sweeps.  Both report a trace of the
work done, so callers can hold the search to its combinatorial budget.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from itertools import combinations
from math import comb

from .graphs import Graph, bits, induced, mask_has_clique, mask_of
from .properties import (
    OracleLimitError,
    PropertySpec,
    check,
    clique_bound,
    co_clique_bound,
    spec_name,
    subset_checker,
)
from .ramsey import tau as ramsey_tau

BRUTE_FORCE_LIMIT = 24


class UnboundedPropertyError(ValueError):
    """The bounded-swap recognizer does not apply to this property pair."""


@dataclass(frozen=True)
class PartitionCertificate:
    """Vertex bitmasks of the two parts; part_a satisfies the first spec."""

    part_a: int
    part_rest: int


@dataclass
class RecognizerTrace:
    """Work counters; the sweep harness audits them against their bounds."""

    tau_used: int | None = None
    step2_iterations: int = 0
    step2_candidates_examined: int = 0
    step3_candidates_examined: int = 0
    membership_checks: int = 0


@dataclass(frozen=True)
class Decision:
    member: bool
    certificate: PartitionCertificate | None
    trace: RecognizerTrace


def maximal_knfree(g: Graph, n: int) -> int:
    """Inclusion-maximal set with no clique of size n, grown by ascending index."""
    if n < 1:
        raise ValueError(f"clique size must be positive, got {n}")
    rows = g.rows
    b = 0
    for v in range(g.order):
        if not mask_has_clique(rows, rows[v] & b, n - 1):
            b |= 1 << v
    return b


def try_augment(g: Graph, core: int, part_spec: PropertySpec, tau: int) -> int | None:
    """One growth step: a set one larger, within tau removals of ``core``.

    Returns the first such set (removals then additions, each enumerated in
    ascending lexicographic order by vertex index) whose induced subgraph
    satisfies ``part_spec``, or None when no such set exists.
    """
    chk = subset_checker(part_spec, g)
    return _try_augment(g, core, chk, tau, RecognizerTrace())


def _try_augment(g: Graph, core: int, chk, tau: int, trace: RecognizerTrace) -> int | None:
    members = list(bits(core))
    outside = [v for v in range(g.order) if not core >> v & 1]
    for d in range(min(tau, len(members)) + 1):
        if d + 1 > len(outside):
            break
        for drop in combinations(members, d):
            base = core ^ mask_of(drop)
            trace.membership_checks += 1
            if not chk(base):
                # the kept kernel already fails, and the spec is
                # hereditary, so no extension of it can pass
                continue
            for add in combinations(outside, d + 1):
                cand = base | mask_of(add)
                trace.step2_candidates_examined += 1
                trace.membership_checks += 1
                if chk(cand):
                    return cand
    return None


def find_witness(
    g: Graph,
    core: int,
    part_spec: PropertySpec,
    rest_spec: PropertySpec,
    tau: int,
) -> PartitionCertificate | None:
    """Search all partitions within tau swaps of ``core`` (first hit wins)."""
    cp = subset_checker(part_spec, g)
    cq = subset_checker(rest_spec, g)
    a = _find_witness(g, core, cp, cq, tau, RecognizerTrace())
    if a is None:
        return None
    return PartitionCertificate(a, g.full_mask ^ a)


def _find_witness(g: Graph, core: int, cp, cq, tau: int, trace: RecognizerTrace) -> int | None:
    full = g.full_mask
    members = list(bits(core))
    outside = [v for v in range(g.order) if not core >> v & 1]
    e_limit = min(tau, len(outside))
    for d in range(min(tau, len(members)) + 1):
        for drop in combinations(members, d):
            base = core ^ mask_of(drop)
            trace.membership_checks += 1
            if not cp(base):
                # hereditary prune: every candidate extends base
                continue
            for e in range(e_limit + 1):
                for add in combinations(outside, e):
                    a = base | mask_of(add)
                    trace.step3_candidates_examined += 1
                    if e:
                        trace.membership_checks += 1
                        if not cp(a):
                            continue
                    trace.membership_checks += 1
                    if cq(full ^ a):
                        return a
    return None


def recognize(
    g: Graph,
    part_spec: PropertySpec,
    rest_spec: PropertySpec,
    tau_override: int | None = None,
    _checkers=None,
) -> Decision:
    """Decide membership of ``g`` in the product of the two classes.

    Raises UnboundedPropertyError when either bound probe comes back
    unbounded; the algorithm's correctness argument needs both.  A
    ``tau_override`` above the computed threshold only enlarges the search
    (useful for robustness checks); an override below it voids the
    exactness guarantee and is allowed for experiments only.
    """
    nb = clique_bound(part_spec)
    if not nb.bounded:
        raise UnboundedPropertyError(
            f"clique bound of {spec_name(part_spec)} is unbounded; "
            f"the bounded-swap recognizer does not apply (use brute_force)"
        )
    mb = co_clique_bound(rest_spec)
    if not mb.bounded:
        raise UnboundedPropertyError(
            f"co-clique bound of {spec_name(rest_spec)} is unbounded; "
            f"the bounded-swap recognizer does not apply (use brute_force)"
        )
    if tau_override is not None and tau_override < 0:
        raise ValueError(f"tau override must be non-negative, got {tau_override}")
    t = ramsey_tau(mb.n, nb.n).tau if tau_override is None else tau_override

    if _checkers is None:
        cp = subset_checker(part_spec, g)
        cq = subset_checker(rest_spec, g)
    else:
        cp, cq = _checkers
    trace = RecognizerTrace(tau_used=t)

    core = maximal_knfree(g, nb.n)
    while True:
        grown = _try_augment(g, core, cp, t, trace)
        if grown is None:
            break
        core = grown
        trace.step2_iterations += 1
        if trace.step2_iterations > g.order:
            raise RuntimeError("augmentation loop exceeded the vertex count")

    a = _find_witness(g, core, cp, cq, t, trace)
    if a is None:
        return Decision(False, None, trace)
    cert = PartitionCertificate(a, g.full_mask ^ a)
    _validate_certificate(g, part_spec, rest_spec, cert)
    return Decision(True, cert, trace)


def brute_force(g: Graph, part_spec: PropertySpec, rest_spec: PropertySpec, _checkers=None) -> Decision:
    """Referee oracle: try every vertex subset as the first part, ascending."""
    if g.order > BRUTE_FORCE_LIMIT:
        raise OracleLimitError(
            f"brute force is gated to order <= {BRUTE_FORCE_LIMIT}, got {g.order}"
        )
    if _checkers is None:
        cp = subset_checker(part_spec, g)
        cq = subset_checker(rest_spec, g)
    else:
        cp, cq = _checkers
    trace = RecognizerTrace()
    full = g.full_mask
    for a in range(full + 1):
        trace.membership_checks += 1
        if not cp(a):
            continue
        trace.membership_checks += 1
        if cq(full ^ a):
            cert = PartitionCertificate(a, full ^ a)
            _validate_certificate(g, part_spec, rest_spec, cert)
            return Decision(True, cert, trace)
    return Decision(False, None, trace)


def _validate_certificate(g, part_spec, rest_spec, cert) -> None:
    # independent of the search path: materialize both induced subgraphs
    # and run the whole-graph deciders
    if cert.part_a & cert.part_rest:
        raise RuntimeError("certificate parts overlap")
    if cert.part_a | cert.part_rest != g.full_mask:
        raise RuntimeError("certificate parts do not cover the vertex set")
    if not check(part_spec, induced(g, cert.part_a)):
        raise RuntimeError("certificate first part fails its property")
    if not check(rest_spec, induced(g, cert.part_rest)):
        raise RuntimeError("certificate rest fails its property")


def audit_trace(trace: RecognizerTrace, order: int) -> list[str]:
    """Check a recognizer trace against its combinatorial budget.

    Returns human-readable violation strings (empty list = within budget):
    the growth loop runs at most ``order`` times, each growth pass examines
    at most sum_d C(p,d)*C(p,d+1) candidate sets, and the final search
    examines at most (sum_d C(p,d))^2 partitions, d ranging over 0..tau.
    """
    t = trace.tau_used
    if t is None:
        return []
    p = order
    out = []
    if trace.step2_iterations > p:
        out.append(f"step2_iterations {trace.step2_iterations} > order {p}")
    per_pass = sum(comb(p, d) * comb(p, d + 1) for d in range(min(t, p) + 1))
    limit2 = (trace.step2_iterations + 1) * per_pass
    if trace.step2_candidates_examined > limit2:
        out.append(f"step2_candidates_examined {trace.step2_candidates_examined} > {limit2}")
    s = sum(comb(p, d) for d in range(min(t, p) + 1))
    if trace.step3_candidates_examined > s * s:
        out.append(f"step3_candidates_examined {trace.step3_candidates_examined} > {s * s}")
    return out


def decision_record(
    decision: Decision, part_spec: PropertySpec, rest_spec: PropertySpec
) -> dict:
    """JSON-ready record of one decision, schema-stable across modes."""
    cert = None
    if decision.certificate is not None:
        cert = {
            "part_a": list(bits(decision.certificate.part_a)),
            "part_rest": list(bits(decision.certificate.part_rest)),
        }
    nb = clique_bound(part_spec)
    mb = co_clique_bound(rest_spec)
    return {
        "member": decision.member,
        "certificate": cert,
        "trace": asdict(decision.trace),
        "p_spec": spec_name(part_spec),
        "q_spec": spec_name(rest_spec),
        "tau": decision.trace.tau_used,
        "n": nb.n,
        "m": mb.n,
    }
