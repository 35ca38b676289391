"""Ramsey-style swap thresholds for the partition recognizer.

``tau(m, n)`` is one less than a Ramsey number bound R(m, n): on any set of
``tau + 1`` vertices, every graph contains an independent set of ``m``
vertices or a clique of ``n`` vertices.  The recognizer uses this as the
radius of its bounded local search, so soundness of these values is what
keeps the whole algorithm exact.

Small values come from the published exact table; everything else falls out
of the classical recurrence R(m, n) <= R(m-1, n) + R(m, n-1) seeded by that
table, and is flagged ``exact=False``.  ``verify_tau`` re-certifies a value
by exhaustive counterexample search where that is feasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import mask_has_clique, mask_has_independent
from .properties import OracleLimitError

# published exact Ramsey numbers R(m, n) for min(m, n) >= 3; the m <= 2
# families are forced (R(1, n) = 1, R(2, n) = n)
_EXACT_R = {
    (3, 3): 6,
    (3, 4): 9,
    (3, 5): 14,
    (4, 4): 18,
}

# exhaustive verification searches all graphs on t+1 vertices
VERIFY_LIMIT = 8


@dataclass(frozen=True)
class RamseyBound:
    """Swap threshold for a (co-clique bound m, clique bound n) pair."""

    m: int
    n: int
    tau: int
    exact: bool


@lru_cache(maxsize=None)
def _r_value(m: int, n: int) -> tuple[int, bool]:
    if m > n:
        m, n = n, m
    if m == 1:
        return 1, True
    if m == 2:
        return n, True
    if (m, n) in _EXACT_R:
        return _EXACT_R[(m, n)], True
    a, _ = _r_value(m - 1, n)
    b, _ = _r_value(m, n - 1)
    return a + b, False


def tau(m: int, n: int) -> RamseyBound:
    """Swap threshold for independent sets of size m and cliques of size n."""
    if m < 1 or n < 1:
        raise ValueError(f"tau arguments must be positive, got ({m}, {n})")
    value, exact = _r_value(m, n)
    return RamseyBound(m, n, value - 1, exact)


def verify_tau(m: int, n: int, t: int) -> bool:
    """Certify by exhaustion that t vertices of slack suffice.

    True iff every graph on t+1 vertices contains an independent set of
    size m or a clique of size n.  Gated to t+1 <= 8; the search extends a
    candidate counterexample one vertex at a time and prunes any extension
    that already contains either pattern, which is exhaustive because both
    patterns are inherited by induced prefixes.
    """
    if m < 1 or n < 1:
        raise ValueError(f"verify_tau arguments must be positive, got ({m}, {n})")
    if t < 0:
        raise ValueError(f"slack must be non-negative, got {t}")
    q = t + 1
    if q > VERIFY_LIMIT:
        raise OracleLimitError(
            f"verification on {q} vertices exceeds the gate ({VERIFY_LIMIT})"
        )
    return not _counterexample_exists(q, m, n)


def _counterexample_exists(q: int, m: int, n: int) -> bool:
    rows = [0] * q

    def extend(k: int) -> bool:
        if k == q:
            return True
        below = (1 << k) - 1
        for nb in range(1 << k):
            # vertex k would complete a clique of size n
            if mask_has_clique(rows, nb, n - 1):
                continue
            # or an independent set of size m
            if mask_has_independent(rows, below ^ nb, m - 1):
                continue
            rows[k] = nb
            for v in range(k):
                if nb >> v & 1:
                    rows[v] |= 1 << k
            if extend(k + 1):
                return True
            for v in range(k):
                if nb >> v & 1:
                    rows[v] &= ~(1 << k)
            rows[k] = 0
        return False

    return extend(0)
