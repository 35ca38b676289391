"""Bit-packed labeled graphs and their exact set operations.

Vertices are dense integers 0..order-1.  Adjacency lives in per-vertex int
bitmasks (``rows[v]`` has bit ``u`` set iff ``uv`` is an edge), so induced
subgraphs, neighborhood queries and partition search reduce to integer
arithmetic.  Vertex subsets travel through the whole package as plain int
bitmasks; ``bits()`` / ``mask_of()`` convert between masks and indices.

Graphs are immutable.  Every public constructor (``build``, the generators,
the parsers, the operations) guarantees a symmetric, loop-free adjacency
over dense labels; the ``Graph`` dataclass itself is a dumb record and does
not re-validate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

MAX_ORDER = 4096

# enumerate_labeled / canonical_edge_mask stay brute-force, so keep them tiny
MAX_ENUMERATION_ORDER = 8


class FormatError(ValueError):
    """Malformed serialized graph.

    ``line`` (1-based) or ``offset`` (0-based byte position) pins down the
    failure when the input format makes that meaningful.
    """

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        elif offset is not None:
            message = f"offset {offset}: {message}"
        super().__init__(message)
        self.line = line
        self.offset = offset


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    """Fold an iterable of vertex indices into a bitmask."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable labeled graph: ``order`` vertices, ``rows[v]`` = neighbor mask."""

    order: int
    rows: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return self.rows[u] >> v & 1 == 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, ascending."""
        out = []
        for u in range(self.order):
            upper = self.rows[u] >> (u + 1) << (u + 1)
            for v in bits(upper):
                out.append((u, v))
        return out

    def __repr__(self) -> str:  # the rows tuple is unreadable in test output
        return f"Graph(order={self.order}, edges={self.edges()!r})"


def build(order: int, edges) -> Graph:
    """Validating constructor from an explicit edge list."""
    if not 0 <= order <= MAX_ORDER:
        raise ValueError(f"order {order} outside supported range 0..{MAX_ORDER}")
    rows = [0] * order
    for e in edges:
        u, v = e
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge {e!r} endpoint outside 0..{order - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


# ---------------------------------------------------------------------------
# operations


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)))


def induced(g: Graph, mask: int) -> Graph:
    """Induced subgraph on the vertices of ``mask``.

    Vertices are relabeled 0..k-1 by ascending original index.
    """
    if mask < 0 or mask >> g.order:
        raise ValueError(f"vertex mask {mask:#x} outside graph of order {g.order}")
    keep = list(bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for u in bits(g.rows[v] & mask):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph(len(keep), tuple(rows))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertices are shifted up by a.order."""
    n = a.order + b.order
    if n > MAX_ORDER:
        raise ValueError(f"union order {n} exceeds cap {MAX_ORDER}")
    rows = list(a.rows) + [r << a.order for r in b.rows]
    return Graph(n, tuple(rows))


def add_universal_vertex(g: Graph) -> Graph:
    """New last vertex adjacent to every existing vertex."""
    n = g.order + 1
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds cap {MAX_ORDER}")
    top = 1 << g.order
    rows = tuple(r | top for r in g.rows) + (g.full_mask,)
    return Graph(n, rows)


def is_connected(g: Graph) -> bool:
    """Order <= 1 counts as connected."""
    if g.order <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


# ---------------------------------------------------------------------------
# generators


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    _check_order(n)
    return build(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    _check_order(n)
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    _check_order(a + b)
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, tuple(right for _ in range(a)) + tuple(left for _ in range(b)))


def random_graph(n: int, probability: float, seed) -> Graph:
    """Erdos-Renyi style G(n, p); identical seed means identical graph."""
    _check_order(n)
    if not 0.0 <= probability <= 1.0:
        raise ValueError(f"edge probability {probability} outside [0, 1]")
    rng = random.Random(seed)
    rows = [0] * n
    for i, j in pair_order(n):
        if rng.random() < probability:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def generate(family: str, *params, seed=None) -> Graph:
    """Name-dispatched generator used by the command line."""
    if family == "complete":
        (n,) = params
        return complete_graph(int(n))
    if family == "empty":
        (n,) = params
        return empty_graph(int(n))
    if family == "path":
        (n,) = params
        return path_graph(int(n))
    if family == "cycle":
        (n,) = params
        return cycle_graph(int(n))
    if family == "complete_bipartite":
        a, b = params
        return complete_bipartite_graph(int(a), int(b))
    if family == "random":
        if len(params) == 3:
            n, prob, seed = params
        else:
            n, prob = params
            if seed is None:
                raise ValueError("random graphs need a seed")
        return random_graph(int(n), float(prob), int(seed))
    raise ValueError(f"unknown graph family {family!r}")


def _check_order(n: int) -> None:
    if not 0 <= n <= MAX_ORDER:
        raise ValueError(f"order {n} outside supported range 0..{MAX_ORDER}")


# ---------------------------------------------------------------------------
# labeled enumeration and canonical forms

# Edge slots are numbered in the upper-triangle column order
# (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... which is also the bit order
# of the graph6 encoding, so edge masks and serialized bodies line up.


@lru_cache(maxsize=None)
def pair_order(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(n) for i in range(j))


def graph_from_edge_mask(order: int, edge_mask: int) -> Graph:
    pairs = pair_order(order)
    if edge_mask < 0 or edge_mask >> len(pairs):
        raise ValueError(f"edge mask {edge_mask:#x} out of range for order {order}")
    rows = [0] * order
    for k in bits(edge_mask):
        i, j = pairs[k]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(order, tuple(rows))


def edge_mask_of(g: Graph) -> int:
    m = 0
    for k, (i, j) in enumerate(pair_order(g.order)):
        if g.rows[i] >> j & 1:
            m |= 1 << k
    return m


def enumerate_labeled(order: int):
    """Yield every labeled graph of the given order, ascending by edge mask."""
    if not 0 <= order <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"labeled enumeration supports order 0..{MAX_ENUMERATION_ORDER}")
    pairs = pair_order(order)
    nbits = len(pairs)
    for edge_mask in range(1 << nbits):
        rows = [0] * order
        m = edge_mask
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            m ^= low
        yield Graph(order, tuple(rows))


def canonical_edge_mask(g: Graph) -> int:
    """Minimum edge mask over all vertex relabelings; equal iff isomorphic."""
    if g.order > MAX_ENUMERATION_ORDER:
        raise ValueError(f"canonical form supports order 0..{MAX_ENUMERATION_ORDER}")
    pairs = pair_order(g.order)
    rows = g.rows
    best = None
    for perm in permutations(range(g.order)):
        m = 0
        for k, (i, j) in enumerate(pairs):
            if rows[perm[i]] >> perm[j] & 1:
                m |= 1 << k
        if best is None or m < best:
            best = m
    return best if best is not None else 0


def isomorphic(a: Graph, b: Graph) -> bool:
    """Brute-force isomorphism for small graphs (order <= 8)."""
    if a.order != b.order:
        return False
    if a.order > MAX_ENUMERATION_ORDER:
        raise ValueError(f"isomorphism check supports order 0..{MAX_ENUMERATION_ORDER}")
    if sorted(r.bit_count() for r in a.rows) != sorted(r.bit_count() for r in b.rows):
        return False
    arows, brows = a.rows, b.rows
    n = a.order
    for perm in permutations(range(n)):
        for u in range(n):
            pu = perm[u]
            ok = True
            for v in range(u + 1, n):
                if arows[u] >> v & 1 != brows[pu] >> perm[v] & 1:
                    ok = False
                    break
            if not ok:
                break
        else:
            return True
    return False


# ---------------------------------------------------------------------------
# clique helpers shared by the membership engines and the threshold search


def mask_has_clique(rows, mask: int, size: int) -> bool:
    """Is there a clique of ``size`` vertices inside ``mask``?

    ``rows`` is any indexable of neighbor masks, so in-progress search
    states can use it, not just finished graphs.
    """
    if size <= 0:
        return True
    if mask.bit_count() < size:
        return False
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        # only extend with higher-numbered vertices: each clique is
        # visited once, from its lowest member upward
        if mask_has_clique(rows, rows[v] & m, size - 1):
            return True
    return False


def mask_has_independent(rows, mask: int, size: int) -> bool:
    """Is there an independent set of ``size`` vertices inside ``mask``?"""
    if size <= 0:
        return True
    if mask.bit_count() < size:
        return False
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if mask_has_independent(rows, m & ~rows[v], size - 1):
            return True
    return False


# ---------------------------------------------------------------------------
# serialization

FORMATS = ("graph6", "edge_list", "dimacs")


def parse(fmt: str, text: str) -> Graph:
    if fmt == "graph6":
        return _parse_graph6(text)
    if fmt == "edge_list":
        return _parse_edge_list(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def emit(fmt: str, g: Graph) -> str:
    if fmt == "graph6":
        return _emit_graph6(g)
    if fmt == "edge_list":
        return _emit_edge_list(g)
    if fmt == "dimacs":
        return _emit_dimacs(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string", offset=0)
    data = []
    for pos, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise FormatError(f"invalid graph6 character {ch!r}", offset=pos)
        data.append(c - 63)
    if data[0] < 63:
        n = data[0]
        body = data[1:]
        body_offset = 1
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 order field", offset=len(s))
        if data[1] == 63:
            # 8-byte order form encodes n >= 258048, far beyond the cap
            raise FormatError("graph6 order exceeds supported maximum", offset=0)
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
        body_offset = 4
    if n > MAX_ORDER:
        raise FormatError(f"order {n} exceeds cap {MAX_ORDER}", offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise FormatError(
            f"truncated graph6 body: need {need} characters, got {len(body)}",
            offset=len(s),
        )
    if len(body) > need:
        raise FormatError("unexpected data after graph6 body", offset=body_offset + need)
    rows = [0] * n
    pairs = pair_order(n)
    for k in range(nbits):
        if body[k // 6] >> (5 - k % 6) & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    # padding bits beyond the triangle must be zero
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise FormatError("nonzero padding in final graph6 character", offset=body_offset + need - 1)
    return Graph(n, tuple(rows))


def _emit_graph6(g: Graph) -> str:
    n = g.order
    if n <= 62:
        head = chr(63 + n)
    else:
        head = chr(126) + chr(63 + (n >> 12 & 63)) + chr(63 + (n >> 6 & 63)) + chr(63 + (n & 63))
    nbits = n * (n - 1) // 2
    chunks = []
    acc = 0
    filled = 0
    for k, (i, j) in enumerate(pair_order(n)):
        acc = acc << 1 | (g.rows[i] >> j & 1)
        filled += 1
        if filled == 6:
            chunks.append(chr(63 + acc))
            acc = 0
            filled = 0
    if filled:
        chunks.append(chr(63 + (acc << (6 - filled))))
    assert len(chunks) == (nbits + 5) // 6
    return head + "".join(chunks)


def _parse_edge_list(text: str) -> Graph:
    order = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            try:
                order = int(line)
            except ValueError:
                raise FormatError(f"expected vertex count, got {line!r}", line=lineno) from None
            if not 0 <= order <= MAX_ORDER:
                raise FormatError(f"order {order} outside 0..{MAX_ORDER}", line=lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer endpoint in {line!r}", line=lineno) from None
        if not (0 <= u < order and 0 <= v < order):
            raise FormatError(f"edge {u} {v} outside 0..{order - 1}", line=lineno)
        if u == v:
            raise FormatError(f"loop at vertex {u}", line=lineno)
        edges.append((u, v))
    if order is None:
        raise FormatError("empty edge_list input: missing vertex count", line=1)
    return build(order, edges)


def _emit_edge_list(g: Graph) -> str:
    lines = [str(g.order)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _parse_dimacs(text: str) -> Graph:
    order = None
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if order is not None:
                raise FormatError("duplicate problem line", line=lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"malformed problem line {line!r}", line=lineno)
            try:
                order = int(parts[2])
                declared = int(parts[3])
            except ValueError:
                raise FormatError(f"malformed problem line {line!r}", line=lineno) from None
            if not 0 <= order <= MAX_ORDER:
                raise FormatError(f"order {order} outside 0..{MAX_ORDER}", line=lineno)
            continue
        if line.startswith("e"):
            if order is None:
                raise FormatError("edge before problem line", line=lineno)
            parts = line.split()
            if len(parts) != 3:
                raise FormatError(f"malformed edge line {line!r}", line=lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"non-integer endpoint in {line!r}", line=lineno) from None
            # DIMACS vertices are 1-based
            if not (1 <= u <= order and 1 <= v <= order):
                raise FormatError(f"edge {u} {v} outside 1..{order}", line=lineno)
            if u == v:
                raise FormatError(f"loop at vertex {u}", line=lineno)
            edges.append((u - 1, v - 1))
            continue
        raise FormatError(f"unrecognized line {line!r}", line=lineno)
    if order is None:
        raise FormatError("missing problem line", line=1)
    if declared != len(edges):
        raise FormatError(
            f"problem line declares {declared} edges but {len(edges)} e lines follow",
            line=1,
        )
    return build(order, edges)


def _emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.order} {g.edge_count()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
