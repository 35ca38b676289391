"""Hereditary graph-class specifications and their membership deciders.

A ``PropertySpec`` names an isomorphism-closed, hereditary class of graphs:
one of the built-in classes, a forbidden-induced-subgraph class
``free(...)``, a complement ``co(...)``, or a product ``P1∘P2∘...`` (graphs
whose vertex set splits into parts inducing members of each factor).

Membership questions come in two shapes and both are first-class here:
``check(spec, g)`` decides one whole graph, while ``subset_checker(spec, g)``
compiles a closure that decides induced subgraphs of ``g`` addressed by
vertex bitmask without materializing them.  The closure route is what the
recognizer and the sweeps hammer, so it works directly on ``g``'s adjacency
rows; the two routes agree by construction and a meta-test pins that down.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    emit,
    empty_graph,
    induced,
    is_connected,
    parse,
    path_graph,
    FormatError,
)

BUILTIN_KINDS = (
    "edgeless",
    "complete",
    "cluster",
    "complete_multipartite",
    "bipartite",
    "co_bipartite",
    "complete_bipartite",
)

# clique/co-clique bounds are probed on K_1..K_16 / their complements
BOUND_PROBE_LIMIT = 16

# the forbidden-subgraph engine matches patterns by brute-force isomorphism
MAX_PATTERN_ORDER = 8

# partition search for product specs is exponential in the order
PRODUCT_ORACLE_LIMIT = 20


class SpecParseError(ValueError):
    """Unparseable property expression; ``offset`` is a byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset


class OracleLimitError(ValueError):
    """A brute-force decider was asked to exceed its size gate."""


@dataclass(frozen=True)
class PropertySpec:
    """One node of a property expression tree (normalized, immutable)."""

    kind: str
    forbidden: tuple[Graph, ...] = ()
    inner: "PropertySpec | None" = None
    factors: "tuple[PropertySpec, ...]" = ()

    def __str__(self) -> str:
        return spec_name(self)


EDGELESS = PropertySpec("edgeless")
COMPLETE = PropertySpec("complete")
CLUSTER = PropertySpec("cluster")
COMPLETE_MULTIPARTITE = PropertySpec("complete_multipartite")
BIPARTITE = PropertySpec("bipartite")
CO_BIPARTITE = PropertySpec("co_bipartite")
COMPLETE_BIPARTITE = PropertySpec("complete_bipartite")

_BUILTINS = {
    "edgeless": EDGELESS,
    "complete": COMPLETE,
    "cluster": CLUSTER,
    "complete_multipartite": COMPLETE_MULTIPARTITE,
    "bipartite": BIPARTITE,
    "co_bipartite": CO_BIPARTITE,
    "complete_bipartite": COMPLETE_BIPARTITE,
}


def builtin_spec(name: str) -> PropertySpec:
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown property name {name!r}; expected one of {sorted(_BUILTINS)}") from None


def free_of(patterns) -> PropertySpec:
    """Class of graphs containing none of ``patterns`` as induced subgraph."""
    pats = list(patterns)
    if not pats:
        raise ValueError("free_of needs at least one forbidden graph")
    for h in pats:
        if h.order < 1:
            raise ValueError("forbidden graphs must have at least one vertex")
        if h.order > MAX_PATTERN_ORDER:
            raise ValueError(
                f"forbidden graph of order {h.order} exceeds the isomorphism "
                f"engine limit ({MAX_PATTERN_ORDER})"
            )
    # normalize: exact duplicates collapse, deterministic sort order
    uniq = sorted(set(pats), key=lambda h: (h.order, h.rows))
    return PropertySpec("free_of", forbidden=tuple(uniq))


def co(spec: PropertySpec) -> PropertySpec:
    """Complement class; co(co(x)) collapses to x."""
    if spec.kind == "complement_of":
        return spec.inner
    return PropertySpec("complement_of", inner=spec)


def product_of(factors) -> PropertySpec:
    """Graphs whose vertices split into parts, one inducing each factor."""
    flat: list[PropertySpec] = []
    for f in factors:
        if f.kind == "product_of":
            flat.extend(f.factors)
        else:
            flat.append(f)
    if len(flat) < 2:
        raise ValueError("product_of needs at least two factors")
    return PropertySpec("product_of", factors=tuple(flat))


# ---------------------------------------------------------------------------
# canonical names


def spec_name(spec: PropertySpec) -> str:
    """Canonical textual form; parse_spec() inverts it structurally."""
    k = spec.kind
    if k in _BUILTINS:
        return k
    if k == "complement_of":
        return f"co({spec_name(spec.inner)})"
    if k == "free_of":
        return "free(" + ",".join(_atom_name(h) for h in spec.forbidden) + ")"
    if k == "product_of":
        return "∘".join(spec_name(f) for f in spec.factors)
    raise ValueError(f"unknown spec kind {spec.kind!r}")


_TWO_K2 = Graph(4, (0b0010, 0b0001, 0b1000, 0b0100))


def _atom_name(h: Graph) -> str:
    p = h.order
    if h == complete_graph(p):
        return f"K{p}"
    if h == empty_graph(p):
        return f"Kbar{p}"
    if h == _TWO_K2:
        return "2K2"
    if p >= 3 and h == path_graph(p):
        return f"P{p}"
    if p >= 3 and h == cycle_graph(p):
        return f"C{p}"
    return "g6:" + emit("graph6", h)


# ---------------------------------------------------------------------------
# parser

_PRODUCT_SEPARATORS = ("∘", "*")


def parse_spec(text: str) -> PropertySpec:
    """Parse a property expression.

    Grammar: ``spec := term (('∘'|'*') term)*``,
    ``term := NAME | free(atom,...) | co(spec)``,
    ``atom := K<int> | Kbar<int> | P<int> | C<int> | 2K2 | g6:<graph6>``.
    ``*`` is an ASCII alias for the product separator; canonical output
    uses ``∘``.  Errors carry the byte offset of the offending token.
    """
    parser = _SpecParser(text)
    spec = parser.spec()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.fail("unexpected trailing input")
    return spec


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, at: int | None = None):
        charpos = self.pos if at is None else at
        offset = len(self.text[:charpos].encode("utf-8"))
        raise SpecParseError(message, offset)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def expect(self, token: str):
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def spec(self) -> PropertySpec:
        terms = [self.term()]
        while True:
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] in _PRODUCT_SEPARATORS:
                self.pos += 1
                terms.append(self.term())
            else:
                break
        return terms[0] if len(terms) == 1 else product_of(terms)

    def term(self) -> PropertySpec:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalpha() and self.text[self.pos].islower() or self.text[self.pos] == "_"):
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            self.fail("expected a property term")
        if name == "free":
            self.skip_ws()
            self.expect("(")
            atoms = [self.atom()]
            while True:
                self.skip_ws()
                if self.pos < len(self.text) and self.text[self.pos] == ",":
                    self.pos += 1
                    atoms.append(self.atom())
                elif self.pos < len(self.text) and self.text[self.pos] == ")":
                    self.pos += 1
                    break
                else:
                    self.fail("expected ',' or ')' in forbidden list")
            try:
                return free_of(atoms)
            except ValueError as exc:
                self.fail(str(exc), at=start)
        if name == "co":
            self.skip_ws()
            self.expect("(")
            inner = self.spec()
            self.skip_ws()
            self.expect(")")
            return co(inner)
        try:
            return builtin_spec(name)
        except ValueError:
            self.fail(f"unknown property name {name!r}", at=start)

    def atom(self) -> Graph:
        self.skip_ws()
        start = self.pos
        text = self.text
        if text.startswith("2K2", start):
            self.pos = start + 3
            return _TWO_K2
        if text.startswith("g6:", start):
            self.pos = start + 3
            body_start = self.pos
            while self.pos < len(text) and 63 <= ord(text[self.pos]) <= 126:
                self.pos += 1
            payload = text[body_start:self.pos]
            if not payload:
                self.fail("empty graph6 atom", at=body_start)
            try:
                return parse("graph6", payload)
            except FormatError as exc:
                self.fail(f"bad graph6 atom: {exc}", at=body_start)
        if text.startswith("Kbar", start):
            self.pos = start + 4
            return empty_graph(self._atom_size(minimum=1))
        if text.startswith("K", start):
            self.pos = start + 1
            return complete_graph(self._atom_size(minimum=1))
        if text.startswith("P", start):
            self.pos = start + 1
            return path_graph(self._atom_size(minimum=1))
        if text.startswith("C", start):
            self.pos = start + 1
            return cycle_graph(self._atom_size(minimum=3))
        self.fail("expected a forbidden graph atom")

    def _atom_size(self, minimum: int) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer atom size")
        n = int(self.text[start:self.pos])
        if n < minimum:
            self.fail(f"atom size {n} below minimum {minimum}", at=start)
        if n > MAX_PATTERN_ORDER:
            self.fail(f"atom size {n} exceeds pattern limit {MAX_PATTERN_ORDER}", at=start)
        return n


# ---------------------------------------------------------------------------
# induced-subgraph pattern matching


def contains_induced(g: Graph, h: Graph) -> bool:
    """Does ``g`` contain an induced copy of ``h``?  Early-exits on the first hit.

    Backtracking on an injective vertex map; each unplaced pattern vertex
    keeps a candidate mask cut down by (non-)adjacency to the placed ones,
    so a mismatch prunes whole branches instead of single subsets.
    """
    if h.order < 1:
        raise ValueError("pattern graph must have at least one vertex")
    if h.order > MAX_PATTERN_ORDER:
        raise ValueError(f"pattern order {h.order} exceeds limit {MAX_PATTERN_ORDER}")
    k = h.order
    p = g.order
    if k > p:
        return False
    rows = g.rows
    hrows = h.rows

    # placement order: highest degree first, then greedily most-connected
    # to the already-placed prefix (shrinks candidate masks early)
    order = [max(range(k), key=lambda u: hrows[u].bit_count())]
    placed_mask = 1 << order[0]
    while len(order) < k:
        nxt = max(
            (u for u in range(k) if not placed_mask >> u & 1),
            key=lambda u: ((hrows[u] & placed_mask).bit_count(), hrows[u].bit_count()),
        )
        order.append(nxt)
        placed_mask |= 1 << nxt
    adj = [
        [hrows[order[i]] >> order[j] & 1 for j in range(i)] for i in range(k)
    ]

    # a pattern vertex can only map to a host vertex of at least its degree
    base = []
    for i in range(k):
        need = hrows[order[i]].bit_count()
        m = 0
        for v in range(p):
            if rows[v].bit_count() >= need:
                m |= 1 << v
        base.append(m)
    full = g.full_mask

    image = [0] * k

    def place(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = base[i] & ~used & full
        row_adj = adj[i]
        for j in range(i):
            if row_adj[j]:
                cand &= rows[image[j]]
            else:
                cand &= ~rows[image[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if place(i + 1, used | low):
                return True
        return False

    return place(0, 0)


def _all_occurrences(g: Graph, h: Graph) -> set[int]:
    """Vertex-set masks of every induced copy of ``h`` in ``g``.

    Same backtracking scheme as contains_induced, but exhaustive;
    automorphic re-mappings collapse because only the image mask is kept.
    """
    k = h.order
    p = g.order
    found: set[int] = set()
    if k > p:
        return found
    rows = g.rows
    hrows = h.rows

    order = [max(range(k), key=lambda u: hrows[u].bit_count())]
    placed_mask = 1 << order[0]
    while len(order) < k:
        nxt = max(
            (u for u in range(k) if not placed_mask >> u & 1),
            key=lambda u: ((hrows[u] & placed_mask).bit_count(), hrows[u].bit_count()),
        )
        order.append(nxt)
        placed_mask |= 1 << nxt
    adj = [[hrows[order[i]] >> order[j] & 1 for j in range(i)] for i in range(k)]

    base = []
    for i in range(k):
        need = hrows[order[i]].bit_count()
        m = 0
        for v in range(p):
            if rows[v].bit_count() >= need:
                m |= 1 << v
        base.append(m)
    full = g.full_mask
    image = [0] * k

    def place(i: int, used: int) -> None:
        if i == k:
            found.add(used)
            return
        cand = base[i] & ~used & full
        row_adj = adj[i]
        for j in range(i):
            if row_adj[j]:
                cand &= rows[image[j]]
            else:
                cand &= ~rows[image[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            place(i + 1, used | low)

    place(0, 0)
    return found


@lru_cache(maxsize=None)
def _minimal_patterns(patterns: tuple[Graph, ...]) -> tuple[Graph, ...]:
    """Forbidden patterns with the redundant ones dropped.

    A pattern that contains another forbidden pattern as induced subgraph
    is implied by it and contributes nothing to membership.  Scanning in
    ascending (order, rows) also collapses isomorphic duplicates to the
    first representative.
    """
    kept: list[Graph] = []
    for h in sorted(patterns, key=lambda h: (h.order, h.rows)):
        if not any(contains_induced(h, small) for small in kept):
            kept.append(h)
    return tuple(kept)


def _occurrence_masks(g: Graph, patterns) -> list[int]:
    """Masks of vertex subsets inducing some forbidden pattern, pruned.

    A mask that contains a smaller occurrence is redundant for the
    "is this subset pattern-free" query, so only inclusion-minimal
    occurrences survive.  Sorted by popcount so queries hit the small,
    frequent ones first.
    """
    occs: set[int] = set()
    for h in _minimal_patterns(tuple(patterns)):
        occs |= _all_occurrences(g, h)
    ordered = sorted(occs, key=lambda o: (o.bit_count(), o))
    kept: list[int] = []
    for o in ordered:
        for small in kept:
            if small & o == small:
                break
        else:
            kept.append(o)
    return kept


# ---------------------------------------------------------------------------
# membership engines


def _two_color(rows, mask: int):
    """BFS 2-coloring of the subgraph induced by ``mask``.

    Returns the two color classes as masks, or None on an odd cycle.
    """
    a = b = 0
    left = mask
    while left:
        start = left & -left
        a |= start
        frontier = start
        frontier_in_a = True
        while frontier:
            nb = 0
            m = frontier
            while m:
                low = m & -m
                nb |= rows[low.bit_length() - 1]
                m ^= low
            nb &= mask
            if frontier_in_a:
                if nb & a:
                    return None
                frontier = nb & ~b
                b |= nb
            else:
                if nb & b:
                    return None
                frontier = nb & ~a
                a |= nb
            frontier_in_a = not frontier_in_a
        left = mask & ~(a | b)
    return a, b


def subset_checker(spec: PropertySpec, g: Graph):
    """Compile ``mask -> check(spec, induced(g, mask))`` for fixed g.

    The returned closure never materializes the induced subgraph; for
    forbidden-subgraph specs the pattern occurrences are located once at
    compile time and each query is a few subset tests.
    """
    kind = spec.kind
    rows = g.rows

    if kind == "edgeless":
        def chk(mask: int) -> bool:
            m = mask
            while m:
                low = m & -m
                if rows[low.bit_length() - 1] & mask:
                    return False
                m ^= low
            return True
        return chk

    if kind == "complete":
        def chk(mask: int) -> bool:
            m = mask
            while m:
                low = m & -m
                if rows[low.bit_length() - 1] & mask != mask ^ low:
                    return False
                m ^= low
            return True
        return chk

    if kind == "cluster":
        def chk(mask: int) -> bool:
            m = mask
            while m:
                low = m & -m
                m ^= low
                nb = rows[low.bit_length() - 1] & mask
                mm = nb
                while mm:
                    ulow = mm & -mm
                    mm ^= ulow
                    if rows[ulow.bit_length() - 1] & nb != nb ^ ulow:
                        return False
            return True
        return chk

    if kind == "bipartite":
        def chk(mask: int) -> bool:
            return _two_color(rows, mask) is not None
        return chk

    if kind == "complete_bipartite":
        def chk(mask: int) -> bool:
            tc = _two_color(rows, mask)
            if tc is None:
                return False
            a, b = tc
            edges = 0
            m = mask
            while m:
                low = m & -m
                edges += (rows[low.bit_length() - 1] & mask).bit_count()
                m ^= low
            return edges // 2 == a.bit_count() * b.bit_count()
        return chk

    if kind == "complete_multipartite":
        return subset_checker(CLUSTER, complement(g))

    if kind == "co_bipartite":
        return subset_checker(BIPARTITE, complement(g))

    if kind == "complement_of":
        return subset_checker(spec.inner, complement(g))

    if kind == "free_of":
        occs = _occurrence_masks(g, spec.forbidden)

        def chk(mask: int) -> bool:
            for o in occs:
                if o & mask == o:
                    return False
            return True
        return chk

    if kind == "product_of":
        checkers = tuple(subset_checker(f, g) for f in spec.factors)
        last = len(checkers) - 1

        def assign(i: int, mask: int) -> bool:
            if i == last:
                return checkers[i](mask)
            c = checkers[i]
            s = mask
            while True:
                if c(s) and assign(i + 1, mask ^ s):
                    return True
                if s == 0:
                    return False
                s = (s - 1) & mask

        def chk(mask: int) -> bool:
            if mask.bit_count() > PRODUCT_ORACLE_LIMIT:
                raise OracleLimitError(
                    f"oracle size limit: partition search on {mask.bit_count()} "
                    f"vertices exceeds the gate ({PRODUCT_ORACLE_LIMIT})"
                )
            return assign(0, mask)
        return chk

    raise ValueError(f"unknown spec kind {kind!r}")


def check(spec: PropertySpec, g: Graph) -> bool:
    """Does ``g`` belong to the class named by ``spec``?"""
    kind = spec.kind
    if kind == "free_of":
        # early exit on the first forbidden pattern found
        return not any(contains_induced(g, h) for h in _minimal_patterns(spec.forbidden))
    if kind == "complement_of":
        return check(spec.inner, complement(g))
    return subset_checker(spec, g)(g.full_mask)


# ---------------------------------------------------------------------------
# clique bounds


@dataclass(frozen=True)
class CliqueBound:
    """Least forbidden complete (or empty) order, or None for unbounded."""

    n: int | None

    @property
    def bounded(self) -> bool:
        return self.n is not None

    def __str__(self) -> str:
        return "unbounded" if self.n is None else str(self.n)


@lru_cache(maxsize=None)
def clique_bound(spec: PropertySpec) -> CliqueBound:
    """Smallest i with K_i outside the class, probing i = 1..16."""
    for i in range(1, BOUND_PROBE_LIMIT + 1):
        if not check(spec, complete_graph(i)):
            return CliqueBound(i)
    return CliqueBound(None)


@lru_cache(maxsize=None)
def co_clique_bound(spec: PropertySpec) -> CliqueBound:
    """Smallest i with the empty graph on i vertices outside the class."""
    for i in range(1, BOUND_PROBE_LIMIT + 1):
        if not check(spec, empty_graph(i)):
            return CliqueBound(i)
    return CliqueBound(None)


# ---------------------------------------------------------------------------
# closure classification (used when splitting witness part lists)

ADDITIVE = "additive"
CO_ADDITIVE = "co_additive"


def additivity(spec: PropertySpec) -> frozenset:
    """Closure flags: union-closed (additive) and/or join-closed (co-additive).

    The classification is syntactic.  free_of is union-closed when every
    forbidden pattern is connected (a connected pattern cannot straddle two
    union components), join-closed when every pattern's complement is
    connected.  A redundant forbidden pattern can make this conservative;
    that is acceptable for its one consumer, witness part splitting.
    """
    kind = spec.kind
    if kind in ("edgeless", "cluster", "bipartite"):
        return frozenset((ADDITIVE,))
    if kind in ("complete", "complete_multipartite", "co_bipartite"):
        return frozenset((CO_ADDITIVE,))
    if kind == "complete_bipartite":
        return frozenset()
    if kind == "free_of":
        flags = set()
        if all(is_connected(h) for h in spec.forbidden):
            flags.add(ADDITIVE)
        if all(is_connected(complement(h)) for h in spec.forbidden):
            flags.add(CO_ADDITIVE)
        return frozenset(flags)
    if kind == "complement_of":
        flags = additivity(spec.inner)
        out = set()
        if ADDITIVE in flags:
            out.add(CO_ADDITIVE)
        if CO_ADDITIVE in flags:
            out.add(ADDITIVE)
        return frozenset(out)
    if kind == "product_of":
        flags = set((ADDITIVE, CO_ADDITIVE))
        for f in spec.factors:
            flags &= additivity(f)
        return frozenset(flags)
    raise ValueError(f"unknown spec kind {kind!r}")
