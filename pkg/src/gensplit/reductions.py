"""Hardness gadgets and the witness-based product combinator.

Two gadget maps turn 3-colorability questions into two-part partition
questions, which is what pins the hard side of the complexity boundary:

* ``t6_gadget``  adds a disjoint triangle; the target pair is
  (bipartite, co(cluster)).
* ``t7_gadget``  adds a universal vertex; the target pair is
  (bipartite, complete_bipartite).

The combinator side goes the other way: from a host graph whose partition
into spec-satisfying parts is unique (up to swapping equal-spec parts, with
every part non-empty), ``gh_combinator`` builds a graph that lands in the
product class iff the attached graph lands in the additive-prefix product.
The uniqueness search and checking helpers live here too, all brute force
and gated, because they referee the fast paths and must stay simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .graphs import (
    Graph,
    add_universal_vertex,
    bits,
    canonical_edge_mask,
    complete_graph,
    disjoint_union,
    emit,
    enumerate_labeled,
    induced,
    parse,
)
from .properties import (
    ADDITIVE,
    CO_ADDITIVE,
    OracleLimitError,
    PropertySpec,
    additivity,
    check,
    parse_spec,
    spec_name,
    subset_checker,
)

COLORING_LIMIT = 24
PARTITION_ENUMERATION_LIMIT = 10**7


def t6_gadget(g: Graph) -> Graph:
    """Disjoint triangle gadget: 3-colorability of g becomes membership
    of the gadget in bipartite ∘ co(cluster)."""
    return disjoint_union(g, complete_graph(3))


def t7_gadget(g: Graph) -> Graph:
    """Universal vertex gadget: 3-colorability of g becomes membership
    of the gadget in bipartite ∘ complete_bipartite."""
    return add_universal_vertex(g)


def is_k_colorable(g: Graph, k: int) -> bool:
    """Proper k-colorability by backtracking, ascending vertex order.

    A vertex may only open one new color beyond those already in use, so
    color permutations are never explored twice.
    """
    if k < 1:
        raise ValueError(f"color count must be positive, got {k}")
    if g.order > COLORING_LIMIT:
        raise OracleLimitError(f"coloring is gated to order <= {COLORING_LIMIT}, got {g.order}")
    rows = g.rows
    p = g.order
    color_masks = [0] * k

    def assign(v: int, used: int) -> bool:
        if v == p:
            return True
        rv = rows[v]
        limit = used + 1 if used < k else k
        for c in range(limit):
            if rv & color_masks[c] == 0:
                color_masks[c] |= 1 << v
                if assign(v + 1, used + 1 if c == used else used):
                    return True
                color_masks[c] ^= 1 << v
        return False

    return assign(0, 0)


@dataclass(frozen=True)
class ColoringPartition:
    """One valid ordered partition; parts[i] satisfies the i-th spec."""

    parts: tuple[int, ...]


def enumerate_partitions(g: Graph, specs):
    """Yield every valid ordered partition of g's vertices.

    Iterates all len(specs)^order assignment vectors in ascending order
    (vertex 0 varies slowest); empty parts are allowed.  Gated because the
    assignment space is exponential.
    """
    specs = tuple(specs)
    k = len(specs)
    if k < 1:
        raise ValueError("need at least one spec")
    if k ** g.order > PARTITION_ENUMERATION_LIMIT:
        raise OracleLimitError(
            f"{k}^{g.order} assignments exceed the enumeration gate "
            f"({PARTITION_ENUMERATION_LIMIT})"
        )
    checkers = [subset_checker(s, g) for s in specs]
    for assign in iter_product(range(k), repeat=g.order):
        masks = [0] * k
        bit = 1
        for c in assign:
            masks[c] |= bit
            bit <<= 1
        for chk, m in zip(checkers, masks):
            if not chk(m):
                break
        else:
            yield ColoringPartition(tuple(masks))


def _interchange_key(parts, groups):
    # canonical form of an ordered partition under permutations of
    # positions that carry structurally equal specs
    key = list(parts)
    for indices in groups:
        vals = sorted(key[i] for i in indices)
        for i, v in zip(indices, vals):
            key[i] = v
    return tuple(key)


def _equal_spec_groups(specs):
    seen: dict[PropertySpec, list[int]] = {}
    for i, s in enumerate(specs):
        seen.setdefault(s, []).append(i)
    return [sorted(v) for v in seen.values() if len(v) > 1]


def _unique_partition(g: Graph, specs) -> tuple[int, ...] | None:
    """The single valid partition class, or None if zero or several exist.

    Returns the class representative with equal-spec positions sorted.
    """
    specs = tuple(specs)
    groups = _equal_spec_groups(specs)
    found = None
    for cp in enumerate_partitions(g, specs):
        key = _interchange_key(cp.parts, groups)
        if found is None:
            found = key
        elif key != found:
            return None
    return found


def verify_strongly_unique(g: Graph, specs) -> bool:
    """True iff g has exactly one valid partition up to trivial interchanges."""
    return _unique_partition(g, specs) is not None


# ---------------------------------------------------------------------------
# unique-partition witnesses and the combinator


@dataclass(frozen=True)
class UniquePartitionWitness:
    """Host graph with its unique spec-satisfying partition, anchored.

    ``anchor`` is a vertex of the first part; ``anchor_w_neighborhood`` is
    the anchor's neighborhood inside the union of the co-additive-suffix
    parts, which is the only piece of the witness the combinator wires into.
    """

    host: Graph
    parts: tuple[int, ...]
    specs: tuple[PropertySpec, ...]
    anchor: int
    anchor_w_neighborhood: int


def _additive_boundary(specs) -> int:
    """Index splitting specs into an additive prefix and co-additive suffix.

    The largest valid split wins when a spec qualifies for both sides
    (classification is syntactic; see properties.additivity).
    """
    flags = [additivity(s) for s in specs]
    for k in range(len(specs) - 1, 0, -1):
        if all(ADDITIVE in f for f in flags[:k]) and all(CO_ADDITIVE in f for f in flags[k:]):
            return k
    raise ValueError(
        "specs do not split into an additive prefix followed by a "
        "co-additive suffix"
    )


def make_witness(host: Graph, parts, specs, anchor: int) -> UniquePartitionWitness:
    """Validating witness constructor; raises naming the violated invariant.

    Structural invariants only: uniqueness of the partition is exponential
    to confirm, so callers certify it separately (verify_strongly_unique).
    """
    parts = tuple(parts)
    specs = tuple(specs)
    _validate_witness_structure(host, parts, specs, anchor)
    k = _additive_boundary(specs)
    w_mask = 0
    for m in parts[k:]:
        w_mask |= m
    return UniquePartitionWitness(
        host=host,
        parts=parts,
        specs=specs,
        anchor=anchor,
        anchor_w_neighborhood=host.rows[anchor] & w_mask,
    )


def _validate_witness_structure(host, parts, specs, anchor) -> None:
    if len(parts) != len(specs):
        raise ValueError(f"{len(parts)} parts for {len(specs)} specs")
    if len(specs) < 2:
        raise ValueError("witness needs at least two parts")
    union = 0
    for i, m in enumerate(parts):
        if m == 0:
            raise ValueError(f"part {i} is empty")
        if m < 0 or m >> host.order:
            raise ValueError(f"part {i} is outside the host vertex range")
        if union & m:
            raise ValueError(f"part {i} overlaps an earlier part")
        union |= m
    if union != host.full_mask:
        raise ValueError("parts do not cover the host vertex set")
    for i, (m, s) in enumerate(zip(parts, specs)):
        if not check(s, induced(host, m)):
            raise ValueError(f"part {i} does not satisfy {spec_name(s)}")
    if not 0 <= anchor < host.order or not parts[0] >> anchor & 1:
        raise ValueError(f"anchor {anchor} is not a vertex of the first part")


def gh_combinator(g: Graph, witness: UniquePartitionWitness) -> Graph:
    """Attach ``g`` to the witness host across the anchor's suffix neighborhood.

    The result is the disjoint union of g and the host plus all edges
    between V(g) and the anchor's neighborhood inside the suffix parts.
    Membership of the result in the product of the witness specs (additive
    prefix product ∘ co-additive suffix product) is equivalent to
    membership of g in the prefix product.
    """
    _validate_witness_structure(witness.host, witness.parts, witness.specs, witness.anchor)
    k = _additive_boundary(witness.specs)
    w_mask = 0
    for m in witness.parts[k:]:
        w_mask |= m
    if witness.anchor_w_neighborhood != witness.host.rows[witness.anchor] & w_mask:
        raise ValueError("witness anchor neighborhood does not match its host")
    base = disjoint_union(g, witness.host)
    g_full = (1 << g.order) - 1
    shifted = witness.anchor_w_neighborhood << g.order
    rows = list(base.rows)
    for v in range(g.order):
        rows[v] |= shifted
    for x in bits(witness.anchor_w_neighborhood):
        rows[g.order + x] |= g_full
    return Graph(base.order, tuple(rows))


def witness_specs_split(witness: UniquePartitionWitness) -> tuple[PropertySpec, ...]:
    """The (prefix product, suffix product) pair the combinator targets."""
    from .properties import product_of

    k = _additive_boundary(witness.specs)
    prefix = witness.specs[:k]
    suffix = witness.specs[k:]
    left = prefix[0] if len(prefix) == 1 else product_of(prefix)
    right = suffix[0] if len(suffix) == 1 else product_of(suffix)
    return left, right


def search_unique_hosts(specs, max_order: int):
    """All strongly unique hosts up to ``max_order``, one per isomorphism class.

    Scans every labeled graph, keeps those whose valid partition is unique
    with every part non-empty, and dedups by canonical form.  Returns
    witnesses anchored at the lowest vertex of the first part, ascending by
    (order, canonical edge mask).
    """
    specs = tuple(specs)
    out = []
    seen = set()
    for p in range(len(specs), max_order + 1):
        for g in enumerate_labeled(p):
            parts = _unique_partition(g, specs)
            if parts is None or any(m == 0 for m in parts):
                continue
            key = (p, canonical_edge_mask(g))
            if key in seen:
                continue
            seen.add(key)
            anchor = (parts[0] & -parts[0]).bit_length() - 1
            out.append(make_witness(g, parts, specs, anchor))
    return out


# ---------------------------------------------------------------------------
# witness serialization


def witness_to_json(witness: UniquePartitionWitness) -> dict:
    return {
        "host": emit("graph6", witness.host),
        "parts": [sorted(bits(m)) for m in witness.parts],
        "specs": [spec_name(s) for s in witness.specs],
        "anchor": witness.anchor,
    }


def witness_from_json(data: dict) -> UniquePartitionWitness:
    """Rebuild and re-validate a witness from its JSON dict form."""
    try:
        host = parse("graph6", data["host"])
        part_lists = data["parts"]
        spec_names = data["specs"]
        anchor = data["anchor"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed witness record: {exc}") from exc
    parts = []
    for lst in part_lists:
        m = 0
        for v in lst:
            m |= 1 << int(v)
        parts.append(m)
    specs = [parse_spec(s) for s in spec_names]
    return make_witness(host, parts, specs, int(anchor))
