"""Gadgets, coloring oracle, unique-partition witnesses, and the combinator."""

import itertools

import pytest

from gensplit import (
    BIPARTITE,
    CLUSTER,
    COMPLETE,
    COMPLETE_BIPARTITE,
    EDGELESS,
    OracleLimitError,
    bits,
    brute_force,
    build,
    check,
    co,
    complete_graph,
    cycle_graph,
    disjoint_union,
    emit,
    empty_graph,
    enumerate_labeled,
    enumerate_partitions,
    free_of,
    gh_combinator,
    is_k_colorable,
    isomorphic,
    make_witness,
    mask_of,
    path_graph,
    random_graph,
    search_unique_hosts,
    t6_gadget,
    t7_gadget,
    verify_strongly_unique,
    witness_from_json,
    witness_to_json,
)
from gensplit.reductions import witness_specs_split

P3 = path_graph(3)
P4 = path_graph(4)
C4 = cycle_graph(4)
C5 = cycle_graph(5)

SPLIT = (EDGELESS, COMPLETE)


def all_labeled(max_order, start=0):
    for p in range(start, max_order + 1):
        yield from enumerate_labeled(p)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build(10, outer + inner + spokes)


def oracle_colorable(g, k):
    for assign in itertools.product(range(k), repeat=g.order):
        if all(assign[u] != assign[v] for u, v in g.edges()):
            return True
    return g.order == 0


class TestColoring:
    def test_against_enumeration(self):
        for g in all_labeled(4):
            for k in (1, 2, 3):
                assert is_k_colorable(g, k) == oracle_colorable(g, k), (g, k)

    def test_petersen(self):
        g = petersen()
        assert is_k_colorable(g, 3) == oracle_colorable(g, 3) is True
        assert is_k_colorable(g, 2) == oracle_colorable(g, 2) is False

    def test_odd_cycle(self):
        assert not is_k_colorable(C5, 2)
        assert is_k_colorable(C5, 3)

    def test_validation_and_gate(self):
        with pytest.raises(ValueError):
            is_k_colorable(C5, 0)
        with pytest.raises(OracleLimitError):
            is_k_colorable(empty_graph(25), 3)


class TestGadgets:
    def test_t6_shape(self):
        assert t6_gadget(empty_graph(0)) == complete_graph(3)
        g = t6_gadget(C5)
        assert g.order == 8
        assert emit("graph6", g) == "Ghc?GK"  # C5 plus a disjoint triangle

    def test_t7_shape(self):
        assert t7_gadget(empty_graph(0)) == complete_graph(1)
        star = t7_gadget(empty_graph(3))
        assert sorted(star.edges()) == [(0, 3), (1, 3), (2, 3)]

    def test_t6_reduces_coloring_to_partition(self):
        qs = co(CLUSTER)
        for g in all_labeled(4):
            expected = is_k_colorable(g, 3)
            assert brute_force(t6_gadget(g), BIPARTITE, qs).member == expected, g

    def test_t7_reduces_coloring_to_partition(self):
        for g in all_labeled(4):
            expected = is_k_colorable(g, 3)
            assert (
                brute_force(t7_gadget(g), BIPARTITE, COMPLETE_BIPARTITE).member
                == expected
            ), g


class TestEnumeratePartitions:
    def test_p3_split_partitions(self):
        got = [cp.parts for cp in enumerate_partitions(P3, SPLIT)]
        # ascending assignment order, vertex 0 varying slowest
        assert got == [
            (mask_of([0, 2]), mask_of([1])),
            (mask_of([0]), mask_of([1, 2])),
            (mask_of([2]), mask_of([0, 1])),
        ]

    def test_parts_partition_the_vertex_set(self):
        from gensplit import induced

        for s in range(10):
            g = random_graph(5, 0.5, seed=s)
            for cp in enumerate_partitions(g, SPLIT):
                a, b = cp.parts
                assert a & b == 0
                assert a | b == g.full_mask
                assert check(EDGELESS, induced(g, a))
                assert check(COMPLETE, induced(g, b))

    def test_gate(self):
        with pytest.raises(OracleLimitError):
            next(enumerate_partitions(empty_graph(24), SPLIT))

    def test_needs_a_spec(self):
        with pytest.raises(ValueError):
            next(enumerate_partitions(P3, ()))


class TestStrongUniqueness:
    def test_examples(self):
        assert verify_strongly_unique(P4, SPLIT)
        assert not verify_strongly_unique(P3, SPLIT)  # three partitions
        assert not verify_strongly_unique(C4, SPLIT)  # none at all

    def test_equal_spec_interchange_collapses(self):
        # with two interchangeable edgeless specs, the single vertex has
        # two ordered partitions that are the same class
        specs = (EDGELESS, EDGELESS)
        assert verify_strongly_unique(complete_graph(1), specs)
        # two isolated vertices: {0}|{1} vs {0,1}|{} etc. are distinct classes
        assert not verify_strongly_unique(empty_graph(2), specs)


class TestWitnessConstruction:
    def p4_witness(self):
        return make_witness(P4, (mask_of([0, 3]), mask_of([1, 2])), SPLIT, anchor=0)

    def test_p4_witness_fields(self):
        w = self.p4_witness()
        assert w.anchor == 0
        assert w.anchor_w_neighborhood == mask_of([1])
        assert verify_strongly_unique(w.host, w.specs)

    def test_validation_messages(self):
        a, rest = mask_of([0, 3]), mask_of([1, 2])
        with pytest.raises(ValueError, match="parts for"):
            make_witness(P4, (a,), SPLIT, 0)
        with pytest.raises(ValueError, match="empty"):
            make_witness(P4, (0, P4.full_mask), SPLIT, 0)
        with pytest.raises(ValueError, match="overlaps"):
            make_witness(P4, (a, mask_of([1, 2, 3])), SPLIT, 0)
        with pytest.raises(ValueError, match="cover"):
            make_witness(P4, (mask_of([0]), mask_of([1, 2])), SPLIT, 0)
        with pytest.raises(ValueError, match="satisfy"):
            make_witness(P4, (mask_of([0, 1]), mask_of([2, 3])), SPLIT, 0)
        with pytest.raises(ValueError, match="anchor"):
            make_witness(P4, (a, rest), SPLIT, 1)

    def test_specs_must_split_additively(self):
        # complete is join-closed, edgeless union-closed: no valid boundary
        # in this order
        with pytest.raises(ValueError, match="additive prefix"):
            make_witness(
                disjoint_union(complete_graph(1), complete_graph(1)),
                (mask_of([0]), mask_of([1])),
                (COMPLETE, EDGELESS),
                0,
            )

    def test_boundary_takes_largest_additive_prefix(self):
        # free(P4) is closed both ways; with specs (edgeless, free(P4),
        # complete) the boundary lands after free(P4)
        specs = (EDGELESS, free_of([P4]), COMPLETE)
        host = empty_graph(3)
        w = make_witness(host, (1, 2, 4), specs, 0)
        left, right = witness_specs_split(w)
        assert left.kind == "product_of"
        assert left.factors == (EDGELESS, free_of([P4]))
        assert right == COMPLETE

    def test_split_pair_for_two_specs(self):
        left, right = witness_specs_split(self.p4_witness())
        assert (left, right) == SPLIT


class TestCombinator:
    def p4_witness(self):
        return make_witness(P4, (mask_of([0, 3]), mask_of([1, 2])), SPLIT, anchor=0)

    def test_explicit_wiring(self):
        # K2 attached to the P4 host: host shifts up by 2, cross edges go
        # from both g vertices to the anchor's clique-side neighbor (1 -> 3)
        g = complete_graph(2)
        got = gh_combinator(g, self.p4_witness())
        expected = build(6, [(0, 1), (2, 3), (3, 4), (4, 5), (0, 3), (1, 3)])
        assert got == expected

    def test_empty_attachment_is_host(self):
        assert gh_combinator(empty_graph(0), self.p4_witness()) == P4

    def test_membership_transfers(self):
        w = self.p4_witness()
        for g in all_labeled(3):
            lhs = check(EDGELESS, g)
            rhs = brute_force(gh_combinator(g, w), *SPLIT).member
            assert lhs == rhs, g

    def test_rejects_corrupted_witness(self):
        w = self.p4_witness()
        bad = type(w)(
            host=w.host,
            parts=w.parts,
            specs=w.specs,
            anchor=w.anchor,
            anchor_w_neighborhood=mask_of([2]),
        )
        with pytest.raises(ValueError, match="neighborhood"):
            gh_combinator(complete_graph(1), bad)


class TestHostSearch:
    # frozen output of the order-5 search; uniqueness re-confirmed below
    EXPECTED = [
        ("Ck", [[2, 3], [0, 1]], 2, [1]),
        ("Dk?", [[2, 3, 4], [0, 1]], 2, [1]),
        ("Dk_", [[2, 3, 4], [0, 1]], 2, [1]),
        ("Dz_", [[3, 4], [0, 1, 2]], 3, [1, 2]),
        ("D|o", [[3, 4], [0, 1, 2]], 3, [0, 2]),
    ]

    def test_split_hosts_to_order_5(self):
        got = search_unique_hosts(SPLIT, 5)
        summary = [
            (
                emit("graph6", w.host),
                [sorted(bits(m)) for m in w.parts],
                w.anchor,
                sorted(bits(w.anchor_w_neighborhood)),
            )
            for w in got
        ]
        assert summary == self.EXPECTED

    def test_smallest_host_class_is_p4(self):
        first = search_unique_hosts(SPLIT, 4)
        assert len(first) == 1
        assert isomorphic(first[0].host, P4)

    def test_each_found_host_is_strongly_unique(self):
        for w in search_unique_hosts(SPLIT, 5):
            assert verify_strongly_unique(w.host, w.specs)
            count = sum(1 for _ in enumerate_partitions(w.host, w.specs))
            assert count == 1


class TestWitnessJson:
    def p4_witness(self):
        return make_witness(P4, (mask_of([0, 3]), mask_of([1, 2])), SPLIT, anchor=0)

    def test_round_trip(self):
        w = self.p4_witness()
        data = witness_to_json(w)
        assert data == {
            "host": "Ch",
            "parts": [[0, 3], [1, 2]],
            "specs": ["edgeless", "complete"],
            "anchor": 0,
        }
        assert witness_from_json(data) == w

    def test_malformed_records(self):
        w = witness_to_json(self.p4_witness())
        missing = dict(w)
        del missing["anchor"]
        with pytest.raises(ValueError):
            witness_from_json(missing)
        empty_part = dict(w)
        empty_part["parts"] = [[], [0, 1, 2, 3]]
        with pytest.raises(ValueError):
            witness_from_json(empty_part)
