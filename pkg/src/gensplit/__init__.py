"""Graph partition recognition: a hereditary part plus a co-hereditary part.

The package decides, exactly, whether a graph's vertex set splits into a
part inducing a member of one hereditary class and a rest inducing a member
of another, using a bounded local search whose radius comes from Ramsey
thresholds.  Everything is referee'd by brute force: the recognizer, the
thresholds, the hardness gadgets, and the witness combinator each have an
exhaustive counterpart and sweep harnesses comparing the two.
"""

from .graphs import (
    FORMATS,
    FormatError,
    Graph,
    bits,
    build,
    add_universal_vertex,
    canonical_edge_mask,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    emit,
    empty_graph,
    enumerate_labeled,
    generate,
    induced,
    is_connected,
    isomorphic,
    mask_of,
    parse,
    path_graph,
    random_graph,
)
from .properties import (
    BIPARTITE,
    CLUSTER,
    CO_BIPARTITE,
    COMPLETE,
    COMPLETE_BIPARTITE,
    COMPLETE_MULTIPARTITE,
    EDGELESS,
    CliqueBound,
    OracleLimitError,
    PropertySpec,
    SpecParseError,
    additivity,
    check,
    clique_bound,
    co,
    co_clique_bound,
    contains_induced,
    free_of,
    parse_spec,
    product_of,
    spec_name,
    subset_checker,
)
from .ramsey import RamseyBound, tau, verify_tau
from .recognizer import (
    Decision,
    PartitionCertificate,
    RecognizerTrace,
    UnboundedPropertyError,
    audit_trace,
    brute_force,
    decision_record,
    find_witness,
    maximal_knfree,
    recognize,
    try_augment,
)
from .reductions import (
    ColoringPartition,
    UniquePartitionWitness,
    enumerate_partitions,
    gh_combinator,
    is_k_colorable,
    make_witness,
    search_unique_hosts,
    t6_gadget,
    t7_gadget,
    verify_strongly_unique,
    witness_from_json,
    witness_to_json,
)
from .sweep import PairSweepReport, sweep_pair

__version__ = "0.1.0"
