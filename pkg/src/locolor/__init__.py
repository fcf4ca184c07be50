"""Exact algorithms for small locally colourable graphs, plus a claim-verification CLI."""

from .catalog import (
    ConstructionParams,
    NamedGraph,
    balanced_blowup,
    blow_up,
    catalog_names,
    complement,
    complete,
    cycle,
    join,
    kneser,
    named,
    schrijver,
    threshold_construction,
    turan,
    wheel,
)
from .colouring import (
    chromatic_number,
    clique_number,
    cliques_of_size,
    has_clique,
    independence_number,
    is_k_colourable,
    is_vertex_critical,
)
from .graph import (
    Graph,
    GraphError,
    WeightedGraph,
    common_neighbourhood,
    induced_subgraph,
    min_degree,
    ordered_edge_count,
    weighted_incidence,
    weighted_min_degree_ratio,
)
from .graphio import emit_graph, from_graph6, parse_graph, to_graph6
from .homomorphism import (
    Homomorphism,
    are_isomorphic,
    find_hom,
    find_induced_embedding,
    find_injective_hom,
    verify_hom_diagram,
)
from .localstruct import (
    PairClass,
    PairKind,
    classify_pair,
    contains_odd_wheel,
    dense_pair_graph,
    dense_set,
    family_nesting_check,
    is_a_locally_b_partite,
    is_edge_maximal_in_family,
    lifting_inequality_check,
    quasidense_reachable,
)
from .claims import REGISTRY, run_claims

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
