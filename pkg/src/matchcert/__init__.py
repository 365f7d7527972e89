"""Perfect matchings and Tutte violators for finite simple graphs."""

__version__ = "0.1.0"

from .errors import MatchcertError
from .graph import (
    Graph,
    Subgraph,
    add_edge,
    coe,
    delete_verts,
    edge,
    is_clique,
    mk_graph,
    spanning_coe,
    subgraph_le,
    symm_diff,
)
from .matching import (
    Matching,
    cycle_through_edge,
    is_alternating,
    is_cycles_graph,
    matching_symm_diff,
    symm_diff_augment,
    verify_matching,
    verify_perfect_matching,
)
from .representatives import choose_representatives, represents
from .tutte import (
    Certificate,
    NearMatchingWitness,
    PerfectMatchingCertificate,
    TutteViolatorCertificate,
    certify,
    clique_components_matching,
    combine_near_matchings,
    delete_universal_verts,
    find_non_clique_witness,
    is_tutte_violator,
    universal_verts,
    verify_certificate,
)
from .walks import Walk, classify_walk, connected_components, odd_components, reachable, walk_edges
