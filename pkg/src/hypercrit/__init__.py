"""Exact analysis of matching-critical intersecting hypergraphs."""

from .criticality import (
    ClassMembership,
    PreconditionError,
    classify,
    is_1_special,
    is_edge_critical,
    is_edge_critical_definitional,
    is_maximal_1_special,
    is_maximal_1_special_definitional,
    is_minimal_vertex_critical,
    is_three_chromatic_uniform,
    is_vertex_critical,
    is_vertex_critical_definitional,
)
from .hypergraph import (
    DegreeProfile,
    Hypergraph,
    HypergraphError,
    MembershipReport,
    RankProfile,
    TransformTrace,
    canonical_form,
    connected_components,
    degree_profile,
    delete_edges,
    is_intersecting,
    is_isomorphic,
    overlapping,
    rank_profile,
    relabel,
    replay,
    shrink_edge,
    validate_membership,
    vertex_delete_and_shrink,
)
from .search import (
    CatalogEntry,
    ExtremalRecord,
    catalog,
    complete_uniform,
    enumerate_H_r,
    extremal_order,
    fano,
    verify_nesting,
)
from .solvers import (
    ColoringCertificate,
    ConstructionInapplicable,
    MatchingCertificate,
    QuasidegreeCertificate,
    TransversalCertificate,
    enumerate_min_transversals,
    is_k_colorable,
    matching_number,
    quasidegree,
    three_coloring_construct,
    transversal_number,
)
from .transforms import (
    DegenerateShrink,
    RankLiftReport,
    minimalize,
    rank_lift,
    saturate,
    shrink_to_edge_critical,
    uniformize_extend,
)

__version__ = "0.1.0"
