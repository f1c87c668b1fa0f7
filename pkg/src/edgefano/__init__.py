"""Exact rigidity classification for toric varieties of directed graphs."""

from .classify import (
    C1Witness,
    C2Witness,
    ClassificationReport,
    classify_acyclic_dim2,
    find_bad_c2,
    find_c1,
    full_report,
    rigid_certified,
    two_face_census,
)
from .digraph import (
    CycleWalk,
    DirectedGraph,
    GraphError,
    UndirectedGraph,
    format_edge_list,
    parse_edge_list,
)
from .edge_polytopes import (
    HomogeneousCycle,
    SupportingHyperplane,
    directed_edge_polytope,
    higashitani_smooth,
    homogeneous_cycles,
    is_fano_graph,
    mu_dist_condition,
    mu_labeling,
    rho,
    supporting_hyperplane,
    symmetric_edge_polytope,
    tilde_polytope,
)
from .face_theory import (
    PathInconsistent,
    build_comp_graph,
    compute_weight,
    is_admissible,
    is_face_of_tilde,
    path_consistent,
    weight_decrease,
)
from .geometry import (
    Face,
    Facet,
    GeometryError,
    LatticePolytope,
    free_sum,
    hull_vertices,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
