"""Rainbow connectivity toolkit.

Exact verification of rainbow (vertex-)connectivity of colored graphs,
exact computation of the rainbow connection numbers rc and rvc at desk
scale, verdict-preserving transformations (crossing-gadget
planarization, subdivision bipartization, pendant line-graph
construction), and constructive colorings realizing the outerplanar
small-diameter upper bounds.
"""
from .analysis import (
    CdsResult,
    HamiltonCycle,
    StructureReport,
    analyze,
    is_outerplanar,
    line_graph,
    min_connected_dominating_set,
    outer_hamilton_cycle,
)
from .construct import (
    BoundedColoring,
    cds_extension_coloring,
    color_cycle,
    color_cycle_graph,
    color_hamiltonian,
    color_outerplanar_diam2,
    color_outerplanar_diam3,
)
from .graphs import (
    Crossing,
    Drawing,
    EdgeColoring,
    Graph,
    VertexColoring,
    build_graph,
    dense_colors,
)
from .reductions import (
    GadgetRecord,
    ReductionOutput,
    bipartize_subdivision,
    detect_crossings,
    planarize,
    split_multicrossed_edges,
    to_line_rvc,
)
from .solver import SolveResult, rc_exact, rc_upper_witness, rvc_exact
from .verify import (
    PairWitness,
    Verdict,
    is_rainbow_connected,
    is_rainbow_vertex_connected,
    rainbow_path_exists,
    vertex_rainbow_path_exists,
)

__all__ = [
    "BoundedColoring",
    "CdsResult",
    "Crossing",
    "Drawing",
    "EdgeColoring",
    "GadgetRecord",
    "Graph",
    "HamiltonCycle",
    "PairWitness",
    "ReductionOutput",
    "SolveResult",
    "StructureReport",
    "Verdict",
    "VertexColoring",
    "analyze",
    "bipartize_subdivision",
    "build_graph",
    "cds_extension_coloring",
    "color_cycle",
    "color_cycle_graph",
    "color_hamiltonian",
    "color_outerplanar_diam2",
    "color_outerplanar_diam3",
    "dense_colors",
    "detect_crossings",
    "is_outerplanar",
    "is_rainbow_connected",
    "is_rainbow_vertex_connected",
    "line_graph",
    "min_connected_dominating_set",
    "outer_hamilton_cycle",
    "planarize",
    "rainbow_path_exists",
    "rc_exact",
    "rc_upper_witness",
    "rvc_exact",
    "split_multicrossed_edges",
    "to_line_rvc",
    "vertex_rainbow_path_exists",
]

__version__ = "0.1.0"
