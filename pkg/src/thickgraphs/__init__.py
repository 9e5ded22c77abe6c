"""Recognition of thick graphs and exact counting on quasi thick forests."""

from .chordal import is_chordal, lexbfs_order, maximal_cliques_chordal, minimal_triangulation
from .counting import (
    chi_parameter_colour_count,
    cobipartite_colourings,
    count_colourings,
    falling_factorial,
    independence_polynomial,
    matching_counts,
    weighted_independent_sum,
)
from .decomposition import clique_cutset_decompose, is_quasi_thick_forest, recognize_cobipartite
from .fpt import recognize_fpt_trianglefree
from .graph import Graph, GraphInputError, from_edge_list, read_graph, write_graph
from .model import ThickModel, verify_model
from .recognition import (
    RecognitionOutcome,
    edge_partition,
    expand_clique,
    leaf_detach,
    recognize_thick_forest,
    unipolar_decompose,
)
from .treewidth import NiceTreeDecomposition, count_ind_treewidth, make_nice, validate_td

__version__ = "0.1.0"
