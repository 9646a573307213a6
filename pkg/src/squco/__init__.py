"""Square-complementary graph toolkit.

A graph is square-complementary ("squco") when its square (extra edges
between all vertices at distance two) is isomorphic to its complement.
This package verifies the property, evaluates the known necessary
conditions, certifies why girth-6 graphs fail, and enumerates graphs
isomorph-free to reproduce the desk-scale facts: the known examples, and
the absence of any squco graph of girth 6 at searchable orders.
"""

from ._version import __version__
from .graph import (DistanceLayers, Graph, GraphError, INFINITE_GIRTH, MAX_ORDER,
                    bfs_layers, complement, degree_sequence, eccentricities, girth,
                    is_biconnected, is_bipartite, is_connected, is_regular,
                    make_graph, radius_diameter, square)
from .iso import (Certificate, OrbitPartition, are_isomorphic, canonical_form,
                  canonical_graph, certificate, certificate_to_graph,
                  is_vertex_transitive)
from .checks import (FILTER_ORDER, FILTERS, FilterResult, LemmaViolation,
                     PropertyReport, QUICK_FILTERS, RefutationTag,
                     RefutationWitness, SMALL_CENSUS_MAX_ORDER, confirm_witness,
                     complement_square_degrees, girth6_local_lemma, is_squco,
                     necessary_filter, refute_girth6, report, run_filter_battery)
from .generate import (Graph6Error, NAMED_EXAMPLES, circulant, g6_decode,
                       g6_encode, g6_lines, lcf, named)
from .search import (AcceptedGraph, CheckpointError, SearchConfig, SearchError,
                     SearchInterrupted, SearchSummary, checkpoint_load,
                     checkpoint_save, enumerate_graphs)

__all__ = [
    "__version__",
    # graph core
    "Graph", "GraphError", "DistanceLayers", "INFINITE_GIRTH", "MAX_ORDER",
    "make_graph", "complement", "square", "bfs_layers", "girth",
    "radius_diameter", "eccentricities", "is_biconnected", "is_connected",
    "is_bipartite", "is_regular", "degree_sequence",
    # isomorphism
    "Certificate", "OrbitPartition", "canonical_form", "certificate",
    "canonical_graph", "certificate_to_graph", "are_isomorphic",
    "is_vertex_transitive",
    # squco checks
    "is_squco", "necessary_filter", "run_filter_battery", "FilterResult",
    "FILTERS", "FILTER_ORDER", "QUICK_FILTERS", "girth6_local_lemma",
    "LemmaViolation", "refute_girth6", "confirm_witness", "RefutationTag",
    "RefutationWitness", "SMALL_CENSUS_MAX_ORDER", "complement_square_degrees",
    "report", "PropertyReport",
    # constructors and codec
    "circulant", "lcf", "named", "NAMED_EXAMPLES", "g6_encode", "g6_decode",
    "g6_lines", "Graph6Error",
    # search
    "SearchConfig", "SearchSummary", "SearchError", "SearchInterrupted",
    "CheckpointError", "AcceptedGraph", "enumerate_graphs",
    "checkpoint_save", "checkpoint_load",
]
