"""Structural encodings of rooted subgraphs, closed-form substructure counting
and Weisfeiler-Leman style refinement tests."""

__version__ = "0.1.0"

from .counting import (
    CountReport,
    Substructure,
    find_noncount_witness,
    graph_count_from_tuples,
    node_count_from_tuples,
    oracle_count,
    parse_substructure,
    tuple_count,
)
from .encoding import EncodingConfig, StructuralEncoding, encode_all, structural_embedding
from .errors import (
    ArgumentError,
    BoundsError,
    DomainError,
    EscError,
    GenerationError,
    ParseError,
    ResourceError,
    UnsupportedError,
    ValidationError,
)
from .graph import UNREACHABLE, Graph, bfs_distances, from_edge_list, induced_subgraph, named_graph, to_edge_list
from .subgraph import RootedSubgraph, enumerate_tuples, rooted_subgraph
from .wl import CfiSpec, cfi_graph, esc_distinguish, esc_refine, kwl_refine, wl1_refine, wl_distinguish

__all__ = [name for name in dir() if not name.startswith("_")]
