"""2-reachability closures, dominator trees and connectivity queries.

Vertex ids are 0-based. Edges are (tail, head) tuples.
"""

from ._reach2 import (
    Cell,
    Closure,
    ConnectivityIndex,
    Digraph,
    Error,
    Flavor,
    InvariantError,
    ParseError,
    PreconditionError,
    QueryError,
    VertexCell,
    VertexClosure,
    all_dominator_trees,
    closure,
    closure_dag,
    closure_scc,
    dominator_tree,
    edge_dominator_roots,
    gen,
    max_threads,
    oracle,
    parse_closure,
    set_max_threads,
    two_vertex_closure,
)

__all__ = [
    "Cell",
    "Closure",
    "ConnectivityIndex",
    "Digraph",
    "Error",
    "Flavor",
    "InvariantError",
    "ParseError",
    "PreconditionError",
    "QueryError",
    "VertexCell",
    "VertexClosure",
    "all_dominator_trees",
    "closure",
    "closure_dag",
    "closure_scc",
    "dominator_tree",
    "edge_dominator_roots",
    "gen",
    "max_threads",
    "oracle",
    "parse_closure",
    "set_max_threads",
    "two_vertex_closure",
]
