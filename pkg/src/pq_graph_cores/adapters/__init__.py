"""
PQ Graph Cores - Adapters Module

Adapters between the core Graph type and external formats.

Public API exports:
- graph_to_json / graph_from_json: lossless JSON exchange
- graph_to_dot: Graphviz export
- to_networkx / from_networkx: networkx interop
"""

from .serialization import (
    from_networkx,
    graph_from_json,
    graph_to_dict,
    graph_to_dot,
    graph_to_json,
    to_networkx,
)

__all__ = [
    "graph_to_dict",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
    "to_networkx",
    "from_networkx",
]
