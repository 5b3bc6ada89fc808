"""
Graph exchange formats: JSON, Graphviz DOT and networkx.

JSON stores each label as its Python literal text, so graph_from_json
restores an identical Graph (same rows, same labels, same order).
"""

import ast
import json
import logging
from typing import Any, Dict

import networkx as nx

from ..core.graph import Graph, GraphError

logger = logging.getLogger(__name__)


def graph_to_dict(graph: Graph) -> Dict[str, Any]:
    return {
        "name": graph.name,
        "n": graph.n,
        "labels": [repr(label) for label in graph.labels],
        "edges": [list(edge) for edge in graph.edges()],
    }


def graph_to_json(graph: Graph, indent: int = 2) -> str:
    return json.dumps(graph_to_dict(graph), indent=indent)


def graph_from_json(text: str) -> Graph:
    """
    Parse graph_to_json output.

    Raises:
        GraphError: on malformed documents or labels that are not literals
    """
    try:
        data = json.loads(text)
        n = int(data["n"])
        labels = [ast.literal_eval(label) for label in data["labels"]]
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError, SyntaxError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None
    if len(labels) != n:
        raise GraphError(f"{len(labels)} labels for {n} vertices")
    return Graph.from_edges(n, edges, labels, data.get("name", ""))


def graph_to_dot(graph: Graph) -> str:
    name = graph.name.replace('"', "'") or "G"
    lines = [f'graph "{name}" {{']
    for v, label in enumerate(graph.labels):
        text = str(label).replace('"', "'")
        lines.append(f'  {v} [label="{text}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_networkx(graph: Graph) -> nx.Graph:
    """Nodes are vertex indices with a `label` attribute."""
    nx_graph = nx.Graph(name=graph.name)
    nx_graph.add_nodes_from((v, {"label": label}) for v, label in enumerate(graph.labels))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Vertices are renumbered in node iteration order; node keys become labels."""
    nodes = list(nx_graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    edges = [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
    logger.debug(f"imported networkx graph with {len(nodes)} nodes, {len(edges)} edges")
    return Graph.from_edges(len(nodes), edges, nodes, nx_graph.graph.get("name", ""))
