import logging

import graphviz
import networkx as nx

from ..exceptions import HorizonError
from ..models import FactorLanguage, sort_key

logger = logging.getLogger(__name__)


def rauzy_graph(language: FactorLanguage, k: int) -> nx.DiGraph:
    """Nodes are the length-k words; each length-(k+1) word w is an edge w[:-1] → w[1:]"""
    if k < 1 or k >= language.horizon:
        raise HorizonError(
            f"Rauzy graph of level {k} needs 1 ≤ k < horizon ({language.horizon})"
        )
    graph = nx.DiGraph(level=k)
    for word in sorted(language.of_length(k), key=sort_key):
        graph.add_node(word)
    for word in sorted(language.of_length(k + 1), key=sort_key):
        graph.add_edge(word[:-1], word[1:], label=word)
    logger.debug(
        "Rauzy graph level %s: %s nodes, %s edges",
        k,
        graph.number_of_nodes(),
        graph.number_of_edges(),
    )
    return graph


def to_dot(graph: nx.DiGraph, name: str = "rauzy") -> str:
    dot = graphviz.Digraph(name=name)
    for node in graph.nodes:
        dot.node(node)
    for tail, head, data in graph.edges(data=True):
        dot.edge(tail, head, label=data.get("label", ""))
    return dot.source


def rauzy_export(language: FactorLanguage, k: int) -> str:
    """DOT source of the level-k Rauzy graph"""
    return to_dot(rauzy_graph(language, k), name=f"rauzy_{k}")
