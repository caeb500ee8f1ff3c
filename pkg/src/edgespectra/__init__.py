"""Exact spectra of the edge adjacency matrix and edge Laplacian of a graph."""

__version__ = "0.1.0"

from .graph import Bipartition, Graph, GraphError, parse_edge_list
from .graph6 import parse_graph6, to_graph6
from .linalg import IntMatrix, charpoly
from .matrices import EdgeMatrices, assemble, edge_adjacency
from .orientation import OrientedEdges, orient
from .poly import IntPoly

__all__ = [
    "Bipartition",
    "EdgeMatrices",
    "Graph",
    "GraphError",
    "IntMatrix",
    "IntPoly",
    "OrientedEdges",
    "assemble",
    "charpoly",
    "edge_adjacency",
    "orient",
    "parse_edge_list",
    "parse_graph6",
    "to_graph6",
]
