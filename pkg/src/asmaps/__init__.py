"""Structural analysis of AS-level maps and synthetic power-law graphs."""

__version__ = "0.1.0"

from .errors import (
    EmptyGraph,
    FitNotApplicable,
    InsufficientNodes,
    InvalidParams,
    IoError,
    NoMissingLinks,
    NodeNotFound,
    ParseError,
    TopologyError,
)
from .graph import DegreeRanking, Graph, degree, largest_component_size, rank_nodes

__all__ = [
    "DegreeRanking",
    "EmptyGraph",
    "FitNotApplicable",
    "Graph",
    "InsufficientNodes",
    "InvalidParams",
    "IoError",
    "NoMissingLinks",
    "NodeNotFound",
    "ParseError",
    "TopologyError",
    "degree",
    "largest_component_size",
    "rank_nodes",
]
