"""Snark constructions from 5-poles and Z_m voltage graphs, with exact certificates."""

from .graph import Graph, EdgeColoring, Cutset

__all__ = ["Graph", "EdgeColoring", "Cutset"]
__version__ = "0.1.0"
