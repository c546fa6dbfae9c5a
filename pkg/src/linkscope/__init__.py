"""Identifiability of additive link metrics from end-to-end measurements.

The package decides which link metrics of an undirected network can be
recovered from sums along simple paths between monitor nodes, provides
executable checks for the structural conditions behind those verdicts, and
computes a minimum monitor placement that makes every metric identifiable.
"""

from . import (
    connectivity,
    corpus,
    decomposition,
    graph,
    identifiability,
    placement,
    tomography,
    witness,
)

__all__ = [
    "connectivity",
    "corpus",
    "decomposition",
    "graph",
    "identifiability",
    "placement",
    "tomography",
    "witness",
]

__version__ = "0.1.0"
