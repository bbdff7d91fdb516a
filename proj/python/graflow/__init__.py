"""Parallel native-graph analytics: CSR/CSC graphs, interchangeable
frontier representations, and frontier-based SSSP/BFS."""

from graflow._core import (
    Graph,
    bfs,
    build_csr,
    build_transpose,
    load_matrix_market,
    random_partition,
    reference_dijkstra,
    sssp,
)

__all__ = [
    "Graph",
    "bfs",
    "build_csr",
    "build_transpose",
    "load_matrix_market",
    "random_partition",
    "reference_dijkstra",
    "sssp",
]
