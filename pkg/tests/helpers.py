"""Independent oracles for the tests: slow but obviously-correct routines
that never touch the library's own code paths."""

import numpy as np


def floyd_warshall_distances(adjacency) -> np.ndarray:
    """All-pairs shortest paths by relaxation; UNREACHABLE marks missing paths."""
    adjacency = np.asarray(adjacency, dtype=bool)
    n = adjacency.shape[0]
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    dist[adjacency] = 1
    for k in range(n):
        dist = np.minimum(dist, dist[:, k][:, None] + dist[k, :][None, :])
    return dist


UNREACHABLE = 10**9


def random_adjacency(n: int, p: float, rng) -> np.ndarray:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return upper | upper.T


def eccentricity_by_definition(adjacency) -> np.ndarray:
    """Apply the defining rule entry by entry on top of Floyd-Warshall."""
    dist = floyd_warshall_distances(adjacency)
    assert dist.max() < UNREACHABLE, "oracle needs a connected graph"
    n = dist.shape[0]
    ecc = dist.max(axis=1)
    out = np.zeros_like(dist)
    for u in range(n):
        for v in range(n):
            if u != v and dist[u, v] == min(ecc[u], ecc[v]):
                out[u, v] = dist[u, v]
    return out
