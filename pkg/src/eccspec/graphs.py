"""Simple undirected graphs and the generators used throughout the library.

Vertices are always 0..n-1 and adjacency is a dense symmetric boolean matrix.
That keeps every operation a couple of numpy expressions; the library targets
desk-scale graphs (n up to a few thousand), where O(n^2) storage is irrelevant
next to the dense distance and eccentricity matrices built on top.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraphError, InvalidSpecError, PreconditionViolatedError


class Graph:
    """Simple undirected graph with a read-only dense adjacency matrix."""

    __slots__ = ("n", "adjacency")

    def __init__(self, adjacency):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if adj.shape[0] == 0:
            raise ValueError("graphs have at least one vertex")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if bool(np.diagonal(adj).any()):
            raise ValueError("self-loops are not allowed")
        adj.setflags(write=False)
        self.n = int(adj.shape[0])
        self.adjacency = adj

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph on n vertices from (u, v) pairs; duplicates are fine."""
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @property
    def num_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def degree(self, u: int) -> int:
        return int(self.adjacency[u].sum())

    def neighbors(self, u: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency))
        return list(zip(us.tolist(), vs.tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"


@dataclass(frozen=True)
class MultipartiteSpec:
    """A partition n1 >= n2 >= ... >= np >= 1 naming the graph K_{n1,...,np}.

    The constructor sorts, so equality of specs is set-equality of partitions.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        try:
            parts = tuple(sorted((int(x) for x in self.parts), reverse=True))
        except TypeError as exc:
            raise InvalidSpecError(f"parts must be integers: {self.parts!r}") from exc
        if not parts:
            raise InvalidSpecError("parts list is empty")
        if parts[-1] <= 0:
            raise InvalidSpecError(f"all parts must be >= 1, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def p(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "K_{" + ",".join(str(x) for x in self.parts) + "}"


def as_spec(parts) -> MultipartiteSpec:
    """Accept a MultipartiteSpec or any iterable of class sizes."""
    if isinstance(parts, MultipartiteSpec):
        return parts
    return MultipartiteSpec(tuple(parts))


def build_multipartite(parts) -> Graph:
    """Complete multipartite graph: u ~ v exactly when they sit in different classes.

    Vertices are laid out class by class, largest class first.
    """
    spec = as_spec(parts)
    labels = np.repeat(np.arange(spec.p), spec.parts)
    return Graph(labels[:, None] != labels[None, :])


def complete(n: int) -> Graph:
    return build_multipartite([1] * n)


def star(n: int) -> Graph:
    """Star on n vertices: n-1 leaves joined to one centre."""
    return build_multipartite([n - 1, 1])


def complete_split(p1: int, p2: int) -> Graph:
    """Independent set of size p1 fully joined to a clique of size p2."""
    return build_multipartite([p1] + [1] * p2)


def complement(g: Graph) -> Graph:
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    return Graph(adj)


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product: (v1,w1) ~ (v2,w2) when each coordinate is equal or
    adjacent, excluding the fully-equal pair.  Vertex (v, w) maps to v*h.n + w.
    """
    ag = g.adjacency.astype(np.uint8)
    ah = h.adjacency.astype(np.uint8)
    ig = np.eye(g.n, dtype=np.uint8)
    ih = np.eye(h.n, dtype=np.uint8)
    combined = np.kron(ag, ah) + np.kron(ag, ih) + np.kron(ig, ah)
    return Graph(combined > 0)


@dataclass(frozen=True)
class DistanceMatrix:
    """Exact shortest-path distances with per-vertex eccentricities."""

    matrix: np.ndarray
    eccentricities: np.ndarray
    diameter: int


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS distances between all pairs, computed by boolean matrix powers.

    Raises DisconnectedGraphError when some pair is unreachable, since the
    eccentricity (and everything downstream of it) is undefined there.
    """
    n = g.n
    dist = np.where(g.adjacency, 1, -1).astype(np.int64)
    np.fill_diagonal(dist, 0)
    reach = g.adjacency.copy()
    adj8 = g.adjacency.astype(np.uint8)
    d = 1
    while True:
        unknown = dist < 0
        if not unknown.any():
            break
        reach = (reach.astype(np.uint8) @ adj8) > 0
        newly = reach & unknown
        if not newly.any():
            raise DisconnectedGraphError(
                "graph is disconnected; eccentricities are undefined"
            )
        d += 1
        dist[newly] = d
    dist.setflags(write=False)
    ecc = dist.max(axis=1)
    ecc.setflags(write=False)
    return DistanceMatrix(dist, ecc, int(ecc.max()))


def antipodal_class(g: Graph) -> int | None:
    """Common fibre size when "equal or at diameter distance" is an equivalence
    relation with equally sized classes; None otherwise.

    For complete graphs every pair is at diameter distance 1, so the single
    fibre has size n and the result is n.
    """
    if g.n < 2:
        raise PreconditionViolatedError("antipodal structure needs at least two vertices")
    dm = all_pairs_distances(g)
    rel = dm.matrix == dm.diameter
    np.fill_diagonal(rel, True)
    seen = np.zeros(g.n, dtype=bool)
    size = None
    for u in range(g.n):
        if seen[u]:
            continue
        members = np.flatnonzero(rel[u])
        if not (rel[members] == rel[u]).all():
            return None  # relation is not transitive: fibres are ill-defined
        if size is None:
            size = len(members)
        elif len(members) != size:
            return None
        seen[members] = True
    return int(size)
