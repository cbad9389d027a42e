"""Signed-graph data model, named constructors, and structural recognizers.

Vertices are 1-based in every public interface.  A SignedGraph stores a
symmetric {-1, 0, +1} adjacency matrix; a SignedBipartiteGraph stores an
r x s sign matrix for parts X = {v_1..v_r} (vertices 1..r) and
Y = {w_1..w_s} (vertices r+1..r+s).  All objects are immutable after
construction.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadInput,
    BadParam,
    BadParts,
    BadVertex,
    DuplicateEdge,
    NotBipartite,
    SelfLoop,
)

CATALOG_NAMES = ("Q", "Cycle", "B6", "B7", "U1")


def _freeze(arr):
    arr.flags.writeable = False
    return arr


class SignedGraph:
    """Symmetric sign-valued adjacency on n vertices."""

    __slots__ = ("n", "adj")

    def __init__(self, n, adj):
        adj = np.asarray(adj, dtype=np.int8)
        if n < 1:
            raise BadParam("vertex count must be positive")
        if adj.shape != (n, n):
            raise BadInput(f"adjacency must be {n}x{n}, got {adj.shape}")
        if not np.array_equal(adj, adj.T):
            raise BadInput("adjacency must be symmetric")
        if np.any(np.diag(adj) != 0):
            raise SelfLoop("adjacency must have zero diagonal")
        if not np.isin(adj, (-1, 0, 1)).all():
            raise BadInput("adjacency entries must be in {-1, 0, +1}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "adj", _freeze(adj.copy()))

    def __setattr__(self, name, value):
        raise AttributeError("SignedGraph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SignedGraph)
            and self.n == other.n
            and np.array_equal(self.adj, other.adj)
        )

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"SignedGraph(n={self.n}, m={self.edge_count()})"

    def edges(self):
        """Signed edge list [(u, v, sign)] with u < v, 1-based."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                sign = int(self.adj[u, v])
                if sign != 0:
                    out.append((u + 1, v + 1, sign))
        return out

    def edge_count(self):
        return int(np.count_nonzero(self.adj)) // 2

    def negative_edge_count(self):
        return int(np.count_nonzero(self.adj == -1)) // 2

    def underlying(self):
        """The unsigned graph (every edge positive)."""
        return SignedGraph(self.n, np.abs(self.adj))

    def negative_subgraph_adjacency(self):
        """0/1 adjacency of the negative subgraph H."""
        return (self.adj == -1).astype(np.int8)

    def neighbors(self, u):
        return [v + 1 for v in np.flatnonzero(self.adj[u - 1])]

    def components(self):
        """Connected components of the underlying graph, as 1-based lists."""
        seen = np.zeros(self.n, dtype=bool)
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            comp = []
            queue = deque([root])
            seen[root] = True
            while queue:
                u = queue.popleft()
                comp.append(u + 1)
                for v in np.flatnonzero(self.adj[u]):
                    if not seen[v]:
                        seen[v] = True
                        queue.append(v)
            comps.append(comp)
        return comps

    def is_connected(self):
        return len(self.components()) == 1

    def bipartition(self):
        """2-coloring of the underlying graph as ({X...}, {Y...}), 1-based.

        Vertex 1's side goes to X; per component the side containing its
        lowest vertex goes to X.  Raises NotBipartite on an odd cycle.
        """
        color = np.full(self.n, -1, dtype=np.int8)
        for root in range(self.n):
            if color[root] != -1:
                continue
            color[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in np.flatnonzero(self.adj[u]):
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        raise NotBipartite("graph contains an odd cycle")
        x = [u + 1 for u in range(self.n) if color[u] == 0]
        y = [u + 1 for u in range(self.n) if color[u] == 1]
        return x, y


class SignedBipartiteGraph:
    """Signed graph with certified bipartition, stored as an r x s sign matrix.

    Parts are normalized so r <= s at construction; if the input had to be
    transposed the `parts_swapped` flag records it.
    """

    __slots__ = ("r", "s", "signs", "parts_swapped")

    def __init__(self, signs, parts_swapped=False):
        signs = np.asarray(signs, dtype=np.int8)
        if signs.ndim != 2:
            raise BadInput("sign matrix must be 2-dimensional")
        r, s = signs.shape
        if r > s:
            signs = signs.T
            r, s = s, r
            parts_swapped = True
        if r < 1:
            raise BadParts("parts must be non-empty")
        if not np.isin(signs, (-1, 0, 1)).all():
            raise BadInput("sign entries must be in {-1, 0, +1}")
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "s", int(s))
        object.__setattr__(self, "signs", _freeze(signs.copy()))
        object.__setattr__(self, "parts_swapped", bool(parts_swapped))

    def __setattr__(self, name, value):
        raise AttributeError("SignedBipartiteGraph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SignedBipartiteGraph)
            and self.r == other.r
            and self.s == other.s
            and np.array_equal(self.signs, other.signs)
        )

    def __hash__(self):
        return hash((self.r, self.s, self.signs.tobytes()))

    def __repr__(self):
        return f"SignedBipartiteGraph(r={self.r}, s={self.s}, m={self.edge_count()})"

    @property
    def n(self):
        return self.r + self.s

    def edge_count(self):
        return int(np.count_nonzero(self.signs))

    def negative_mask(self):
        """Boolean r x s matrix marking the negative edges."""
        return self.signs == -1

    def is_complete_host(self):
        return bool((self.signs != 0).all())

    def to_signed_graph(self):
        """Expand to a SignedGraph on r+s vertices (X first, then Y)."""
        n = self.r + self.s
        adj = np.zeros((n, n), dtype=np.int8)
        adj[: self.r, self.r :] = self.signs
        adj[self.r :, : self.r] = self.signs.T
        return SignedGraph(n, adj)

    def edges(self):
        """Signed edge list with X = 1..r and Y = r+1..r+s."""
        out = []
        for i in range(self.r):
            for j in range(self.s):
                sign = int(self.signs[i, j])
                if sign != 0:
                    out.append((i + 1, self.r + j + 1, sign))
        return out

    def with_signs(self, signs):
        """Same parts, new sign matrix (no part normalization re-check)."""
        return SignedBipartiteGraph(signs, parts_swapped=self.parts_swapped)


@dataclass(frozen=True)
class NegativeSubgraphStats:
    """Degrees and common neighborhoods of the negative subgraph H."""

    degX: tuple
    degY: tuple
    commonX: tuple  # r x r tuple of tuples, |N_H(v_i) & N_H(v_j)|

    @property
    def m(self):
        return sum(self.degX)


def from_edge_list(n, edges):
    """Build a SignedGraph from 1-based (u, v, sign) triples."""
    adj = np.zeros((n, n), dtype=np.int8)
    seen = set()
    for u, v, sign in edges:
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise BadVertex(f"vertex out of range in edge ({u}, {v})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if sign not in (-1, 1):
            raise BadParam(f"edge sign must be +1 or -1, got {sign!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u - 1, v - 1] = sign
        adj[v - 1, u - 1] = sign
    return SignedGraph(n, adj)


def complete_bipartite(r, s, negative_edges=()):
    """(K_{r,s}, H^-): all rs edges present, the listed (i, j) pairs negative."""
    if r > s:
        raise BadParts("parts must satisfy r <= s (swap the arguments)")
    if r < 1:
        raise BadParts("parts must be non-empty")
    signs = np.ones((r, s), dtype=np.int8)
    seen = set()
    for i, j in negative_edges:
        if not (1 <= i <= r) or not (1 <= j <= s):
            raise BadVertex(f"negative edge ({i}, {j}) out of range")
        if (i, j) in seen:
            raise DuplicateEdge(f"duplicate negative edge ({i}, {j})")
        seen.add((i, j))
        signs[i - 1, j - 1] = -1
    return SignedBipartiteGraph(signs)


def gstar(r, s):
    """The signed K_{r,s} whose only negative edge is v1 w1."""
    return complete_bipartite(r, s, [(1, 1)])


def double_star(r, s, i, j):
    """(K_{r,s}, D_{i,j}^-): negative tree with centers v1, w1.

    v1 is negatively adjacent to w_1..w_j and w1 to v_1..v_i; the negative
    subgraph has k = i + j - 1 edges.
    """
    if not (1 <= i <= r) or not (1 <= j <= s):
        raise BadParam(f"double star parameters ({i}, {j}) out of range")
    neg = [(1, t) for t in range(1, j + 1)]
    neg += [(t, 1) for t in range(2, i + 1)]
    return complete_bipartite(r, s, neg)


def _path_edges(vertices):
    return [(a, b) for a, b in zip(vertices, vertices[1:])]


def catalog_underlying(name, h=None, k=None, n=None):
    """All-positive underlying graph of a minimum-radius catalog entry.

    Q(h, k) is a 4-cycle with pendant paths of h and k edges at antipodal
    cycle vertices; Cycle(n) is C_n; B6 is C6 plus the chord w2 w5; B7 is
    B6 plus a vertex adjacent to w1 and w3; U1 is the 3-cube.
    """
    if name == "Q":
        if h is None or k is None or h < 0 or k < 0:
            raise BadParam("Q requires pendant path lengths h >= 0 and k >= 0")
        nv = 4 + h + k
        c = [h + 1, h + 2, h + 3, h + 4]
        edges = _path_edges(list(range(1, h + 2)))  # h-path into c1
        edges += [(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]
        edges += _path_edges([c[2]] + list(range(h + 5, nv + 1)))  # k-path off c3
        return from_edge_list(nv, [(u, v, 1) for u, v in edges])
    if name == "Cycle":
        if n is None or n < 3:
            raise BadParam("Cycle requires n >= 3")
        if n % 2 == 1:
            raise NotBipartite(f"C_{n} is not bipartite")
        edges = _path_edges(list(range(1, n + 1))) + [(n, 1)]
        return from_edge_list(n, [(u, v, 1) for u, v in edges])
    if name == "B6":
        edges = _path_edges([1, 2, 3, 4, 5, 6]) + [(6, 1), (2, 5)]
        return from_edge_list(6, [(u, v, 1) for u, v in edges])
    if name == "B7":
        edges = _path_edges([1, 2, 3, 4, 5, 6]) + [(6, 1), (2, 5), (7, 1), (7, 3)]
        return from_edge_list(7, [(u, v, 1) for u, v in edges])
    if name == "U1":
        edges = [(1, 2), (2, 3), (3, 4), (4, 1)]
        edges += [(5, 6), (6, 7), (7, 8), (8, 5)]
        edges += [(1, 5), (2, 6), (3, 7), (4, 8)]
        return from_edge_list(8, [(u, v, 1) for u, v in edges])
    raise BadParam(f"unknown catalog name {name!r}, expected one of {CATALOG_NAMES}")


def is_complete_bipartite(graph):
    """Complete-bipartite test via the induced K2+K1 criterion.

    A connected bipartite graph is complete bipartite iff no three vertices
    induce an edge plus an isolated vertex.
    """
    if not graph.is_connected():
        raise BadInput("input must be connected")
    graph.bipartition()  # raises NotBipartite when it is not
    adj = graph.adj != 0
    n = graph.n
    for u in range(n):
        for v in range(u + 1, n):
            if not adj[u, v]:
                continue
            # an isolated third vertex for edge uv?
            others = ~(adj[u] | adj[v])
            others[u] = others[v] = False
            if others.any():
                return False
    return True


def _row_bitsets(signs):
    """Neighborhood bitsets of the X side from a 0/1 or sign pattern."""
    present = np.asarray(signs) != 0
    r, s = present.shape
    bits = []
    for i in range(r):
        b = 0
        for j in range(s):
            if present[i, j]:
                b |= 1 << j
        bits.append(b)
    return bits


def is_chain_graph(obj):
    """True iff neighborhoods on one part are linearly ordered by inclusion.

    Accepts a SignedBipartiteGraph (the NEGATIVE edge pattern is tested,
    matching its role as the negative subgraph) or a 2-d 0/1 array giving a
    bipartite adjacency pattern directly.  Nestedness on X and on Y are
    equivalent; the X side is tested.
    """
    if isinstance(obj, SignedBipartiteGraph):
        pattern = obj.negative_mask()
    else:
        pattern = np.asarray(obj) != 0
        if pattern.ndim != 2:
            raise BadInput("pattern must be a 2-d array")
    bits = _row_bitsets(pattern)
    for a in range(len(bits)):
        for b in range(a + 1, len(bits)):
            meet = bits[a] & bits[b]
            if meet != bits[a] and meet != bits[b]:
                return False
    return True


def negative_stats(graph):
    """NegativeSubgraphStats of a SignedBipartiteGraph."""
    neg = graph.negative_mask().astype(np.int64)
    deg_x = neg.sum(axis=1)
    deg_y = neg.sum(axis=0)
    common = neg @ neg.T
    return NegativeSubgraphStats(
        degX=tuple(int(d) for d in deg_x),
        degY=tuple(int(d) for d in deg_y),
        commonX=tuple(tuple(int(c) for c in row) for row in common),
    )
