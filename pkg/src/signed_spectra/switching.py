"""Switching, switching classes, switching isomorphism, and balance tests."""

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from ._kernels import krs_structural_balanced
from .errors import BadInput, Incomparable, NotBipartite, TooLarge
from .graphs import SignedBipartiteGraph, SignedGraph
from .sgio import as_bipartite


def switch(graph, subset):
    """Flip the signs of all edges crossing the cut between subset and the rest.

    Involution: switch(switch(G, U), U) == G.
    """
    sel = np.zeros(graph.n, dtype=bool)
    for u in subset:
        if not (1 <= u <= graph.n):
            raise BadInput(f"vertex {u} out of range")
        sel[u - 1] = True
    theta = np.where(sel, -1, 1).astype(np.int8)
    adj = (theta[:, None] * graph.adj * theta[None, :]).astype(np.int8)
    return SignedGraph(graph.n, adj)


def negate(graph):
    """Reverse the sign of every edge."""
    return SignedGraph(graph.n, -graph.adj)


@dataclass(frozen=True)
class SwitchingClass:
    """Canonical switching-class representative via a spanning-forest gauge.

    gauge_signs holds the cotree edge signs after re-gauging every
    spanning-forest edge to +1; two signatures on the same labeled
    underlying graph are switching equivalent iff these vectors coincide.
    """

    n: int
    edges: tuple  # underlying edges, sorted (u, v) with u < v, 1-based
    tree_edges: tuple
    cotree_edges: tuple
    gauge_signs: tuple

    @property
    def num_classes(self):
        """2^(m - n + c) switching classes on this underlying graph."""
        return 1 << len(self.cotree_edges)

    def is_all_positive(self):
        return all(g == 1 for g in self.gauge_signs)

    def serialize(self):
        edge_part = ",".join(f"{u}-{v}" for u, v in self.edges)
        gauge_part = "".join("+" if g == 1 else "-" for g in self.gauge_signs)
        return f"{self.n};{edge_part};{gauge_part}"


def _gauge_theta(graph):
    """BFS-forest switching function making every forest edge positive.

    Forests are rooted at the lowest-index vertex of each component with
    neighbors visited in index order, so the gauge is deterministic.
    """
    n = graph.n
    adj = graph.adj
    theta = np.ones(n, dtype=np.int8)
    visited = np.zeros(n, dtype=bool)
    tree = []
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for v in np.flatnonzero(adj[u]):
                    if not visited[v]:
                        visited[v] = True
                        theta[v] = theta[u] * adj[u, v]
                        tree.append((min(u, v) + 1, max(u, v) + 1))
                        nxt.append(v)
            frontier = nxt
    return theta, tree


def canonical_gauge(graph):
    """SwitchingClass of a SignedGraph under the fixed BFS-forest gauge."""
    theta, tree = _gauge_theta(graph)
    tree_set = set(tree)
    edges = []
    cotree = []
    gauge = []
    for u, v, sign in graph.edges():
        edges.append((u, v))
        if (u, v) not in tree_set:
            cotree.append((u, v))
            gauge.append(int(theta[u - 1] * sign * theta[v - 1]))
    return SwitchingClass(
        n=graph.n,
        edges=tuple(edges),
        tree_edges=tuple(sorted(tree)),
        cotree_edges=tuple(cotree),
        gauge_signs=tuple(gauge),
    )


def switching_equivalent(g1, g2):
    """True iff the two signatures of one labeled graph differ by a switching."""
    if g1.n != g2.n or not np.array_equal(np.abs(g1.adj), np.abs(g2.adj)):
        raise Incomparable("inputs must share the same labeled underlying graph")
    c1 = canonical_gauge(g1)
    c2 = canonical_gauge(g2)
    return c1.gauge_signs == c2.gauge_signs


def is_balanced(graph):
    """True iff every cycle has an even number of negative edges.

    Equivalent to the canonical gauge vector being all +1, i.e. the
    signature is switching equivalent to the all-positive one.
    """
    if isinstance(graph, SignedBipartiteGraph):
        graph = graph.to_signed_graph()
    return canonical_gauge(graph).is_all_positive()


def is_sign_symmetric(graph):
    """True iff the graph is switching equivalent to its edge-wise negation."""
    if isinstance(graph, SignedBipartiteGraph):
        graph = graph.to_signed_graph()
    return switching_equivalent(graph, negate(graph))


def signs_to_mask(graph):
    """Negative-edge bitmask of a SignedBipartiteGraph (bit i*s + j)."""
    neg = graph.negative_mask()
    mask = 0
    r, s = neg.shape
    for i in range(r):
        for j in range(s):
            if neg[i, j]:
                mask |= 1 << (i * s + j)
    return mask


def mask_to_signs(mask, r, s):
    signs = np.ones((r, s), dtype=np.int8)
    for i in range(r):
        for j in range(s):
            if (mask >> (i * s + j)) & 1:
                signs[i, j] = -1
    return signs


def balance_structural(graph, backend=None):
    """Balance of a signed complete bipartite graph from the shape of H.

    H is the negative subgraph.  Balanced iff H is empty (degenerate
    convention), or H is complete bipartite with r < |V(H)| < r+s covering
    one whole side, or H spans everything and is complete bipartite or a
    disjoint union of two complete bipartite graphs.
    """
    if not isinstance(graph, SignedBipartiteGraph) or not graph.is_complete_host():
        raise BadInput("structural balance test requires a complete K_{r,s} host")
    mask = np.array([signs_to_mask(graph)], dtype=np.int64)
    return bool(krs_structural_balanced(mask, graph.r, graph.s, backend=backend)[0])


def min_negative_edges(graph):
    """Minimum negative-edge count over the switching class (frustration).

    Complete bipartite hosts use per-column minimization over the 2^r row
    flips; general graphs enumerate the 2^(n-1) switchings directly.
    """
    if isinstance(graph, SignedBipartiteGraph):
        if graph.is_complete_host():
            neg = graph.negative_mask()
            r, s = neg.shape
            best = None
            for eps in range(1 << r):
                flip = np.array([(eps >> i) & 1 for i in range(r)], dtype=bool)
                c = np.where(flip[:, None], ~neg, neg).sum(axis=0)
                total = int(np.minimum(c, r - c).sum())
                if best is None or total < best:
                    best = total
            return best
        graph = graph.to_signed_graph()
    if graph.n > 20:
        raise TooLarge("switching enumeration bounded at 20 vertices")
    edges = graph.edges()
    best = None
    for eps in range(1 << (graph.n - 1)):
        theta = [1] + [1 - 2 * ((eps >> i) & 1) for i in range(graph.n - 1)]
        count = sum(1 for u, v, sign in edges if theta[u - 1] * sign * theta[v - 1] < 0)
        if best is None or count < best:
            best = count
    return best


def _relabel(graph, perm):
    """Relabel a SignedGraph by perm (0-based array, new_index = perm[old])."""
    idx = np.argsort(perm)  # old index at each new position
    adj = graph.adj[np.ix_(idx, idx)]
    return SignedGraph(graph.n, adj)


def _bipartite_isomorphic(b1, b2):
    if (b1.r, b1.s) != (b2.r, b2.s):
        return False
    r, s = b1.r, b1.s
    targets = [b2.signs]
    if r == s:
        targets.append(b2.signs.T)
    u2 = [np.abs(t) for t in targets]
    a1 = np.abs(b1.signs)
    m2 = np.array([np.count_nonzero(t) for t in u2])
    if np.count_nonzero(a1) not in m2:
        return False
    for rho in permutations(range(r)):
        s1r = b1.signs[list(rho), :]
        a1r = a1[list(rho), :]
        for sigma in permutations(range(s)):
            s1p = s1r[:, list(sigma)]
            a1p = a1r[:, list(sigma)]
            for t, at in zip(targets, u2):
                if not np.array_equal(a1p, at):
                    continue
                g1 = SignedBipartiteGraph(s1p).to_signed_graph()
                g2 = SignedBipartiteGraph(t).to_signed_graph()
                if switching_equivalent(g1, g2):
                    return True
    return False


def switching_isomorphic(g1, g2):
    """True iff some underlying-graph isomorphism maps g1 into g2's class.

    Bipartite hosts are matched by part-respecting permutations (with a
    part swap when r = s); other graphs fall back to full permutation
    search.  Sizes are bounded (12 vertices bipartite, 9 otherwise).
    """
    o1 = g1.to_signed_graph() if isinstance(g1, SignedBipartiteGraph) else g1
    o2 = g2.to_signed_graph() if isinstance(g2, SignedBipartiteGraph) else g2
    if o1.n != o2.n:
        return False
    if o1.n > 12:
        raise TooLarge("switching isomorphism bounded at 12 vertices")
    if o1.edge_count() != o2.edge_count():
        return False
    if o1.is_connected() and o2.is_connected():
        try:
            b1 = as_bipartite(o1)
        except NotBipartite:
            b1 = None
        try:
            b2 = as_bipartite(o2)
        except NotBipartite:
            b2 = None
        if (b1 is None) != (b2 is None):
            return False
        if b1 is not None:
            return _bipartite_isomorphic(b1, b2)
    if o1.n > 9:
        raise TooLarge("general isomorphism search bounded at 9 vertices")
    deg1 = sorted(np.count_nonzero(o1.adj, axis=0))
    deg2 = sorted(np.count_nonzero(o2.adj, axis=0))
    if deg1 != deg2:
        return False
    u2 = np.abs(o2.adj)
    for perm in permutations(range(o1.n)):
        relabeled = _relabel(o1, np.array(perm))
        if not np.array_equal(np.abs(relabeled.adj), u2):
            continue
        if switching_equivalent(relabeled, o2):
            return True
    return False
