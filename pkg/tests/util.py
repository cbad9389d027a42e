"""Shared oracles and random-instance builders for the test suite."""

import numpy as np

from signed_spectra import from_edge_list


def random_connected_signed_graph(rng, n_max=10, force_balanced=None):
    """Random connected signed graph: spanning tree plus extra edges.

    force_balanced=True yields a switched all-positive signature (balanced
    by construction); False resamples until unbalanced; None leaves the
    uniform signature as drawn.
    """
    while True:
        n = int(rng.integers(3, n_max + 1))
        edges = set()
        order = list(rng.permutation(n) + 1)
        for idx in range(1, n):
            u = order[idx]
            v = order[int(rng.integers(0, idx))]
            edges.add((min(u, v), max(u, v)))
        possible = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if (u, v) not in edges
        ]
        extra = int(rng.integers(0, len(possible) + 1))
        for idx in rng.permutation(len(possible))[:extra]:
            edges.add(possible[idx])
        if force_balanced is True:
            g = from_edge_list(n, [(u, v, 1) for u, v in sorted(edges)])
            subset = [u + 1 for u in range(n) if rng.integers(0, 2)]
            from signed_spectra import switch

            return switch(g, subset)
        signed = [(u, v, int(rng.choice((-1, 1)))) for u, v in sorted(edges)]
        g = from_edge_list(n, signed)
        if force_balanced is None:
            return g
        from signed_spectra import is_balanced

        if not is_balanced(g):
            return g


def brute_force_switching_orbit(graph):
    """Every signature reachable by switching, as a set of adjacency bytes."""
    out = set()
    n = graph.n
    for mask in range(1 << n):
        theta = np.array([1 - 2 * ((mask >> i) & 1) for i in range(n)], dtype=np.int8)
        adj = (theta[:, None] * graph.adj * theta[None, :]).astype(np.int8)
        out.add(adj.tobytes())
    return out


def all_simple_cycles_balanced(graph):
    """Definitional balance oracle: every simple cycle has even negative count.

    Exponential path enumeration; only for small test graphs.
    """
    n = graph.n
    adj = graph.adj
    for start in range(n):
        stack = [(start, start, 0, 1 << start)]
        while stack:
            first, u, negs, visited = stack.pop()
            for v in np.flatnonzero(adj[u]):
                sign = adj[u, v]
                if v == first and visited != (1 << first):
                    length = bin(visited).count("1")
                    if length >= 3 and (negs + (sign < 0)) % 2 == 1:
                        return False
                    continue
                if v < first or (visited >> v) & 1:
                    continue
                stack.append((first, int(v), negs + (sign < 0), visited | (1 << v)))
    return True


def signed_path(n, negative_at=None):
    edges = [(i, i + 1, 1) for i in range(1, n)]
    if negative_at is not None:
        u, v, _ = edges[negative_at]
        edges[negative_at] = (u, v, -1)
    return from_edge_list(n, edges)
