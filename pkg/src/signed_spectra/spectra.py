"""Eigenvalues, characteristic polynomials, block decompositions, closed forms.

Polynomials are monic coefficient sequences in descending powers.  The
closed forms below describe signed complete bipartite graphs (K_{r,s}, H^-)
whose negative part H is a star or double star D_{i,j} with centers v1, w1;
parameters are k = |E(H)|, d = d_H(v1) and l = k - d + 1 = d_H(w1).
"""

from dataclasses import dataclass
from math import acos, cos, pi, sqrt

import numpy as np

from ._kernels import eigvalsh_desc
from .backend import resolve_backend
from .errors import BadInput, BadParam, BadPartition, NotSymmetric, NumericDomain
from .graphs import SignedBipartiteGraph, SignedGraph, negative_stats


def adjacency(graph):
    """Signed adjacency matrix as float64."""
    if isinstance(graph, SignedBipartiteGraph):
        graph = graph.to_signed_graph()
    return graph.adj.astype(np.float64)


@dataclass(frozen=True)
class SpectralSummary:
    """Eigenvalues (descending), spectral radius, index, monic charpoly."""

    eigenvalues: tuple
    rho: float
    index: float
    charpoly: tuple

    @property
    def order(self):
        return len(self.eigenvalues)

    def as_record(self):
        """Flat record with the serialization field names."""
        return {
            "n": self.order,
            "rho": self.rho,
            "index": self.index,
            "eigenvalues": list(self.eigenvalues),
            "charpoly": list(self.charpoly),
        }


def eigenvalues(matrix, backend=None):
    """SpectralSummary of a symmetric matrix."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise BadInput("matrix must be square")
    if not np.array_equal(m, m.T):
        raise NotSymmetric("matrix must be exactly symmetric")
    evs = eigvalsh_desc(m, backend=backend)
    charpoly = np.poly(evs) if len(evs) else np.array([1.0])
    return SpectralSummary(
        eigenvalues=tuple(float(v) for v in evs),
        rho=float(np.max(np.abs(evs))),
        index=float(evs[0]),
        charpoly=tuple(float(c) for c in charpoly),
    )


def spectral_summary(graph, backend=None):
    return eigenvalues(adjacency(graph), backend=backend)


def spectral_radius(obj, backend=None):
    """Spectral radius of a graph or symmetric matrix."""
    if isinstance(obj, (SignedGraph, SignedBipartiteGraph)):
        obj = adjacency(obj)
    evs = eigvalsh_desc(np.asarray(obj, dtype=np.float64), backend=backend)
    return float(max(abs(evs[0]), abs(evs[-1])))


def square_block_B(graph):
    """X-side block of A^2 for a signed complete bipartite graph.

    B[i, j] = s - 2(d_H(v_i) + d_H(v_j)) + 4 |N_H(v_i) & N_H(v_j)|, so the
    diagonal is constantly s.  Equals M M^T for the signed biadjacency M.
    """
    if not isinstance(graph, SignedBipartiteGraph) or not graph.is_complete_host():
        raise BadInput("block decomposition requires a complete K_{r,s} host")
    stats = negative_stats(graph)
    d = np.array(stats.degX, dtype=np.float64)
    common = np.array(stats.commonX, dtype=np.float64)
    return graph.s - 2.0 * (d[:, None] + d[None, :]) + 4.0 * common


def quotient_matrix(matrix, partition):
    """Block-averaged quotient of a square matrix under a vertex partition.

    partition: list of 1-based index blocks covering 1..order disjointly.
    Returns (quotient, is_equitable); equitable means every row of a block
    has the same sum into each block (checked exactly).
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise BadInput("matrix must be square")
    order = m.shape[0]
    blocks = [[int(i) - 1 for i in block] for block in partition]
    flat = [i for block in blocks for i in block]
    if any(not block for block in blocks):
        raise BadPartition("empty block")
    if sorted(flat) != list(range(order)):
        raise BadPartition("partition must cover all indices exactly once")
    t = len(blocks)
    q = np.zeros((t, t))
    equitable = True
    for b, cols in enumerate(blocks):
        sums = m[:, cols].sum(axis=1)
        for a, rows in enumerate(blocks):
            block_sums = sums[rows]
            if np.any(block_sums != block_sums[0]):
                equitable = False
            q[a, b] = block_sums.sum() / len(rows)
    return q, equitable


def _real_cubic_roots(a2, a1, a0):
    """All-real roots of monic x^3 + a2 x^2 + a1 x + a0, descending.

    Trigonometric form with a quadratic-Taylor polish per root; accurate
    through double roots, which the raw formula resolves only to ~1e-8.
    """
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2**3 / 27.0 - a2 * a1 / 3.0 + a0
    shift = -a2 / 3.0
    if p >= 0.0:
        roots = [shift + float(np.cbrt(-q))] * 3
    else:
        m = 2.0 * sqrt(-p / 3.0)
        arg = min(1.0, max(-1.0, 3.0 * q / (p * m)))
        th = acos(arg) / 3.0
        roots = [m * cos(th - 2.0 * pi * k / 3.0) + shift for k in range(3)]
    polished = []
    for x in roots:
        for _ in range(3):
            f = ((x + a2) * x + a1) * x + a0
            fp = (3.0 * x + 2.0 * a2) * x + a1
            fpp = 6.0 * x + 2.0 * a2
            disc = fp * fp - 2.0 * f * fpp
            if disc < 0.0:
                if fp != 0.0:
                    x -= f / fp
                continue
            sd = sqrt(disc)
            den = fp + sd if abs(fp + sd) >= abs(fp - sd) else fp - sd
            if den == 0.0:
                break
            x -= 2.0 * f / den
        polished.append(x)
    return sorted(polished, reverse=True)


def _structured_cubic_roots(rs, q1, q0):
    """Roots of x^3 - rs x^2 + Q1 x + Q0 (integer coefficients), descending.

    Zero constant/linear terms are factored out exactly before any
    floating-point work.
    """
    if q0 == 0:
        if q1 == 0:
            return [float(rs), 0.0, 0.0]
        disc = rs * rs - 4 * q1
        if disc < 0:
            raise NumericDomain("complex quadratic roots in closed form")
        sd = sqrt(disc)
        return sorted([(rs + sd) / 2.0, (rs - sd) / 2.0, 0.0], reverse=True)
    return _real_cubic_roots(float(-rs), float(q1), float(q0))


@dataclass(frozen=True)
class CubicClosedForm:
    """Closed-form cubic for the X-block of A^2 in the star/double-star family.

    coeffs = (1, -rs, Q1, Q0) with
      Q1 = 4(d-1)(s(k-d) + (sk-dr)) + 4(r-k)(s-1)k
      Q0 = 16(d-s)(d-1)(k-d)(r-k+d-1).
    The roots are the nonzero eigenvalues of the r x r block, padded with
    zeros (for r >= 3 the block adds r-3 zeros; for r = 2 one cubic root is
    itself zero).
    """

    r: int
    s: int
    k: int
    d: int
    l: int
    coeffs: tuple

    def roots(self):
        """The three cubic roots, descending."""
        return tuple(_structured_cubic_roots(self.r * self.s, self.coeffs[2], self.coeffs[3]))

    def block_eigenvalues(self):
        """Predicted eigenvalues of the full r x r block, descending."""
        roots = list(self.roots())
        if self.r >= 3:
            vals = roots + [0.0] * (self.r - 3)
        else:
            zero_at = min(range(3), key=lambda i: abs(roots[i]))
            vals = [x for i, x in enumerate(roots) if i != zero_at]
        return tuple(sorted(vals, reverse=True))


def double_star_charpoly(r, s, k, d):
    """CubicClosedForm for (K_{r,s}, H_k^-) with H_k a star or double star."""
    l = k - d + 1
    if k < 1 or not (1 <= d <= min(k, s)) or not (1 <= l <= min(k, r)):
        raise BadParam(f"invalid star/double-star parameters (r={r}, s={s}, k={k}, d={d})")
    q1 = 4 * (d - 1) * (s * (k - d) + (s * k - d * r)) + 4 * (r - k) * (s - 1) * k
    q0 = 16 * (d - s) * (d - 1) * (k - d) * (r - k + d - 1)
    return CubicClosedForm(r=r, s=s, k=k, d=d, l=l, coeffs=(1, -r * s, q1, q0))


def double_star_quotient(r, s, k, d):
    """The 3 x 3 matrix similar to the nonzero part of the X-block.

    Rows and columns follow the symmetry classes {v1}, {v2..v_l},
    {v_{l+1}..v_r} of the double-star host.
    """
    cc = double_star_charpoly(r, s, k, d)  # validates parameters
    l = cc.l
    return np.array(
        [
            [s, (l - 1) * (s - 2 * (d - 1)), (r - l) * (s - 2 * d)],
            [s - 2 * (d - 1), (l - 1) * s, (r - l) * (s - 2)],
            [s - 2 * d, (l - 1) * (s - 2), s * (r - l)],
        ],
        dtype=np.float64,
    )


_FAMILY_CASES = {
    1: lambda r, s, k: ((k, 1), 4 * (r - k) * (s - 1) * k),
    2: lambda r, s, k: ((r, k + 1 - r), 4 * (k - r) * (r - 1) * (s + r - k)),
    3: lambda r, s, k: ((1, k), 4 * k * (r - 1) * (s - k)),
    4: lambda r, s, k: ((k + 1 - s, s), 4 * (r - k + s) * (s - 1) * (k - s)),
}


@dataclass(frozen=True)
class FamilySpectrum:
    """Closed-form spectrum of one of the four extremal double-star families."""

    case: int
    r: int
    s: int
    k: int
    coeffs: tuple  # (1, -rs, C, 0)
    z: int  # discriminant (rs)^2 - 4C
    rho: float

    @property
    def star_params(self):
        """(i, j) of the family member D_{i,j}."""
        return _FAMILY_CASES[self.case](self.r, self.s, self.k)[0]

    def spectrum(self):
        """Full adjacency spectrum: +-sqrt((rs +- sqrt z)/2) and r+s-4 zeros."""
        rs = self.r * self.s
        hi = sqrt((rs + sqrt(self.z)) / 2.0)
        lo = sqrt(max(0.0, (rs - sqrt(self.z)) / 2.0))
        vals = [hi, lo] + [0.0] * (self.r + self.s - 4) + [-lo, -hi]
        return tuple(sorted(vals, reverse=True))


def family_spectrum(case, r, s, k):
    """Closed-form polynomial, discriminant and spectral radius for one case.

    Case 1 is H = D_{k,1} (k <= r); case 2 is D_{r,k+1-r} (k >= r); case 3
    is D_{1,k} (k <= s); case 4 is D_{k+1-s,s} (k >= s).
    """
    if case not in _FAMILY_CASES:
        raise BadParam(f"family case must be 1..4, got {case!r}")
    if not (1 <= k <= r + s - 1):
        raise BadParam(f"k must be in 1..r+s-1, got {k}")
    bounds_ok = {
        1: k <= r,
        2: k >= r,
        3: k <= s,
        4: k >= s,
    }[case]
    if not bounds_ok:
        raise BadParam(f"k={k} out of range for family case {case} with (r,s)=({r},{s})")
    (i, j), c = _FAMILY_CASES[case](r, s, k)
    if not (1 <= i <= r and 1 <= j <= s):
        raise BadParam(f"family case {case} does not fit in K_({r},{s}) at k={k}")
    z = (r * s) ** 2 - 4 * c
    if z < 0:
        raise NumericDomain(f"negative discriminant z={z} for case {case}, (r,s,k)=({r},{s},{k})")
    rho = sqrt((r * s + sqrt(z)) / 2.0)
    return FamilySpectrum(case=case, r=r, s=s, k=k, coeffs=(1, -r * s, c, 0), z=z, rho=rho)


def gstar_bound(r, s):
    """Spectral-radius bound sqrt((rs + sqrt((rs)^2 - 16(r-1)(s-1))) / 2).

    Attained exactly by the single-negative-edge signature of K_{r,s};
    every other unbalanced signature lies strictly below it.
    """
    if r < 2:
        raise BadParam("bound requires r >= 2 (K_{1,s} has no unbalanced signature)")
    if r > s:
        raise BadParam("parts must satisfy r <= s")
    return family_spectrum(1, r, s, 1).rho


def gstar_eigenvector(r, s):
    """Radius eigenvector of the single-negative-edge K_{r,s}, by symmetry class.

    Returns (w1, w2, y1, y2): the component on v1, on X \\ {v1}, on w1, and
    on Y \\ {w1}, normalized to unit length over all r+s coordinates.  For
    r = 2 the w1-class coordinate y1 is exactly zero and w1 = w2.
    """
    if r < 2:
        raise BadParam("eigenvector requires r >= 2")
    if r > s:
        raise BadParam("parts must satisfy r <= s")
    rho = gstar_bound(r, s)
    if r == 2:
        y1 = 0.0
        y2 = 1.0
        w1 = w2 = sqrt((s - 1) / 2.0)
    else:
        y2 = 1.0
        y1 = (rho * rho - r * (s - 1)) / (r - 2)
        w1 = (-y1 + (s - 1) * y2) / rho
        w2 = (y1 + (s - 1) * y2) / rho
    norm = sqrt(w1 * w1 + (r - 1) * w2 * w2 + y1 * y1 + (s - 1) * y2 * y2)
    return (w1 / norm, w2 / norm, y1 / norm, y2 / norm)


def assemble_gstar_eigenvector(r, s):
    """The full r+s coordinate eigenvector matching gstar(r, s)'s labeling."""
    w1, w2, y1, y2 = gstar_eigenvector(r, s)
    return np.array([w1] + [w2] * (r - 1) + [y1] + [y2] * (s - 1))


def gstar_block_charpoly(r, s):
    """Baseline quotient polynomial for the intact host: x^2 - rs x + 4(r-1)(s-1)."""
    if r < 2 or r > s:
        raise BadParam("requires 2 <= r <= s")
    return np.array([1.0, -r * s, 4.0 * (r - 1) * (s - 1)])


def gstar_minus_edge(r, s, case):
    """gstar(r, s) with one positive edge deleted: v1w2, v2w1 or v2w2 by case."""
    signs = np.ones((r, s), dtype=np.int8)
    signs[0, 0] = -1
    if case == 1:
        if s < 3:
            raise BadParam("case 1 (delete v1 w2) requires s >= 3")
        signs[0, 1] = 0
    elif case == 2:
        if r < 3:
            raise BadParam("case 2 (delete v2 w1) requires r >= 3")
        signs[1, 0] = 0
    elif case == 3:
        if r < 2 or s < 2:
            raise BadParam("case 3 (delete v2 w2) requires r, s >= 2")
        signs[1, 1] = 0
    else:
        raise BadParam(f"case must be 1..3, got {case!r}")
    return SignedBipartiteGraph(signs)


def minus_edge_charpoly(case, r, s):
    """Quotient-matrix charpoly of gstar(r,s) minus one edge, by case.

    Case 1 deletes v1w2 (quadratic), case 2 deletes v2w1, case 3 deletes
    v2w2 (cubics).  The largest root is the squared spectral radius of the
    deleted graph.
    """
    gstar_minus_edge(r, s, case)  # validates the case preconditions
    if case == 1:
        return np.array([1.0, -(r * s - 1), (r - 1) * (5 * s - 9)])
    if case == 2:
        return np.array([1.0, -(r * s - 1), (5 * r - 9) * (s - 1), 0.0])
    return np.array(
        [1.0, -(r * s - 1), 5 * (r - 1) * (s - 1) - 4, -4.0 * (s - 2) * (r - 2)]
    )


def minus_edge_partition(case, r):
    """The symmetry partition used by minus_edge_charpoly, 1-based blocks."""
    if case == 1:
        return [[1], list(range(2, r + 1))]
    blocks = [[1], [2]]
    if r > 2:
        blocks.append(list(range(3, r + 1)))
    return blocks


def poly_real_roots(coeffs):
    """Real roots of a monic quadratic or cubic, descending.

    Zero trailing coefficients are factored out exactly; the remaining
    quadratic uses the quadratic formula, a full cubic the trigonometric
    solver.  Raises NumericDomain on complex quadratic roots.
    """
    c = [float(x) for x in coeffs]
    if not c or c[0] != 1.0:
        raise BadParam("polynomial must be monic")
    roots = []
    while len(c) > 1 and c[-1] == 0.0:
        roots.append(0.0)
        c = c[:-1]
    if len(c) == 1:
        pass
    elif len(c) == 2:
        roots.append(-c[1])
    elif len(c) == 3:
        disc = c[1] * c[1] - 4.0 * c[2]
        if disc < 0:
            raise NumericDomain("complex quadratic roots")
        roots += [(-c[1] + sqrt(disc)) / 2.0, (-c[1] - sqrt(disc)) / 2.0]
    elif len(c) == 4:
        roots += _real_cubic_roots(c[1], c[2], c[3])
    else:
        raise BadParam("only quadratics and cubics are supported")
    return sorted(roots, reverse=True)


def charpoly_faddeev_leverrier(matrix):
    """Monic charpoly via the trace recursion; independent of eigensolves."""
    m = np.asarray(matrix, dtype=np.float64)
    n = m.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[0] = 1.0
    aux = np.eye(n)
    for k in range(1, n + 1):
        aux = m @ aux
        c = -np.trace(aux) / k
        coeffs[k] = c
        aux += c * np.eye(n)
    return coeffs


def backend_name(backend=None):
    return resolve_backend(backend)
