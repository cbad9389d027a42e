import numpy as np
import pytest

from signed_spectra import (
    BadParam,
    BadPartition,
    BadInput,
    NotSymmetric,
    SignedBipartiteGraph,
    adjacency,
    charpoly_faddeev_leverrier,
    complete_bipartite,
    eigenvalues,
    from_edge_list,
    gstar,
    gstar_block_charpoly,
    gstar_bound,
    gstar_eigenvector,
    gstar_minus_edge,
    minus_edge_charpoly,
    minus_edge_partition,
    poly_real_roots,
    quotient_matrix,
    spectral_radius,
    spectral_summary,
    square_block_B,
)
from signed_spectra.spectra import assemble_gstar_eigenvector
from util import random_connected_signed_graph

C4_NEG = from_edge_list(4, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 1, -1)])


class TestAdjacency:
    def test_gstar22(self):
        a = adjacency(gstar(2, 2))
        assert a.shape == (4, 4)
        assert a[0, 2] == -1 and a[2, 0] == -1
        assert np.count_nonzero(a == -1) == 2
        assert np.count_nonzero(a == 1) == 6

    def test_single_negative_k2(self):
        a = adjacency(from_edge_list(2, [(1, 2, -1)]))
        assert np.array_equal(a, [[0, -1], [-1, 0]])

    def test_positive_k23_blocks(self):
        a = adjacency(complete_bipartite(2, 3))
        assert (a[:2, 2:] == 1).all()
        assert (a[:2, :2] == 0).all()
        assert (a[2:, 2:] == 0).all()


class TestEigenvalues:
    def test_c4_negative_spectrum(self):
        s = spectral_summary(C4_NEG)
        assert np.allclose(s.eigenvalues, [np.sqrt(2)] * 2 + [-np.sqrt(2)] * 2, atol=1e-12)
        assert abs(s.rho - np.sqrt(2)) < 1e-12

    def test_positive_krs_index(self):
        s = spectral_summary(complete_bipartite(2, 3))
        assert abs(s.index - np.sqrt(6)) < 1e-10

    def test_gstar23_radius(self):
        assert abs(spectral_radius(gstar(2, 3)) - 2.0) < 1e-10

    def test_asymmetric_rejected(self):
        with pytest.raises(NotSymmetric):
            eigenvalues(np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_accuracy_against_lapack(self):
        rng = np.random.default_rng(21)
        for _ in range(50):
            n = int(rng.integers(1, 17))
            m = rng.normal(size=(n, n)) * 5
            m = m + m.T
            got = np.array(eigenvalues(m).eigenvalues)
            want = np.linalg.eigvalsh(m)[::-1]
            scale = max(1.0, np.abs(m).sum(axis=1).max())
            assert np.abs(got - want).max() <= 1e-10 * scale

    def test_trace_zero_and_symmetric_for_bipartite(self):
        rng = np.random.default_rng(22)
        for _ in range(20):
            signs = rng.choice((-1, 0, 1), size=(3, 4)).astype(np.int8)
            s = spectral_summary(SignedBipartiteGraph(signs))
            evs = np.array(s.eigenvalues)
            assert abs(evs.sum()) < 1e-9
            assert np.allclose(evs, -evs[::-1], atol=1e-9)
            assert abs(s.rho - s.index) < 1e-9

    def test_charpoly_cross_check(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            g = random_connected_signed_graph(rng, n_max=8)
            s = spectral_summary(g)
            fl = charpoly_faddeev_leverrier(adjacency(g))
            assert np.allclose(s.charpoly, fl, atol=1e-6 * np.maximum(1, np.abs(fl)).max())

    def test_record_fields(self):
        rec = spectral_summary(C4_NEG).as_record()
        assert list(rec.keys()) == ["n", "rho", "index", "eigenvalues", "charpoly"]
        assert rec["n"] == 4


class TestSquareBlock:
    def test_gstar23_block(self):
        b = square_block_B(gstar(2, 3))
        assert np.array_equal(b, [[3, 1], [1, 3]])
        evs = np.linalg.eigvalsh(b)
        assert np.allclose(evs, [2, 4])
        assert abs(spectral_radius(gstar(2, 3)) - 2.0) < 1e-12  # sqrt(4)

    def test_all_positive_block(self):
        b = square_block_B(complete_bipartite(3, 5))
        assert np.array_equal(b, np.full((3, 3), 5.0))

    def test_all_negative_k22(self):
        g = complete_bipartite(2, 2, [(1, 1), (1, 2), (2, 1), (2, 2)])
        assert np.array_equal(square_block_B(g), [[2, 2], [2, 2]])

    def test_equals_squared_adjacency_block(self):
        rng = np.random.default_rng(24)
        for _ in range(20):
            r, s = int(rng.integers(2, 6)), int(rng.integers(2, 7))
            r, s = min(r, s), max(r, s)
            signs = rng.choice((-1, 1), size=(r, s)).astype(np.int8)
            g = SignedBipartiteGraph(signs)
            a = adjacency(g)
            sq = a @ a
            assert np.allclose(sq[:r, :r], square_block_B(g))
            assert np.allclose(sq[:r, r:], 0)  # block diagonal under (X, Y)

    def test_non_complete_rejected(self):
        signs = np.array([[1, 0], [1, 1]], dtype=np.int8)
        with pytest.raises(BadInput):
            square_block_B(SignedBipartiteGraph(signs))


class TestQuotientMatrix:
    def test_j2_single_block(self):
        q, eq = quotient_matrix(np.ones((2, 2)), [[1, 2]])
        assert np.array_equal(q, [[2.0]])
        assert eq

    def test_gstar_block_quotient(self):
        b = square_block_B(gstar(2, 3))
        q, eq = quotient_matrix(b, [[1], [2]])
        assert np.array_equal(q, [[3, 1], [1, 3]])
        assert eq

    def test_single_block_of_gstar23(self):
        b = square_block_B(gstar(2, 3))
        q, eq = quotient_matrix(b, [[1, 2]])
        assert np.array_equal(q, [[4.0]])
        assert eq

    def test_p3_non_equitable(self):
        p3 = adjacency(from_edge_list(3, [(1, 2, 1), (2, 3, 1)]))
        q, eq = quotient_matrix(p3, [[1, 2], [3]])
        assert not eq

    def test_bad_partition(self):
        with pytest.raises(BadPartition):
            quotient_matrix(np.zeros((3, 3)), [[1, 2]])
        with pytest.raises(BadPartition):
            quotient_matrix(np.zeros((3, 3)), [[1, 2], [2, 3]])

    def test_equitable_spectrum_containment(self):
        # integer circulant diagonal blocks + constant off-diagonal blocks
        rng = np.random.default_rng(25)
        for _ in range(20):
            sizes = [int(rng.integers(1, 5)) for _ in range(int(rng.integers(2, 4)))]
            n = sum(sizes)
            m = np.zeros((n, n))
            offs = np.cumsum([0] + sizes)
            for a, na in enumerate(sizes):
                f = rng.integers(-3, 4, size=na)
                blk = np.empty((na, na))
                for p in range(na):
                    for q in range(na):
                        d = (p - q) % na
                        blk[p, q] = f[min(d, na - d)]
                m[offs[a]:offs[a + 1], offs[a]:offs[a + 1]] = blk
                for b in range(a + 1, len(sizes)):
                    c = int(rng.integers(-3, 4))
                    m[offs[a]:offs[a + 1], offs[b]:offs[b + 1]] = c
                    m[offs[b]:offs[b + 1], offs[a]:offs[a + 1]] = c
            blocks = [list(range(offs[a] + 1, offs[a + 1] + 1)) for a in range(len(sizes))]
            q, eq = quotient_matrix(m, blocks)
            assert eq
            qvals = np.linalg.eigvals(q)
            mvals = np.linalg.eigvalsh(m)
            for qv in qvals:
                assert abs(qv.imag) < 1e-9
                assert np.min(np.abs(mvals - qv.real)) < 1e-9


class TestMatrixLemmas:
    def test_radius_of_square(self):
        rng = np.random.default_rng(26)
        for _ in range(30):
            n = int(rng.integers(1, 9))
            c = rng.normal(size=(n, n)) * 3
            c = c + c.T
            rho = spectral_radius(c)
            rho_sq = spectral_radius(c @ c)
            assert abs(rho - np.sqrt(rho_sq)) < 1e-9

    def test_ab_ba_nonzero_spectra(self):
        rng = np.random.default_rng(27)
        for _ in range(30):
            r, s = int(rng.integers(1, 7)), int(rng.integers(1, 7))
            a = rng.normal(size=(r, s))
            b = rng.normal(size=(s, r))
            ab = np.sort_complex(np.linalg.eigvals(a @ b))
            ba = np.sort_complex(np.linalg.eigvals(b @ a))
            ab = np.array([v for v in ab if abs(v) > 1e-8])
            ba = np.array([v for v in ba if abs(v) > 1e-8])
            assert len(ab) == len(ba)
            if len(ab):
                assert np.allclose(ab, ba, atol=1e-8)


class TestIndexComparison:
    @pytest.mark.parametrize(
        "n,edges",
        [
            (4, [(1, 2), (2, 3), (3, 4), (4, 1)]),  # C4
            (5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]),  # C5
            (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),  # K4
            (5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),  # K_{2,3}
            (5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (2, 4), (3, 5)]),
        ],
    )
    def test_signed_index_below_underlying_iff_unbalanced(self, n, edges):
        # exhaustive over all signatures of each connected host
        from signed_spectra import is_balanced

        base = from_edge_list(n, [(u, v, 1) for u, v in edges])
        lam_under = spectral_summary(base).index
        for mask in range(1 << len(edges)):
            signed = from_edge_list(
                n,
                [
                    (u, v, -1 if (mask >> i) & 1 else 1)
                    for i, (u, v) in enumerate(edges)
                ],
            )
            lam = spectral_summary(signed).index
            assert lam <= lam_under + 1e-9
            assert (abs(lam - lam_under) <= 1e-7) == is_balanced(signed)


class TestGstarClosedForms:
    def test_known_bounds(self):
        assert abs(gstar_bound(2, 2) - np.sqrt(2)) < 1e-15
        assert abs(gstar_bound(2, 3) - 2.0) < 1e-15
        assert abs(gstar_bound(3, 3) - np.sqrt((9 + np.sqrt(17)) / 2)) < 1e-15

    def test_bound_matches_eigensolver(self):
        for r in range(2, 9):
            for s in range(r, 9):
                assert abs(gstar_bound(r, s) - spectral_radius(gstar(r, s))) <= 1e-9

    def test_bad_params(self):
        with pytest.raises(BadParam):
            gstar_bound(1, 5)
        with pytest.raises(BadParam):
            gstar_bound(3, 2)

    def test_eigenvector_r2(self):
        w1, w2, y1, y2 = gstar_eigenvector(2, 3)
        assert y1 == 0.0
        assert w1 == w2
        rho = gstar_bound(2, 3)
        assert abs(rho * rho - 2 * (3 - 1)) < 1e-12

    def test_eigenvector_equations_and_residual(self):
        for r in range(2, 9):
            for s in range(r, 9):
                w1, w2, y1, y2 = gstar_eigenvector(r, s)
                rho = gstar_bound(r, s)
                # the four symmetry-class eigenvalue equations
                assert abs(-w1 + (r - 1) * w2 - rho * y1) < 1e-9
                assert abs(w1 + (r - 1) * w2 - rho * y2) < 1e-9
                assert abs(-y1 + (s - 1) * y2 - rho * w1) < 1e-9
                assert abs(y1 + (s - 1) * y2 - rho * w2) < 1e-9
                if r > 2:
                    assert min(w1, w2, y1, y2) > 0
                vec = assemble_gstar_eigenvector(r, s)
                assert abs(np.linalg.norm(vec) - 1) < 1e-12
                res = adjacency(gstar(r, s)) @ vec - rho * vec
                assert np.abs(res).max() <= 1e-9


class TestMinusEdgePolynomials:
    def test_case1_23(self):
        poly = minus_edge_charpoly(1, 2, 3)
        assert np.array_equal(poly, [1, -5, 6])
        assert poly_real_roots(poly) == [3.0, 2.0]
        g = gstar_minus_edge(2, 3, 1)
        assert abs(spectral_radius(g) - np.sqrt(3)) < 1e-10
        assert spectral_radius(g) < gstar_bound(2, 3)

    def test_baseline_23(self):
        poly = gstar_block_charpoly(2, 3)
        assert np.array_equal(poly, [1, -6, 8])
        assert poly_real_roots(poly) == [4.0, 2.0]
        evs = np.linalg.eigvalsh(square_block_B(gstar(2, 3)))
        assert np.allclose(sorted(evs, reverse=True), [4.0, 2.0])

    def test_case3_23(self):
        poly = minus_edge_charpoly(3, 2, 3)
        assert np.array_equal(poly, [1, -5, 6, 0])
        assert poly_real_roots(poly) == [3.0, 2.0, 0.0]

    def test_quotients_equitable_and_match(self):
        for r in range(2, 9):
            for s in range(r, 9):
                for case in (1, 2, 3):
                    if case == 1 and s < 3:
                        continue
                    if case == 2 and r < 3:
                        continue
                    g = gstar_minus_edge(r, s, case)
                    signs = g.signs.astype(float)
                    block = signs @ signs.T
                    q, eq = quotient_matrix(block, minus_edge_partition(case, r))
                    assert eq
                    quoted = minus_edge_charpoly(case, r, s)
                    numeric = charpoly_faddeev_leverrier(q)
                    numeric = np.concatenate(
                        [numeric, np.zeros(len(quoted) - len(numeric))]
                    )
                    assert np.abs(numeric - quoted).max() <= 1e-6
                    rho = spectral_radius(g)
                    assert abs(poly_real_roots(quoted)[0] - rho * rho) <= 1e-8

    def test_preconditions(self):
        with pytest.raises(BadParam):
            minus_edge_charpoly(1, 2, 2)  # s < 3
        with pytest.raises(BadParam):
            minus_edge_charpoly(2, 2, 5)  # r < 3
        with pytest.raises(BadParam):
            minus_edge_charpoly(4, 3, 3)


class TestPolyRoots:
    def test_monic_required(self):
        with pytest.raises(BadParam):
            poly_real_roots([2, 1, 1])

    def test_quadratic(self):
        assert poly_real_roots([1, -3, 2]) == [2.0, 1.0]

    def test_cubic_with_zero(self):
        roots = poly_real_roots([1, -6, 8, 0])
        assert roots == [4.0, 2.0, 0.0]

    def test_full_cubic(self):
        # (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        roots = poly_real_roots([1, -6, 11, -6])
        assert np.allclose(roots, [3, 2, 1], atol=1e-12)

    def test_double_root(self):
        # (x-6)^2 x = x^3 - 12 x^2 + 36 x
        roots = poly_real_roots([1, -12, 36, 0])
        assert np.allclose(roots, [6, 6, 0], atol=1e-10)
