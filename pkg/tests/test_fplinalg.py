import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from symdec.fplinalg import FpMatrix, backend_name, solve, _kernels_py

try:
    from symdec.fplinalg import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

PRIMES = [3, 5, 7, 11]


@st.composite
def matrices(draw, max_dim=9):
    p = draw(st.sampled_from(PRIMES))
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    seed = draw(st.integers(0, 2**31))
    rng = np.random.default_rng(seed)
    return FpMatrix(p, rng.integers(0, p, (rows, cols)))


class TestConstruction:
    def test_reduces_mod_p(self):
        m = FpMatrix(3, [[4, -1], [3, 5]])
        assert m.a.tolist() == [[1, 2], [0, 2]]

    def test_rejects_bad_modulus(self):
        for bad in (2, 4, 9, 1, 1 << 15):
            with pytest.raises(ValueError):
                FpMatrix(bad, [[1]])

    def test_rejects_one_dimensional(self):
        with pytest.raises(ValueError):
            FpMatrix(3, [1, 2, 3])


class TestRref:
    def test_singular_example(self):
        m = FpMatrix(3, [[1, 2], [2, 1]])
        _, rank, _ = m.rref()
        assert rank == 1  # det = -3 vanishes mod 3

    def test_identity_full_rank(self):
        assert FpMatrix.identity(5, 6).rank() == 6

    @given(matrices())
    def test_rank_equals_transpose_rank(self, m):
        assert m.rank() == m.transpose().rank()

    @given(matrices())
    def test_idempotent(self, m):
        R, rank, pivots = m.rref()
        R2, rank2, pivots2 = R.rref()
        assert R2 == R and rank2 == rank and pivots2 == pivots

    @given(matrices())
    def test_rref_preserves_row_space(self, m):
        R, rank, _ = m.rref()
        stacked = FpMatrix(m.p, np.vstack([m.a, R.a]))
        assert stacked.rank() == rank


class TestNullspace:
    def test_zero_matrix(self):
        assert FpMatrix.zeros(3, 4, 4).nullspace().rows == 4

    def test_invertible(self):
        assert FpMatrix.identity(3, 4).nullspace().rows == 0

    @given(matrices())
    def test_defining_property(self, m):
        basis = m.nullspace()
        assert basis.rows == m.cols - m.rank()
        if basis.rows:
            assert np.all((m.a @ basis.a.T) % m.p == 0)
            assert basis.rank() == basis.rows


class TestMatmulSolve:
    @given(matrices())
    def test_identity_neutral(self, m):
        assert m @ FpMatrix.identity(m.p, m.cols) == m

    @given(st.integers(0, 2**31), st.sampled_from(PRIMES))
    def test_associative(self, seed, p):
        rng = np.random.default_rng(seed)
        a = FpMatrix(p, rng.integers(0, p, (4, 5)))
        b = FpMatrix(p, rng.integers(0, p, (5, 3)))
        c = FpMatrix(p, rng.integers(0, p, (3, 6)))
        assert (a @ b) @ c == a @ (b @ c)

    @given(st.integers(0, 2**31), st.sampled_from(PRIMES))
    def test_rank_submultiplicative(self, seed, p):
        rng = np.random.default_rng(seed)
        a = FpMatrix(p, rng.integers(0, p, (5, 4)))
        b = FpMatrix(p, rng.integers(0, p, (4, 6)))
        assert (a @ b).rank() <= min(a.rank(), b.rank())

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            FpMatrix.zeros(3, 2, 3) @ FpMatrix.zeros(3, 2, 3)

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            FpMatrix.zeros(3, 2, 2) @ FpMatrix.zeros(5, 2, 2)

    @given(matrices())
    def test_solve_round_trip(self, m):
        rng = np.random.default_rng(0)
        x = rng.integers(0, m.p, m.cols)
        b = (m.a @ x) % m.p
        x2 = solve(m, b)
        assert x2 is not None
        assert np.all((m.a @ x2) % m.p == b)

    def test_solve_inconsistent(self):
        assert solve(FpMatrix(3, [[1, 0], [0, 0]]), [0, 1]) is None


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")
class TestBackendAgreement:
    def test_reports_some_backend(self):
        assert backend_name() in ("c", "py")

    @given(matrices())
    def test_rref_bit_identical(self, m):
        a1 = np.ascontiguousarray(m.a.copy())
        a2 = np.ascontiguousarray(m.a.copy())
        p1 = _kernels_c.rref_inplace(a1, m.p)
        p2 = _kernels_py.rref_inplace(a2, m.p)
        assert list(p1) == list(p2)
        assert np.array_equal(a1, a2)

    @given(st.integers(0, 2**31), st.sampled_from(PRIMES))
    def test_matmul_identical(self, seed, p):
        rng = np.random.default_rng(seed)
        a = np.ascontiguousarray(rng.integers(0, p, (6, 7)))
        b = np.ascontiguousarray(rng.integers(0, p, (7, 5)))
        assert np.array_equal(_kernels_c.matmul(a, b, p), _kernels_py.matmul(a, b, p))
