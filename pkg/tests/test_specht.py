import numpy as np
import pytest

from symdec.fpmodules import (
    check_braid_relations,
    check_involution_generators,
    preserves_form,
    quotient,
    spin,
    submodule,
)
from symdec.partitions import partitions_of, syt_count
from symdec.specht import (
    specht_module,
    standard_tableaux,
    straighten,
)


class TestStandardTableaux:
    @pytest.mark.parametrize("n", range(0, 11))
    def test_counts_match_hook_formula(self, n):
        for mu in partitions_of(n):
            assert len(standard_tableaux(mu)) == syt_count(mu)

    def test_rows_and_columns_increase(self):
        for tab in standard_tableaux((3, 2, 1)):
            for row in tab:
                assert list(row) == sorted(row)
            for j in range(3):
                col = [row[j] for row in tab if len(row) > j]
                assert col == sorted(col)


class TestStraightening:
    def test_standard_is_fixed(self):
        tab = ((1, 2), (3,))
        assert straighten(tab) == {tab: 1}

    def test_column_swap_gives_sign(self):
        assert straighten(((3, 2), (1,))) == {((1, 2), (3,)): -1}

    def test_garnir_two_row_example(self):
        # swapping 1,2 in ((1,2),(3,)) relabels to ((2,1),(3,))
        result = straighten(((2, 1), (3,)))
        assert result == {((1, 2), (3,)): 1, ((1, 3), (2,)): -1}

    @pytest.mark.parametrize("mu", [(2, 2), (3, 1), (2, 2, 1), (3, 2, 1)])
    def test_closure_under_all_transpositions(self, mu):
        basis = standard_tableaux(mu)
        n = sum(mu)
        for tab in basis:
            for a in range(1, n):
                swapped = tuple(
                    tuple(a + 1 if v == a else a if v == a + 1 else v for v in row)
                    for row in tab
                )
                for t, c in straighten(swapped).items():
                    assert t in basis and c != 0


class TestSpechtModules:
    def test_trivial_module(self):
        data = specht_module((4,), 3)
        assert data.module.dim == 1
        assert all(g.a[0, 0] == 1 for g in data.module.generators)

    def test_sign_module(self):
        data = specht_module((1, 1, 1, 1), 3)
        assert data.module.dim == 1
        assert all(g.a[0, 0] == 3 - 1 for g in data.module.generators)

    @pytest.mark.parametrize("n", range(0, 8))
    def test_relations_all_shapes(self, n):
        for mu in partitions_of(n):
            data = specht_module(mu, 3)
            assert data.module.dim == syt_count(mu)
            assert check_involution_generators(data.module)
            assert check_braid_relations(data.module)

    @pytest.mark.parametrize("p", [3, 5])
    def test_gram_symmetric_and_invariant(self, p):
        for n in range(2, 8):
            for mu in partitions_of(n):
                data = specht_module(mu, p)
                assert data.gram == data.gram.transpose()
                assert preserves_form(data.module, data.gram)

    @pytest.mark.parametrize(
        "n,p", [(4, 3), (5, 3), (6, 3), (5, 5), (6, 5), (7, 7), (8, 3)]
    )
    def test_hook_gram_rank_classical(self, n, p):
        # Gram rank of (n-1,1) is n-1 when p does not divide n, else n-2
        data = specht_module((n - 1, 1), p)
        expected = n - 1 if n % p else n - 2
        assert data.gram.rank() == expected

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            specht_module((6, 5), 3)  # |mu| = 11 > default cap
        specht_module((6, 5), 3, cap=11)  # opt-in works

    def test_gram_diagonal_is_column_group_order(self):
        data = specht_module((3, 2), 7)
        assert all(x == 4 for x in np.diag(data.gram.a))  # 2! * 2! * 1!


class TestDiskCache(object):
    def test_round_trip(self, tmp_path, monkeypatch):
        monkeypatch.setenv("SYMDEC_CACHE", str(tmp_path))
        monkeypatch.delenv("SYMDEC_NO_CACHE", raising=False)
        from symdec.specht import _specht_cached

        _specht_cached.cache_clear()
        first = specht_module((3, 2), 3, use_cache=True)
        files = list(tmp_path.glob("specht_p3_*.npz"))
        assert len(files) == 1
        _specht_cached.cache_clear()
        second = specht_module((3, 2), 3, use_cache=True)
        assert first.gram == second.gram
        assert all(a == b for a, b in zip(first.module.generators,
                                          second.module.generators))
        _specht_cached.cache_clear()


class TestModuleOps:
    def test_spin_finds_invariant_line(self):
        data = specht_module((2, 1), 3)
        basis = spin(data.module, np.array([1, 1], dtype=np.int64))
        assert basis.rows == 1
        sub = submodule(data.module, basis)
        assert sub.dim == 1
        quo = quotient(data.module, basis)
        assert quo.dim == 1
        assert check_involution_generators(sub)
        assert check_involution_generators(quo)

    def test_spin_of_generic_vector_fills(self):
        data = specht_module((2, 1), 3)
        basis = spin(data.module, np.array([1, 0], dtype=np.int64))
        assert basis.rows == 2
