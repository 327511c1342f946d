import pytest
from hypothesis import given
import hypothesis.strategies as st

from symdec.abacus import (
    Abacus,
    bead_down_moves,
    bead_up_moves,
    equivalent,
    from_partition,
    normalize,
    pretty,
    tail_core,
    to_partition,
)
from symdec.blocks import candidate_set, weight_k
from symdec.partitions import add_rim_hook_all, odd_parts_count, p_core

from conftest import partitions


class TestRoundTrip:
    def test_empty(self):
        assert from_partition((), 3, 3).beads == frozenset({0, 1, 2})

    def test_small(self):
        assert from_partition((3, 1, 1), 3, 3).beads == frozenset({5, 2, 1})

    def test_to_partition(self):
        assert to_partition(Abacus(3, frozenset({0, 1, 2}))) == ()
        assert to_partition(Abacus(3, frozenset({5, 2, 1}))) == (3, 1, 1)

    @given(partitions(), st.sampled_from([3, 5, 7]), st.integers(0, 3))
    def test_round_trip_any_padding(self, lam, p, extra):
        nbeads = (-(-max(len(lam), 1) // p) + extra) * p
        assert to_partition(from_partition(lam, p, nbeads)) == lam

    @given(partitions(), st.sampled_from([3, 5]))
    def test_padding_equivalent(self, lam, p):
        a = from_partition(lam, p)
        b = from_partition(lam, p, a.nbeads + p)
        assert a.beads != b.beads and equivalent(a, b)
        assert normalize(b) == a

    def test_nbeads_too_small(self):
        with pytest.raises(ValueError):
            from_partition((1, 1, 1, 1), 3, 3)


class TestBeadMoves:
    def test_single_move_is_hook_addition(self):
        a = Abacus(3, frozenset({5, 2, 1}))
        moved = Abacus(3, frozenset({8, 2, 1}))
        assert to_partition(moved) == (6, 1, 1)
        diff = p_core((6, 1, 1), 3)
        assert diff.core == (3, 1, 1) and diff.weight == 1

    def test_empty_abacus_three_moves(self):
        a = from_partition((), 3, 3)
        assert len(bead_down_moves(a)) == 3

    @given(partitions(max_part=8, max_len=6), st.sampled_from([3, 5, 7]))
    def test_matches_rim_hook_additions(self, lam, p):
        a = from_partition(lam, p, (-(-max(len(lam), 1) // p) + p) * p)
        via_abacus = {to_partition(b) for b in bead_down_moves(a)}
        assert via_abacus == add_rim_hook_all(lam, p)

    @given(partitions(), st.sampled_from([3, 5]))
    def test_cores_have_no_up_moves(self, lam, p):
        core = p_core(lam, p).core
        assert not bead_up_moves(from_partition(core, p))


class TestTailCore:
    def test_anchor(self):
        assert tail_core(3, 2) == (3, 1, 1)

    @given(st.sampled_from([3, 5, 7]), st.integers(0, 4))
    def test_is_core(self, p, e):
        gamma = tail_core(p, e)
        res = p_core(gamma, p)
        assert res.core == gamma and res.weight == 0

    def test_smallest_family_member(self):
        gamma = tail_core(3, 0)
        assert weight_k(gamma, 0, 3).w == 1
        assert weight_k(gamma, 1, 3).w == 0

    @given(st.sampled_from([3, 5, 7]), st.integers(0, 4))
    def test_single_odd_part_count_is_consistent(self, p, e):
        gamma = tail_core(p, e)
        # the family predicts w_{e+1} = 0: gamma itself has e+1 odd parts
        assert odd_parts_count(gamma) == e + 1

    def test_candidate_sizes_match_family_law(self):
        gamma = tail_core(5, 3)
        cand = candidate_set(gamma, 2, 5)
        assert cand.w == 2 and len(cand.members) == 3


class TestPretty:
    def test_shape(self):
        text = pretty(from_partition((3, 1, 1), 3, 3))
        lines = text.splitlines()
        assert lines[0] == "0 1 2"
        assert all(len(line.split()) == 3 for line in lines)
        assert sum(line.count("●") for line in lines) == 3
