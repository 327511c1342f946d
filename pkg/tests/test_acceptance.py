"""Acceptance suite: one test per criterion, each printing a pass/fail line
with its runtime and asserting the stated budget.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.
"""

import random
import time

import numpy as np
import pytest

from symdec.abacus import bead_down_moves, from_partition, tail_core, to_partition
from symdec.blocks import (
    BlockLabel,
    candidate_set,
    synthesize_columns,
    tail_core_sweep,
    weight_condition_holds,
    weight_k,
)
from symdec.characters import (
    foulkes_character_induced,
    foulkes_character_sum,
    inner_product,
    irreducible_character,
)
from symdec.fplinalg import FpMatrix
from symdec.fpmodules import (
    check_braid_relations,
    check_involution_generators,
    preserves_form,
)
from symdec.matchings import (
    diagonal_cycle_group,
    feasible_strata,
    fixed_points,
    stratify,
    stratum_layer_size,
    stratum_orbit_count,
)
from symdec.meataxe import (
    block_decomposition_rows,
    check_row_invariants,
    verify_column,
)
from symdec.partitions import (
    add_rim_hook_all,
    conjugate,
    odd_parts_count,
    p_core,
    parse_partition,
    partitions_of,
    size,
)
from symdec.specht import specht_module


class _Budget:
    def __init__(self, name: str, seconds: float):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        print(f"[acceptance] {self.name}: {status} ({elapsed:.1f}s / {self.seconds:.0f}s budget)")
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"{self.name} exceeded its {self.seconds:.0f}s budget ({elapsed:.1f}s)"
            )


def test_criterion_1_golden_blocks():
    with _Budget("1 golden blocks", 5):
        # p=3, core (3,1,1), k=0
        cand = candidate_set((3, 1, 1), 0, 3)
        assert cand.w == 3
        assert set(cand.members) == {
            (8, 4, 2), (6, 6, 2), (6, 4, 4), (6, 4, 2, 2),
        }
        cols = synthesize_columns((3, 1, 1), 0, 3)
        assert len(cols) == 1 and cols[0].status == "exact"
        assert cols[0].label == (8, 4, 2)
        assert set(cols[0].ones) == set(cand.members)

        # p=7, core (4,4,4), k=6
        cand = candidate_set((4, 4, 4), 6, 7)
        assert cand.w == 2
        comp_a = {
            (11, 4, 4, 3, 1, 1, 1, 1),
            (11, 4, 4, 2, 1, 1, 1, 1, 1),
            (10, 5, 4, 3, 1, 1, 1, 1),
            (10, 5, 4, 2, 1, 1, 1, 1, 1),
        }
        comp_b = {
            (9, 5, 5, 5, 1, 1),
            (9, 5, 5, 4, 1, 1, 1),
            (8, 5, 5, 5, 1, 1, 1),
        }
        assert set(cand.members) == comp_a | comp_b
        cols = synthesize_columns((4, 4, 4), 6, 7)
        assert [c.status for c in cols] == ["exact", "exact"]
        by_label = {c.label: set(c.ones) for c in cols}
        assert by_label == {
            (11, 4, 4, 3, 1, 1, 1, 1): comp_a,
            (9, 5, 5, 5, 1, 1): comp_b,
        }

        # p=5, core (5,4,2,1^4), k=6
        gamma = parse_partition("5,4,2,1^4")
        cand = candidate_set(gamma, 6, 5)
        assert cand.w == 3
        expected = {
            parse_partition(text)
            for text in (
                "15,9,2,1^4", "15,6,5,1^4", "13,11,2,1^4",
                "13,6,5,3,1^3", "10,9,7,1^4", "10,9,5,3,1^3",
            )
        }
        assert set(cand.members) == expected
        assert weight_k(gamma, 1, 5).w == 8
        holds, witness = weight_condition_holds(gamma, 6, 5)
        assert holds and witness["w_k_minus_p"] == 8


def test_criterion_2_tail_core_sweep():
    with _Budget("2 tail-core sweep", 60):
        for p in (3, 5, 7):
            report = tail_core_sweep(p, 4)
            assert report["all_ok"], report
            assert len(report["cells"]) == sum(e + 2 for e in range(5))


def test_criterion_3_character_identity():
    with _Budget("3 character identity", 120):
        for n in range(0, 11):
            irreducibles = [irreducible_character(lam) for lam in partitions_of(n)]
            for k in range(n + 1):
                if (n - k) % 2:
                    continue
                m = (n - k) // 2
                by_sum = foulkes_character_sum(m, k)
                by_induction = foulkes_character_induced(m, k)
                assert by_sum == by_induction, (m, k)
                for chi in irreducibles:
                    assert inner_product(by_sum, chi) in (0, 1), (m, k)


def test_criterion_4_stratification_identities():
    with _Budget("4 stratification identities", 300):
        for p in (3, 5):
            for total in range(0, 13):
                for k in range(total + 1):
                    if (total - k) % 2:
                        continue
                    m = (total - k) // 2
                    for r in range(1, total // p + 1):
                        strata = stratify(m, k, r, p)
                        feasible = feasible_strata(m, k, r, p)
                        spec = diagonal_cycle_group(r, p, total)
                        n_fixed = len(fixed_points(m, k, spec))
                        assert sum(len(s.elements) for s in strata) == n_fixed
                        for stratum in strata:
                            if stratum.elements:
                                assert stratum.t in feasible, (m, k, r, p)
                            assert len(stratum.elements) == stratum_layer_size(
                                m, k, r, stratum.t, p
                            ), (m, k, r, p, stratum.t)
        for r, t, p in ((2, 1, 3), (1, 0, 3), (2, 1, 5)):
            assert stratum_orbit_count(r, t, p) == p**t


def test_criterion_5_oracle_cross_check():
    with _Budget("5 oracle cross-check", 900):
        p = 3
        cases = []
        for total in range(0, 5):
            for gamma in partitions_of(total):
                if p_core(gamma, p).weight != 0:
                    continue
                for k in (0, 1, 2):
                    res = weight_k(gamma, k, p)
                    if res.n > 8:
                        continue
                    holds, _ = weight_condition_holds(gamma, k, p)
                    if not holds:
                        continue
                    cases.append((gamma, k, res))
        assert cases, "the sweep must cover at least one block"
        checked_columns = 0
        for seed in (7, 8191):
            results = {}
            for gamma, k, res in cases:
                label = BlockLabel(p, gamma, res.w)
                rows = block_decomposition_rows(label, seed=seed)
                assert check_row_invariants(rows, p) == [], (gamma, k)
                for col in synthesize_columns(gamma, k, p):
                    if col.status != "exact":
                        continue
                    report = verify_column(col, seed=seed, rows=rows)
                    assert report["mismatches"] == []
                    checked_columns += 1
                results[(gamma, k)] = {
                    mu: row.multiplicities for mu, row in rows.items()
                }
            if seed == 7:
                first = results
            else:
                assert results == first, "seeds 7 and 8191 disagree"
        assert checked_columns >= 2 * len(cases)  # every case has >= 1 column
        print(f"    ({len(cases)} blocks, {checked_columns} column checks)")


def test_criterion_6_bound_attainment():
    with _Budget("6 bound attainment", 60):
        for p in (3, 5):
            for w in range(0, 5):
                for k in (0, 1):
                    if w == 0 and k == 0:
                        gamma = (2,)
                    else:
                        gamma = tail_core(p, w + k - 1)
                    assert weight_k(gamma, k, p).w == w, (p, w, k)
                    cols = synthesize_columns(gamma, k, p)
                    assert len(cols) == 1, (p, w, k)
                    assert cols[0].status == "exact"
                    assert len(cols[0].ones) == w + 1, (p, w, k)


def test_criterion_7_property_suites():
    with _Budget("7 property suites", 300):
        rng = random.Random(20240)

        def random_partition(max_total=24):
            parts = []
            remaining = rng.randint(0, max_total)
            while remaining:
                part = rng.randint(1, remaining)
                parts.append(part)
                remaining -= part
            return tuple(sorted(parts, reverse=True))

        # partition round trips and hook/abacus equivalence
        for _ in range(200):
            lam = random_partition()
            assert conjugate(conjugate(lam)) == lam
            p = rng.choice([3, 5, 7])
            res = p_core(lam, p)
            assert size(lam) == size(res.core) + p * res.weight
            assert p_core(res.core, p).weight == 0
            a = from_partition(lam, p, (-(-max(len(lam), 1) // p) + p) * p)
            assert to_partition(a) == lam
            via_abacus = {to_partition(b) for b in bead_down_moves(a)}
            assert via_abacus == add_rim_hook_all(lam, p)
            assert odd_parts_count(lam) % 2 == size(lam) % 2

        # character orthogonality
        for n in range(0, 8):
            chars = [irreducible_character(lam) for lam in partitions_of(n)]
            for i, a in enumerate(chars):
                for j, b in enumerate(chars):
                    assert inner_product(a, b) == (1 if i == j else 0)

        # F_p algebra laws
        nprng = np.random.default_rng(20240)
        for _ in range(60):
            p = int(nprng.choice([3, 5, 7]))
            rows, cols = int(nprng.integers(1, 8)), int(nprng.integers(1, 8))
            m = FpMatrix(p, nprng.integers(0, p, (rows, cols)))
            R, rank, piv = m.rref()
            assert R.rref()[0] == R
            assert rank == m.transpose().rank()
            basis = m.nullspace()
            assert basis.rows == cols - rank
            if basis.rows:
                assert np.all((m.a @ basis.a.T) % p == 0)
            other = FpMatrix(p, nprng.integers(0, p, (cols, 5)))
            assert (m @ other).rank() <= min(rank, other.rank())

        # Specht relation spot checks
        for mu in [(3, 1), (2, 2), (3, 2), (2, 2, 1), (4, 2), (3, 2, 1)]:
            data = specht_module(mu, 3)
            assert check_involution_generators(data.module)
            assert check_braid_relations(data.module)
            assert preserves_form(data.module, data.gram)
