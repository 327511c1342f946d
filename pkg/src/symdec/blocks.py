"""The headline pipeline: minimal hook weights w_k, candidate sets E_k,
dominance components, and synthesized decomposition-matrix columns.

A block of S_n in odd characteristic p is labelled by a p-core gamma and a
weight w with n = |gamma| + w*p.  Given gamma and a target count k of odd
parts, w_k(gamma) is the least number of rim p-hooks whose addition to
gamma produces exactly k odd parts, and E_k(gamma) is the set of partitions
achieving it.  When the weight condition below holds, E_k splits into
dominance components whose unique maxima label columns of the decomposition
matrix that are 1 on the component and 0 elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .errors import HypothesisViolation, SearchCapExceeded
from .partitions import (
    Partition,
    check_odd_prime,
    dominates,
    format_partition,
    is_p_regular,
    odd_parts_count,
    p_core,
    partitions_of,
    size,
    validate_partition,
)


@dataclass(frozen=True)
class BlockLabel:
    p: int
    core: Partition
    weight: int

    def __post_init__(self):
        check_odd_prime(self.p)
        if p_core(self.core, self.p).weight != 0:
            raise ValueError(f"{self.core} is not a {self.p}-core")
        if self.weight < 0:
            raise ValueError("weight must be >= 0")

    @property
    def n(self) -> int:
        return size(self.core) + self.weight * self.p


@dataclass(frozen=True)
class WeightResult:
    w: int
    n: int


@dataclass(frozen=True)
class CandidateSet:
    gamma: Partition
    k: int
    p: int
    w: int
    members: tuple[Partition, ...]  # descending lex

    @property
    def n(self) -> int:
        return size(self.gamma) + self.w * self.p


@dataclass(frozen=True)
class DominanceComponent:
    members: tuple[Partition, ...]  # descending lex
    maxima: tuple[Partition, ...]  # descending lex

    @property
    def ambiguous(self) -> bool:
        return len(self.maxima) != 1

    @property
    def max(self) -> Partition | None:
        return self.maxima[0] if len(self.maxima) == 1 else None


@dataclass(frozen=True)
class DecompositionColumn:
    """Column of the decomposition matrix labelled by a p-regular partition.

    status "exact": entries are 1 on `ones` and 0 on every other row of the
    block.  status "support-only": only the diagonal 1 is listed in `ones`;
    the remaining guarantee is that nonzero entries are 1s confined to the
    candidate set of the label.
    """

    block: BlockLabel
    label: Partition
    ones: tuple[Partition, ...]
    status: str  # "exact" | "support-only"

    def __post_init__(self):
        if self.status not in ("exact", "support-only"):
            raise ValueError(f"bad status {self.status!r}")
        if self.label not in self.ones:
            raise ValueError("label must appear among the ones")


def _multipartitions(total: int, components: int) -> Iterator[tuple[Partition, ...]]:
    """All tuples of `components` partitions with sizes summing to `total`."""
    if components == 0:
        if total == 0:
            yield ()
        return

    def compositions(t: int, c: int):
        if c == 1:
            yield (t,)
            return
        for first in range(t + 1):
            for rest in compositions(t - first, c - 1):
                yield (first,) + rest

    for comp in compositions(total, components):
        for tup in product(*(list(partitions_of(x)) for x in comp)):
            yield tup


@lru_cache(maxsize=None)
def multipartition_count(total: int, components: int) -> int:
    return sum(1 for _ in _multipartitions(total, components))


def partitions_with_core_and_weight(gamma: Partition, p: int, w: int) -> set[Partition]:
    """All partitions with p-core gamma and weight w.

    Uses the p-quotient bijection: with nbeads large enough that every
    runner carries at least w beads, the weight-w configurations correspond
    to p-tuples of partitions of total size w, each component sliding the
    beads of one runner downward.
    """
    gamma = validate_partition(gamma)
    check_odd_prime(p)
    if p_core(gamma, p).weight != 0:
        raise ValueError(f"{gamma} is not a {p}-core")
    if w < 0:
        raise ValueError("w must be >= 0")
    if w == 0:
        return {gamma}

    nbeads = (-(-max(len(gamma), 1) // p) + w) * p
    from .partitions import beta_set, partition_from_beta

    beta = beta_set(gamma, nbeads)
    runners = [sorted(q // p for q in beta if q % p == res) for res in range(p)]
    # gamma is a core: each runner's beads occupy an initial segment of rows
    assert all(rows == list(range(len(rows))) for rows in runners)

    out = set()
    for quot in _multipartitions(w, p):
        new_beta = []
        for res in range(p):
            c = len(runners[res])
            padded = list(quot[res]) + [0] * (c - len(quot[res]))
            # deepest bead takes the largest displacement; rows stay distinct
            new_beta.extend((j + padded[c - 1 - j]) * p + res for j in range(c))
        out.add(partition_from_beta(new_beta))
    return out


def weight_k(gamma: Partition, k: int, p: int, cap: int | None = None) -> WeightResult:
    """Minimal w such that some weight-w partition over gamma has exactly k
    odd parts, by iterative deepening over w.

    Adding one p-hook flips the size parity (p odd), and the number of odd
    parts is congruent to the size mod 2, so only every other w is feasible.
    """
    gamma = validate_partition(gamma)
    check_odd_prime(p)
    if k < 0:
        raise ValueError("k must be >= 0")
    if cap is None:
        cap = 4 * (size(gamma) + k + p)
    start = (k - size(gamma)) % 2
    for w in range(start, cap + 1, 2):
        for lam in partitions_with_core_and_weight(gamma, p, w):
            if odd_parts_count(lam) == k:
                return WeightResult(w, size(gamma) + w * p)
    raise SearchCapExceeded(
        f"no weight <= {cap} reaches {k} odd parts over core {gamma} (p={p})"
    )


def candidate_set(gamma: Partition, k: int, p: int, cap: int | None = None) -> CandidateSet:
    """E_k(gamma): the weight-w_k partitions over gamma with exactly k odd parts."""
    res = weight_k(gamma, k, p, cap=cap)
    members = sorted(
        (
            lam
            for lam in partitions_with_core_and_weight(gamma, p, res.w)
            if odd_parts_count(lam) == k
        ),
        reverse=True,
    )
    return CandidateSet(validate_partition(gamma), k, p, res.w, tuple(members))


def weight_condition_holds(
    gamma: Partition, k: int, p: int, cap: int | None = None
) -> tuple[bool, dict]:
    """Check w_{k-p}(gamma) != w_k(gamma) - 1 (vacuously true for k < p).

    Returns (holds, witness) where the witness records both weights.
    Equivalently the strict inequality w_{k-p} > w_k - 1, since w_k can
    never exceed w_{k-p} + 1 (add one vertical p-hook).
    """
    w_now = weight_k(gamma, k, p, cap=cap).w
    if k < p:
        return True, {"k": k, "w_k": w_now, "vacuous": True}
    w_prev = weight_k(gamma, k - p, p, cap=cap).w
    return w_prev != w_now - 1, {
        "k": k,
        "w_k": w_now,
        "k_minus_p": k - p,
        "w_k_minus_p": w_prev,
        "vacuous": False,
    }


def dominance_components(cand: CandidateSet) -> list[DominanceComponent]:
    """Connected components of the dominance comparability graph on E_k.

    Components are ordered by their largest member, descending lex; a
    component with several maximal elements is flagged ambiguous by
    carrying them all.
    """
    members = list(cand.members)
    m = len(members)
    comparable = [[False] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if dominates(members[i], members[j]) or dominates(members[j], members[i]):
                comparable[i][j] = comparable[j][i] = True

    seen = [False] * m
    comps = []
    for root in range(m):
        if seen[root]:
            continue
        stack, comp = [root], []
        seen[root] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(m):
                if comparable[i][j] and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comp_members = sorted((members[i] for i in comp), reverse=True)
        maxima = tuple(
            lam
            for lam in comp_members
            if not any(
                mu != lam and dominates(mu, lam) for mu in comp_members
            )
        )
        comps.append(DominanceComponent(tuple(comp_members), maxima))
    comps.sort(key=lambda c: c.members[0], reverse=True)
    return comps


def synthesize_columns(
    gamma: Partition, k: int, p: int, cap: int | None = None
) -> list[DecompositionColumn]:
    """Columns of the decomposition matrix determined by (gamma, k, p).

    Refuses (HypothesisViolation) when the weight condition fails.  Each
    unambiguous dominance component yields an exact column; an ambiguous
    component yields one support-only column per maximal element, because
    the split of such a component is not determined combinatorially.
    """
    holds, witness = weight_condition_holds(gamma, k, p, cap=cap)
    if not holds:
        raise HypothesisViolation(
            gamma, k, p, witness["w_k"], witness["w_k_minus_p"]
        )
    cand = candidate_set(gamma, k, p, cap=cap)
    block = BlockLabel(p, validate_partition(gamma), cand.w)
    columns = []
    for comp in dominance_components(cand):
        if not comp.ambiguous:
            label = comp.max
            if not is_p_regular(label, p):
                raise RuntimeError(
                    f"internal invariant broken: component max {label} "
                    f"is not {p}-regular"
                )
            columns.append(
                DecompositionColumn(block, label, comp.members, "exact")
            )
        else:
            for label in comp.maxima:
                if not is_p_regular(label, p):
                    raise RuntimeError(
                        f"internal invariant broken: maximal element {label} "
                        f"is not {p}-regular"
                    )
                columns.append(
                    DecompositionColumn(block, label, (label,), "support-only")
                )
    return columns


def column_as_dict(col: DecompositionColumn) -> dict:
    """The documented JSON form of a column."""
    return {
        "p": col.block.p,
        "core": format_partition(col.block.core),
        "weight": col.block.weight,
        "label": format_partition(col.label),
        "status": col.status,
        "ones": [format_partition(lam) for lam in col.ones],
    }


def tail_core_sweep(p: int, e_max: int) -> dict:
    """Check w_k = e+1-k and |E_k| = e+2-k over the tail-core family.

    Returns a pass/fail table covering 0 <= e <= e_max, 0 <= k <= e+1.
    """
    from .abacus import tail_core

    check_odd_prime(p)
    cells = []
    all_ok = True
    for e in range(e_max + 1):
        gamma = tail_core(p, e)
        for k in range(e + 2):
            cand = candidate_set(gamma, k, p)
            ok = cand.w == e + 1 - k and len(cand.members) == e + 2 - k
            all_ok = all_ok and ok
            cells.append(
                {
                    "e": e,
                    "k": k,
                    "core": format_partition(gamma),
                    "w": cand.w,
                    "expected_w": e + 1 - k,
                    "count": len(cand.members),
                    "expected_count": e + 2 - k,
                    "ok": ok,
                }
            )
    return {"p": p, "e_max": e_max, "cells": cells, "all_ok": all_ok}
