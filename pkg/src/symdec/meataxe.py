"""Composition factors over F_p: randomized splitting, simple heads of
Specht modules, decomposition rows, and the column verifier.

The splitting loop draws short random words in the generators, looks for
nullspace vectors, and spins them; a split found either way recurses on the
submodule and quotient.  When every nullspace line spins to the whole
module on both sides (Norton's criterion) the module is irreducible.  The
answer is seed-independent even though the search path is not.

Factors are identified against a library of simple modules by dimension,
then by traces of a fixed word list (an isomorphism invariant), and any
surviving tie by the rank of the intertwining system X A_i = B_i X solved
through the nullspace kernel.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

import numpy as np

from .blocks import BlockLabel, DecompositionColumn, candidate_set
from .errors import MeataxeCapError, OracleMismatch
from .fplinalg import FpMatrix
from .fpmodules import FpModule, quotient, spin, submodule, transpose_module
from .partitions import (
    Partition,
    dominates,
    format_partition,
    is_p_regular,
    odd_parts_count,
    size,
)
from .specht import DEFAULT_CAP, specht_module

MAX_SPLIT_ATTEMPTS = 200
MAX_NULLITY = 4
WORD_LENGTH = 6


def derive_seed(global_seed: int, *parts) -> int:
    """Stable per-task seed: hash of the global seed and identifying parts."""
    text = "|".join([str(global_seed), *map(str, parts)])
    return int.from_bytes(
        hashlib.blake2b(text.encode(), digest_size=8).digest(), "big"
    )


def random_algebra_element(module: FpModule, rng: random.Random) -> FpMatrix:
    """A short random integer combination of words in the generators."""
    p, d = module.p, module.dim
    gens = module.generators
    total = FpMatrix.zeros(p, d, d)
    for _ in range(rng.randint(2, 4)):
        word = FpMatrix.identity(p, d)
        for _ in range(rng.randint(1, WORD_LENGTH)):
            word = word @ gens[rng.randrange(len(gens))]
        total = total + word.scale(rng.randint(1, p - 1))
    return total


def _projective_points(null_basis: FpMatrix):
    """One representative per line of the row space of null_basis."""
    k = null_basis.rows
    p = null_basis.p
    if k == 0:
        return
    # vectors whose first nonzero coordinate (in basis coords) is 1
    for lead in range(k):
        tail_width = k - lead - 1
        count = p**tail_width
        for idx in range(count):
            coeffs = np.zeros(k, dtype=np.int64)
            coeffs[lead] = 1
            rem = idx
            for j in range(tail_width):
                coeffs[lead + 1 + j] = rem % p
                rem //= p
            yield (coeffs @ null_basis.a) % p


def chop(module: FpModule, rng: random.Random) -> list[FpModule]:
    """Composition factors of the module, as a list of simple modules."""
    if module.dim == 0:
        return []
    if module.dim == 1:
        return [module]
    if not module.generators:
        one = FpModule(module.p, 1, (), provenance="trivial line")
        return [one] * module.dim

    for _ in range(MAX_SPLIT_ATTEMPTS):
        theta = random_algebra_element(module, rng)
        # rows act on the left, so the kernel of theta is the left nullspace
        null = theta.transpose().nullspace()
        if null.rows == 0 or null.rows > MAX_NULLITY:
            continue
        for v in _projective_points(null):
            basis = spin(module, v)
            if 0 < basis.rows < module.dim:
                return chop(submodule(module, basis), rng) + chop(
                    quotient(module, basis), rng
                )
        # every nullspace line generates; try the transpose side
        t_module = transpose_module(module)
        t_null = theta.nullspace()
        split = None
        for w in _projective_points(t_null):
            t_basis = spin(t_module, w)
            if t_basis.rows < module.dim:
                split = t_basis
                break
        if split is None:
            return [module]  # irreducible by Norton's criterion
        ann = split.nullspace()  # annihilator of a transpose-submodule
        basis = spin(module, ann.a)
        if not 0 < basis.rows < module.dim:
            raise MeataxeCapError("annihilator split produced no proper submodule")
        return chop(submodule(module, basis), rng) + chop(
            quotient(module, basis), rng
        )
    raise MeataxeCapError(
        f"no split of {module.provenance} (dim {module.dim}) after "
        f"{MAX_SPLIT_ATTEMPTS} attempts; retry with another seed"
    )


# ---------------------------------------------------------------------------
# Identification.


def _algebra_pair(module: FpModule) -> tuple[FpMatrix, ...]:
    """A small matrix set generating the same algebra as all generators."""
    gens = module.generators
    if len(gens) <= 2:
        return gens
    prod = gens[0]
    for g in gens[1:]:
        prod = prod @ g
    return (gens[0], prod)


def trace_fingerprint(module: FpModule) -> tuple[int, ...]:
    """Traces of a fixed deterministic word list; equal for isomorphic
    modules, so differing fingerprints certify non-isomorphism."""
    gens = module.generators
    if not gens:
        return (module.dim % module.p,)
    traces = [int(np.trace(g.a)) % module.p for g in gens]
    for length in range(2, WORD_LENGTH + 1):
        word = FpMatrix.identity(module.p, module.dim)
        for i in range(length):
            word = word @ gens[(7 * i + length) % len(gens)]
        traces.append(int(np.trace(word.a)) % module.p)
    return tuple(traces)


def hom_space_dim(m1: FpModule, m2: FpModule) -> int:
    """dim Hom(m1, m2): nullity of the stacked intertwining system
    vec(X A_i - B_i X) = 0 over a generating pair of the algebra."""
    if m1.p != m2.p:
        raise ValueError("modulus mismatch")
    if len(m1.generators) != len(m2.generators):
        raise ValueError("generator count mismatch")
    if not m1.generators:
        return m1.dim * m2.dim
    d1, d2 = m1.dim, m2.dim
    blocks = []
    ident1 = np.eye(d1, dtype=np.int64)
    ident2 = np.eye(d2, dtype=np.int64)
    for a, b in zip(_algebra_pair(m1), _algebra_pair(m2)):
        # row-convention intertwiner X (d1 x d2) with A X... for row modules
        # the condition reads A_i @ X = X @ B_i with X mapping m1 -> m2.
        blocks.append(np.kron(a.a, ident2) - np.kron(ident1, b.a.T))
    system = FpMatrix(m1.p, np.vstack(blocks) % m1.p, copy=False)
    return system.nullspace().rows


def identify(factor: FpModule, library: list[tuple[Partition, FpModule]]) -> Partition:
    """Label of the unique library simple isomorphic to the factor."""
    fp = trace_fingerprint(factor)
    candidates = [
        (label, mod)
        for label, mod in library
        if mod.dim == factor.dim and trace_fingerprint(mod) == fp
    ]
    if len(candidates) == 1:
        return candidates[0][0]
    for label, mod in candidates:
        if hom_space_dim(factor, mod) > 0:
            return label
    raise RuntimeError(
        f"factor of dim {factor.dim} matches no library simple: "
        "the library is incomplete or the splitter is wrong"
    )


# ---------------------------------------------------------------------------
# Simple heads and decomposition rows.


def simple_head(
    nu: Partition,
    p: int,
    cap: int = DEFAULT_CAP,
    use_cache: bool | None = None,
    verify: bool = True,
) -> FpModule:
    """D^nu = S^nu modulo the radical of its bilinear form; requires nu
    p-regular.  dim = rank of the Gram matrix."""
    if not is_p_regular(nu, p):
        raise ValueError(f"{nu} is not {p}-regular")
    data = specht_module(nu, p, cap=cap, use_cache=use_cache)
    radical = data.gram.nullspace()
    head = quotient(
        data.module,
        radical,
        provenance=f"simple({format_partition(nu) or 'empty'}) mod {p}",
    )
    if head.dim != data.gram.rank():
        raise RuntimeError("simple head dimension differs from Gram rank")
    if verify and head.dim > 1:
        rng = random.Random(derive_seed(0xD5EC, p, nu))
        if len(chop(head, rng)) != 1:
            raise RuntimeError(f"simple head of {nu} splits: construction bug")
    return head


def composition_factors(
    module: FpModule,
    library: list[tuple[Partition, FpModule]],
    seed: int = 7,
) -> list[Partition]:
    """Multiset (sorted list) of library labels of the composition factors."""
    rng = random.Random(derive_seed(seed, module.provenance))
    factors = chop(module, rng)
    if sum(f.dim for f in factors) != module.dim:
        raise RuntimeError("factor dimensions do not sum to the module dimension")
    return sorted(identify(f, library) for f in factors)


@dataclass(frozen=True)
class DecompositionRow:
    mu: Partition
    multiplicities: dict[Partition, int]


def block_library(
    label: BlockLabel, cap: int = DEFAULT_CAP, use_cache: bool | None = None
) -> list[tuple[Partition, FpModule]]:
    """All simple modules of the block: D^nu for the p-regular nu with the
    block's core and weight (block theory confines composition factors of
    the block's Spechts to these)."""
    from .blocks import partitions_with_core_and_weight

    members = sorted(
        partitions_with_core_and_weight(label.core, label.p, label.weight),
        reverse=True,
    )
    return [
        (nu, simple_head(nu, label.p, cap=cap, use_cache=use_cache))
        for nu in members
        if is_p_regular(nu, label.p)
    ]


def block_decomposition_rows(
    label: BlockLabel,
    seed: int = 7,
    cap: int = DEFAULT_CAP,
    use_cache: bool | None = None,
) -> dict[Partition, DecompositionRow]:
    """Oracle decomposition rows for every partition in the block.

    Each row owns a private seed derived from (seed, mu), so any evaluation
    order gives identical results.
    """
    from .blocks import partitions_with_core_and_weight

    library = block_library(label, cap=cap, use_cache=use_cache)
    rows = {}
    for mu in sorted(
        partitions_with_core_and_weight(label.core, label.p, label.weight),
        reverse=True,
    ):
        data = specht_module(mu, label.p, cap=cap, use_cache=use_cache)
        factors = composition_factors(
            data.module, library, seed=derive_seed(seed, label.p, mu)
        )
        counts: dict[Partition, int] = {}
        for nu in factors:
            counts[nu] = counts.get(nu, 0) + 1
        rows[mu] = DecompositionRow(mu, counts)
    return rows


def check_row_invariants(rows: dict[Partition, DecompositionRow], p: int) -> list[str]:
    """Unitriangularity failures: d_{mu,mu} != 1 for p-regular mu, or a
    nonzero d_{mu,nu} with nu not dominating mu."""
    problems = []
    for mu, row in rows.items():
        if is_p_regular(mu, p) and row.multiplicities.get(mu) != 1:
            problems.append(f"d[{format_partition(mu)},same] != 1")
        for nu, mult in row.multiplicities.items():
            if mult and not dominates(nu, mu):
                problems.append(
                    f"d[{format_partition(mu)},{format_partition(nu)}] nonzero "
                    "but the column label does not dominate the row"
                )
    return problems


def verify_column(
    col: DecompositionColumn,
    seed: int = 7,
    cap: int = DEFAULT_CAP,
    use_cache: bool | None = None,
    rows: dict[Partition, DecompositionRow] | None = None,
) -> dict:
    """Check a synthesized column against oracle decomposition numbers.

    Exact columns must match entry for entry (1 on `ones`, 0 on every other
    block row); support-only columns must have 0/1 entries supported inside
    the candidate set of the label, with a diagonal 1.  Raises
    OracleMismatch when the comparison fails; the report is returned
    otherwise."""
    block = col.block
    if block.n > cap:
        raise ValueError(f"block degree {block.n} exceeds the oracle cap {cap}")
    if rows is None:
        rows = block_decomposition_rows(block, seed=seed, cap=cap, use_cache=use_cache)
    mismatches = []
    if col.status == "exact":
        expected = {mu: (1 if mu in col.ones else 0) for mu in rows}
        for mu, row in rows.items():
            got = row.multiplicities.get(col.label, 0)
            if got != expected[mu]:
                mismatches.append(
                    {
                        "row": format_partition(mu),
                        "expected": expected[mu],
                        "got": got,
                    }
                )
    else:
        allowed = set(
            candidate_set(block.core, odd_parts_count(col.label), block.p).members
        )
        for mu, row in rows.items():
            got = row.multiplicities.get(col.label, 0)
            if got not in (0, 1):
                mismatches.append(
                    {"row": format_partition(mu), "expected": "0 or 1", "got": got}
                )
            elif got == 1 and mu not in allowed:
                mismatches.append(
                    {
                        "row": format_partition(mu),
                        "expected": "support inside the candidate set",
                        "got": got,
                    }
                )
        if rows[col.label].multiplicities.get(col.label, 0) != 1:
            mismatches.append(
                {"row": format_partition(col.label), "expected": 1, "got": 0}
            )
    report = {
        "block": {
            "p": block.p,
            "core": format_partition(block.core),
            "weight": block.weight,
            "n": block.n,
        },
        "column": format_partition(col.label),
        "status": col.status,
        "checked_rows": len(rows),
        "mismatches": mismatches,
    }
    if mismatches:
        raise OracleMismatch(report)
    return report
