"""Specht modules over F_p in the standard-polytabloid basis.

A basis vector is indexed by a standard Young tableau; the action of an
adjacent transposition relabels the tableau and the result is rewritten in
the standard basis by repeated Garnir relations (straightening).  The
straightening coefficients are integers independent of p, so they are
memoized once and reduced modulo p when matrices are assembled.

The invariant bilinear form is computed by expanding each polytabloid into
tabloids; its Gram matrix drives the simple-head construction downstream.

Modules are cached on disk keyed by (p, mu); set SYMDEC_CACHE to move the
cache, SYMDEC_NO_CACHE=1 (or use_cache=False) to bypass it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path

import numpy as np

from .fplinalg import FpMatrix
from .fpmodules import FpModule
from .partitions import (
    Partition,
    format_partition,
    size,
    syt_count,
    validate_partition,
)

DEFAULT_CAP = 10

Tableau = tuple[tuple[int, ...], ...]


def _shape_of(tab: Tableau) -> Partition:
    return tuple(len(row) for row in tab)


def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """All standard Young tableaux of the given shape, sorted by their row
    words (a fixed basis order)."""
    shape = validate_partition(shape)
    n = size(shape)
    rows = [[0] * part for part in shape]
    filled = [0] * len(shape)
    out: list[Tableau] = []

    def place(v: int):
        if v > n:
            out.append(tuple(tuple(row) for row in rows))
            return
        for i in range(len(shape)):
            if filled[i] < shape[i] and (i == 0 or filled[i - 1] > filled[i]):
                rows[i][filled[i]] = v
                filled[i] += 1
                place(v + 1)
                filled[i] -= 1

    place(1)
    out.sort()
    return tuple(out)


def _to_columns(tab: Tableau) -> list[list[int]]:
    shape = _shape_of(tab)
    width = shape[0] if shape else 0
    return [
        [tab[i][j] for i in range(len(shape)) if shape[i] > j] for j in range(width)
    ]


def _from_columns(cols: list[list[int]], shape: Partition) -> Tableau:
    return tuple(
        tuple(cols[j][i] for j in range(shape[i])) for i in range(len(shape))
    )


def _sort_parity(values) -> tuple[list[int], int]:
    """Sorted copy plus the parity sign of the sorting permutation."""
    vals = list(values)
    inversions = sum(
        1
        for i in range(len(vals))
        for j in range(i + 1, len(vals))
        if vals[i] > vals[j]
    )
    return sorted(vals), -1 if inversions % 2 else 1


def _column_sorted(tab: Tableau) -> tuple[Tableau, int]:
    cols = _to_columns(tab)
    sign = 1
    sorted_cols = []
    for col in cols:
        s, sgn = _sort_parity(col)
        sorted_cols.append(s)
        sign *= sgn
    return _from_columns(sorted_cols, _shape_of(tab)), sign


def _is_standard(tab: Tableau) -> bool:
    # columns assumed sorted; check the rows
    for row in tab:
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                return False
    return True


_straighten_memo: dict[Tableau, dict[Tableau, int]] = {}


def _straighten_column_sorted(tab: Tableau) -> dict[Tableau, int]:
    """Rewrite the polytabloid of a column-sorted tableau over the standard
    basis, by Garnir relations at the first row descent."""
    cached = _straighten_memo.get(tab)
    if cached is not None:
        return cached
    if _is_standard(tab):
        result = {tab: 1}
        _straighten_memo[tab] = result
        return result

    shape = _shape_of(tab)
    viol = None
    for i in range(len(shape)):
        for j in range(shape[i] - 1):
            if tab[i][j] > tab[i][j + 1]:
                viol = (i, j)
                break
        if viol:
            break
    i, j = viol

    cols = _to_columns(tab)
    below = cols[j][i:]  # column j from the descent row down
    above = cols[j + 1][: i + 1]  # column j+1 from the top to the descent row
    combined = sorted(below + above)
    orig = tuple(sorted(below))

    def parity(seq) -> int:
        inv = sum(
            1
            for a in range(len(seq))
            for b in range(a + 1, len(seq))
            if seq[a] > seq[b]
        )
        return -1 if inv % 2 else 1

    eps0 = parity(sorted(below) + sorted(above))
    result: dict[Tableau, int] = {}
    for chosen in combinations(combined, len(below)):
        if chosen == orig:
            continue
        rest = sorted(set(combined) - set(chosen))
        eps = parity(list(chosen) + rest)
        new_cols = [list(c) for c in cols]
        new_cols[j][i:] = list(chosen)
        new_cols[j + 1][: i + 1] = rest
        candidate = _from_columns(new_cols, shape)
        sorted_tab, sort_sign = _column_sorted(candidate)
        for t, c in _straighten_column_sorted(sorted_tab).items():
            coeff = result.get(t, 0) - eps0 * eps * sort_sign * c
            if coeff:
                result[t] = coeff
            elif t in result:
                del result[t]
    _straighten_memo[tab] = result
    return result


def straighten(tab: Tableau) -> dict[Tableau, int]:
    """Integer coordinates of the polytabloid of an arbitrary bijective
    filling, in the standard basis."""
    sorted_tab, sign = _column_sorted(tab)
    return {
        t: sign * c for t, c in _straighten_column_sorted(sorted_tab).items()
    }


# ---------------------------------------------------------------------------
# Tabloid expansion and the invariant form.


@lru_cache(maxsize=32)
def _signed_perms(length: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in permutations(range(length)):
        inv = sum(
            1
            for a in range(length)
            for b in range(a + 1, length)
            if perm[a] > perm[b]
        )
        out.append((perm, -1 if inv % 2 else 1))
    return tuple(out)


def _polytabloid_tabloids(tab: Tableau) -> dict[tuple[int, ...], int]:
    """Expansion of the polytabloid as {row-membership tabloid: sign}."""
    n = size(_shape_of(tab))
    cols = _to_columns(tab)
    row_index = {}
    for i, row in enumerate(tab):
        for v in row:
            row_index[v] = i

    col_cells = [
        [row_index[v] for v in col] for col in cols
    ]  # the row of each cell, per column, top to bottom

    def rec(j: int, rows_of: list[int], sign: int, acc: dict):
        if j == len(cols):
            key = tuple(rows_of)
            acc[key] = acc.get(key, 0) + sign
            return
        col = cols[j]
        for perm, psign in _signed_perms(len(col)):
            for cell, src in enumerate(perm):
                rows_of[col[src] - 1] = col_cells[j][cell]
            rec(j + 1, rows_of, sign * psign, acc)

    acc: dict[tuple[int, ...], int] = {}
    rec(0, [0] * n, 1, acc)
    return acc


def gram_matrix(mu: Partition, p: int, basis: tuple[Tableau, ...] | None = None) -> FpMatrix:
    """Matrix of the invariant bilinear form on the standard basis, mod p."""
    if basis is None:
        basis = standard_tableaux(mu)
    expansions = [_polytabloid_tabloids(t) for t in basis]
    d = len(basis)
    gram = np.zeros((d, d), dtype=np.int64)
    for a in range(d):
        ea = expansions[a]
        for b in range(a, d):
            eb = expansions[b]
            small, large = (ea, eb) if len(ea) <= len(eb) else (eb, ea)
            val = sum(c * large.get(key, 0) for key, c in small.items())
            gram[a, b] = gram[b, a] = val % p
    return FpMatrix(p, gram, copy=False)


# ---------------------------------------------------------------------------
# Module assembly and caching.


@dataclass(frozen=True)
class SpechtData:
    mu: Partition
    module: FpModule
    gram: FpMatrix
    basis: tuple[Tableau, ...]


def cache_location() -> Path:
    env = os.environ.get("SYMDEC_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "symdec"


def _cache_file(mu: Partition, p: int) -> Path:
    tag = "-".join(str(x) for x in mu) or "empty"
    return cache_location() / f"specht_p{p}_{tag}.npz"


def _swap_values(tab: Tableau, a: int, b: int) -> Tableau:
    return tuple(
        tuple(b if v == a else a if v == b else v for v in row) for row in tab
    )


def _build_matrices(mu: Partition, p: int) -> tuple[list[np.ndarray], np.ndarray]:
    basis = standard_tableaux(mu)
    index = {t: i for i, t in enumerate(basis)}
    d = len(basis)
    n = size(mu)
    gens = []
    for a in range(1, n):
        mat = np.zeros((d, d), dtype=np.int64)
        for i, tab in enumerate(basis):
            for t, c in straighten(_swap_values(tab, a, a + 1)).items():
                mat[i, index[t]] = c % p
        gens.append(mat)
    gram = gram_matrix(mu, p, basis).a
    return gens, gram


@lru_cache(maxsize=256)
def _specht_cached(mu: Partition, p: int, use_cache: bool) -> SpechtData:
    d = syt_count(mu)
    n = size(mu)
    path = _cache_file(mu, p)
    gens = gram = None
    if use_cache and path.exists():
        try:
            data = np.load(path)
            stack, gram = data["generators"], data["gram"]
            if stack.shape == (max(n - 1, 0), d, d) and gram.shape == (d, d):
                gens = [stack[i] for i in range(stack.shape[0])]
            else:
                gens = gram = None
        except Exception:
            gens = gram = None
    if gens is None:
        gens, gram = _build_matrices(mu, p)
        if use_cache:
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                stack = (
                    np.stack(gens)
                    if gens
                    else np.zeros((0, d, d), dtype=np.int64)
                )
                np.savez(path, generators=stack, gram=gram)
            except OSError:
                pass
    basis = standard_tableaux(mu)
    module = FpModule(
        p,
        d,
        tuple(FpMatrix(p, g) for g in gens),
        provenance=f"specht({format_partition(mu) or 'empty'}) mod {p}",
    )
    return SpechtData(mu, module, FpMatrix(p, gram), basis)


def specht_module(
    mu: Partition, p: int, cap: int = DEFAULT_CAP, use_cache: bool | None = None
) -> SpechtData:
    """The Specht module of shape mu over F_p with its Gram matrix.

    dim = number of standard tableaux; raises when |mu| exceeds the cap
    (default 10; pass a larger cap explicitly to opt in).
    """
    mu = validate_partition(mu)
    if size(mu) > cap:
        raise ValueError(f"|mu|={size(mu)} exceeds the oracle cap {cap}")
    if use_cache is None:
        use_cache = os.environ.get("SYMDEC_NO_CACHE", "") == ""
    return _specht_cached(mu, p, bool(use_cache))
