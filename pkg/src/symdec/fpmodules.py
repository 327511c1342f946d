"""Modules over F_p given by generator matrices, and the generic operations
the splitting engine needs: spinning a subspace closed under the action,
restriction to a submodule, and quotients.

Vectors are rows; a generator g acts by v -> v @ g.  A submodule is carried
by its row-reduced basis matrix, so coordinates in the submodule are just
the entries at the pivot columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fplinalg import FpMatrix


@dataclass(frozen=True)
class FpModule:
    p: int
    dim: int
    generators: tuple[FpMatrix, ...]
    provenance: str = ""

    def __post_init__(self):
        for g in self.generators:
            if g.p != self.p or g.shape != (self.dim, self.dim):
                raise ValueError("generator matrices must be dim x dim over F_p")


def check_involution_generators(module: FpModule) -> bool:
    """True when every generator squares to the identity (adjacent
    transpositions do)."""
    ident = FpMatrix.identity(module.p, module.dim)
    return all(g @ g == ident for g in module.generators)


def check_braid_relations(module: FpModule) -> bool:
    """Adjacent braid relations g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1} and
    commutation of distant generators."""
    gens = module.generators
    for i in range(len(gens) - 1):
        a, b = gens[i], gens[i + 1]
        if a @ b @ a != b @ a @ b:
            return False
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if gens[i] @ gens[j] != gens[j] @ gens[i]:
                return False
    return True


class _Echelon:
    """Incrementally row-reduced basis used by spin."""

    def __init__(self, p: int, width: int):
        self.p = p
        self.width = width
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = v % self.p
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                v = (v - int(v[c]) * row) % self.p
        return v

    def insert(self, v: np.ndarray) -> bool:
        """Reduce v against the basis; absorb it if independent."""
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * pow(int(v[c]), self.p - 2, self.p)) % self.p
        # keep earlier rows fully reduced
        for i in range(len(self.rows)):
            if self.rows[i][c]:
                self.rows[i] = (self.rows[i] - int(self.rows[i][c]) * v) % self.p
        self.rows.append(v)
        self.pivots.append(c)
        return True

    def matrix(self) -> FpMatrix:
        order = np.argsort(self.pivots)
        data = (
            np.array([self.rows[i] for i in order], dtype=np.int64)
            if self.rows
            else np.zeros((0, self.width), dtype=np.int64)
        )
        return FpMatrix(self.p, data, copy=False)


def spin(module: FpModule, seeds: np.ndarray) -> FpMatrix:
    """Smallest submodule containing the seed rows, as an rref basis."""
    ech = _Echelon(module.p, module.dim)
    queue = [np.asarray(row, dtype=np.int64) for row in np.atleast_2d(seeds)]
    fresh = [v for v in queue if ech.insert(v)]
    while fresh:
        batch = FpMatrix(module.p, np.array(fresh, dtype=np.int64))
        fresh = []
        for g in module.generators:
            image = (batch @ g).a
            for row in image:
                if ech.insert(row.copy()):
                    fresh.append(row)
    return ech.matrix()


def submodule(module: FpModule, basis: FpMatrix, provenance: str = "") -> FpModule:
    """The action restricted to the row space of `basis` (must be an rref
    basis closed under the action)."""
    R, rank, pivots = basis.rref()
    if rank != basis.rows:
        raise ValueError("submodule basis must have full row rank")
    cols = list(pivots)
    gens = tuple(
        FpMatrix(module.p, (R @ g).a[:, cols]) for g in module.generators
    )
    return FpModule(module.p, rank, gens, provenance or f"sub({module.provenance})")


def quotient(module: FpModule, basis: FpMatrix, provenance: str = "") -> FpModule:
    """The action on module / rowspace(basis), in the coordinates of the
    non-pivot columns."""
    R, rank, pivots = basis.rref()
    pivot_set = set(pivots)
    free = [c for c in range(module.dim) if c not in pivot_set]
    p = module.p
    gens = []
    for g in module.generators:
        rows = []
        for j in free:
            v = g.a[j].copy()
            # subtract the submodule component at the pivot coordinates
            coeffs = v[list(pivots)] if pivots else np.zeros(0, dtype=np.int64)
            if rank:
                v = (v - coeffs @ R.a) % p
            rows.append(v[free])
        gens.append(FpMatrix(p, np.array(rows, dtype=np.int64)))
    return FpModule(
        p, len(free), tuple(gens), provenance or f"quo({module.provenance})"
    )


def preserves_form(module: FpModule, gram: FpMatrix) -> bool:
    """True when every generator g satisfies g G g^T = G (rows act on the
    left, so this is invariance of the bilinear form)."""
    return all(g @ gram @ g.transpose() == gram for g in module.generators)


def transpose_module(module: FpModule) -> FpModule:
    return FpModule(
        module.p,
        module.dim,
        tuple(g.transpose() for g in module.generators),
        f"transpose({module.provenance})",
    )
