"""Exact dense linear algebra over prime fields F_p.

Matrices are dense row-major int64 numpy arrays with entries in [0, p),
p an odd prime below 2^15 so products fit comfortably in a machine word.
The row-reduction and multiplication kernels come from the compiled
extension when it is importable, otherwise from the numpy fallback; set
SYMDEC_FP_BACKEND=py or =c to force a choice.  RREF is unique, so the two
backends agree bit for bit.
"""

from __future__ import annotations

import os

import numpy as np

if os.environ.get("SYMDEC_FP_BACKEND") == "py":
    from . import _kernels_py as _impl
elif os.environ.get("SYMDEC_FP_BACKEND") == "c":
    from . import _kernels as _impl  # ImportError here means the ext is absent
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl


def backend_name() -> str:
    return _impl.BACKEND


def _check_modulus(p: int):
    if not (3 <= p < (1 << 15)) or p % 2 == 0:
        raise ValueError(f"modulus must be an odd prime below 2^15, got {p}")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus must be prime, got {p}")
        d += 2


class FpMatrix:
    """A matrix over F_p.  Value semantics: operations return new matrices."""

    __slots__ = ("p", "a")

    def __init__(self, p: int, data, copy: bool = True):
        _check_modulus(p)
        a = np.array(data, dtype=np.int64, copy=copy)
        if a.ndim != 2:
            raise ValueError("FpMatrix data must be two-dimensional")
        a %= p
        self.p = p
        self.a = np.ascontiguousarray(a)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64), copy=False)

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, np.eye(n, dtype=np.int64), copy=False)

    @classmethod
    def from_rows(cls, p: int, rows) -> "FpMatrix":
        return cls(p, np.array(list(rows), dtype=np.int64).reshape(len(rows), -1))

    # -- basic queries -------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, shape={self.a.shape})"

    def copy(self) -> "FpMatrix":
        return FpMatrix(self.p, self.a, copy=True)

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.p, self.a.T, copy=True)

    # -- arithmetic ----------------------------------------------------------

    def _compatible(self, other: "FpMatrix"):
        if not isinstance(other, FpMatrix):
            raise TypeError("expected FpMatrix")
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} != {other.p}")

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._compatible(other)
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.shape} @ {other.shape}"
            )
        return FpMatrix(self.p, _impl.matmul(self.a, other.a, self.p), copy=False)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._compatible(other)
        return FpMatrix(self.p, (self.a + other.a) % self.p, copy=False)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._compatible(other)
        return FpMatrix(self.p, (self.a - other.a) % self.p, copy=False)

    def scale(self, c: int) -> "FpMatrix":
        return FpMatrix(self.p, (self.a * (c % self.p)) % self.p, copy=False)

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["FpMatrix", int, tuple[int, ...]]:
        """(reduced row-echelon form, rank, pivot columns)."""
        work = np.ascontiguousarray(self.a.copy())
        pivots = _impl.rref_inplace(work, self.p)
        out = FpMatrix.__new__(FpMatrix)
        out.p = self.p
        out.a = work
        return out, len(pivots), tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def nullspace(self) -> "FpMatrix":
        """Rows spanning {v : M v^T = 0}; row count = cols - rank."""
        R, rank, pivots = self.rref()
        p = self.p
        free = [c for c in range(self.cols) if c not in set(pivots)]
        basis = np.zeros((len(free), self.cols), dtype=np.int64)
        for row, j in enumerate(free):
            basis[row, j] = 1
            for i, c in enumerate(pivots):
                basis[row, c] = (-int(R.a[i, j])) % p
        out = FpMatrix.__new__(FpMatrix)
        out.p = p
        out.a = basis
        return out


def solve(A: FpMatrix, b) -> np.ndarray | None:
    """One solution x of A x^T = b, or None when inconsistent."""
    bvec = np.asarray(b, dtype=np.int64) % A.p
    if bvec.ndim != 1 or bvec.shape[0] != A.rows:
        raise ValueError("right-hand side has wrong length")
    aug = FpMatrix(A.p, np.hstack([A.a, bvec[:, None]]))
    R, rank, pivots = aug.rref()
    if pivots and pivots[-1] == A.cols:
        return None
    x = np.zeros(A.cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R.a[i, A.cols]
    return x
