"""Numpy fallback kernels for dense F_p linear algebra.

Same contract as the compiled module: int64 C-contiguous arrays, entries in
[0, p).  RREF is unique, so both backends return identical matrices.
"""

from __future__ import annotations

import numpy as np

BACKEND = "py"


def rref_inplace(a: np.ndarray, p: int) -> list[int]:
    """Reduce a to reduced row-echelon form in place; return pivot columns.

    Forward elimination leaves pivots unnormalized; the backward pass
    normalizes and clears above.
    """
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        below = a[r + 1 :, c]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            f = (below[nzb] * inv) % p
            a[r + 1 + nzb] = (a[r + 1 + nzb] - f[:, None] * a[r][None, :]) % p
        pivots.append(c)
        r += 1
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        inv = pow(int(a[idx, c]), p - 2, p)
        if inv != 1:
            a[idx] = (a[idx] * inv) % p
        above = a[:idx, c]
        nza = np.nonzero(above)[0]
        if nza.size:
            a[nza] = (a[nza] - above[nza][:, None] * a[idx][None, :]) % p
    return pivots


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # (p-1)^2 * inner-dim stays far below 2^63 for p < 2^15 at desk scale
    return (a @ b) % p
