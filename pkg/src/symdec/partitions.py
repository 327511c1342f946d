"""Partition arithmetic: hooks, cores, dominance, parity statistics.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition.  Everything here is pure and safe to
call concurrently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

Partition = tuple[int, ...]

# Desk scale: part sizes and n stay far below this; the bound exists so the
# F_p kernels downstream can rely on machine-word arithmetic.
MAX_PART = 1 << 30


@dataclass(frozen=True)
class CoreAndWeight:
    """Result of stripping all rim p-hooks: |original| = |core| + weight*p."""

    core: Partition
    weight: int


def validate_partition(parts) -> Partition:
    """Return *parts* as a canonical Partition tuple, or raise ValueError."""
    lam = tuple(int(x) for x in parts)
    for i, x in enumerate(lam):
        if x < 1 or x > MAX_PART:
            raise ValueError(f"invalid part {x} in {lam}")
        if i + 1 < len(lam) and lam[i + 1] > x:
            raise ValueError(f"parts not weakly decreasing: {lam}")
    return lam


def check_odd_prime(p: int) -> int:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"p must be an odd prime, got {p}")
        d += 2
    return p


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram (column lengths); involutive."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff every prefix sum of lam is >= the matching prefix sum of mu.

    Both partitions must have the same size.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes: |{lam}| != |{mu}|")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def odd_parts_count(lam: Partition) -> int:
    return sum(1 for x in lam if x % 2 == 1)


def is_p_regular(lam: Partition, p: int) -> bool:
    """No part value occurs p or more times."""
    run = 0
    prev = None
    for x in lam:
        run = run + 1 if x == prev else 1
        if run >= p:
            return False
        prev = x
    return True


# ---------------------------------------------------------------------------
# Beta-numbers (first-column hook lengths).  Rim-hook arithmetic is done on
# beta-sets so that p-core extraction is order-independent by construction.


def beta_set(lam: Partition, nbeads: int) -> tuple[int, ...]:
    """Beta-numbers {lam_i + nbeads - i : 1 <= i <= nbeads}, descending."""
    if nbeads < len(lam):
        raise ValueError(f"nbeads={nbeads} too small for {lam}")
    return tuple(
        (lam[i] if i < len(lam) else 0) + nbeads - (i + 1) for i in range(nbeads)
    )


def partition_from_beta(beta) -> Partition:
    """Inverse of beta_set: sorted positions q_1 > ... > q_b give parts
    q_j - (b - j), zeros dropped."""
    qs = sorted(beta, reverse=True)
    b = len(qs)
    if len(set(qs)) != b or (qs and qs[-1] < 0):
        raise ValueError(f"invalid beta-set {beta}")
    parts = [q - (b - j) for j, q in enumerate(qs, start=1)]
    return validate_partition([x for x in parts if x > 0])


def p_core(lam: Partition, p: int) -> CoreAndWeight:
    """Strip all rim p-hooks; the result does not depend on removal order.

    On the abacus with p runners, stripping a hook is a one-step bead move
    up a runner, so the core is the configuration with the beads on each
    runner pushed to the top and the weight is the total number of steps.
    """
    check_odd_prime(p)
    nbeads = -(-max(len(lam), 1) // p) * p
    beta = beta_set(lam, nbeads)
    new_beta = []
    weight = 0
    for res in range(p):
        rows = sorted(q // p for q in beta if q % p == res)
        weight += sum(rows) - sum(range(len(rows)))
        new_beta.extend(r * p + res for r in range(len(rows)))
    return CoreAndWeight(partition_from_beta(new_beta), weight)


def add_rim_hook_all(lam: Partition, p: int) -> set[Partition]:
    """All partitions obtained from lam by adding one rim p-hook.

    Equivalent to the single bead-down moves on the p-runner abacus of lam.
    """
    check_odd_prime(p)
    nbeads = len(lam) + p
    beta = set(beta_set(lam, nbeads))
    out = set()
    for q in beta:
        if q + p not in beta:
            out.add(partition_from_beta((beta - {q}) | {q + p}))
    return out


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, each exactly once, in descending lex order."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - first, first, prefix + (first,))

    return gen(n, n, ())


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """Number of partitions of n (Euler's pentagonal recurrence)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        total += sign * (partition_count(n - g1) + partition_count(n - g2))
        k += 1
    return total


# ---------------------------------------------------------------------------
# Hook lengths (used as the independent dimension oracle downstream).


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return factorial(size(lam)) // prod


# ---------------------------------------------------------------------------
# Text form: comma-separated parts, exponent shorthand accepted on input.

_PIECE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse "8,4,2" or "5,4,2,1^4" (exponents expand); "" is empty."""
    text = text.strip()
    if not text:
        return ()
    parts: list[int] = []
    for piece in text.split(","):
        m = _PIECE.match(piece.strip())
        if not m:
            raise ValueError(f"cannot parse partition piece {piece!r}")
        val = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        parts.extend([val] * mult)
    return validate_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam)
