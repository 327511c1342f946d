"""James abacus: partitions as beads on p runners, hook moves as bead slides.

Position q sits on runner q mod p in row q // p; row 0 is the top row.
Normal form uses the smallest multiple of p beads that covers the parts, so
set-valued operations and equality are well defined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    Partition,
    beta_set,
    check_odd_prime,
    partition_from_beta,
    validate_partition,
)


@dataclass(frozen=True)
class Abacus:
    p: int
    beads: frozenset[int]

    @property
    def nbeads(self) -> int:
        return len(self.beads)

    def __post_init__(self):
        check_odd_prime(self.p)
        if any(q < 0 for q in self.beads):
            raise ValueError("bead positions must be nonnegative")


def from_partition(lam: Partition, p: int, nbeads: int | None = None) -> Abacus:
    """Abacus of lam with the given bead count (default: normal form).

    nbeads must be a multiple of p and at least the number of parts.
    """
    lam = validate_partition(lam)
    check_odd_prime(p)
    if nbeads is None:
        nbeads = -(-max(len(lam), 1) // p) * p
    if nbeads < len(lam):
        raise ValueError(f"nbeads={nbeads} too small for {lam}")
    if nbeads % p != 0:
        raise ValueError(f"nbeads={nbeads} not a multiple of p={p}")
    return Abacus(p, frozenset(beta_set(lam, nbeads)))


def to_partition(a: Abacus) -> Partition:
    return partition_from_beta(a.beads)


def normalize(a: Abacus) -> Abacus:
    """Re-encode with the smallest valid multiple-of-p bead count."""
    return from_partition(to_partition(a), a.p)


def equivalent(a: Abacus, b: Abacus) -> bool:
    return a.p == b.p and normalize(a) == normalize(b)


def bead_down_moves(a: Abacus) -> set[Abacus]:
    """All abaci reached by sliding one bead from q to unoccupied q + p."""
    out = set()
    for q in a.beads:
        if q + a.p not in a.beads:
            out.add(Abacus(a.p, (a.beads - {q}) | {q + a.p}))
    return out


def bead_up_moves(a: Abacus) -> set[Abacus]:
    """All abaci reached by sliding one bead from q to unoccupied q - p >= 0."""
    out = set()
    for q in a.beads:
        if q - a.p >= 0 and q - a.p not in a.beads:
            out.add(Abacus(a.p, (a.beads - {q}) | {q - a.p}))
    return out


def tail_core(p: int, e: int) -> Partition:
    """The p-core whose abacus has two beads on runner 1, e+1 beads on
    runner p-1 and one bead on every other runner, all packed upward.

    For these cores the minimal-weight candidate sets downstream are as
    small as the theory allows (w+1 members), which is what makes the
    family useful as sweep/test data.  tail_core(3, 2) = (3,1,1).
    """
    check_odd_prime(p)
    if e < 0:
        raise ValueError("e must be >= 0")
    beads: set[int] = set()
    for runner in range(p):
        if runner == 1:
            count = 2
        elif runner == p - 1:
            count = e + 1
        else:
            count = 1
        beads.update(runner + p * row for row in range(count))
    return partition_from_beta(beads)


def pretty(a: Abacus) -> str:
    """Runner grid with beads; diagnostic only, not a stable format."""
    rows = max((q // a.p for q in a.beads), default=0) + 1
    lines = [" ".join(str(r) for r in range(a.p))]
    for row in range(rows):
        lines.append(
            " ".join("●" if row * a.p + r in a.beads else "·" for r in range(a.p))
        )
    return "\n".join(lines)
