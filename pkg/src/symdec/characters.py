"""Ordinary character theory of S_n at desk scale.

Provides Murnaghan-Nakayama evaluation of irreducible characters, class
sizes, exact inner products, and the character of the twisted Foulkes
module H^(2^m k) computed by two independent routes:

* as the multiplicity-free sum of the irreducibles labelled by partitions
  of 2m+k with exactly k odd parts, and
* as the character induced from (matchings permutation character) x (sign)
  on S_{2m} x S_k, via class fusion.

Their agreement is one of the package's core self-checks.  Values are exact
Python integers; n is capped at 20, beyond which the recursive evaluation
is not desk scale anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .partitions import (
    Partition,
    beta_set,
    format_partition,
    odd_parts_count,
    partition_from_beta,
    partitions_of,
    size,
    validate_partition,
)

N_CAP = 20

CycleType = Partition


@dataclass(frozen=True)
class CharacterVector:
    """A class function of S_n with integer values, keyed by cycle type."""

    n: int
    values: dict[CycleType, int]

    def __post_init__(self):
        expected = set(partitions_of(self.n))
        if set(self.values) != expected:
            raise ValueError("values must cover every cycle type of n")

    def __eq__(self, other):
        return (
            isinstance(other, CharacterVector)
            and self.n == other.n
            and self.values == other.values
        )

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        if self.n != other.n:
            raise ValueError("cannot add characters of different degrees")
        return CharacterVector(
            self.n, {t: self.values[t] + other.values[t] for t in self.values}
        )

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "values": {
                format_partition(t): v
                for t, v in sorted(self.values.items(), reverse=True)
            },
        }


def _check_n(n: int):
    if n > N_CAP:
        raise ValueError(f"n={n} exceeds the character-engine cap {N_CAP}")


def class_size(t: CycleType) -> int:
    """Size of the conjugacy class with cycle type t: n! / (prod l_i * prod m_j!)."""
    t = validate_partition(t)
    denom = 1
    for length in set(t):
        m = t.count(length)
        denom *= length**m * factorial(m)
    return factorial(size(t)) // denom


def centralizer_order(t: CycleType) -> int:
    return factorial(size(t)) // class_size(t)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, t: CycleType) -> int:
    """chi^lam evaluated at cycle type t, by rim-hook recursion.

    Hooks of length t[0] are stripped on the beta-set: a bead at q can drop
    to q - l if that slot is free, with sign (-1)^(beads strictly between).
    """
    lam = validate_partition(lam)
    t = validate_partition(t)
    if size(lam) != size(t):
        raise ValueError(f"|{lam}| != |{t}|")
    _check_n(size(lam))
    if not lam:
        return 1
    length, rest = t[0], t[1:]
    beta = beta_set(lam, len(lam))
    occupied = set(beta)
    total = 0
    for q in beta:
        if q - length >= 0 and q - length not in occupied:
            between = sum(1 for b in occupied if q - length < b < q)
            sub = partition_from_beta((occupied - {q}) | {q - length})
            total += (-1) ** between * mn_character(sub, rest)
    return total


@lru_cache(maxsize=None)
def irreducible_character(lam: Partition) -> CharacterVector:
    lam = validate_partition(lam)
    n = size(lam)
    _check_n(n)
    return CharacterVector(n, {t: mn_character(lam, t) for t in partitions_of(n)})


def inner_product(a: CharacterVector, b: CharacterVector) -> int:
    """(1/n!) sum_t |class t| a(t) b(t); must be an exact integer."""
    if a.n != b.n:
        raise ValueError("inner product needs characters of the same degree")
    total = sum(class_size(t) * a.values[t] * b.values[t] for t in a.values)
    nfact = factorial(a.n)
    if total % nfact != 0:
        raise ArithmeticError(
            f"inner product {total}/{nfact} is not an integer: inputs are "
            "not characters"
        )
    return total // nfact


# ---------------------------------------------------------------------------
# Fixed perfect matchings under a permutation of given cycle type.  Two
# routes: direct enumeration (small degrees) and the per-cycle-length closed
# form; each is the oracle for the other on the overlap.

ENUM_LIMIT = 12  # direct enumeration used for 2m <= this


def _matchings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        pair = (first, other)
        for sub in _matchings(rest[:i] + rest[i + 1 :]):
            yield (pair,) + sub


def _representative_perm(t: CycleType) -> dict[int, int]:
    perm = {}
    next_pt = 0
    for length in t:
        pts = list(range(next_pt, next_pt + length))
        for i, x in enumerate(pts):
            perm[x] = pts[(i + 1) % length]
        next_pt += length
    return perm


@lru_cache(maxsize=None)
def fixed_matchings_by_enumeration(t: CycleType) -> int:
    """#{perfect matchings of the support fixed under a permutation of
    cycle type t}, counted directly."""
    t = validate_partition(t)
    n = size(t)
    if n % 2 != 0:
        raise ValueError("need an even number of points")
    perm = _representative_perm(t)
    count = 0
    for matching in _matchings(tuple(range(n))):
        pairs = {frozenset(pair) for pair in matching}
        if all(frozenset((perm[a], perm[b])) in pairs for a, b in matching) :
            count += 1
    return count


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@lru_cache(maxsize=None)
def fixed_matchings_count(t: CycleType) -> int:
    """Closed form: an invariant matching pairs equal-length cycles (l ways
    per pair) or self-matches an even cycle antipodally (1 way)."""
    t = validate_partition(t)
    if size(t) % 2 != 0:
        raise ValueError("need an even number of points")
    total = 1
    for length in set(t):
        m = t.count(length)
        if length % 2 == 1:
            if m % 2 != 0:
                return 0
            total *= length ** (m // 2) * _double_factorial(m - 1)
        else:
            ways = 0
            for j in range(m // 2 + 1):
                ways += comb(m, 2 * j) * _double_factorial(2 * j - 1) * length**j
            total *= ways
    return total


def fixed_matchings(t: CycleType) -> int:
    if size(t) <= ENUM_LIMIT:
        return fixed_matchings_by_enumeration(t)
    return fixed_matchings_count(t)


# ---------------------------------------------------------------------------
# Twisted Foulkes characters.


def foulkes_character_sum(m: int, k: int) -> CharacterVector:
    """Sum of chi^lam over partitions of 2m+k with exactly k odd parts."""
    if m < 0 or k < 0:
        raise ValueError("m, k must be >= 0")
    n = 2 * m + k
    _check_n(n)
    values = {t: 0 for t in partitions_of(n)}
    for lam in partitions_of(n):
        if odd_parts_count(lam) == k:
            for t in values:
                values[t] += mn_character(lam, t)
    return CharacterVector(n, values)


def _splits(t: CycleType, target: int):
    """Ways to split the cycle multiset of t into (alpha, beta) with
    |alpha| = target, with the multinomial fusion coefficient."""
    lengths = sorted(set(t), reverse=True)
    mults = [t.count(length) for length in lengths]

    def rec(i: int, remaining: int, alpha: list[int], beta: list[int], coeff: int):
        if i == len(lengths):
            if remaining == 0:
                yield tuple(alpha), tuple(beta), coeff
            return
        length, m = lengths[i], mults[i]
        for a in range(min(m, remaining // length) + 1):
            yield from rec(
                i + 1,
                remaining - a * length,
                alpha + [length] * a,
                beta + [length] * (m - a),
                coeff * comb(m, a),
            )

    yield from rec(0, target, [], [], 1)


def foulkes_character_induced(m: int, k: int) -> CharacterVector:
    """The same character via induction from S_{2m} x S_k.

    The S_{2m} factor carries the permutation character on perfect
    matchings, the S_k factor carries sign; a class of S_{2m+k} fuses the
    pairs (alpha, beta) of classes with multiplicity prod_l C(m_l, a_l).
    """
    if m < 0 or k < 0:
        raise ValueError("m, k must be >= 0")
    n = 2 * m + k
    _check_n(n)
    values = {}
    for t in partitions_of(n):
        total = 0
        for alpha, beta, coeff in _splits(t, 2 * m):
            sign = (-1) ** (k - len(beta))
            total += coeff * fixed_matchings(alpha) * sign
        values[t] = total
    return CharacterVector(n, values)


def foulkes_constituents(m: int, k: int) -> list[Partition]:
    """Partitions lambda with <H^(2^m k), chi^lam> = 1, i.e. exactly k odd
    parts (the character is multiplicity-free)."""
    n = 2 * m + k
    return [lam for lam in partitions_of(n) if odd_parts_count(lam) == k]
