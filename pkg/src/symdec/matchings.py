"""Canonical basis of the twisted Foulkes module and its fixed points under
p-subgroups.

A basis element is a perfect matching on 2m of the points {0,...,2m+k-1}
together with the increasing k-tuple of leftover points.  A p-element g
fixes the (signed) basis vector exactly when g commutes with the
fixed-point-free involution carried by the matching, so fixed-point counts
reduce to commutation tests.  Strata record how many length-p blocks of the
distinguished cyclic group lie inside the involution's support.

Everything is enumerated directly (correctness-first); the guard keeps
2m+k <= 16.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .characters import _double_factorial
from .partitions import check_odd_prime

DEGREE_CAP = 16

Perm = tuple[int, ...]  # images of 0..n-1


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def perm_mul(a: Perm, b: Perm) -> Perm:
    """First a, then b."""
    return tuple(b[a[i]] for i in range(len(a)))


def perm_inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def perm_from_cycles(n: int, cycles) -> Perm:
    out = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            out[x] = cyc[(i + 1) % len(cyc)]
    return tuple(out)


def perm_order(a: Perm) -> int:
    from math import lcm

    seen = [False] * len(a)
    order = 1
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        order = lcm(order, length)
    return order


def commutes(a: Perm, b: Perm) -> bool:
    return perm_mul(a, b) == perm_mul(b, a)


def is_p_element(a: Perm, p: int) -> bool:
    order = perm_order(a)
    while order % p == 0:
        order //= p
    return order == 1


@dataclass(frozen=True)
class OmegaElement:
    """A matching (pairs, each sorted, sorted by first point) plus the
    increasing tuple of tail points; together they partition range(n)."""

    pairs: tuple[tuple[int, int], ...]
    tail: tuple[int, ...]

    @property
    def n(self) -> int:
        return 2 * len(self.pairs) + len(self.tail)

    def support(self) -> frozenset[int]:
        return frozenset(x for pair in self.pairs for x in pair)


def involution_of(omega: OmegaElement) -> Perm:
    """The product of transpositions carried by the matching."""
    out = list(range(omega.n))
    for a, b in omega.pairs:
        out[a], out[b] = b, a
    return tuple(out)


def _canonical_pairs(matching) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(tuple(sorted(pair)) for pair in matching))


def _matchings_of(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for i in range(len(rest)):
        for sub in _matchings_of(rest[:i] + rest[i + 1 :]):
            yield ((first, rest[i]),) + sub


def omega_count(m: int, k: int) -> int:
    return comb(2 * m + k, k) * _double_factorial(2 * m - 1)


def enumerate_omega(m: int, k: int):
    """All (2m+k choose k)(2m-1)!! canonical elements, in a fixed order
    (tails ascending, then matchings in nested-first order)."""
    if m < 0 or k < 0:
        raise ValueError("m, k must be >= 0")
    n = 2 * m + k
    if n > DEGREE_CAP:
        raise ValueError(f"2m+k={n} exceeds enumeration guard {DEGREE_CAP}")
    points = tuple(range(n))
    for tail in combinations(points, k):
        rest = tuple(x for x in points if x not in tail)
        for matching in _matchings_of(rest):
            yield OmegaElement(_canonical_pairs(matching), tail)


# ---------------------------------------------------------------------------
# The distinguished p-subgroups, built from the p-cycles z_j on consecutive
# blocks of p points.


@dataclass(frozen=True)
class PSubgroupSpec:
    """Generators of a p-subgroup of S_n, order-verified on construction."""

    name: str  # diagonal_cycle | block_cycles | paired_blocks | vertex | custom
    p: int
    degree: int
    generators: tuple[Perm, ...]
    order: int = field(default=0)

    def __post_init__(self):
        check_odd_prime(self.p)
        for g in self.generators:
            if len(g) != self.degree:
                raise ValueError("generator degree mismatch")
            if not is_p_element(g, self.p):
                raise ValueError(f"generator {g} is not a {self.p}-element")
        order = group_order(self.generators, self.degree)
        q = order
        while q % self.p == 0:
            q //= self.p
        if q != 1:
            raise ValueError(f"generated group has non-p order {order}")
        object.__setattr__(self, "order", order)


def group_order(generators: tuple[Perm, ...], degree: int, cap: int = 1 << 20) -> int:
    """Order of the generated group by closure; raises past the cap."""
    if not generators:
        return 1
    seen = {identity_perm(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ValueError("group closure exceeded cap")
        frontier = nxt
    return len(seen)


def block_cycle(j: int, p: int, n: int) -> Perm:
    """z_j: the p-cycle on points (j-1)p .. jp-1 (j is 1-based)."""
    return perm_from_cycles(n, [tuple(range((j - 1) * p, j * p))])


def diagonal_cycle_group(r: int, p: int, n: int) -> PSubgroupSpec:
    """R_r = <z_1 z_2 ... z_r>."""
    if r * p > n:
        raise ValueError(f"rp={r * p} exceeds degree {n}")
    g = identity_perm(n)
    for j in range(1, r + 1):
        g = perm_mul(g, block_cycle(j, p, n))
    return PSubgroupSpec("diagonal_cycle", p, n, (g,))


def block_cycles_group(r: int, p: int, n: int) -> PSubgroupSpec:
    """C = <z_1> x ... x <z_r>."""
    if r * p > n:
        raise ValueError(f"rp={r * p} exceeds degree {n}")
    return PSubgroupSpec(
        "block_cycles", p, n, tuple(block_cycle(j, p, n) for j in range(1, r + 1))
    )


def paired_blocks_group(t: int, r: int, p: int, n: int) -> PSubgroupSpec:
    """E_t = <z_1 z_{t+1}> x ... x <z_t z_{2t}> x <z_{2t+1}> x ... x <z_r>."""
    if 2 * t > r or r * p > n:
        raise ValueError("need 2t <= r and rp <= n")
    gens = [
        perm_mul(block_cycle(j, p, n), block_cycle(j + t, p, n))
        for j in range(1, t + 1)
    ]
    gens.extend(block_cycle(j, p, n) for j in range(2 * t + 1, r + 1))
    return PSubgroupSpec("paired_blocks", p, n, tuple(gens))


def _sylow_p_gens(l: int, p: int, offset: int) -> list[Perm]:
    """Generators (as cycle lists, degree-agnostic) of a Sylow p-subgroup of
    the symmetric group on the lp points offset..offset+lp-1, containing the
    block p-cycles with their product central.

    Built as a direct product over the base-p digits of lp of iterated
    wreath powers W_i, each generated by a bottom copy of W_{i-1} plus the
    p-cycle permuting its p^{i-1}-point sub-blocks.
    """

    def wreath_gens(i: int, start: int) -> list[list[tuple[int, ...]]]:
        if i == 1:
            return [[tuple(range(start, start + p))]]
        sub = wreath_gens(i - 1, start)
        width = p ** (i - 1)
        top = [
            tuple(start + j + b * width for b in range(p)) for j in range(width)
        ]
        return sub + [top]

    gens: list[list[tuple[int, ...]]] = []
    total = l * p
    digits = []  # digits[i] = coefficient of p^i; digits[0] == 0 since p | total
    q = total
    while q:
        digits.append(q % p)
        q //= p
    pos = offset
    for i in range(len(digits) - 1, 0, -1):
        for _ in range(digits[i]):
            gens.extend(wreath_gens(i, pos))
            pos += p**i
    return gens


def vertex_group(t: int, r: int, p: int, n: int) -> PSubgroupSpec:
    """Q_t: (a Sylow p-subgroup of S_2 wr S_{tp}, acting diagonally on two
    tp-point blocks) x (a Sylow p-subgroup of S_{(r-2t)p}).

    Only its order and fixed points are contractual; the order equals
    vertex_order(t, r, p).
    """
    if 2 * t > r or r * p > n:
        raise ValueError("need 2t <= r and rp <= n")
    gens: list[Perm] = []
    for cycles in _sylow_p_gens(t, p, 0):
        # diagonal copy gg' with i' = i + tp
        doubled = list(cycles) + [tuple(x + t * p for x in cyc) for cyc in cycles]
        gens.append(perm_from_cycles(n, doubled))
    for cycles in _sylow_p_gens(r - 2 * t, p, 2 * t * p):
        gens.append(perm_from_cycles(n, cycles))
    return PSubgroupSpec("vertex", p, n, tuple(gens))


def legendre_valuation(n: int, p: int) -> int:
    """v_p(n!) by Legendre's formula."""
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def vertex_order(t: int, r: int, p: int) -> int:
    """p-part of |S_2 wr S_{tp}| * |S_{(r-2t)p}|."""
    check_odd_prime(p)
    if 2 * t > r:
        raise ValueError("need 2t <= r")
    return p ** (
        legendre_valuation(t * p, p) + legendre_valuation((r - 2 * t) * p, p)
    )


# ---------------------------------------------------------------------------
# Fixed points and strata.


def fixed_points(m: int, k: int, spec: PSubgroupSpec) -> list[OmegaElement]:
    """Basis elements whose involution commutes with every generator.

    Commutation already forces the generator to permute the pairs among
    themselves (and hence the tail among itself).
    """
    n = 2 * m + k
    if spec.degree != n:
        raise ValueError(f"subgroup degree {spec.degree} != 2m+k = {n}")
    out = []
    for omega in enumerate_omega(m, k):
        inv = involution_of(omega)
        if all(commutes(inv, g) for g in spec.generators):
            out.append(omega)
    return out


def feasible_strata(m: int, k: int, r: int, p: int) -> set[int]:
    """T_r: the t with tp <= m, 2t <= r and (r-2t)p <= k."""
    return {
        t
        for t in range(r // 2 + 1)
        if t * p <= m and (r - 2 * t) * p <= k
    }


@dataclass(frozen=True)
class FixedPointStratum:
    t: int
    elements: tuple[OmegaElement, ...]


def _blocks_in_support(omega: OmegaElement, r: int, p: int) -> int:
    supp = omega.support()
    return sum(
        1
        for j in range(r)
        if all(x in supp for x in range(j * p, (j + 1) * p))
    )


def stratify(m: int, k: int, r: int, p: int) -> list[FixedPointStratum]:
    """Fixed points of R_r partitioned by the number 2t of length-p blocks
    inside the involution's support.  Strata are listed for every
    0 <= t <= r//2, empty ones included."""
    check_odd_prime(p)
    if r * p > 2 * m + k:
        raise ValueError("need rp <= 2m+k")
    spec = diagonal_cycle_group(r, p, 2 * m + k)
    buckets: dict[int, list[OmegaElement]] = {t: [] for t in range(r // 2 + 1)}
    for omega in fixed_points(m, k, spec):
        covered = _blocks_in_support(omega, r, p)
        if covered % 2 != 0:
            raise RuntimeError(
                "internal invariant broken: odd number of covered blocks"
            )
        buckets[covered // 2].append(omega)
    return [FixedPointStratum(t, tuple(buckets[t])) for t in sorted(buckets)]


def orbit_involution(omega: OmegaElement, r: int, p: int) -> tuple[tuple[int, int], ...] | None:
    """The involution induced on block indices 0..r-1 by the matching, as
    sorted transpositions; None if some block is split by the support."""
    supp = omega.support()
    inv = involution_of(omega)
    pairs = set()
    for j in range(r):
        block = set(range(j * p, (j + 1) * p))
        inside = block & supp
        if not inside:
            continue
        if inside != block:
            return None
        images = {inv[x] // p for x in block}
        if len(images) != 1:
            return None
        jj = images.pop()
        if jj != j:
            pairs.add(tuple(sorted((j, jj))))
    return tuple(sorted(pairs))


def stratum_orbit_count(r: int, t: int, p: int) -> int:
    """Among the R_r-fixed basis elements of the (m, k) = (tp, (r-2t)p)
    layer, count those whose induced block involution is
    (0, t)(1, t+1)...(t-1, 2t-1); the count is p^t."""
    check_odd_prime(p)
    if 2 * t > r:
        raise ValueError("need 2t <= r")
    m, k = t * p, (r - 2 * t) * p
    target = tuple((j, j + t) for j in range(t))
    spec = diagonal_cycle_group(r, p, 2 * m + k)
    return sum(
        1
        for omega in fixed_points(m, k, spec)
        if orbit_involution(omega, r, p) == target
    )


def stratify_report(m: int, k: int, r: int, p: int) -> dict:
    """Documented JSON form of a stratify call, with the partition identity
    and the per-stratum product identity checked."""
    strata = stratify(m, k, r, p)
    feasible = feasible_strata(m, k, r, p)
    total = sum(len(s.elements) for s in strata)
    n_fixed = len(fixed_points(m, k, diagonal_cycle_group(r, p, 2 * m + k)))
    identity_ok = total == n_fixed
    for s in strata:
        if s.elements and s.t not in feasible:
            identity_ok = False
        expected = stratum_layer_size(m, k, r, s.t, p)
        if len(s.elements) != expected:
            identity_ok = False
    return {
        "m": m,
        "k": k,
        "r": r,
        "p": p,
        "strata": [{"t": s.t, "count": len(s.elements)} for s in strata],
        "identity_checked": identity_ok,
    }


def stratum_layer_size(m: int, k: int, r: int, t: int, p: int) -> int:
    """Predicted stratum size: |Fix_{(tp,(r-2t)p)}(R_r)| * |Omega^(2^(m-tp),
    k-(r-2t)p)|, zero when t is infeasible."""
    if t not in feasible_strata(m, k, r, p):
        return 0
    m0, k0 = t * p, (r - 2 * t) * p
    inner = len(fixed_points(m0, k0, diagonal_cycle_group(r, p, 2 * m0 + k0)))
    return inner * omega_count(m - m0, k - k0)
