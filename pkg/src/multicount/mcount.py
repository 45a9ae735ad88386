"""Counting multinomial coefficients with a prescribed value.

For a target value m, weight n and part count k, the quantity computed
here is the number of multiplicity vectors (k_1, ..., k_n) with
sum(k_i) = k and sum(i * k_i) = n whose multinomial coefficient
k! / (k_1! ... k_n!) equals m.

Two independent routes are provided: exhaustive enumeration over the
partitions of n into k parts (plain, and a divisibility-pruned variant
that skips subtrees which cannot reach the target value), and the known
closed forms for m = 1, m = 2, prime powers m > 2, and m = 10.  The
closed forms never feed the enumeration routes, so each can be used to
check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Optional

from .arith import PrimePower, binomial, is_prime, is_prime_power
from .partitions import MultiplicityVector, _iter_multiplicities

__all__ = [
    "MQuery",
    "MResult",
    "m_count_bruteforce",
    "m_count_pruned",
    "multinomial_distribution",
    "m_closed_one",
    "m_closed_two",
    "m_closed_prime_power",
    "m_closed_ten",
    "m_closed",
    "fine_lhs",
    "fine_check",
    "count_xy_solutions",
]


@dataclass(frozen=True)
class MQuery:
    """A counting query: how many k-part partitions of n have value m."""

    m: int
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1 or self.k < 1:
            raise ValueError("MQuery requires m >= 1, n >= 1, k >= 1")


@dataclass(frozen=True)
class MResult:
    """A count, optionally with the witnesses behind it."""

    count: int
    witnesses: Optional[tuple[MultiplicityVector, ...]] = None


def multinomial_value(v: MultiplicityVector) -> int:
    """The multinomial coefficient k! / prod(multiplicity!) of a vector."""
    out = factorial(v.k)
    for _, c in v.counts:
        if c > 1:
            out //= factorial(c)
    return out


def m_count_bruteforce(m: int, n: int, k: int, *, witnesses: bool = False) -> MResult:
    """Count by full enumeration of the partitions of n into k parts.

    The reference oracle: every partition is visited and its multinomial
    compared against m.  Witness collection is opt-in; witnesses come out
    in enumeration order (lexicographically decreasing parts lists).
    """
    MQuery(m, n, k)
    fk = factorial(k)
    if m > fk:
        # k!/prod(c!) <= k!; still enumerate nothing rather than error
        return MResult(0, () if witnesses else None)
    count = 0
    found: list[MultiplicityVector] = []
    for counts in _iter_multiplicities(n, k):
        v = fk
        for _, c in counts:
            if c > 1:
                v //= factorial(c)
        if v == m:
            count += 1
            if witnesses:
                found.append(MultiplicityVector(n=n, k=k, counts=counts))
    return MResult(count, tuple(found) if witnesses else None)


def multinomial_distribution(n: int, k: int) -> dict[int, int]:
    """Histogram value -> occurrences over all partitions of n into k parts.

    One enumeration pass answers every m at once; used by the sweep tests
    so a grid of closed-form checks costs a single pass per cell.
    """
    fk = factorial(k)
    dist: dict[int, int] = {}
    for counts in _iter_multiplicities(n, k):
        v = fk
        for _, c in counts:
            if c > 1:
                v //= factorial(c)
        dist[v] = dist.get(v, 0) + 1
    return dist


def m_count_pruned(m: int, n: int, k: int, *, witnesses: bool = False) -> MResult:
    """Count by exhaustive search with divisibility pruning.

    Builds partitions as (size, multiplicity) blocks, tracking the partial
    coefficient s!/prod(c_j!) over the multiplicities chosen so far.  The
    full coefficient is always the partial one times C(k, remaining) times
    another integer, so any branch whose partial product (or its completion
    lower bound) fails to divide m is cut.  Equivalent to the plain oracle
    (asserted over full grids in the test suite) but usable far beyond it,
    since for small m almost all multiplicity shapes are rejected before
    any part sizes are enumerated.
    """
    MQuery(m, n, k)
    if k > n:
        return MResult(0, () if witnesses else None)
    ck = [comb(k, j) for j in range(k + 1)]
    count = 0
    found: list[tuple[tuple[int, int], ...]] = []

    def rec(prev: int, rem_n: int, rem_k: int, consumed: int, partial: int,
            acc: list[tuple[int, int]]) -> None:
        nonlocal count
        for c in range(1, rem_k + 1):
            pf = partial * comb(consumed + c, c)
            if pf > m:
                break  # grows with c
            if m % pf:
                continue
            rem_k2 = rem_k - c
            if rem_k2 == 0:
                if pf != m or rem_n % c:
                    continue
                a = rem_n // c
                if 1 <= a < prev:
                    count += 1
                    if witnesses:
                        found.append(tuple(acc + [(a, c)]))
                continue
            # completion bound: pf * C(k, rem_k2) divides the final value
            if m % (pf * ck[rem_k2]):
                continue
            a_max = min(prev - 1, (rem_n - rem_k2) // c)
            a_min = -(-(rem_n + rem_k2) // (rem_k2 + c))
            for a in range(a_max, a_min - 1, -1):
                acc.append((a, c))
                rec(a, rem_n - c * a, rem_k2, consumed + c, pf, acc)
                acc.pop()

    rec(n + 1, n, k, 0, 1, [])
    if not witnesses:
        return MResult(count, None)
    vectors = [MultiplicityVector(n=n, k=k, counts=t) for t in found]
    vectors.sort(key=lambda v: tuple(a for a, c in v.counts for _ in range(c)), reverse=True)
    return MResult(count, tuple(vectors))


def m_closed_one(n: int, k: int) -> int:
    """Closed form for m = 1: one partition (all parts equal) iff k divides n."""
    _check_nk(n, k)
    return 1 if n % k == 0 else 0


def m_closed_two(n: int, k: int) -> int:
    """Closed form for m = 2: floor((n-1)/2) when k = 2, else 0."""
    _check_nk(n, k)
    return (n - 1) // 2 if k == 2 else 0


def m_closed_prime_power(pp: PrimePower, n: int, k: int) -> int:
    """Closed form for prime-power targets p**r > 2.

    Zero unless k = p**r; otherwise floor((n-1)/(p**r - 1)) minus one when
    p**r divides n.  The hypothesis p**r > 2 is enforced; use
    :func:`m_closed_two` for m = 2.
    """
    _check_nk(n, k)
    value = pp.value
    if value <= 2:
        raise ValueError("m_closed_prime_power requires p**r > 2")
    if pp.r < 1 or not is_prime(pp.p):
        raise ValueError(f"{pp!r} is not a prime power")
    if k != value:
        return 0
    return (n - 1) // (value - 1) - (1 if n % value == 0 else 0)


def m_closed_ten(n: int, k: int) -> int:
    """Closed form for m = 10: contributions at k = 10 and k = 5 only."""
    _check_nk(n, k)
    total = 0
    if k == 10:
        total += (n - 1) // 9 - (1 if n % 10 == 0 else 0)
    if k == 5:
        total += (n + 1) // 6 - (1 if n % 5 == 0 else 0) - (1 if n % 6 == 0 else 0)
    return total


def m_closed(m: int, n: int, k: int) -> Optional[int]:
    """Dispatch to the known closed forms; None when m has none.

    Routes m = 1, m = 2, prime powers above 2, and m = 10.  Other
    composite targets have no closed form here and fall back to the
    enumeration oracles at the caller's discretion.
    """
    if m < 1:
        raise ValueError("m_closed requires m >= 1")
    _check_nk(n, k)
    if m == 1:
        return m_closed_one(n, k)
    if m == 2:
        return m_closed_two(n, k)
    pp = is_prime_power(m)
    if pp is not None:
        return m_closed_prime_power(pp, n, k)
    if m == 10:
        return m_closed_ten(n, k)
    return None


def fine_lhs(n: int, k: int) -> int:
    """Sum of multinomial coefficients over all partitions of n into k parts."""
    _check_nk(n, k)
    fk = factorial(k)
    total = 0
    for counts in _iter_multiplicities(n, k):
        v = fk
        for _, c in counts:
            if c > 1:
                v //= factorial(c)
        total += v
    return total


def fine_check(n: int, k: int) -> bool:
    """True iff the partition sum of multinomials equals C(n-1, k-1)."""
    if not 1 <= k <= n:
        raise ValueError("fine_check requires 1 <= k <= n")
    return fine_lhs(n, k) == binomial(n - 1, k - 1)


def count_xy_solutions(a: int, n: int) -> int:
    """Ordered pairs (x, y), both >= 1, with a*x + y = n and x != y.

    Closed form floor((n-1)/a), minus one for the excluded diagonal
    solution, which exists exactly when (a+1) divides n.
    """
    if a < 1 or n < 1:
        raise ValueError("count_xy_solutions requires a >= 1 and n >= 1")
    return (n - 1) // a - (1 if n % (a + 1) == 0 else 0)


def _check_nk(n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError("requires n >= 1 and k >= 1")
