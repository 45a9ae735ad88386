"""Partitions of n into exactly k positive parts, in multiplicity form.

A partition is stored sparsely as (part_size, multiplicity) pairs with
sizes descending; the multiplicities (k_1, ..., k_n), where k_j counts the
parts equal to j, satisfy sum(k_j) = k and sum(j * k_j) = n.  These vectors
index the sums computed in :mod:`multicount.mcount`.

Enumeration order is lexicographically decreasing parts lists, e.g. for
(n=10, k=3): 8+1+1, 7+2+1, 6+3+1, 6+2+2, 5+4+1, 5+3+2, 4+4+2, 4+3+3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "MultiplicityVector",
    "partitions_into_parts",
    "count_partitions",
    "to_parts",
    "from_parts",
]


@dataclass(frozen=True, slots=True)
class MultiplicityVector:
    """A partition of n into k parts, as (part_size, multiplicity) pairs.

    ``counts`` holds only nonzero multiplicities, part sizes strictly
    descending.  Invariants are assert-checked, so they are enforced in
    debug runs (pytest) and free in optimized ones.
    """

    n: int
    k: int
    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        assert all(c >= 1 and 1 <= a <= self.n for a, c in self.counts)
        assert all(x[0] > y[0] for x, y in zip(self.counts, self.counts[1:]))
        assert sum(c for _, c in self.counts) == self.k
        assert sum(a * c for a, c in self.counts) == self.n

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """The nonzero multiplicities, in descending part-size order."""
        return tuple(c for _, c in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)


def to_parts(v: MultiplicityVector) -> tuple[int, ...]:
    """Expand to a non-increasing parts list, e.g. {7:1, 2:1, 1:1} -> (7, 2, 1)."""
    out: list[int] = []
    for a, c in v.counts:
        out.extend([a] * c)
    return tuple(out)


def from_parts(parts: tuple[int, ...] | list[int], n: int) -> MultiplicityVector:
    """Inverse of :func:`to_parts`; rejects parts that do not sum to n."""
    if any(a < 1 for a in parts):
        raise ValueError("parts must be >= 1")
    if sum(parts) != n:
        raise ValueError(f"parts sum to {sum(parts)}, expected {n}")
    counts: dict[int, int] = {}
    for a in parts:
        counts[a] = counts.get(a, 0) + 1
    ordered = tuple(sorted(counts.items(), reverse=True))
    return MultiplicityVector(n=n, k=len(parts), counts=ordered)


def _iter_multiplicities(n: int, k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Raw enumeration engine: yields counts tuples without wrapping.

    Bounds are tight, so every visited branch completes to at least one
    partition; total work is proportional to the number of partitions.
    """
    if k == 0:
        if n == 0:
            yield ()
        return
    if k < 0 or n < k:
        return

    def rec(prev: int, rem_n: int, rem_k: int, acc: list[tuple[int, int]]):
        # rem_k >= 1; pick the next distinct size a < prev with multiplicity c.
        a_max = min(prev, rem_n - rem_k + 1)
        a_min = -(-rem_n // rem_k)  # ceil: every remaining part is <= a
        for a in range(a_max, a_min - 1, -1):
            if a == 1:
                if rem_n == rem_k:
                    acc.append((1, rem_k))
                    yield tuple(acc)
                    acc.pop()
                continue
            if rem_k * a == rem_n:
                c_max = rem_k
            else:
                # c < rem_k parts of size a; the rest need 1..a-1 each
                c_max = min(rem_k - 1, (rem_n - rem_k) // (a - 1))
            c_min = max(1, rem_n - rem_k * (a - 1))
            for c in range(c_max, c_min - 1, -1):
                if c == rem_k:
                    acc.append((a, c))
                    yield tuple(acc)
                    acc.pop()
                    continue
                acc.append((a, c))
                yield from rec(a - 1, rem_n - c * a, rem_k - c, acc)
                acc.pop()

    yield from rec(n + 1, n, k, [])


def partitions_into_parts(n: int, k: int) -> Iterator[MultiplicityVector]:
    """All partitions of n into exactly k positive parts, each exactly once.

    Order follows lexicographically decreasing parts lists.  The stream is
    empty when k > n or when exactly one of n, k is zero.
    """
    if n < 0 or k < 0:
        raise ValueError("partitions_into_parts requires n >= 0 and k >= 0")
    for counts in _iter_multiplicities(n, k):
        yield MultiplicityVector(n=n, k=k, counts=counts)


def count_partitions(n: int, k: int) -> int:
    """Number of partitions of n into exactly k parts.

    Computed from the bounded-part recurrence q(i, j) = q(i, j-1) + q(i-j, j)
    using p(n, k) = q(n-k, k); p(0, 0) = 1 and p(n, 0) = 0 for n >= 1.
    """
    if n < 0 or k < 0:
        raise ValueError("count_partitions requires n >= 0 and k >= 0")
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    m = n - k
    q = [1] + [0] * m
    for j in range(1, k + 1):
        for i in range(j, m + 1):
            q[i] += q[i - j]
    return q[m]
