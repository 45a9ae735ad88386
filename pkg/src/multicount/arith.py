"""Exact integer arithmetic for the counting and verification layers.

Everything here works on plain Python ints (arbitrary precision), so
binomial and multinomial values never overflow.  The module provides
binomials, multinomials, gcd, p-adic orders of factorials and binomials
(both the divided-sum and the carry-counting form), a smallest-prime-factor
sieve, factorization, and prime-power detection.

All functions are pure; the sieve is built once on first use and is
read-only afterwards, so everything is safe to call concurrently.
"""

from __future__ import annotations

import math
import os
import threading
from bisect import bisect_right
from typing import NamedTuple, Optional

DEFAULT_SIEVE_BOUND = 1 << 20
SIEVE_BOUND_ENV = "MULTICOUNT_SIEVE_BOUND"

# Factorization: ordered (prime, exponent) pairs, primes strictly increasing.
Factorization = list[tuple[int, int]]


class PrimePower(NamedTuple):
    """A value p**r with p prime and r >= 1."""

    p: int
    r: int

    @property
    def value(self) -> int:
        return self.p**self.r


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero when k is outside 0..n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: list[int]) -> int:
    """(sum parts)! / prod(parts_i!) as a product of binomials of prefix sums.

    Avoids materializing the factorial of the full sum, keeping
    intermediates no larger than the result.
    """
    total = 0
    result = 1
    for c in parts:
        if c < 0:
            raise ValueError("multinomial parts must be nonnegative")
        total += c
        result *= math.comb(total, c)
    return result


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def legendre_order(p: int, n: int) -> int:
    """Exponent of the prime p in n!, i.e. sum of n // p**i over i >= 1.

    The sum stops once p**i exceeds n, which happens after O(log_p n) terms.
    """
    if p < 2:
        raise ValueError("legendre_order requires p >= 2")
    if n < 0:
        raise ValueError("legendre_order requires n >= 0")
    total = 0
    q = n
    while q:
        q //= p
        total += q
    return total


def binomial_p_order(p: int, n: int, k: int) -> int:
    """Exponent of the prime p in C(n, k), via differences of factorial orders."""
    if not 0 <= k <= n:
        raise ValueError("binomial_p_order requires 0 <= k <= n")
    return legendre_order(p, n) - legendre_order(p, k) - legendre_order(p, n - k)


def kummer_carries(p: int, n: int, k: int) -> int:
    """Number of carries when adding k and n-k in base p.

    Equals the exponent of p in C(n, k); kept as an independent
    implementation (digit loop, no factorial orders) so the two routes can
    be checked against each other.
    """
    if p < 2:
        raise ValueError("kummer_carries requires p >= 2")
    if not 0 <= k <= n:
        raise ValueError("kummer_carries requires 0 <= k <= n")
    a, b = k, n - k
    carries = 0
    carry = 0
    while a or b or carry:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def _iroot(n: int, r: int) -> int:
    """Largest x with x**r <= n, for n >= 0, r >= 1 (Newton on integers)."""
    if r == 1 or n < 2:
        return n
    if r >= n.bit_length():
        return 1
    x = 1 << -(-n.bit_length() // r)
    while True:
        y = ((r - 1) * x + n // x ** (r - 1)) // r
        if y >= x:
            return x
        x = y


# Deterministic for n below ~3.3e24; strong probable-prime beyond that,
# which is far outside anything this package factors.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime_power(m: int) -> Optional[PrimePower]:
    """Decompose m as p**r with p prime, r >= 1, or return None.

    0 and 1 are not prime powers; primes are, with r = 1.
    """
    if m < 2:
        return None
    # Descending r: the first exact r-th power decides, since a maximal
    # exact root of a prime power is the prime itself.
    for r in range(m.bit_length(), 0, -1):
        a = _iroot(m, r)
        if a**r == m:
            return PrimePower(a, r) if is_prime(a) else None
    raise AssertionError("unreachable: r = 1 always hits")


# Smallest-prime-factor sieve, built lazily and then read-only.
_sieve_lock = threading.Lock()
_spf = None
_primes: list[int] = []
_sieve_bound = 0


def _build_sieve() -> None:
    global _spf, _primes, _sieve_bound
    bound = int(os.environ.get(SIEVE_BOUND_ENV, DEFAULT_SIEVE_BOUND))
    if bound < 4:
        raise ValueError(f"{SIEVE_BOUND_ENV} must be at least 4, got {bound}")
    import numpy as np

    spf = np.arange(bound + 1, dtype=np.int64)
    for i in range(2, math.isqrt(bound) + 1):
        if spf[i] == i:
            sl = spf[i * i :: i]
            sl[sl == np.arange(i * i, bound + 1, i, dtype=np.int64)] = i
    _primes = (np.flatnonzero(spf[2:] == np.arange(2, bound + 1, dtype=np.int64)) + 2).tolist()
    _spf = spf
    _sieve_bound = bound


def _ensure_sieve() -> None:
    if _spf is None:
        with _sieve_lock:
            if _spf is None:
                _build_sieve()


def _reset_sieve() -> None:
    # Test hook: forget the sieve so the bound env var is re-read.
    global _spf, _primes, _sieve_bound
    with _sieve_lock:
        _spf = None
        _primes = []
        _sieve_bound = 0


def sieve_bound() -> int:
    _ensure_sieve()
    return _sieve_bound


def primes_up_to(n: int) -> list[int]:
    """Primes <= n, from the sieve (n must not exceed the sieve bound)."""
    _ensure_sieve()
    if n > _sieve_bound:
        raise ValueError(
            f"primes_up_to({n}) exceeds the sieve bound {_sieve_bound}; "
            f"set {SIEVE_BOUND_ENV} higher"
        )
    return _primes[: bisect_right(_primes, n)]


def factorize(m: int) -> Factorization:
    """Complete prime factorization of m >= 1 as (prime, exponent) pairs.

    Uses the smallest-prime-factor sieve below the sieve bound and trial
    division by sieved primes above it (complete for m up to bound**2).
    """
    if m < 1:
        raise ValueError("factorize requires m >= 1")
    _ensure_sieve()
    out: Factorization = []
    if m <= _sieve_bound:
        spf = _spf
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        return out
    if m > _sieve_bound * _sieve_bound:
        raise ValueError(
            f"factorize({m}) is beyond the trial-division range "
            f"(sieve bound squared = {_sieve_bound**2})"
        )
    for p in _primes:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        out.append((m, 1))
    return out


def binomial_is_prime_power(n: int, k: int) -> Optional[PrimePower]:
    """Prime-power decomposition of C(n, k), or None when it has none.

    Works from the factorization C(n, k) = prod p**carries(p) over primes
    p <= n, so the binomial itself is never materialized.  Scanning stops
    as soon as two distinct prime divisors are seen.
    """
    if not 0 <= k <= n:
        raise ValueError("binomial_is_prime_power requires 0 <= k <= n")
    if k == 0 or k == n:
        return None  # C = 1
    if k == 1 or k == n - 1:
        return is_prime_power(n)  # C = n
    found: Optional[tuple[int, int]] = None
    for p in primes_up_to(n):
        if p == 2:
            order = (k.bit_count() + (n - k).bit_count() - n.bit_count())
            if order == 0:
                continue
        else:
            a, b = k, n - k
            order = 0
            carry = 0
            while a or b or carry:
                s = a % p + b % p + carry
                carry = 1 if s >= p else 0
                order += carry
                a //= p
                b //= p
            if order == 0:
                continue
        if found is not None:
            return None  # two distinct prime divisors
        found = (p, order)
    if found is None:
        raise AssertionError("C(n, k) >= 2 must have a prime divisor")
    return PrimePower(*found)
