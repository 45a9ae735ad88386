"""Large-range verification sweeps over binomial-coefficient claims.

Two searchable claims, both over the triangle 2 <= k <= n/2:

* ``gcd_conjecture``: gcd(C(n, k), C(n-1, 2)) > 1 for every pair with
  n >= 4.  Checked by a carry-based fast path: gcd > 1 iff some prime of
  C(n-1, 2) divides C(n, k), iff adding k and n-k in base p carries.  A
  pair the fast path rejects is re-confirmed with an actual gcd before
  being reported as a counterexample, so the two routes cross-check.

* ``lemma1``: C(n, k) is never a prime power on the same triangle.
  Checked via the prime-by-prime factorization of the binomial, which
  stops at the second distinct prime divisor.

The search itself shards the n-range into contiguous blocks, optionally
fans them out over processes, merges block results in n-order (so the
report is identical for any worker count), and can checkpoint progress
to a JSON file and resume from it.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from math import comb, gcd
from pathlib import Path
from typing import Optional, Union

from .arith import binomial_is_prime_power, factorize

__all__ = [
    "SearchMode",
    "SearchConfig",
    "SearchReport",
    "Checkpoint",
    "CorruptCheckpointError",
    "checkpoint_save",
    "checkpoint_load",
    "gcd_conjecture_holds_direct",
    "gcd_conjecture_holds_fast",
    "lemma1_holds",
    "search",
]

CHECKPOINT_VERSION = 1

# n-range granularity for sharding and frontier advancement
_BLOCK = 128


class SearchMode(str, Enum):
    GCD_CONJECTURE = "gcd_conjecture"
    LEMMA1 = "lemma1"


class CorruptCheckpointError(Exception):
    """The checkpoint file exists but fails parsing or validation."""


@dataclass
class SearchConfig:
    """Parameters of a verification sweep."""

    mode: SearchMode
    n_max: int
    n_min: int = 4
    workers: int = 1
    checkpoint_path: Optional[Union[str, Path]] = None
    checkpoint_interval: int = 500

    def __post_init__(self) -> None:
        self.mode = SearchMode(self.mode)
        if self.checkpoint_path is not None:
            self.checkpoint_path = Path(self.checkpoint_path)
        if self.n_min < 4:
            raise ValueError("n_min must be >= 4 (smallest n with a valid k)")
        if self.n_max < self.n_min:
            raise ValueError("n_max must be >= n_min")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.checkpoint_interval < 1:
            raise ValueError("checkpoint_interval must be >= 1")


@dataclass
class SearchReport:
    """Outcome of a sweep; counterexamples empty iff the claim held."""

    verified_up_to: int
    counterexamples: tuple[tuple[int, int], ...]
    pairs_checked: int
    elapsed: float
    fast_path_hits: int
    checkpoint_error: Optional[str] = None

    def canonical_dict(self) -> dict:
        """The run-independent fields (drops wall time and I/O incidents)."""
        return {
            "verified_up_to": self.verified_up_to,
            "counterexamples": [list(ce) for ce in self.counterexamples],
            "pairs_checked": self.pairs_checked,
            "fast_path_hits": self.fast_path_hits,
        }

    def canonical_json(self) -> str:
        return json.dumps(self.canonical_dict(), sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class Checkpoint:
    """Resumable progress marker: everything up to n_verified is done."""

    mode: SearchMode
    n_verified: int
    counterexamples: tuple[tuple[int, int], ...]
    created_at: str
    version: int = CHECKPOINT_VERSION


def checkpoint_save(cp: Checkpoint, path: Union[str, Path]) -> None:
    """Write a checkpoint atomically (temp file + rename)."""
    path = Path(path)
    payload = {
        "version": cp.version,
        "mode": cp.mode.value,
        "n_verified": cp.n_verified,
        "counterexamples": [list(ce) for ce in cp.counterexamples],
        "created_at": cp.created_at,
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


_CHECKPOINT_FIELDS = {"version", "mode", "n_verified", "counterexamples", "created_at"}


def checkpoint_load(path: Union[str, Path]) -> Checkpoint:
    """Read and validate a checkpoint.

    Raises CorruptCheckpointError for anything that parses wrong: bad
    JSON, missing or unknown fields, an unsupported version, an unknown
    mode, or malformed counterexamples.  A missing file raises the usual
    FileNotFoundError, which is a different condition from corruption.
    """
    with open(path, "r") as fh:
        raw = fh.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CorruptCheckpointError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise CorruptCheckpointError(f"{path}: top level must be an object")
    keys = set(data)
    if keys != _CHECKPOINT_FIELDS:
        missing = _CHECKPOINT_FIELDS - keys
        unknown = keys - _CHECKPOINT_FIELDS
        parts = []
        if missing:
            parts.append(f"missing fields {sorted(missing)}")
        if unknown:
            parts.append(f"unknown fields {sorted(unknown)}")
        raise CorruptCheckpointError(f"{path}: " + ", ".join(parts))
    if data["version"] != CHECKPOINT_VERSION:
        raise CorruptCheckpointError(f"{path}: unsupported version {data['version']!r}")
    try:
        mode = SearchMode(data["mode"])
    except ValueError as exc:
        raise CorruptCheckpointError(f"{path}: unknown mode {data['mode']!r}") from exc
    n_verified = data["n_verified"]
    if not isinstance(n_verified, int) or isinstance(n_verified, bool) or n_verified < 0:
        raise CorruptCheckpointError(f"{path}: n_verified must be a non-negative integer")
    ces = data["counterexamples"]
    if not isinstance(ces, list):
        raise CorruptCheckpointError(f"{path}: counterexamples must be a list")
    parsed: list[tuple[int, int]] = []
    for item in ces:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise CorruptCheckpointError(f"{path}: counterexample {item!r} must be [n, k]")
        parsed.append((item[0], item[1]))
    created = data["created_at"]
    if not isinstance(created, str):
        raise CorruptCheckpointError(f"{path}: created_at must be a string")
    return Checkpoint(
        mode=mode,
        n_verified=n_verified,
        counterexamples=tuple(parsed),
        created_at=created,
    )


def _check_pair(n: int, k: int) -> None:
    if not (n >= 4 and 2 <= k and 2 * k <= n):
        raise ValueError("requires n >= 4 and 2 <= k <= n/2")


def gcd_conjecture_holds_direct(n: int, k: int) -> bool:
    """gcd(C(n, k), C(n-1, 2)) > 1, computed with the actual binomials."""
    _check_pair(n, k)
    return gcd(comb(n, k), comb(n - 1, 2)) > 1


def _gcd_target_primes(n: int) -> list[int]:
    """Distinct primes of C(n-1, 2) = (n-1)(n-2)/2, ascending."""
    two = 0
    odd: set[int] = set()
    for x in (n - 1, n - 2):
        for p, e in factorize(x):
            if p == 2:
                two += e
            else:
                odd.add(p)
    out = sorted(odd)
    if two >= 2:  # division by 2 eats one factor
        out.insert(0, 2)
    return out


def _carries_adding(p: int, a: int, b: int) -> bool:
    """Whether adding a and b in base p produces any carry.

    The lowest carry occurs with no incoming carry, so existence reduces
    to some digit pair summing to at least p.
    """
    while a or b:
        if a % p + b % p >= p:
            return True
        a //= p
        b //= p
    return False


def gcd_conjecture_holds_fast(n: int, k: int) -> bool:
    """Same predicate via shared-prime carry tests; no binomial is built.

    gcd(C(n, k), C(n-1, 2)) > 1 iff some prime p of C(n-1, 2) divides
    C(n, k), iff adding k and n-k in base p carries.  For p = 2 the
    carry test collapses to a submask check: C(n, k) is odd exactly when
    k & ~n == 0.
    """
    _check_pair(n, k)
    for p in _gcd_target_primes(n):
        if p == 2:
            if k & ~n:
                return True
        elif _carries_adding(p, k, n - k):
            return True
    return False


def lemma1_holds(n: int, k: int) -> bool:
    """C(n, k) is not a prime power (the claim for 2 <= k <= n/2)."""
    _check_pair(n, k)
    return binomial_is_prime_power(n, k) is None


def _pairs_through(n_min: int, n_hi: int) -> int:
    """Number of (n, k) pairs with n_min <= n <= n_hi, 2 <= k <= n/2."""
    if n_hi < n_min:
        return 0
    return sum(n // 2 - 1 for n in range(n_min, n_hi + 1))


def _scan_block(mode_value: str, lo: int, hi: int) -> tuple[int, int, list[tuple[int, int]]]:
    """Check every pair with lo <= n <= hi; return (pairs, fast_hits, ces)."""
    pairs = 0
    fast = 0
    ces: list[tuple[int, int]] = []
    if mode_value == SearchMode.GCD_CONJECTURE.value:
        for n in range(lo, hi + 1):
            kmax = n // 2
            if kmax < 2:
                continue
            pairs += kmax - 1
            primes = _gcd_target_primes(n)
            has2 = bool(primes) and primes[0] == 2
            odd = primes[1:] if has2 else primes
            ncomp = ~n
            for k in range(2, kmax + 1):
                if has2 and k & ncomp:
                    fast += 1
                    continue
                hit = False
                for p in odd:
                    a, b = k, n - k
                    while a or b:
                        if a % p + b % p >= p:
                            hit = True
                            break
                        a //= p
                        b //= p
                    if hit:
                        break
                if hit:
                    fast += 1
                elif gcd_conjecture_holds_direct(n, k):
                    # the routes disagree; neither answer can be trusted
                    raise RuntimeError(f"fast path contradicts direct gcd at {(n, k)}")
                else:
                    ces.append((n, k))
    else:
        for n in range(lo, hi + 1):
            kmax = n // 2
            if kmax < 2:
                continue
            pairs += kmax - 1
            for k in range(2, kmax + 1):
                if not lemma1_holds(n, k):
                    ces.append((n, k))
        fast = pairs  # factorization route never materializes a binomial
    return pairs, fast, ces


def _prior_fast_hits(mode: SearchMode, pairs: int, n_ces: int) -> int:
    # reconstructs fast_path_hits for an already-verified prefix: in gcd
    # mode every non-counterexample was settled by the fast path; in
    # lemma1 mode every pair was
    if mode is SearchMode.GCD_CONJECTURE:
        return pairs - n_ces
    return pairs


def search(config: SearchConfig, *, resume: bool = False) -> SearchReport:
    """Run a sweep per config; optionally resume from its checkpoint.

    Results are independent of worker count and of interruption points:
    blocks merge in n-order and a resumed run reconstructs the already
    verified prefix from the checkpoint, so the final report (modulo
    elapsed time) matches an uninterrupted run.  Checkpoint write
    failures do not abort the sweep; the last error is carried in the
    report instead.
    """
    t0 = time.perf_counter()
    start_n = config.n_min
    prior_ces: list[tuple[int, int]] = []
    if resume:
        if config.checkpoint_path is None:
            raise ValueError("resume requires checkpoint_path")
        cp = checkpoint_load(config.checkpoint_path)
        if cp.mode is not config.mode:
            raise ValueError(
                f"checkpoint mode {cp.mode.value!r} does not match configured "
                f"mode {config.mode.value!r}"
            )
        done_through = min(cp.n_verified, config.n_max)
        if done_through >= config.n_min:
            start_n = done_through + 1
            prior_ces = [
                ce for ce in cp.counterexamples if config.n_min <= ce[0] <= done_through
            ]

    pairs = _pairs_through(config.n_min, start_n - 1)
    fast = _prior_fast_hits(config.mode, pairs, len(prior_ces))
    ces: list[tuple[int, int]] = list(prior_ces)
    checkpoint_error: Optional[str] = None
    last_saved = start_n - 1

    def save_frontier(n_done: int) -> None:
        nonlocal checkpoint_error, last_saved
        if config.checkpoint_path is None:
            return
        cp = Checkpoint(
            mode=config.mode,
            n_verified=n_done,
            counterexamples=tuple(ces),
            created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )
        try:
            checkpoint_save(cp, config.checkpoint_path)
            last_saved = n_done
        except OSError as exc:
            checkpoint_error = str(exc)

    blocks = [
        (lo, min(lo + _BLOCK - 1, config.n_max))
        for lo in range(start_n, config.n_max + 1, _BLOCK)
    ]
    if config.workers == 1 or len(blocks) <= 1:
        for lo, hi in blocks:
            bp, bf, bces = _scan_block(config.mode.value, lo, hi)
            pairs += bp
            fast += bf
            ces.extend(bces)
            if hi - last_saved >= config.checkpoint_interval and hi < config.n_max:
                save_frontier(hi)
    else:
        factorize(2)  # build the sieve pre-fork so children inherit it
        done: dict[int, tuple[int, int, list[tuple[int, int]]]] = {}
        merged = 0  # index of the next block to fold into the ordered totals
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = {
                pool.submit(_scan_block, config.mode.value, lo, hi): lo
                for lo, hi in blocks
            }
            pending = set(futures)
            while pending:
                finished, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in finished:
                    done[futures[fut]] = fut.result()
                while merged < len(blocks) and blocks[merged][0] in done:
                    lo, hi = blocks[merged]
                    bp, bf, bces = done.pop(lo)
                    pairs += bp
                    fast += bf
                    ces.extend(bces)
                    merged += 1
                    if hi - last_saved >= config.checkpoint_interval and hi < config.n_max:
                        save_frontier(hi)

    ces.sort()
    save_frontier(config.n_max)
    return SearchReport(
        verified_up_to=config.n_max,
        counterexamples=tuple(ces),
        pairs_checked=pairs,
        elapsed=time.perf_counter() - t0,
        fast_path_hits=fast,
        checkpoint_error=checkpoint_error,
    )
