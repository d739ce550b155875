"""Segmented sieve for multiplicative functions given by per-exponent local tables.

A function is described by three int64 tables indexed by the exponent of a
rational prime: one for p = 2, one for p = 1 (mod 4), one for p = 3 (mod 4).
Each segment ``[lo, hi)`` is factored by dividing out the primes up to
``sqrt(hi)``; whatever cofactor survives is a single large prime.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .primes import primes_up_to

SEGMENT = 1 << 20
_INT64_LIMIT = 2**63 - 1


@dataclass(frozen=True)
class LocalTables:
    ramified: np.ndarray
    split: np.ndarray
    inert: np.ndarray

    @property
    def amax(self) -> int:
        return len(self.ramified) - 1

    def for_prime(self, p: int) -> np.ndarray:
        if p == 2:
            return self.ramified
        return self.split if p % 4 == 1 else self.inert


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("GDIV_THREADS", "1") or 1)
    return max(1, int(threads))


def _exponent_split(r: np.ndarray, p: int) -> np.ndarray:
    """Divide every entry of ``r`` (all multiples of p) by its full power of p in place.

    Returns the exponents.
    """
    e = np.zeros(len(r), dtype=np.int64)
    pos = np.arange(len(r))
    cur = r
    while pos.size:
        cur = cur // p
        r[pos] = cur
        e[pos] += 1
        keep = cur % p == 0
        pos, cur = pos[keep], cur[keep]
    return e


def segment_values(tables: LocalTables, lo: int, hi: int) -> np.ndarray:
    """Values of the multiplicative function on ``lo <= n < hi`` (``lo >= 1``)."""
    lo = max(lo, 1)
    n = hi - lo
    vals = np.ones(n, dtype=np.int64)
    if n <= 0:
        return vals
    rem = np.arange(lo, hi, dtype=np.int64)
    for p in primes_up_to(math.isqrt(hi - 1)).tolist():
        start = (-lo) % p
        if start >= n:
            continue
        r = rem[start::p].copy()
        e = _exponent_split(r, p)
        rem[start::p] = r
        table = tables.for_prime(p)
        if e.max() >= len(table):
            raise ValueError("local table too short for this range")
        sl = vals[start::p]
        factor = table[e]
        fmax = int(factor.max())
        if fmax > 1 and int(sl.max()) > _INT64_LIMIT // fmax:
            raise OverflowError(f"multiplicative values exceed int64 near n={lo}")
        vals[start::p] = sl * factor
    big = rem > 1
    if big.any():
        q = rem[big]
        one = np.where(q == 2, tables.ramified[1], np.where(q % 4 == 1, tables.split[1], tables.inert[1]))
        if int(one.max()) > 1 and int(vals[big].max()) > _INT64_LIMIT // int(one.max()):
            raise OverflowError(f"multiplicative values exceed int64 near n={lo}")
        vals[big] *= one
    return vals


def _segments(x: int, segment: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + segment, x + 1)) for lo in range(1, x + 1, segment)]


def values(tables: LocalTables, x: int, threads: int | None = None, segment: int = SEGMENT) -> np.ndarray:
    """Array ``b`` of length ``x + 1`` with ``b[n]`` the value at n and ``b[0] = 0``."""
    out = np.zeros(x + 1, dtype=np.int64)
    segs = _segments(x, segment)

    def fill(bounds):
        lo, hi = bounds
        out[lo:hi] = segment_values(tables, lo, hi)

    _run(fill, segs, threads)
    return out


def checkpoint_sums(
    tables: LocalTables,
    xs: Iterable[int],
    threads: int | None = None,
    segment: int = SEGMENT,
) -> dict[int, int]:
    """Exact ``sum_{n <= x} f(n)`` for every x in ``xs`` in one sweep to ``max(xs)``."""
    xs = sorted(set(int(v) for v in xs))
    if not xs or xs[0] < 1:
        raise ValueError("checkpoints must be >= 1")
    segs = _segments(xs[-1], segment)

    def partial(bounds):
        lo, hi = bounds
        v = segment_values(tables, lo, hi)
        if v.size and int(v.max()) > _INT64_LIMIT // max(v.size, 1):
            raise OverflowError("segment sum may exceed int64")
        cs = np.cumsum(v)
        # sums up to each checkpoint falling in this segment, and the segment total
        inside = {c: int(cs[c - lo]) for c in xs if lo <= c < hi}
        return inside, int(cs[-1])

    results = _run(partial, segs, threads)
    out, running = {}, 0
    for inside, total in results:  # fixed segment order: result independent of thread count
        for c, s in inside.items():
            out[c] = running + s
        running += total
    return out


def _run(fn: Callable, items: list, threads: int | None) -> list:
    threads = resolve_threads(threads)
    if threads == 1 or len(items) == 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
