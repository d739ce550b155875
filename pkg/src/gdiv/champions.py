"""Maximal-order experiments for the exponential divisor families.

The quantity of interest is ``log f(n) * loglog n / log n``, whose limsup is
``sup_a log base(a) / a``. For Gaussian families the argument is a norm
class: the scan uses the largest value of f among the elements of norm n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _sieve
from .divisors import FunctionFamily
from .primes import gaussian_prime_norms, primes_up_to
from .summing import _amax, local_tables

__all__ = [
    "ChampionRecord",
    "PrimeCountingReport",
    "champion_scan",
    "extremal_construction",
    "prime_counting_report",
    "limsup_constant",
    "crude_ratio_bound",
]

MIN_ARGUMENT = 16  # loglog(16) ~ 1.02; smaller arguments make the ratio meaningless


@dataclass(frozen=True)
class ChampionRecord:
    argument: str
    n_or_norm: int
    value: int
    ratio: float
    running_max: bool = True


def limsup_constant(fam: FunctionFamily, a_max: int = 64) -> float:
    """``sup_a log base(a) / a``, the target of every champion ratio."""
    return max(math.log(fam.base(a)) / a for a in range(1, a_max + 1))


def crude_ratio_bound(fam: FunctionFamily, n: float) -> float:
    """Upper bound for the ratio at argument ``n`` from ``f <= exp(K * log2 n)``."""
    return limsup_constant(fam) * math.log(math.log(n)) / math.log(2)


def champion_scan(fam: FunctionFamily, x_max: int, threads: int | None = None) -> list[ChampionRecord]:
    """Running-maximum records of the ratio over arguments ``16 <= n <= x_max``."""
    if x_max < MIN_ARGUMENT:
        raise ValueError(f"x_max must be >= {MIN_ARGUMENT}")
    tables = local_tables(fam, _amax(x_max), reduce="max")
    vals = _sieve.values(tables, x_max, threads)
    n = np.arange(MIN_ARGUMENT, x_max + 1, dtype=np.float64)
    v = vals[MIN_ARGUMENT:]
    logf = np.log(np.maximum(v, 1).astype(np.float64))
    ratio = np.where(v > 0, logf * np.log(np.log(n)) / np.log(n), -np.inf)
    prev = np.concatenate([[-np.inf], np.maximum.accumulate(ratio)[:-1]])
    hits = np.flatnonzero(ratio > prev)
    label = "norm" if fam.gaussian else "n"
    return [
        ChampionRecord(f"{label}={MIN_ARGUMENT + i}", MIN_ARGUMENT + int(i), int(v[i]), float(ratio[i]))
        for i in hits
        if ratio[i] > -np.inf
    ]


def extremal_construction(fam: FunctionFamily, l: int, X: int) -> float:
    """Ratio attained by the product of all primes of norm ``<= X``, each to the power l.

    With ``r`` such primes and ``S`` the sum of their log norms,
    ``log f = r log base(l)`` and ``log N = l S``; the element itself is
    never formed.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    if X < 100:
        raise ValueError("X must be >= 100")
    if fam.gaussian:
        norms, counts = gaussian_prime_norms(X)
    else:
        norms = primes_up_to(X)
        counts = np.ones(len(norms), dtype=np.int64)
    r = int(counts.sum())
    S = math.fsum((counts * np.log(norms.astype(np.float64))).tolist())
    logf = r * math.log(fam.base(l))
    logN = l * S
    return logf * math.log(logN) / logN


@dataclass(frozen=True)
class PrimeCountingReport:
    x: int
    count: int
    logsum: float
    count_ratio: float
    logsum_ratio: float


def prime_counting_report(x: int) -> PrimeCountingReport:
    """Number of Gaussian prime classes of norm ``<= x`` and the sum of their log norms."""
    if x < 2:
        raise ValueError("x must be >= 2")
    norms, counts = gaussian_prime_norms(x)
    count = int(counts.sum())
    logsum = math.fsum((counts * np.log(norms.astype(np.float64))).tolist())
    return PrimeCountingReport(x, count, logsum, count / (x / math.log(x)), logsum / x)
