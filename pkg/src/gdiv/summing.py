"""Summatory functions over Z and over norm classes of Z[i].

Gaussian sums are never formed element by element. Instead the norm
coefficients ``b(n) = sum'_{N(alpha) = n} f(alpha)`` are sieved as a
multiplicative function of n, using the local values at a rational prime:

    b(2^a) = base(a)
    b(p^a) = base(a/2) if a is even else 0             p = 3 (mod 4)
    b(p^a) = sum_{i+j=a} base(i) base(j)               p = 1 (mod 4)
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

import numpy as np

from . import _sieve
from .constants import constant_for_family, zeta_real
from .divisors import FunctionFamily, evaluate
from .gaussint import GaussInt

__all__ = [
    "NormCoefficientTable",
    "SummatoryReport",
    "local_tables",
    "norm_coefficients",
    "summatory",
    "summatory_many",
    "lattice_summatory_oracle",
    "lattice_norm_sums",
    "count_tau_a",
    "residual_analysis",
    "ResidualTable",
    "tau_a_main_terms",
]


def _amax(x: int) -> int:
    return max(1, int(x).bit_length())


def local_tables(fam: FunctionFamily, amax: int, reduce: str = "sum") -> _sieve.LocalTables:
    """Per-exponent local values of ``b`` (Gaussian) or of ``fam`` itself (rational).

    ``reduce="max"`` replaces the split-prime convolution by a maximum: the
    largest value of ``fam`` among the classes of norm ``p^a``.
    """
    base = fam.base_table(amax)
    if not fam.gaussian:
        t = np.array(base, dtype=np.int64)
        return _sieve.LocalTables(t, t, t)
    ram = np.array(base, dtype=np.int64)
    inert = np.array([base[a // 2] if a % 2 == 0 else 0 for a in range(amax + 1)], dtype=np.int64)
    combine = sum if reduce == "sum" else max
    split = np.array(
        [combine(base[i] * base[a - i] for i in range(a + 1)) for a in range(amax + 1)],
        dtype=np.int64,
    )
    return _sieve.LocalTables(ram, split, inert)


@dataclass
class NormCoefficientTable:
    fam: FunctionFamily
    x: int
    b: np.ndarray  # b[0] = 0, b[n] for 1 <= n <= x

    def __getitem__(self, n: int) -> int:
        return int(self.b[n])

    def total(self) -> int:
        return int(self.b.sum())


def norm_coefficients(fam: FunctionFamily, x: int, threads: int | None = None) -> NormCoefficientTable:
    if not fam.gaussian:
        raise ValueError(f"{fam} is not a function on Z[i]")
    if x < 1:
        raise ValueError("x must be >= 1")
    b = _sieve.values(local_tables(fam, _amax(x)), x, threads)
    return NormCoefficientTable(fam, x, b)


@dataclass
class SummatoryReport:
    fam: FunctionFamily
    x: int
    exact_sum: int
    main_term: float
    residual: float
    normalized_residual: float

    def as_row(self) -> dict:
        return {
            "x": self.x,
            "exact": self.exact_sum,
            "main": self.main_term,
            "residual": self.residual,
            "normalized_residual": self.normalized_residual,
        }


def _report(fam: FunctionFamily, x: int, exact: int, constant: float) -> SummatoryReport:
    main = constant * x
    res = exact - main
    return SummatoryReport(fam, x, exact, main, res, res / math.sqrt(x))


def summatory_many(fam: FunctionFamily, xs, threads: int | None = None) -> dict[int, int]:
    """Exact sums at every x in ``xs`` from a single sieve pass."""
    xs = [int(v) for v in xs]
    return _sieve.checkpoint_sums(local_tables(fam, _amax(max(xs))), xs, threads)


def summatory(
    fam: FunctionFamily, x: int, threads: int | None = None, prime_cutoff: int = 10**6
) -> SummatoryReport:
    """``sum_{n<=x} f(n)`` (rational) or ``sum'_{N(alpha)<=x} f(alpha)`` (Gaussian)."""
    if x < 1:
        raise ValueError("x must be >= 1")
    exact = summatory_many(fam, [x], threads)[x]
    return _report(fam, x, exact, constant_for_family(fam, prime_cutoff))


def lattice_norm_sums(fam: FunctionFamily, x: int, bound: int = 10**6) -> np.ndarray:
    """Per-norm totals ``out[n] = sum of fam over the classes of norm n``, by lattice walk.

    Gaussian families walk the quarter plane ``a >= 1, b >= 0`` and factor
    every point; rational families factor every ``n <= x`` on its own.
    """
    if x > bound:
        raise ValueError(f"oracle limited to x <= {bound}")
    out = np.zeros(x + 1, dtype=np.int64)
    if fam.gaussian:
        for a in range(1, math.isqrt(x) + 1):
            for b in range(0, math.isqrt(x - a * a) + 1):
                out[a * a + b * b] += evaluate(fam, GaussInt(a, b))
    else:
        for n in range(1, x + 1):
            out[n] = evaluate(fam, n)
    return out


def lattice_summatory_oracle(fam: FunctionFamily, x: int, bound: int = 10**6) -> int:
    """Reference value of the summatory function, independent of the sieve."""
    return int(lattice_norm_sums(fam, x, bound).sum())


def _tau_l_table(l: int, m: int) -> np.ndarray:
    """``tau_l(1..m)`` by repeated Dirichlet convolution with 1 (index 0 unused)."""
    t = np.zeros(m + 1, dtype=np.int64)
    t[1:] = 1
    for _ in range(l - 1):
        nxt = np.zeros_like(t)
        for d in range(1, m + 1):
            nxt[d::d] += t[d]
        t = nxt
    return t


def count_tau_a(l: int, x: int) -> int:
    """Number of tuples ``(d_0, d_1, ..., d_l)`` with ``d_0 d_1^2 ... d_l^2 <= x``.

    Grouping by ``m = d_1 ... d_l`` gives ``sum_{m <= sqrt x} tau_l(m) floor(x / m^2)``.
    """
    if l < 1 or l > 4:
        raise ValueError("l must be in 1..4")
    if x < 1:
        raise ValueError("x must be >= 1")
    m = math.isqrt(x)
    t = _tau_l_table(l, m)
    ms = np.arange(1, m + 1, dtype=np.int64)
    return int(sum(int(a) * int(b) for a, b in zip(t[1:], x // (ms * ms))))


@dataclass
class ResidualTable:
    fam: FunctionFamily
    constant: float
    rows: list[SummatoryReport]
    ok: bool
    max_over_median: float


def residual_analysis(
    fam: FunctionFamily, xs, threads: int | None = None, prime_cutoff: int = 10**6
) -> ResidualTable:
    """Exact sums against ``const * x`` along ``xs``.

    ``ok`` is false if the largest ``|residual| / sqrt(x)`` exceeds ten times
    the median, i.e. if the residual grows visibly faster than ``sqrt(x)``.
    """
    xs = sorted(set(int(v) for v in xs))
    const = constant_for_family(fam, prime_cutoff)
    sums = summatory_many(fam, xs, threads)
    rows = [_report(fam, x, sums[x], const) for x in xs]
    norm = [abs(r.normalized_residual) for r in rows]
    med = statistics.median(norm)
    ratio = max(norm) / med if med > 0 else (0.0 if max(norm) == 0 else math.inf)
    return ResidualTable(fam, const, rows, ratio <= 10.0, ratio)


def tau_a_main_terms(x: int) -> tuple[float, float]:
    """``zeta(2) x`` and ``zeta(1/2) sqrt(x)`` for the l = 1 count."""
    return zeta_real(2.0) * x, zeta_real(0.5) * math.sqrt(x)
