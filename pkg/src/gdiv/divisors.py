"""Divisor-counting functions over Z and Z[i] and their exponential analogues.

``tau_k(n)`` counts ordered k-tuples of positive integers with product n.
``frak_t_k(alpha)`` counts ordered k-tuples of divisor *classes* of Z[i]
(elements up to units) whose product lies in the class of alpha; for a
rational integer n it reduces to

    frak_t_k(2**a) = C(k+2a-1, 2a)
    frak_t_k(p**a) = C(k+a-1, a)        p = 3 (mod 4)
    frak_t_k(p**a) = C(k+a-1, a)**2     p = 1 (mod 4)

The four exponential families act on prime-power exponents:

    tau_e_k(p**a)         = tau_k(a)
    tau_e_k_star(p**a)    = frak_t_k(a)
    frak_t_e_k(P**a)      = tau_k(a)      P a Gaussian prime
    frak_t_e_k_star(P**a) = frak_t_k(a)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .gaussint import GaussInt, canonical_associate, divide_exact
from .primes import factor_gauss, factor_rational

__all__ = [
    "Family",
    "FunctionFamily",
    "binom",
    "tau_k",
    "frak_t_k",
    "evaluate",
    "brute_force_tau_k",
    "brute_force_frak_t_k",
    "max_log_ratio",
    "OracleBoundError",
]


class OracleBoundError(ValueError):
    """Input too large for a brute-force oracle."""


def binom(n: int, r: int) -> int:
    """Exact binomial coefficient by incremental multiplication."""
    if r < 0 or r > n:
        return 0
    r = min(r, n - r)
    out = 1
    for j in range(1, r + 1):
        out = out * (n - r + j) // j
    return out


def _tau_k_local(k: int, a: int) -> int:
    return binom(k + a - 1, a)


def tau_k(k: int, n: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 1:
        raise ValueError("tau_k needs n >= 1")
    return math.prod(_tau_k_local(k, a) for _, a in factor_rational(n))


def _frak_t_k_rational(k: int, n: int) -> int:
    out = 1
    for p, a in factor_rational(n):
        if p == 2:
            out *= binom(k + 2 * a - 1, 2 * a)
        elif p % 4 == 3:
            out *= binom(k + a - 1, a)
        else:
            out *= binom(k + a - 1, a) ** 2
    return out


def frak_t_k(k: int, alpha) -> int:
    """Ordered k-tuples of Gaussian divisor classes with product ~ alpha."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(alpha, int) and not isinstance(alpha, bool):
        if alpha == 0:
            raise ValueError("frak_t_k is undefined at 0")
        return _frak_t_k_rational(k, abs(alpha))
    alpha = GaussInt.coerce(alpha)
    if alpha.is_zero():
        raise ValueError("frak_t_k is undefined at 0")
    if alpha.re == 0 or alpha.im == 0:
        return _frak_t_k_rational(k, abs(alpha.re + alpha.im))
    return math.prod(_tau_k_local(k, e) for e in factor_gauss(alpha).exponents())


class Family(enum.Enum):
    TAU_E_K = "tau_e_k"
    TAU_E_K_STAR = "tau_e_k_star"
    FRAK_T_E_K = "frak_t_e_k"
    FRAK_T_E_K_STAR = "frak_t_e_k_star"
    # f(P**a) = 1 for every Gaussian prime power; sums count lattice classes
    GAUSS_ONE = "gauss_one"


@dataclass(frozen=True)
class FunctionFamily:
    family: Family
    k: int = 2

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))
        if self.family is not Family.GAUSS_ONE and self.k < 2:
            raise ValueError("k must be >= 2")

    @property
    def gaussian(self) -> bool:
        return self.family in (Family.FRAK_T_E_K, Family.FRAK_T_E_K_STAR, Family.GAUSS_ONE)

    @property
    def starred(self) -> bool:
        return self.family in (Family.TAU_E_K_STAR, Family.FRAK_T_E_K_STAR)

    def base(self, a: int) -> int:
        """Value at a prime power with exponent ``a`` (``base(0) == 1``)."""
        return _base(self.family, self.k, a)

    def base_table(self, amax: int) -> list[int]:
        return [self.base(a) for a in range(amax + 1)]

    def __str__(self):
        if self.family is Family.GAUSS_ONE:
            return self.family.value
        return f"{self.family.value}(k={self.k})"


@lru_cache(maxsize=4096)
def _base(family: Family, k: int, a: int) -> int:
    if a < 0:
        raise ValueError("exponent must be >= 0")
    if a == 0 or family is Family.GAUSS_ONE:
        return 1
    if family in (Family.TAU_E_K, Family.FRAK_T_E_K):
        return tau_k(k, a)
    return _frak_t_k_rational(k, a)


def evaluate(fam: FunctionFamily, arg) -> int:
    """Value of ``fam`` at a positive integer or a nonzero Gaussian integer."""
    if fam.gaussian:
        z = GaussInt.coerce(arg)
        if z.is_zero():
            raise ValueError(f"{fam} is undefined at 0")
        return math.prod(fam.base(e) for e in factor_gauss(z).exponents())
    if isinstance(arg, GaussInt):
        if arg.im != 0:
            raise ValueError(f"{fam} is a function on the rational integers, got {arg}")
        arg = arg.re
    if isinstance(arg, bool) or not isinstance(arg, int) or arg < 1:
        raise ValueError(f"{fam} needs a positive integer, got {arg!r}")
    return math.prod(fam.base(a) for _, a in factor_rational(arg))


# --------------------------------------------------------------------------
# brute-force oracles


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def brute_force_tau_k(k: int, n: int, bound: int = 10**6) -> int:
    """Count ordered k-tuples with product ``n`` by nested divisor enumeration."""
    if n > bound or k > 4:
        raise OracleBoundError(f"brute_force_tau_k limited to n <= {bound}, k <= 4")
    if n < 1 or k < 1:
        raise ValueError("need n >= 1, k >= 1")

    @lru_cache(maxsize=None)
    def count(j: int, m: int) -> int:
        if j == 1:
            return 1
        return sum(count(j - 1, m // d) for d in _divisors(m))

    return count(k, n)


def _divisor_classes(alpha: GaussInt) -> list[GaussInt]:
    # quarter-plane lattice scan; no factorization involved
    n = alpha.norm()
    out = []
    for a in range(1, math.isqrt(n) + 1):
        for b in range(0, math.isqrt(n - a * a) + 1):
            d = GaussInt(a, b)
            if n % d.norm() == 0 and d.divides(alpha):
                out.append(d)
    return out


def brute_force_frak_t_k(k: int, alpha, bound: int = 10**4) -> int:
    """Count ordered k-tuples of divisor classes whose product is associated to alpha."""
    alpha = GaussInt.coerce(alpha)
    if alpha.is_zero():
        raise ValueError("undefined at 0")
    if alpha.norm() > bound or k > 4:
        raise OracleBoundError(f"brute_force_frak_t_k limited to norm <= {bound}, k <= 4")
    classes = _divisor_classes(alpha)

    @lru_cache(maxsize=None)
    def count(j: int, beta: GaussInt) -> int:
        if j == 1:
            return 1
        return sum(
            count(j - 1, canonical_associate(divide_exact(beta, d))[0])
            for d in classes
            if d.divides(beta)
        )

    return count(k, canonical_associate(alpha)[0])


def max_log_ratio(base: str, k: int, n_max: int) -> tuple[int, float]:
    """Maximize ``log f(n) / n`` over ``1 <= n <= n_max`` for f = tau_k or frak_t_k.

    Returns the first maximizing n and the maximum.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if base in ("tau_k", "tau"):
        f = lambda n: tau_k(k, n)  # noqa: E731
    elif base in ("frak_t_k", "frak_t"):
        f = lambda n: _frak_t_k_rational(k, n)  # noqa: E731
    else:
        raise ValueError(f"unknown base function {base!r}")
    best_n, best = 1, 0.0
    for n in range(2, n_max + 1):
        v = math.log(f(n)) / n
        if v > best:
            best_n, best = n, v
    return best_n, best
