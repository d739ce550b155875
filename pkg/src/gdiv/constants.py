"""Euler-product constants of the main terms, and real zeta values.

The leading coefficients of the summatory functions are

    C_k     = (pi/4) prod_P (1 + sum_{a>=2} (tau_k(a)    - tau_k(a-1))    / N(P)^a)
    C_k*    = (pi/4) prod_P (1 + sum_{a>=2} (frak_t_k(a) - frak_t_k(a-1)) / N(P)^a)
    A_k     =        prod_p (1 + sum_{a>=2} (frak_t_k(a) - frak_t_k(a-1)) / p^a)
    B_k     =        prod_p (1 + sum_{a>=2} (tau_k(a)    - tau_k(a-1))    / p^a)

with P over Gaussian primes and p over rational primes. A Gaussian product
is regrouped by rational prime: f(2) * prod_{p=1 (4)} f(p)^2 * prod_{p=3 (4)} f(p^2).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .bell import bell_series, derive_zeta_exponents
from .divisors import Family, FunctionFamily
from .primes import primes_up_to

__all__ = [
    "EulerProductResult",
    "NonConvergenceError",
    "WHICH",
    "local_factor",
    "compute_constant",
    "constant_for_family",
    "zeta_real",
    "hurwitz_zeta",
    "dirichlet_beta",
    "hecke_zeta",
]


class NonConvergenceError(ValueError):
    """Cutoff too small for the requested accuracy."""


# which -> (family providing the exponent-level base, product over Z[i]?)
WHICH = {
    "C": (Family.FRAK_T_E_K, True),
    "Cstar": (Family.FRAK_T_E_K_STAR, True),
    "A": (Family.TAU_E_K_STAR, False),
    "B": (Family.TAU_E_K, False),
}

_FAMILY_TO_WHICH = {fam: w for w, (fam, _) in WHICH.items()}


# --------------------------------------------------------------------------
# zeta values by Euler-Maclaurin


@lru_cache(maxsize=None)
def _bernoulli(m: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa; returns B_0..B_m with B_1 = +1/2 (unused here)
    out = []
    a = [Fraction(0)] * (m + 1)
    for n in range(m + 1):
        a[n] = Fraction(1, n + 1)
        for j in range(n, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def hurwitz_zeta(s: float, a: float = 1.0, N: int = 30, M: int = 12) -> float:
    """``sum_{n>=0} (n+a)^-s`` continued to real ``s != 1``, by Euler-Maclaurin."""
    if s == 1:
        raise ValueError("pole at s = 1")
    head = math.fsum((n + a) ** -s for n in range(N))
    w = N + a
    terms = [head, w ** (1 - s) / (s - 1), 0.5 * w**-s]
    B = _bernoulli(2 * M)
    rising = s  # s (s+1) ... (s+2j-2)
    for j in range(1, M + 1):
        terms.append(float(B[2 * j] / math.factorial(2 * j)) * rising * w ** (-s - 2 * j + 1))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return math.fsum(terms)


def zeta_real(s: float) -> float:
    """Riemann zeta at ``s = 1/2`` or real ``s > 1``."""
    if not (s == 0.5 or s > 1):
        raise ValueError(f"zeta_real supports s = 1/2 and s > 1, got {s}")
    return hurwitz_zeta(s, 1.0)


def dirichlet_beta(s: float) -> float:
    """``L(s, chi_4)`` for real ``s >= 1/2``."""
    if s == 1:
        return math.pi / 4
    return 4.0**-s * (hurwitz_zeta(s, 0.25) - hurwitz_zeta(s, 0.75))


def hecke_zeta(s: float) -> float:
    """``Z(s) = zeta(s) L(s, chi_4)``, the Dedekind zeta of Z[i], for real ``s > 1``."""
    return zeta_real(s) * dirichlet_beta(s)


# --------------------------------------------------------------------------
# Euler products


@dataclass(frozen=True)
class EulerProductResult:
    which: str
    k: int
    value: float
    prime_cutoff: int
    series_truncation: int
    tail_estimate: float
    method: str = "direct"

    def as_dict(self) -> dict:
        return asdict(self)


def _differences(which: str, k: int, A: int) -> list[int]:
    fam = FunctionFamily(WHICH[which][0], k)
    base = fam.base_table(A)
    return [0, 0] + [base[a] - base[a - 1] for a in range(2, A + 1)]


def _g_minus_one(d: list[int], u: np.ndarray) -> np.ndarray:
    """``sum_{a>=2} d[a] u^a`` by Horner, without forming ``1 + ...``."""
    acc = np.zeros_like(u)
    for a in range(len(d) - 1, 1, -1):
        acc = acc * u + d[a]
    return acc * u * u


def local_factor(which: str, k: int, p: int, truncation: int = 64) -> float:
    """Combined Euler factor of all primes above the rational prime ``p``."""
    if truncation < 2:
        raise ValueError("truncation must be >= 2")
    d = _differences(which, k, truncation)
    gaussian = WHICH[which][1]

    def g(y):
        return 1.0 + float(_g_minus_one(d, np.array([1.0 / y]))[0])

    if not gaussian or p == 2:
        return g(p)
    if p % 4 == 1:
        return g(p) ** 2
    return g(p * p)


def _log_factors(which: str, k: int, ps: np.ndarray, truncation: int) -> np.ndarray:
    d = _differences(which, k, truncation)
    ps = ps.astype(np.float64)
    if not WHICH[which][1]:
        return np.log1p(_g_minus_one(d, 1.0 / ps))
    out = np.empty_like(ps)
    split = ps % 4 == 1
    inert = ps % 4 == 3
    ram = ps == 2
    out[split] = 2.0 * np.log1p(_g_minus_one(d, 1.0 / ps[split]))
    out[inert] = np.log1p(_g_minus_one(d, 1.0 / ps[inert] ** 2))
    out[ram] = np.log1p(_g_minus_one(d, 1.0 / ps[ram]))
    return out


def _tail(which: str, k: int, cutoff: int) -> float:
    d = _differences(which, k, 2)
    return abs(d[2]) / (cutoff * math.log(cutoff))


def compute_constant(
    which: str,
    k: int,
    prime_cutoff: int = 10**6,
    truncation: int = 64,
    method: str = "direct",
    max_tail: float = 1e-6,
) -> EulerProductResult:
    """Evaluate C_k ("C"), C_k* ("Cstar"), A_k ("A") or B_k ("B").

    ``method="direct"`` multiplies local factors over primes up to the
    cutoff; ``tail_estimate`` is the model ``|d_2| / (X log X)`` of the
    relative size of the omitted primes. ``method="accelerated"`` divides
    out zeta powers derived from the Bell series, multiplies the primes up
    to ``prime_cutoff`` directly and uses exact zeta values for the rest.
    """
    if which not in WHICH:
        raise ValueError(f"which must be one of {sorted(WHICH)}")
    if k < 2:
        raise ValueError("k must be >= 2")
    if prime_cutoff < 100 and method == "direct":
        raise ValueError("prime_cutoff must be >= 100")
    if method == "direct":
        return _direct(which, k, prime_cutoff, truncation, max_tail)
    if method == "accelerated":
        return _accelerated(which, k, prime_cutoff, truncation)
    raise ValueError(f"unknown method {method!r}")


def _direct(which, k, cutoff, truncation, max_tail) -> EulerProductResult:
    tail = _tail(which, k, cutoff)
    if tail > max_tail:
        raise NonConvergenceError(
            f"tail estimate {tail:.3g} exceeds {max_tail:.3g}; raise prime_cutoff above {cutoff}"
        )
    logs = _log_factors(which, k, primes_up_to(cutoff), truncation)
    value = math.exp(math.fsum(logs.tolist()))
    if WHICH[which][1]:
        value *= math.pi / 4
    return EulerProductResult(which, k, value, cutoff, truncation, tail, "direct")


def _accelerated(which, k, cutoff, truncation, shifts: int = 12) -> EulerProductResult:
    fam_id, gaussian = WHICH[which]
    fam = FunctionFamily(fam_id, k)
    zf = derive_zeta_exponents(bell_series(fam, shifts))
    if zf.exponent(1) != 1:
        raise AssertionError("Bell series must start 1 + x")
    ps = primes_up_to(cutoff)
    logs = _log_factors(which, k, ps, truncation).tolist()
    pf = ps.astype(np.float64)
    for j, e in zf.terms:
        if j == 1 or e == 0:
            continue
        # log of prod_{primes above p > cutoff} (1 - N^-j)^{-1}
        if gaussian:
            split = pf[pf % 4 == 1]
            inert = pf[pf % 4 == 3]
            removed = (
                [math.log1p(-(2.0**-j))] * bool((pf == 2).any())
                + (2.0 * np.log1p(-(split**-j))).tolist()
                + np.log1p(-(inert ** (-2 * j))).tolist()
            )
            zeta_log = math.log(hecke_zeta(j))
        else:
            removed = np.log1p(-(pf**-j)).tolist()
            zeta_log = math.log(zeta_real(j))
        logs.append(e * math.fsum([zeta_log] + removed))
    value = math.exp(math.fsum(logs))
    if gaussian:
        value *= math.pi / 4
    # first neglected local term is O(cutoff^-(shifts+1)) per prime
    tail = float(cutoff) ** -shifts
    return EulerProductResult(which, k, value, cutoff, truncation, tail, "accelerated")


@lru_cache(maxsize=64)
def constant_for_family(fam: FunctionFamily, prime_cutoff: int = 10**6) -> float:
    """Main-term density of ``fam``: pi/4 for the all-ones function."""
    if fam.family is Family.GAUSS_ONE:
        return math.pi / 4
    return compute_constant(_FAMILY_TO_WHICH[fam.family], fam.k, prime_cutoff, max_tail=1e-4).value
