"""Rational and Gaussian primes: sieving, classification, splitting, factorization."""

from __future__ import annotations

import enum
import heapq
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .gaussint import GaussInt, canonical_associate, divide_exact

__all__ = [
    "PrimeClass",
    "GaussFactorization",
    "prime_sieve",
    "primes_up_to",
    "is_prime",
    "factor_rational",
    "classify",
    "split_prime",
    "is_gaussian_prime",
    "factor_gauss",
    "gaussian_primes_up_to",
    "gaussian_prime_norms",
]


class PrimeClass(enum.Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


# --------------------------------------------------------------------------
# rational primes


def prime_sieve(n: int) -> np.ndarray:
    """Boolean array ``s`` of length ``n + 1`` with ``s[m]`` true iff m is prime."""
    n = int(n)
    s = np.ones(max(n + 1, 2), dtype=bool)
    s[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if s[p]:
            s[p * p :: p] = False
    return s[: n + 1]


@lru_cache(maxsize=8)
def _cached_primes(n: int) -> np.ndarray:
    out = np.flatnonzero(prime_sieve(n)).astype(np.int64)
    out.setflags(write=False)
    return out


def primes_up_to(n: int) -> np.ndarray:
    """Sorted int64 array of the primes ``<= n`` (read-only, cached)."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    return _cached_primes(int(n))


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_rational(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n >= 1`` as ``[(p, a), ...]`` with p increasing.

    Trial division by small primes, then Pollard-Brent rho on the cofactor.
    """
    n = int(n)
    if n < 1:
        raise ValueError("factor_rational needs n >= 1")
    found: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    # wheel mod 30 up to a modest bound
    f, steps = 7, (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 10_000:
        while n % f == 0:
            found[f] = found.get(f, 0) + 1
            n //= f
        f += steps[i]
        i = (i + 1) % 8
    if n > 1:
        rng = random.Random(n)  # seeded by the input: deterministic output order
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                found[m] = found.get(m, 0) + 1
                continue
            r = math.isqrt(m)
            if r * r == m:
                stack += [r, r]
                continue
            d = _pollard_brent(m, rng)
            stack += [d, m // d]
    return sorted(found.items())


# --------------------------------------------------------------------------
# Gaussian primes


def classify(p: int) -> PrimeClass:
    """How the rational prime ``p`` behaves in Z[i]."""
    if not is_prime(p):
        raise ValueError(f"{p} is not a rational prime")
    if p == 2:
        return PrimeClass.RAMIFIED
    return PrimeClass.SPLIT if p % 4 == 1 else PrimeClass.INERT


def _sqrt_minus_one(p: int) -> int:
    # c^((p-1)/4) for a quadratic non-residue c squares to -1 mod p
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return pow(c, (p - 1) // 4, p)
    raise AssertionError("no quadratic non-residue found")


def _gcd_gauss(a: GaussInt, b: GaussInt) -> GaussInt:
    while not b.is_zero():
        _, r = a.divmod_round(b)
        a, b = b, r
    return a


@lru_cache(maxsize=1 << 16)
def split_prime(p: int) -> GaussInt:
    """The prime ``a + bi`` above ``p = 1 mod 4`` with ``a > b > 0``.

    The other prime above ``p`` is ``b + ai``.
    """
    if classify(p) is not PrimeClass.SPLIT:
        raise ValueError(f"{p} does not split in Z[i] ({classify(p).value})")
    r = _sqrt_minus_one(p)
    g, _ = canonical_associate(_gcd_gauss(GaussInt(p, 0), GaussInt(r, 1)))
    a, b = g.re, g.im
    if a < b:
        a, b = b, a
    if a * a + b * b != p or not a > b > 0:
        raise ArithmeticError(f"splitting {p} produced {g}")
    return GaussInt(a, b)


def is_gaussian_prime(z) -> bool:
    z = GaussInt.coerce(z)
    n = z.norm()
    if n <= 1:
        raise ValueError("zero and units are neither prime nor composite")
    if is_prime(n):
        return True
    if z.re == 0 or z.im == 0:
        m = abs(z.re + z.im)
        return m % 4 == 3 and is_prime(m)
    return False


def _split_partner(pi: GaussInt) -> GaussInt:
    return GaussInt(pi.im, pi.re)


@dataclass(frozen=True)
class GaussFactorization:
    """``unit * prod(prime**e for prime, e in factors)``.

    Primes are canonical and ordered by norm; above a split ``p`` the
    representative returned by :func:`split_prime` comes first.
    """

    unit: GaussInt
    factors: tuple[tuple[GaussInt, int], ...]

    def value(self) -> GaussInt:
        out = self.unit
        for prime, e in self.factors:
            out = out * prime**e
        return out

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def __str__(self):
        parts = [f"({q})^{e}" if e > 1 else f"({q})" for q, e in self.factors]
        return " * ".join([f"({self.unit})"] + parts)


def _peel(z: GaussInt, prime: GaussInt) -> tuple[GaussInt, int]:
    e = 0
    while prime.divides(z):
        z = divide_exact(z, prime)
        e += 1
    return z, e


def factor_gauss(z) -> GaussFactorization:
    """Factor a nonzero Gaussian integer through the factorization of its norm."""
    z = GaussInt.coerce(z)
    if z.is_zero():
        raise ValueError("cannot factor 0")
    rest = z
    factors: list[tuple[GaussInt, int]] = []
    for p, a in factor_rational(z.norm()):
        if p == 2:
            prime = GaussInt(1, 1)
            rest, e = _peel(rest, prime)
            if e != a:
                raise ArithmeticError(f"ramified exponent mismatch for {z}")
            factors.append((prime, e))
        elif p % 4 == 3:
            if a % 2:
                raise ArithmeticError(f"odd power of inert {p} in norm of {z}")
            prime = GaussInt(p, 0)
            rest, e = _peel(rest, prime)
            if 2 * e != a:
                raise ArithmeticError(f"inert exponent mismatch for {z}")
            factors.append((prime, e))
        else:
            pi = split_prime(p)
            partner = _split_partner(pi)
            rest, e1 = _peel(rest, pi)
            rest, e2 = _peel(rest, partner)
            if e1 + e2 != a:
                raise ArithmeticError(f"split exponent mismatch for {z}")
            if e1:
                factors.append((pi, e1))
            if e2:
                factors.append((partner, e2))
    if not rest.is_unit():
        raise ArithmeticError(f"cofactor {rest} of {z} is not a unit")
    factors.sort(key=lambda qe: qe[0].norm())  # stable: split_prime(p) stays ahead of its partner
    return GaussFactorization(rest, tuple(factors))


def gaussian_primes_up_to(x: int) -> Iterator[GaussInt]:
    """Canonical Gaussian primes with norm ``<= x``, ordered by norm."""
    if x < 2:
        return
    inert = [(q * q, q) for q in primes_up_to(math.isqrt(x)).tolist() if q % 4 == 3]
    heapq.heapify(inert)
    for p in primes_up_to(x).tolist():
        while inert and inert[0][0] < p:
            _, q = heapq.heappop(inert)
            yield GaussInt(q, 0)
        if p == 2:
            yield GaussInt(1, 1)
        elif p % 4 == 1:
            pi = split_prime(p)
            yield pi
            yield _split_partner(pi)
    while inert:
        _, q = heapq.heappop(inert)
        yield GaussInt(q, 0)


def gaussian_prime_norms(x: int) -> tuple[np.ndarray, np.ndarray]:
    """Norms of the canonical Gaussian primes up to ``x``, with multiplicity.

    Returns ``(norms, counts)``: each split ``p`` appears with count 2. No
    splitting is done, so this is cheap enough for ``x = 10**7`` and beyond.
    """
    ps = primes_up_to(x)
    small = primes_up_to(math.isqrt(x)) if x >= 4 else np.zeros(0, dtype=np.int64)
    inert_norms = small[small % 4 == 3] ** 2
    ram = ps[ps == 2]
    split = ps[ps % 4 == 1]
    norms = np.concatenate([ram, split, inert_norms])
    counts = np.concatenate(
        [np.ones(len(ram), np.int64), np.full(len(split), 2, np.int64), np.ones(len(inert_norms), np.int64)]
    )
    order = np.argsort(norms, kind="stable")
    return norms[order], counts[order]

