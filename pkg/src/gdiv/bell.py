"""Exact truncated power series and zeta-power factorizations of Bell series.

A multiplicative function whose Bell series at every prime is the same
series ``B(x)`` has Dirichlet series ``prod_p B(p^-s)``. Writing

    B(x) * prod_j (1 - x^j)^{e_j} = R(x),   R(x) = 1 + O(x^{T+1}),

turns the Dirichlet series into ``prod_j zeta(js)^{e_j}`` (or the Hecke
zeta ``Z(js)`` over Z[i]) times a series that converges absolutely for
``Re s > 1/(T+1)``. Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .divisors import Family, FunctionFamily

__all__ = [
    "TruncatedSeries",
    "ZetaFactorization",
    "Lemma6Report",
    "series_mul",
    "binomial_factor",
    "bell_series",
    "derive_zeta_exponents",
    "recompose",
    "closed_form_exponents",
    "default_truncation",
    "verify_lemma6",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """``c[0] + c[1] x + ... + c[T] x^T`` modulo ``x^(T+1)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls, T: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * T)

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j]

    def __len__(self):
        return len(self.coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def truncate(self, T: int) -> "TruncatedSeries":
        if T > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: T + 1])

    def first_nonzero_after_constant(self) -> int | None:
        for j, c in enumerate(self.coeffs[1:], start=1):
            if c:
                return j
        return None

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c or j == 0:
                terms.append(f"{c}" if j == 0 else f"{c}x^{j}")
        return " + ".join(terms) + f" + O(x^{self.truncation + 1})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.truncation != b.truncation:
        raise ValueError("series_mul needs equal truncations")
    T = a.truncation
    ca, cb = a.coeffs, b.coeffs
    out = [0] * (T + 1)
    for i, x in enumerate(ca):
        if x:
            for j in range(T + 1 - i):
                out[i + j] += x * cb[j]
    return TruncatedSeries(out)


def binomial_factor(m: int, e: int, T: int) -> TruncatedSeries:
    """``(1 - x^m)^e`` mod ``x^(T+1)`` for any integer ``e``."""
    if m < 1:
        raise ValueError("shift must be >= 1")
    out = [0] * (T + 1)
    # generalized binomial: coefficient of x^{mj} is (-1)^j * C(e, j)
    c = 1
    j = 0
    while m * j <= T:
        out[m * j] = c
        c = c * (e - j) * -1
        j += 1
        if c % j:
            raise AssertionError("generalized binomial lost integrality")
        c //= j
    return TruncatedSeries(out)


def bell_series(fam: FunctionFamily, T: int) -> TruncatedSeries:
    """Bell series ``sum_a base(a) x^a`` of ``fam``; the same at every prime."""
    if T < 1:
        raise ValueError("truncation must be >= 1")
    return TruncatedSeries(fam.base_table(T))


@dataclass(frozen=True)
class ZetaFactorization:
    """``prod_j zeta(js)^{e_j} * (series with local factor remainder)``.

    The local identity is ``bell * prod_j (1 - x^j)^{e_j} == remainder``.
    """

    base: str  # "zeta" or "heckeZ"
    terms: tuple[tuple[int, int], ...]
    remainder: TruncatedSeries
    remainder_order: int | None = field(default=None)

    def exponent(self, j: int) -> int:
        return dict(self.terms).get(j, 0)

    def exponent_vector(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.terms)


def derive_zeta_exponents(s: TruncatedSeries, base: str = "zeta") -> ZetaFactorization:
    """Peel ``(1 - x^j)^{e_j}`` factors greedily until the series is 1 up to ``x^T``."""
    if s[0] != 1:
        raise ValueError("series must start with 1")
    T = s.truncation
    residual = s
    terms = []
    for j in range(1, T + 1):
        e = residual[j]
        if e:
            residual = residual * binomial_factor(j, e, T)
        terms.append((j, e))
    assert residual.first_nonzero_after_constant() is None
    return ZetaFactorization(base, tuple(terms), residual, None)


def recompose(zf: ZetaFactorization) -> TruncatedSeries:
    """``remainder * prod_j (1 - x^j)^{-e_j}``; inverts :func:`derive_zeta_exponents`."""
    T = zf.remainder.truncation
    out = zf.remainder
    for j, e in zf.terms:
        if e and j <= T:
            out = out * binomial_factor(j, -e, T)
    return out


def _as_int(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {q}")
    return int(q)


def closed_form_exponents(fam: FunctionFamily) -> dict[int, int]:
    """Closed-form zeta exponents as polynomials in k, evaluated at ``fam.k``.

    Shifts 1..5 for the starred families, 1..8 for the unstarred ones
    (the unstarred rational family shares its Bell series with frak_t_e_k).
    """
    k = Fraction(fam.k)
    if fam.starred:
        polys = {
            1: Fraction(1),
            2: (k**2 + k - 2) / 2,
            3: (-(k**2) + k) / 2,
            4: (-(k**4) + 7 * k**2 - 6 * k) / 12,
            5: (5 * k**4 - 6 * k**3 - 5 * k**2 + 6 * k) / 24,
        }
    elif fam.family in (Family.FRAK_T_E_K, Family.TAU_E_K):
        polys = {
            1: Fraction(1),
            2: k - 1,
            3: Fraction(0),
            4: Fraction(0),
            5: (k - k**2) / 2,
            6: (-(k**3) + 6 * k**2 - 5 * k) / 6,
            7: (k**3 - 4 * k**2 + 3 * k) / 2,
            8: (3 * k**4 - 26 * k**3 + 57 * k**2 - 34 * k) / 24,
        }
    else:
        raise ValueError(f"no closed-form factorization for {fam}")
    return {j: _as_int(v, f"exponent of shift {j} at k={fam.k}") for j, v in polys.items()}


def default_truncation(fam: FunctionFamily) -> int:
    return 5 if fam.starred else 8


@dataclass
class Lemma6Report:
    family: FunctionFamily
    truncation: int
    base: str
    closed_form_exponents: dict[int, int]
    derived_exponents: dict[int, int]
    residual: TruncatedSeries
    passed: bool
    first_bad_index: int | None = None
    message: str = ""

    def as_dict(self) -> dict:
        return {
            "family": self.family.family.value,
            "k": self.family.k,
            "base": self.base,
            "truncation": self.truncation,
            "coefficients": list(bell_series(self.family, self.truncation).coeffs),
            "exponents": {str(j): e for j, e in sorted(self.closed_form_exponents.items())},
            "derived_exponents": {str(j): e for j, e in sorted(self.derived_exponents.items())},
            "residual": list(self.residual.coeffs),
            "passed": self.passed,
            "first_bad_index": self.first_bad_index,
            "message": self.message,
        }


def _apply_exponents(s: TruncatedSeries, exps: dict[int, int]) -> TruncatedSeries:
    out = s
    for j, e in sorted(exps.items()):
        if e and j <= s.truncation:
            out = out * binomial_factor(j, e, s.truncation)
    return out


def verify_lemma6(fam: FunctionFamily, truncation: int | None = None) -> Lemma6Report:
    """Check the closed-form exponents against the Bell series of ``fam``.

    Multiplies the Bell series by ``prod_j (1 - x^j)^{e_j}`` with the
    closed-form exponents and requires a residual of exactly 1 through
    ``x^T`` (T = 8 unstarred, 5 starred); the greedy derivation must
    reproduce the same exponents.
    """
    T = default_truncation(fam) if truncation is None else truncation
    base = "heckeZ" if fam.gaussian else "zeta"
    expected = closed_form_exponents(fam)
    s = bell_series(fam, T)
    residual = _apply_exponents(s, expected)
    derived = {j: e for j, e in derive_zeta_exponents(s, base).terms}

    bad = residual.first_nonzero_after_constant()
    if residual[0] != 1:
        bad = 0
    if bad is not None:
        return Lemma6Report(
            fam, T, base, expected, derived, residual, False, bad,
            f"residual coefficient of x^{bad} is {residual[bad]}, expected 0",
        )
    for j in range(1, T + 1):
        if derived.get(j, 0) != expected.get(j, 0):
            return Lemma6Report(
                fam, T, base, expected, derived, residual, False, j,
                f"derived exponent at shift {j} is {derived.get(j, 0)}, "
                f"closed form gives {expected.get(j, 0)}",
            )
    return Lemma6Report(fam, T, base, expected, derived, residual, True, None, "ok")
