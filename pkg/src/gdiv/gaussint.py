"""Exact arithmetic in the Gaussian integers Z[i]."""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "GaussInt",
    "UNITS",
    "ONE",
    "I",
    "norm",
    "conj",
    "mul",
    "divide_exact",
    "canonical_associate",
    "parse_gauss",
]


@dataclass(frozen=True, order=True)
class GaussInt:
    """The Gaussian integer ``re + im*i``.

    Python integers never wrap, so products stay exact at any size.
    """

    re: int
    im: int = 0

    def __post_init__(self):
        if not isinstance(self.re, int) or not isinstance(self.im, int):
            raise TypeError("GaussInt components must be int")

    @classmethod
    def coerce(cls, value) -> "GaussInt":
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a Gaussian integer")
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, complex):
            if value.real != int(value.real) or value.imag != int(value.imag):
                raise ValueError(f"{value!r} has non-integer components")
            return cls(int(value.real), int(value.imag))
        if isinstance(value, str):
            return parse_gauss(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as GaussInt")

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_rational(self) -> bool:
        return self.im == 0

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod_round(self, other: "GaussInt") -> tuple["GaussInt", "GaussInt"]:
        """Euclidean division with the quotient rounded to the nearest lattice point.

        The remainder satisfies ``norm(r) <= norm(other) / 2``.
        """
        other = GaussInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        num = self * other.conj()
        q = GaussInt(_round_div(num.re, n), _round_div(num.im, n))
        return q, self - q * other

    def divides(self, other: "GaussInt") -> bool:
        """True if ``self | other``."""
        other = GaussInt.coerce(other)
        n = self.norm()
        if n == 0:
            return other.is_zero()
        num = other * self.conj()
        return num.re % n == 0 and num.im % n == 0

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"

    def __complex__(self):
        return complex(self.re, self.im)


def _maybe(value):
    try:
        return GaussInt.coerce(value)
    except (TypeError, ValueError):
        return None


def _round_div(a: int, b: int) -> int:
    # nearest integer to a/b for b > 0, ties toward +inf
    return (2 * a + b) // (2 * b)


ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
UNITS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


def norm(z) -> int:
    return GaussInt.coerce(z).norm()


def conj(z) -> GaussInt:
    return GaussInt.coerce(z).conj()


def mul(z, w) -> GaussInt:
    return GaussInt.coerce(z) * GaussInt.coerce(w)


def divide_exact(z, w) -> GaussInt:
    """Return ``q`` with ``z == q * w``; raise ``ValueError`` if ``w`` does not divide ``z``."""
    z, w = GaussInt.coerce(z), GaussInt.coerce(w)
    n = w.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[i]")
    num = z * w.conj()
    if num.re % n or num.im % n:
        raise ValueError(f"{w} does not divide {z}")
    return GaussInt(num.re // n, num.im // n)


def canonical_associate(z) -> tuple[GaussInt, GaussInt]:
    """Return ``(c, u)`` with ``z == u * c`` and ``c.re >= 1, c.im >= 0``.

    Each nonzero associate class has exactly one member in that quarter plane.
    """
    z = GaussInt.coerce(z)
    if z.is_zero():
        raise ValueError("0 has no canonical associate")
    c = z
    # u runs through 1, -i, -1, i as c = z * u^{-1} is rotated by -i each step
    for u in UNITS:
        if c.re >= 1 and c.im >= 0:
            return c, u
        c = GaussInt(c.im, -c.re)
    raise AssertionError("unreachable: one rotation always lands in the quarter plane")


_LITERAL = re.compile(
    r"""^\s*
    (?:
        (?P<re>[+-]?\s*\d+)\s*(?:(?P<sign>[+-])\s*(?P<im>\d*)\s*i)?
      | (?P<pure>[+-]?\s*\d*)\s*i
    )\s*$""",
    re.VERBOSE,
)


def parse_gauss(text: str) -> GaussInt:
    """Parse ``"a+bi"``, ``"a-bi"``, ``"a"`` or ``"bi"``, spaces allowed."""
    m = _LITERAL.match(text)
    if m is None:
        raise ValueError(f"malformed Gaussian integer literal: {text!r}")
    if m.group("pure") is not None:
        digits = m.group("pure").replace(" ", "")
        if digits in ("", "+"):
            return GaussInt(0, 1)
        if digits == "-":
            return GaussInt(0, -1)
        return GaussInt(0, int(digits))
    re_part = int(m.group("re").replace(" ", ""))
    if m.group("sign") is None:
        return GaussInt(re_part, 0)
    im_part = int(m.group("im")) if m.group("im") else 1
    if m.group("sign") == "-":
        im_part = -im_part
    return GaussInt(re_part, im_part)
