"""Exact univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` stored in ascending degree with
trailing zeros stripped, so equal polynomials compare and hash equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _canonical(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


class Polynomial:
    """Immutable polynomial in one variable ``t`` with rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        self._coeffs = _canonical(coeffs)

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def linear_product(cls, roots: Iterable[Number]) -> "Polynomial":
        """Return prod (t - r) over ``roots``."""
        p = cls.constant(1)
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == _canonical([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: "Polynomial | Number") -> "Polynomial":
        return self + (-other)

    def __rsub__(self, other: Number) -> "Polynomial":
        return Polynomial.constant(other) - self

    def __mul__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self._coeffs])
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, c: Number) -> "Polynomial":
        """Return q with q(t) = p(t + c), via Horner on (t + c)."""
        step = Polynomial([Fraction(c), 1])
        acc = Polynomial()
        for coeff in reversed(self._coeffs):
            acc = acc * step + coeff
        return acc

    def coeff_strings(self) -> list[str]:
        return [format_fraction(c) for c in self._coeffs]

    def to_json(self) -> dict:
        return {"coeffs": self.coeff_strings()}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(parse_fraction(s) for s in data["coeffs"])

    def __repr__(self) -> str:
        return f"Polynomial({self.coeff_strings()!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for deg in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[deg]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if deg == 0:
                body = format_fraction(mag)
            else:
                var = "t" if deg == 1 else f"t^{deg}"
                body = var if mag == 1 else f"{format_fraction(mag)} {var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


ZERO = Polynomial()
ONE = Polynomial.constant(1)
T = Polynomial.monomial(1)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_shift(p: Polynomial, c: Number) -> Polynomial:
    return p.shift(c)


def interpolate(points: Sequence[tuple[Number, Number]]) -> Polynomial:
    """Lagrange interpolation through ``points`` in exact arithmetic."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation nodes")
    total = Polynomial()
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        if yi == 0:
            continue
        others = [xj for j, xj in enumerate(xs) if j != i]
        denom = Fraction(1)
        for xj in others:
            denom *= xi - xj
        total = total + Polynomial.linear_product(others) * (Fraction(yi) / denom)
    return total


def coeffwise_leq(a: Polynomial, b: Polynomial) -> bool:
    n = max(len(a.coeffs), len(b.coeffs))
    return all(a.coeff(i) <= b.coeff(i) for i in range(n))


def has_nonnegative_coeffs(p: Polynomial) -> bool:
    return all(c >= 0 for c in p.coeffs)
