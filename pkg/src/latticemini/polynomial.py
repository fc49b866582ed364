"""Dense polynomials with exact rational coefficients.

Coefficients are stored lowest degree first and kept canonical (no trailing
zeros), so equality is coefficient-wise equality and degree is implicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


def _canonical(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial sum(coeffs[k] * t**k) with exact Fraction coefficients."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "RationalPolynomial":
        return cls(_canonical(coeffs))

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def evaluate(self, t) -> Fraction:
        """Exact Horner evaluation at an integer or rational point."""
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __call__(self, t) -> Fraction:
        return self.evaluate(t)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(_canonical(out))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + other.scaled(-1)

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(_canonical(out))

    def scaled(self, k) -> "RationalPolynomial":
        k = Fraction(k)
        return RationalPolynomial(_canonical(c * k for c in self.coeffs))

    def shift_argument(self, delta) -> "RationalPolynomial":
        """Return the polynomial q with q(t) = p(t + delta), exactly."""
        delta = Fraction(delta)
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            power = Fraction(1)
            # expand c * (t + delta)**k from the t**k term downward
            for j in range(k, -1, -1):
                out[j] += c * comb(k, j) * power
                power *= delta
        return RationalPolynomial(_canonical(out))

    @classmethod
    def lagrange(cls, nodes: Sequence, values: Sequence) -> "RationalPolynomial":
        """Exact Lagrange interpolation through (nodes[i], values[i])."""
        if len(nodes) != len(values):
            raise ValueError("nodes and values must have equal length")
        if len(set(nodes)) != len(nodes):
            raise ValueError("interpolation nodes must be distinct")
        result = cls(())
        for i, (xi, yi) in enumerate(zip(nodes, values)):
            if yi == 0:
                continue
            basis = cls((Fraction(1),))
            denom = Fraction(1)
            for j, xj in enumerate(nodes):
                if j == i:
                    continue
                basis = basis * cls(_canonical((Fraction(-xj), Fraction(1))))
                denom *= Fraction(xi) - Fraction(xj)
            result = result + basis.scaled(Fraction(yi) / denom)
        return result

    def coeff_strings(self) -> list[str]:
        """Coefficients low-to-high as decimal-free rational strings."""
        return [str(c) for c in self.coeffs]

    def pretty(self, var: str = "t") -> str:
        """Human-readable rendering, highest degree first."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag} {power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.pretty()
