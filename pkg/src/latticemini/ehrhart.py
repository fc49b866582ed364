"""Ehrhart polynomials by exact interpolation, plus structural checks.

For a full-dimensional lattice polytope the lattice-point enumerator is a
degree-d polynomial with constant term 1, leading coefficient equal to the
volume, and d! times every coefficient integral. Interpolation uses the
smallest valid support (t = 0..d) and re-verifies against fresh counts at
two extra nodes, so a silent counting or interpolation bug cannot survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .counting import count_points
from .errors import InternalConsistencyError, NotFullDimensionalError
from .geometry import LatticePolytope
from .polynomial import RationalPolynomial


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Interpolated enumerator polynomial together with its source polytope."""

    poly: RationalPolynomial
    source: LatticePolytope


def ehrhart_polynomial(P: LatticePolytope) -> EhrhartPolynomial:
    """Exact degree-d Ehrhart polynomial of a full-dimensional lattice polytope."""
    if not P.is_full_dimensional:
        raise NotFullDimensionalError(
            "the Ehrhart polynomial is computed only for full-dimensional polytopes"
        )
    d = P.ambient_dim
    nodes = list(range(d + 1))
    values = [count_points(P, t) for t in nodes]
    poly = RationalPolynomial.lagrange(nodes, values)
    for t in (d + 1, d + 2):
        expected = count_points(P, t)
        if poly.evaluate(t) != expected:
            raise InternalConsistencyError(
                f"interpolated enumerator disagrees with a fresh count at t={t}: "
                f"{poly.evaluate(t)} != {expected}"
            )
    _check_shape(poly, P)
    return EhrhartPolynomial(poly=poly, source=P)


def _check_shape(poly: RationalPolynomial, P: LatticePolytope) -> None:
    d = P.ambient_dim
    if poly.degree != d:
        raise InternalConsistencyError(
            f"enumerator degree {poly.degree} != ambient dimension {d}"
        )
    if poly.constant_term != 1:
        raise InternalConsistencyError(
            f"enumerator constant term {poly.constant_term} != 1"
        )
    if poly.leading_coefficient != P.volume_d:
        raise InternalConsistencyError(
            f"enumerator leading coefficient {poly.leading_coefficient} "
            f"!= volume {P.volume_d}"
        )
    scale = factorial(d)
    for k, c in enumerate(poly.coeffs):
        if (c * scale).denominator != 1:
            raise InternalConsistencyError(
                f"{d}! * coefficient of t^{k} is not an integer: {c}"
            )


def evaluate(poly: RationalPolynomial, t) -> Fraction:
    """Exact evaluation of a rational polynomial at a rational point."""
    return poly.evaluate(t)


def check_reciprocity(P: LatticePolytope, t_max: int) -> bool:
    """True iff L_P(-t) = (-1)^d * #(interior of tP) for every t in 1..t_max."""
    if t_max < 1:
        raise ValueError("t_max must be a positive integer")
    poly = ehrhart_polynomial(P).poly
    sign = (-1) ** P.ambient_dim
    for t in range(1, t_max + 1):
        if poly.evaluate(-t) != sign * count_points(P, t, interior=True):
            return False
    return True
