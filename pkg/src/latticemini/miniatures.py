"""Horizontal lattice copies, miniature censuses, and the volume-ratio limit.

A horizontal lattice copy of P inside nP is a subset iP + a with integer
scale i >= 1 and integer shift a; it stands for the miniature (iP + a)/n of
resolution n, whose volume is (i/n)^d vol(P). The number of copies with
scale i equals the lattice-point count L_P(n - i), the census total is a
degree-(d+1) polynomial in n obtained from the pyramid over P, and the mean
miniature volume converges to vol(P) / C(2d+1, d). Everything here is exact:
the limit is extracted from interpolated leading coefficients, not floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from . import _linalg as la
from .counting import count_points
from .errors import (
    InternalConsistencyError,
    NotFullDimensionalError,
    ResourceLimitError,
    TheoremViolationError,
    UnsupportedInputError,
)
from .geometry import HalfSpace, LatticePolytope, from_vertices, pyramid
from .ehrhart import ehrhart_polynomial
from .polynomial import RationalPolynomial

MAX_UNION_PARTS = 10


@dataclass(frozen=True)
class CopyCensus:
    """Per-scale counts of horizontal lattice copies of P inside nP.

    volume_sum is the total volume of the corresponding resolution-n
    miniatures: (vol(P) / n^d) * sum_i i^d * per_scale[i].
    """

    dilate: int
    per_scale: dict[int, int]
    total: int
    volume_sum: Fraction


@dataclass(frozen=True)
class MuReport:
    """Finite-resolution ratio sequence with its exact limit.

    bound_constant is the observed constant C with
    |ratio(n) - closed_form| <= C / n over the computed range.
    """

    ratios: list[tuple[int, Fraction]]
    symbolic_limit: Fraction
    closed_form: Fraction
    bound_constant: Fraction


def _require_full_dimensional(P: LatticePolytope, what: str) -> None:
    if not P.is_full_dimensional:
        raise NotFullDimensionalError(f"{what} requires a full-dimensional polytope")


def copies_with_scale(P: LatticePolytope, n: int, i: int) -> int:
    """Number of shifts a with iP + a inside nP; equals L_P(n - i)."""
    _require_full_dimensional(P, "copy counting")
    if not 1 <= i <= n:
        raise ValueError(f"scale factor must satisfy 1 <= i <= n, got i={i}, n={n}")
    return count_points(P, n - i)


def copy_census(P: LatticePolytope, n: int) -> CopyCensus:
    """Census of all horizontal lattice copies of P in nP, keyed by scale."""
    _require_full_dimensional(P, "the copy census")
    if n < 1:
        raise ValueError(f"census resolution must be a positive integer, got {n}")
    d = P.ambient_dim
    per_scale = {i: count_points(P, n - i) for i in range(1, n + 1)}
    total = sum(per_scale.values())
    weighted = sum(i**d * c for i, c in per_scale.items())
    volume_sum = P.volume_d * Fraction(weighted, n**d)
    return CopyCensus(dilate=n, per_scale=per_scale, total=total, volume_sum=volume_sum)


def copy_polynomial(P: LatticePolytope) -> RationalPolynomial:
    """The polynomial H_P with H_P(n) = census total at resolution n.

    Computed as the Ehrhart polynomial of the pyramid over P evaluated at
    t - 1, then verified against explicit census totals. Its constant term
    vanishes and its leading coefficient is vol(P)/(d+1).
    """
    _require_full_dimensional(P, "the copy polynomial")
    d = P.ambient_dim
    poly = ehrhart_polynomial(pyramid(P)).poly.shift_argument(-1)
    for t in range(1, d + 4):
        expected = copy_census(P, t).total
        if poly.evaluate(t) != expected:
            raise InternalConsistencyError(
                f"copy polynomial disagrees with the census at n={t}: "
                f"{poly.evaluate(t)} != {expected}"
            )
    if poly.constant_term != 0:
        raise InternalConsistencyError(
            f"copy polynomial constant term {poly.constant_term} != 0"
        )
    if poly.degree != d + 1 or poly.leading_coefficient != P.volume_d / (d + 1):
        raise InternalConsistencyError(
            "copy polynomial shape mismatch: degree "
            f"{poly.degree}, lead {poly.leading_coefficient}"
        )
    return poly


def mu_ratio(P: LatticePolytope, n: int) -> Fraction:
    """Mean miniature volume at resolution n: volume_sum / total, exactly."""
    census = copy_census(P, n)
    return census.volume_sum / census.total


def numerator_polynomial(P: LatticePolytope) -> RationalPolynomial:
    """The polynomial N with N(n) = n^d * (total miniature volume at n).

    N(n) = vol(P) * sum_{i=0}^{n-1} (n-i)^d L_P(i), of degree 2d+1 with
    leading coefficient d! d! / (2d+1)! * vol(P)^2.
    """
    _require_full_dimensional(P, "the numerator polynomial")
    d = P.ambient_dim
    counts = [count_points(P, i) for i in range(2 * d + 3)]

    def sample(n: int) -> Fraction:
        return P.volume_d * sum((n - i) ** d * counts[i] for i in range(n))

    support = list(range(2 * d + 2))
    poly = RationalPolynomial.lagrange(support, [sample(n) for n in support])
    for n in (2 * d + 2, 2 * d + 3):
        if poly.evaluate(n) != sample(n):
            raise InternalConsistencyError(
                f"numerator polynomial disagrees with a fresh sample at n={n}"
            )
    expected_lead = (
        Fraction(factorial(d) * factorial(d), factorial(2 * d + 1)) * P.volume_d**2
    )
    if poly.degree != 2 * d + 1 or poly.leading_coefficient != expected_lead:
        raise TheoremViolationError(
            f"numerator leading coefficient {poly.leading_coefficient} != "
            f"d!d!/(2d+1)! vol^2 = {expected_lead}"
        )
    return poly


def mu_limit_symbolic(P: LatticePolytope) -> Fraction:
    """Exact limit of the mean miniature volume, from leading coefficients.

    Equals vol(P) / C(2d+1, d); a mismatch with that closed form raises,
    since it would falsify the identity this package exists to check.
    """
    _require_full_dimensional(P, "the symbolic limit")
    d = P.ambient_dim
    numerator = numerator_polynomial(P)
    census_poly = copy_polynomial(P)
    limit = numerator.leading_coefficient / census_poly.leading_coefficient
    closed = P.volume_d / comb(2 * d + 1, d)
    if limit != closed:
        raise TheoremViolationError(
            f"symbolic limit {limit} != closed form vol/C(2d+1,d) = {closed}"
        )
    return limit


def mu_report(P: LatticePolytope, n_max: int) -> MuReport:
    """Ratio sequence for n = 1..n_max plus the exact symbolic limit.

    A lower-dimensional polytope yields the all-zero report: every miniature
    has ambient volume 0.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max}")
    if not P.is_full_dimensional:
        zero = Fraction(0)
        return MuReport(
            ratios=[(n, zero) for n in range(1, n_max + 1)],
            symbolic_limit=zero,
            closed_form=zero,
            bound_constant=zero,
        )
    closed = P.volume_d / comb(2 * P.ambient_dim + 1, P.ambient_dim)
    ratios = [(n, mu_ratio(P, n)) for n in range(1, n_max + 1)]
    bound = max(abs(r - closed) * n for n, r in ratios)
    return MuReport(
        ratios=ratios,
        symbolic_limit=mu_limit_symbolic(P),
        closed_form=closed,
        bound_constant=bound,
    )


def _dedupe_halfspaces(parts) -> list[HalfSpace]:
    seen = {(h.normal, h.offset) for P in parts for h in P.halfspaces}
    return [HalfSpace(n, b) for n, b in sorted(seen)]


def _intersection_vertices(halfspaces, d: int) -> list[tuple[Fraction, ...]]:
    """All extreme points of the (bounded) intersection of the half-spaces.

    A feasible point with d linearly independent tight constraints is a
    vertex, and every vertex arises from some d-subset, so scanning the
    d-subsets is complete.
    """
    vertices = set()
    for subset in combinations(halfspaces, d):
        solution = la.solve([list(h.normal) for h in subset], [h.offset for h in subset])
        if solution is None:
            continue
        if all(h.value(solution) <= h.offset for h in halfspaces):
            vertices.add(solution)
    return sorted(vertices)


def _intersection_polytope(parts, d: int) -> LatticePolytope | None:
    """Intersection of full-dimensional parts; None when empty or lower-dimensional."""
    verts = _intersection_vertices(_dedupe_halfspaces(parts), d)
    if not verts:
        return None
    diffs = [la.vsub(v, verts[0]) for v in verts[1:]]
    if la.rank(diffs) < d:
        return None
    integral = []
    for v in verts:
        for x in v:
            if x.denominator != 1:
                raise UnsupportedInputError(
                    f"intersection has a non-lattice vertex {tuple(map(str, v))}; "
                    "inclusion-exclusion is defined for lattice polytopes only"
                )
        integral.append(tuple(int(x) for x in v))
    return from_vertices(integral)


def mu_inclusion_exclusion(parts) -> Fraction:
    """Inclusion-exclusion value sum_k (-1)^(k-1) sum_{|I|=k} mu(intersection).

    Full-dimensional intersections contribute their symbolic limit; empty or
    lower-dimensional ones contribute 0. The caller asserts the union is
    convex; a volume cross-check turns a violated precondition into an error
    instead of a silently wrong value.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("inclusion-exclusion needs at least one part")
    if len(parts) > MAX_UNION_PARTS:
        raise ResourceLimitError(
            f"inclusion-exclusion over {len(parts)} parts exceeds the guard "
            f"of {MAX_UNION_PARTS}"
        )
    d = parts[0].ambient_dim
    for P in parts:
        if P.ambient_dim != d:
            raise ValueError("all parts must share one ambient dimension")
        _require_full_dimensional(P, "inclusion-exclusion over parts")
    total_mu = Fraction(0)
    total_volume = Fraction(0)
    for k in range(1, len(parts) + 1):
        sign = 1 if k % 2 == 1 else -1
        for subset in combinations(parts, k):
            piece = _intersection_polytope(subset, d)
            if piece is None:
                continue
            total_mu += sign * mu_limit_symbolic(piece)
            total_volume += sign * piece.volume_d
    hull = from_vertices([v for P in parts for v in P.vertices])
    if hull.volume_d != total_volume:
        raise UnsupportedInputError(
            "the union of the parts is not convex: hull volume "
            f"{hull.volume_d} != inclusion-exclusion volume {total_volume}"
        )
    return total_mu
