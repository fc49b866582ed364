"""Exact convex lattice polytopes.

A polytope is built from integer vertices only. Construction computes the
minimal vertex set, the affine dimension, the facet half-spaces (when the
polytope is full-dimensional in its ambient space) and the exact volume by
simplicial decomposition. Everything is immutable and arithmetic is exact:
arbitrary-precision integers and Fractions, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd, lcm

from . import _linalg as la
from .errors import ConstructionError, NotFullDimensionalError


@dataclass(frozen=True)
class HalfSpace:
    """Closed half-space {x : normal . x <= offset} with primitive integer normal."""

    normal: tuple[int, ...]
    offset: int

    def value(self, point) -> Fraction | int:
        return la.dot(self.normal, point)

    def holds(self, point, strict: bool = False) -> bool:
        v = self.value(point)
        return v < self.offset if strict else v <= self.offset


@dataclass(frozen=True)
class LatticePolytope:
    """Convex lattice polytope with eagerly derived exact data.

    vertices    lex-sorted minimal vertex set (extreme points only)
    halfspaces  facet half-spaces; empty when dim < ambient_dim
    dim         affine dimension (<= ambient_dim)
    volume_d    exact ambient-dimensional volume; 0 when dim < ambient_dim
    """

    ambient_dim: int
    vertices: tuple[tuple[int, ...], ...]
    halfspaces: tuple[HalfSpace, ...]
    dim: int
    volume_d: Fraction

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def __repr__(self) -> str:  # the default dataclass repr is unreadably long
        return (
            f"LatticePolytope(ambient_dim={self.ambient_dim}, dim={self.dim}, "
            f"vertices={len(self.vertices)}, volume={self.volume_d})"
        )


def _validated_points(points) -> list[tuple[int, ...]]:
    pts = [tuple(p) for p in points]
    if not pts:
        raise ConstructionError("a polytope needs at least one vertex")
    d = len(pts[0])
    if d == 0:
        raise ConstructionError("ambient dimension must be at least 1")
    for i, p in enumerate(pts):
        if len(p) != d:
            raise ConstructionError(
                f"vertex {i} has {len(p)} coordinates, expected {d}"
            )
        for j, x in enumerate(p):
            # bool is an int subclass; reject it explicitly
            if not isinstance(x, int) or isinstance(x, bool):
                raise ConstructionError(
                    f"vertex {i}, coordinate index {j}: {x!r} is not an integer"
                )
    return pts


def _primitive(normal: tuple[int, ...], offset: int) -> tuple[tuple[int, ...], int]:
    g = 0
    for c in normal:
        g = gcd(g, abs(c))
    # g divides the offset because the hyperplane passes through a lattice point
    return tuple(c // g for c in normal), offset // g


def _facet_halfspaces(points, k: int) -> list[HalfSpace]:
    """All facet half-spaces of the hull of integer `points` spanning R^k.

    Scans the k-subsets of points, forms the spanning hyperplane exactly and
    keeps it iff every point lies weakly on one side.
    """
    found = set()
    for idxs in combinations(range(len(points)), k):
        base = points[idxs[0]]
        diffs = [la.vsub(points[i], base) for i in idxs[1:]]
        normal = la.hyperplane_normal(diffs, k)
        if normal is None:
            continue
        offset = la.dot(normal, base)
        above = below = False
        for p in points:
            v = la.dot(normal, p)
            if v > offset:
                above = True
            elif v < offset:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            normal, offset = tuple(-c for c in normal), -offset
        found.add(_primitive(normal, offset))
    return [HalfSpace(n, b) for n, b in sorted(found)]


def _vertex_indices(points, halfspaces, k: int) -> list[int]:
    """Indices of points whose tight facet normals span R^k (the extreme points)."""
    out = []
    for i, p in enumerate(points):
        tight = [h.normal for h in halfspaces if la.dot(h.normal, p) == h.offset]
        if len(tight) >= k and la.rank(tight) == k:
            out.append(i)
    return out


def _integer_chart(points, r: int) -> list[tuple[int, ...]]:
    """Affine coordinates of `points` (affine rank r) scaled to integers.

    The chart is an affine isomorphism onto its image, so hull combinatorics
    (faces, extreme points) are preserved exactly.
    """
    p0 = points[0]
    diffs = [la.vsub(p, p0) for p in points[1:]]
    basis_idx, pivot_cols = la.row_basis(diffs)
    basis = [diffs[i] for i in basis_idx]
    system = [[basis[j][c] for j in range(r)] for c in pivot_cols]
    coords = []
    for p in points:
        w = la.vsub(p, p0)
        alpha = la.solve(system, [w[c] for c in pivot_cols])
        coords.append(alpha)
    den = 1
    for alpha in coords:
        for a in alpha:
            den = lcm(den, a.denominator)
    return [tuple(int(a * den) for a in alpha) for alpha in coords]


def _triangulate(points, k: int) -> list[tuple[int, ...]]:
    """Index (k+1)-tuples of simplices tiling the hull of full-rank `points`.

    Star triangulation: cone the lex-smallest vertex over recursively
    triangulated facets that do not contain it.
    """
    if k == 0:
        return [(0,)]
    halfspaces = _facet_halfspaces(points, k)
    vidx = _vertex_indices(points, halfspaces, k)
    if len(vidx) == k + 1:
        return [tuple(vidx)]
    apex = min(vidx, key=lambda i: points[i])
    simplices = []
    for h in halfspaces:
        if la.dot(h.normal, points[apex]) == h.offset:
            continue
        face = [i for i in vidx if la.dot(h.normal, points[i]) == h.offset]
        chart = _integer_chart([points[i] for i in face], k - 1)
        for sub in _triangulate(chart, k - 1):
            simplices.append((apex,) + tuple(face[j] for j in sub))
    return simplices


def _volume_by_triangulation(vertices, d: int) -> Fraction:
    total = 0
    for simplex in _triangulate(list(vertices), d):
        base = vertices[simplex[0]]
        rows = [la.vsub(vertices[i], base) for i in simplex[1:]]
        total += abs(la.det(rows))
    return Fraction(total, factorial(d))


def from_vertices(points) -> LatticePolytope:
    """Convex hull of integer points as a LatticePolytope.

    Non-extreme input points are discarded; half-spaces are derived when the
    hull is full-dimensional; dim and volume are computed exactly.
    """
    pts = _validated_points(points)
    d = len(pts[0])
    uniq = sorted(set(pts))
    if len(uniq) == 1:
        return LatticePolytope(d, (uniq[0],), (), 0, Fraction(0))
    diffs = [la.vsub(p, uniq[0]) for p in uniq[1:]]
    r = la.rank(diffs)
    if r == d:
        halfspaces = _facet_halfspaces(uniq, d)
        vidx = _vertex_indices(uniq, halfspaces, d)
        verts = tuple(uniq[i] for i in vidx)
        vol = _volume_by_triangulation(verts, d)
        return LatticePolytope(d, verts, tuple(halfspaces), d, vol)
    chart = _integer_chart(uniq, r)
    chart_halfspaces = _facet_halfspaces(chart, r)
    vidx = _vertex_indices(chart, chart_halfspaces, r)
    verts = tuple(uniq[i] for i in vidx)
    return LatticePolytope(d, verts, (), r, Fraction(0))


def dilate(P: LatticePolytope, k: int) -> LatticePolytope:
    """The dilate kP about the origin, k a nonnegative integer."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError(f"dilation factor must be a nonnegative integer, got {k!r}")
    d = P.ambient_dim
    if k == 0:
        return LatticePolytope(d, ((0,) * d,), (), 0, Fraction(0))
    verts = tuple(la.vscale(v, k) for v in P.vertices)
    halfspaces = tuple(HalfSpace(h.normal, k * h.offset) for h in P.halfspaces)
    return LatticePolytope(d, verts, halfspaces, P.dim, P.volume_d * k**d)


def translate(P: LatticePolytope, a) -> LatticePolytope:
    """The translate P + a by an integer vector a."""
    shift = tuple(a)
    if len(shift) != P.ambient_dim:
        raise ValueError(
            f"translation vector has length {len(shift)}, expected {P.ambient_dim}"
        )
    for x in shift:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"translation vector must be integral, got {x!r}")
    verts = tuple(la.vadd(v, shift) for v in P.vertices)
    halfspaces = tuple(
        HalfSpace(h.normal, h.offset + la.dot(h.normal, shift)) for h in P.halfspaces
    )
    return LatticePolytope(P.ambient_dim, verts, halfspaces, P.dim, P.volume_d)


def contains(P: LatticePolytope, point, strict: bool = False) -> bool:
    """Exact membership of a rational point, interior membership when strict."""
    if not P.is_full_dimensional:
        raise NotFullDimensionalError(
            "containment tests require a full-dimensional polytope"
        )
    x = tuple(point)
    if len(x) != P.ambient_dim:
        raise ValueError(f"point has length {len(x)}, expected {P.ambient_dim}")
    return all(h.holds(x, strict) for h in P.halfspaces)


def volume(P: LatticePolytope) -> Fraction:
    """Exact d-dimensional volume; 0 when dim < ambient_dim."""
    return P.volume_d


def pyramid(P: LatticePolytope) -> LatticePolytope:
    """Pyramid over P in one higher dimension with apex (0, ..., 0, 1)."""
    d = P.ambient_dim
    apex = (0,) * d + (1,)
    return from_vertices([v + (0,) for v in P.vertices] + [apex])


def to_json_dict(P: LatticePolytope) -> dict:
    """JSON-ready document: vertices plus derived half-spaces and volume."""
    doc: dict = {"vertices": [list(v) for v in P.vertices]}
    if P.halfspaces:
        doc["halfspaces"] = [
            {"normal": list(h.normal), "offset": h.offset} for h in P.halfspaces
        ]
    doc["volume"] = str(P.volume_d)
    return doc
