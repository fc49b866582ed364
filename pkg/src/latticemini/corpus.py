"""Built-in polytopes: CLI presets and the fixed test corpus.

The corpus spans d = 1..3 and deliberately includes a non-simplex non-box
polygon and a tetrahedron whose enumerator has nontrivial coefficient
denominators.
"""

from __future__ import annotations

from .geometry import LatticePolytope, from_vertices


def segment(a: int = 1) -> LatticePolytope:
    return from_vertices([(0,), (a,)])


def triangle() -> LatticePolytope:
    return from_vertices([(0, 0), (1, 0), (0, 1)])


def box(*sides: int) -> LatticePolytope:
    """Axis-aligned box [0, sides[0]] x ... x [0, sides[-1]]."""
    verts = [()]
    for s in sides:
        verts = [v + (x,) for v in verts for x in (0, s)]
    return from_vertices(verts)


def square() -> LatticePolytope:
    return box(1, 1)


def cube3() -> LatticePolytope:
    return box(1, 1, 1)


def simplex(d: int) -> LatticePolytope:
    origin = (0,) * d
    return from_vertices([origin] + [origin[:j] + (1,) + origin[j + 1:] for j in range(d)])


def reeve(r: int = 2) -> LatticePolytope:
    """Tetrahedron (0,0,0), (1,0,0), (0,1,0), (1,1,r); volume r/6."""
    return from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, r)])


def pentagon() -> LatticePolytope:
    """Non-simplex, non-box polygon with volume 5."""
    return from_vertices([(0, 0), (2, 0), (0, 2), (2, 2), (3, 1)])


PRESETS = {
    "triangle": triangle,
    "square": square,
    "cube3": cube3,
    "reeve": reeve,
    "pentagon": pentagon,
}


def preset(name: str) -> LatticePolytope:
    try:
        return PRESETS[name]()
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}"
        ) from None


def full_corpus() -> list[tuple[str, LatticePolytope]]:
    """The fixed corpus used by the invariant and acceptance suites."""
    return [
        ("segment1", segment(1)),
        ("segment2", segment(2)),
        ("triangle", triangle()),
        ("square", square()),
        ("box21", box(2, 1)),
        ("pentagon", pentagon()),
        ("simplex3", simplex(3)),
        ("cube3", cube3()),
        ("reeve", reeve()),
    ]
