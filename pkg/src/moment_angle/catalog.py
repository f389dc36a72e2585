"""Catalog of standard complexes: spheres, polygons, joins of simplex
boundaries, deliberately non-Gorenstein examples, and seeded random complexes.

Every builder is deterministic; ``build(name, params)`` dispatches by name.
"""

from __future__ import annotations

import random
from typing import Callable, Sequence

from .complexes import SimplicialComplex
from .errors import BadParams, UnknownCatalogEntry


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on n + 1 vertices; simplex(0) is a point."""
    if n < 0:
        raise BadParams("simplex dimension must be >= 0")
    return SimplicialComplex.from_facets(n + 1, [range(1, n + 2)])


def boundary_simplex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex: the minimal triangulation of S^(n-1)."""
    if n < 1:
        raise BadParams("boundary_simplex needs n >= 1")
    m = n + 1
    facets = [[v for v in range(1, m + 1) if v != skip] for skip in range(1, m + 1)]
    return SimplicialComplex.from_facets(m, facets)


def polygon(m: int) -> SimplicialComplex:
    """The m-cycle 1-2-...-m-1 (for m >= 4; polygon(3) is boundary_simplex(2))."""
    if m < 3:
        raise BadParams("polygon needs m >= 3")
    if m == 3:
        return boundary_simplex(2)
    facets = [[v, v % m + 1] for v in range(1, m + 1)]
    return SimplicialComplex.from_facets(m, facets)


def cross_polytope(n: int) -> SimplicialComplex:
    """Join of n copies of two points: S^(n-1) with 2n vertices."""
    if n < 1:
        raise BadParams("cross_polytope needs n >= 1")
    out = boundary_simplex(1)
    for _ in range(n - 1):
        out = out.join(boundary_simplex(1))
    return out


def bott_base(heights: Sequence[int]) -> SimplicialComplex:
    """Dual of a product of simplices: the join of their boundaries."""
    if not heights or any(h < 1 for h in heights):
        raise BadParams("bott_base needs a nonempty list of heights >= 1")
    out = boundary_simplex(heights[0])
    for h in heights[1:]:
        out = out.join(boundary_simplex(h))
    return out


def prism_dual() -> SimplicialComplex:
    """Dual of the triangular prism (interval times triangle)."""
    return boundary_simplex(1).join(boundary_simplex(2))


def projective_bundle_base(params: Sequence[int]) -> SimplicialComplex:
    """Dual of (product of simplices) x polygon: join of simplex boundaries
    with a polygon. The last parameter is the polygon size (>= 3); the rest
    are simplex dimensions."""
    if len(params) < 2:
        raise BadParams("projective_bundle_base needs heights plus a polygon size")
    *heights, gon = params
    out = bott_base(heights)
    return out.join(polygon(gon))


def cone(k: SimplicialComplex) -> SimplicialComplex:
    """Cone over K: join with a point; the apex is the last vertex."""
    return k.join(simplex(0))


def path(m: int) -> SimplicialComplex:
    """The path 1-2-...-m."""
    if m < 1:
        raise BadParams("path needs m >= 1")
    if m == 1:
        return simplex(0)
    return SimplicialComplex.from_facets(m, [[v, v + 1] for v in range(1, m)])


def book(k: int) -> SimplicialComplex:
    """k triangles glued along the common edge {1, 2}.

    Equals (edge) * (k points), so it is Gorenstein exactly when k <= 2.
    """
    if k < 1:
        raise BadParams("book needs k >= 1")
    return SimplicialComplex.from_facets(k + 2, [[1, 2, 2 + i] for i in range(1, k + 1)])


def chorded_polygon(m: int) -> SimplicialComplex:
    """m-cycle plus the chord {1, 3}; never a sphere, hence not Gorenstein."""
    if m < 4:
        raise BadParams("chorded_polygon needs m >= 4")
    facets = [[v, v % m + 1] for v in range(1, m + 1)] + [[1, 3]]
    return SimplicialComplex.from_facets(m, facets)


def disjoint_points(k: int) -> SimplicialComplex:
    """k isolated vertices; Gorenstein* only for k = 2."""
    if k < 1:
        raise BadParams("disjoint_points needs k >= 1")
    return SimplicialComplex.from_facets(k, [[v] for v in range(1, k + 1)])


def disjoint_edges(k: int) -> SimplicialComplex:
    """k pairwise disjoint edges; not Gorenstein for k >= 2."""
    if k < 1:
        raise BadParams("disjoint_edges needs k >= 1")
    return SimplicialComplex.from_facets(2 * k, [[2 * i + 1, 2 * i + 2] for i in range(k)])


def edge_point() -> SimplicialComplex:
    """One edge plus an isolated vertex: the smallest non-Gorenstein example."""
    return SimplicialComplex.from_facets(3, [[1, 2], [3]])


def random_complex(m: int, seed: int) -> SimplicialComplex:
    """Seeded random complex on m vertices (uncovered singletons added as facets)."""
    if m < 2:
        raise BadParams("random_complex needs m >= 2")
    rng = random.Random(seed)
    count = rng.randint(2, m + 2)
    facets: list[list[int]] = []
    for _ in range(count):
        size = rng.randint(2, max(2, m - 1))
        facets.append(sorted(rng.sample(range(1, m + 1), size)))
    covered = {v for f in facets for v in f}
    facets.extend([v] for v in range(1, m + 1) if v not in covered)
    return SimplicialComplex.from_facets(m, facets)


_BUILDERS: dict[str, tuple[Callable, str, str]] = {
    # name -> (builder over an int-list, params help, description)
    "simplex": (lambda p: simplex(*p), "n", "full simplex on n+1 vertices"),
    "boundary_simplex": (
        lambda p: boundary_simplex(*p),
        "n",
        "boundary of the n-simplex, the minimal S^(n-1)",
    ),
    "polygon": (lambda p: polygon(*p), "m", "the m-cycle (m >= 3)"),
    "cross_polytope": (
        lambda p: cross_polytope(*p),
        "n",
        "join of n copies of two points: S^(n-1) on 2n vertices",
    ),
    "bott_base": (
        lambda p: bott_base(p),
        "n1 n2 ...",
        "dual of a product of simplices (join of simplex boundaries)",
    ),
    "prism_dual": (
        lambda p: prism_dual(),
        "",
        "dual of the triangular prism: join of two points and a triangle boundary",
    ),
    "projective_bundle_base": (
        lambda p: projective_bundle_base(p),
        "n1 ... nh m",
        "dual of (product of simplices) x m-gon",
    ),
    "path": (lambda p: path(*p), "m", "path on m vertices (a cone for m >= 2)"),
    "book": (lambda p: book(*p), "k", "k triangles sharing an edge; non-Gorenstein for k >= 3"),
    "chorded_polygon": (
        lambda p: chorded_polygon(*p),
        "m",
        "m-cycle plus a chord; non-Gorenstein",
    ),
    "disjoint_points": (lambda p: disjoint_points(*p), "k", "k isolated vertices"),
    "disjoint_edges": (lambda p: disjoint_edges(*p), "k", "k pairwise disjoint edges"),
    "edge_point": (lambda p: edge_point(), "", "an edge plus a point; non-Gorenstein"),
    "random": (
        lambda p: random_complex(*p),
        "m seed",
        "seeded random complex on m vertices",
    ),
}


def build(name: str, params: Sequence[int] = ()) -> SimplicialComplex:
    """Build a catalog complex by name; raises UnknownCatalogEntry / BadParams."""
    try:
        builder, _, _ = _BUILDERS[name]
    except KeyError:
        raise UnknownCatalogEntry(
            f"unknown catalog entry {name!r}; known: {', '.join(sorted(_BUILDERS))}"
        ) from None
    try:
        return builder(list(params))
    except BadParams:
        raise
    except (TypeError, ValueError) as exc:
        raise BadParams(f"bad parameters {list(params)} for {name!r}: {exc}") from None


def inventory() -> list[tuple[str, str, str]]:
    """(name, params, description) rows for the catalog listing."""
    return [(name, params, desc) for name, (_, params, desc) in sorted(_BUILDERS.items())]


def acceptance_catalog() -> list[tuple[str, SimplicialComplex]]:
    """The named test corpus: >= 40 complexes with m <= 8.

    Polygons 3..8, simplex boundaries 1..4, cross-polytopes, joins, cones,
    deliberate non-Gorenstein examples, and five seeded random complexes for
    each m in 4..8.
    """
    entries: list[tuple[str, SimplicialComplex]] = []
    for m in range(3, 9):
        entries.append((f"polygon({m})", polygon(m)))
    for n in range(1, 5):
        entries.append((f"boundary_simplex({n})", boundary_simplex(n)))
    for n in (2, 3):
        entries.append((f"cross_polytope({n})", cross_polytope(n)))
    entries.append(("join(polygon(4), boundary_simplex(1))", polygon(4).join(boundary_simplex(1))))
    entries.append(("join(polygon(5), boundary_simplex(1))", polygon(5).join(boundary_simplex(1))))
    entries.append(("prism_dual()", prism_dual()))
    entries.append(("join(polygon(3), polygon(3))", polygon(3).join(polygon(3))))
    entries.append(("cone(polygon(4))", cone(polygon(4))))
    entries.append(("cone(polygon(5))", cone(polygon(5))))
    entries.append(("cone(boundary_simplex(2))", cone(boundary_simplex(2))))
    entries.append(("simplex(3)", simplex(3)))
    for name, k in non_gorenstein_examples():
        if k.m <= 8:
            entries.append((name, k))
    for m in range(4, 9):
        for s in range(5):
            entries.append((f"random({m},{s})", random_complex(m, seed=1729 + 97 * m + s)))
    return entries


def non_gorenstein_examples() -> list[tuple[str, SimplicialComplex]]:
    """Ten deliberately non-Gorenstein complexes (over every field)."""
    return [
        ("edge_point()", edge_point()),
        ("disjoint_points(3)", disjoint_points(3)),
        ("disjoint_points(4)", disjoint_points(4)),
        ("disjoint_edges(2)", disjoint_edges(2)),
        ("disjoint_edges(3)", disjoint_edges(3)),
        ("book(3)", book(3)),
        ("book(4)", book(4)),
        ("chorded_polygon(4)", chorded_polygon(4)),
        ("chorded_polygon(5)", chorded_polygon(5)),
        ("chorded_polygon(6)", chorded_polygon(6)),
    ]


def gorenstein_star_examples() -> list[tuple[str, SimplicialComplex]]:
    """Named Gorenstein* catalog entries (spheres and their joins), m <= 8."""
    out: list[tuple[str, SimplicialComplex]] = []
    for m in range(3, 9):
        out.append((f"polygon({m})", polygon(m)))
    for n in range(1, 5):
        out.append((f"boundary_simplex({n})", boundary_simplex(n)))
    for n in (2, 3):
        out.append((f"cross_polytope({n})", cross_polytope(n)))
    out.append(("join(polygon(4), boundary_simplex(1))", polygon(4).join(boundary_simplex(1))))
    out.append(("prism_dual()", prism_dual()))
    out.append(("join(polygon(3), polygon(3))", polygon(3).join(polygon(3))))
    return out
