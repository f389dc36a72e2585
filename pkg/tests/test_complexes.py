"""Construction, subcomplex, join, link, core, dual and decomposition tests."""

import pytest
from hypothesis import given, settings, strategies as st

from moment_angle.catalog import (
    book,
    bott_base,
    boundary_simplex,
    build,
    cone,
    cross_polytope,
    path,
    polygon,
    projective_bundle_base,
    random_complex,
    simplex,
)
from moment_angle.complexes import (
    PolytopeIncidence,
    SimplicialComplex,
    VertexSet,
    dual_of_polytope,
)
from moment_angle.errors import (
    BadParams,
    EmptyInput,
    EmptySelection,
    MissingVertex,
    NotAFace,
    NotSimple,
    UnknownCatalogEntry,
    VertexBudgetExceeded,
    VertexOutOfRange,
)


def vs(m, *verts):
    return VertexSet.of(m, verts)


def masks(k):
    return {f.mask for f in k.facets}


# -- construction ------------------------------------------------------------------


def test_from_facets_triangle_boundary():
    k = SimplicialComplex.from_facets(3, [[1, 2], [2, 3], [1, 3]])
    assert k.m == 3 and len(k.facets) == 3 and k.dim == 1


def test_from_facets_two_points():
    k = SimplicialComplex.from_facets(2, [[1], [2]])
    assert masks(k) == {0b01, 0b10}


def test_from_facets_prunes_redundant():
    k = SimplicialComplex.from_facets(3, [[1, 2], [1, 2, 3]])
    assert masks(k) == {0b111}


def test_from_facets_errors():
    with pytest.raises(EmptyInput):
        SimplicialComplex.from_facets(2, [])
    with pytest.raises(VertexOutOfRange):
        SimplicialComplex.from_facets(2, [[1, 3]])
    with pytest.raises(MissingVertex):
        SimplicialComplex.from_facets(3, [[1, 2]])
    with pytest.raises(VertexOutOfRange):
        SimplicialComplex.from_facets(64, [list(range(1, 65))])


def test_is_face():
    k = boundary_simplex(2)
    assert k.is_face(vs(3, 1, 2))
    assert not k.is_face(vs(3, 1, 2, 3))
    assert k.is_face(VertexSet.empty(3))


# -- missing faces ------------------------------------------------------------------


def test_missing_faces_examples():
    assert [f.vertices for f in boundary_simplex(2).missing_faces()] == [(1, 2, 3)]
    assert [f.vertices for f in polygon(4).missing_faces()] == [(1, 3), (2, 4)]
    assert simplex(4).missing_faces() == ()


def test_missing_faces_sorted_by_card_then_lex():
    k = SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4], [1, 3]])
    assert [f.vertices for f in k.missing_faces()] == [(2, 4), (1, 3, 4)] or [
        f.vertices for f in k.missing_faces()
    ] == sorted([f.vertices for f in k.missing_faces()], key=lambda t: (len(t), t))


def reconstruct_from_missing_faces(m, mfs):
    """Independent oracle: faces are the subsets containing no missing face."""
    mf_masks = [f.mask for f in mfs]
    faces = [
        mask
        for mask in range(1 << m)
        if all(mf & mask != mf for mf in mf_masks)
    ]
    facets = [a for a in faces if not any(b != a and a & b == a for b in faces)]
    return SimplicialComplex.from_facets(m, [VertexSet(m, f) for f in facets])


def test_missing_faces_determine_complex():
    for k in [polygon(5), cross_polytope(2), book(3), random_complex(6, seed=5)]:
        rebuilt = reconstruct_from_missing_faces(k.m, k.missing_faces())
        assert rebuilt == k
        assert rebuilt.missing_faces() == k.missing_faces()


# -- full subcomplexes ----------------------------------------------------------------


def test_full_subcomplex_examples():
    square = polygon(4)
    two_points = square.full_subcomplex(vs(4, 1, 3))
    assert masks(two_points.complex) == {0b01, 0b10}
    assert two_points.vertices == (1, 3)

    sub = square.full_subcomplex(vs(4, 1, 2, 3))
    assert masks(sub.complex) == {0b011, 0b110}  # the path 1-2-3

    whole = square.full_subcomplex(VertexSet.full(4))
    assert whole.complex == square

    with pytest.raises(EmptySelection):
        square.full_subcomplex(VertexSet.empty(4))


def test_full_subcomplex_transitivity():
    k = random_complex(7, seed=9)
    i_set = vs(7, 1, 2, 4, 6, 7)
    sub_i = k.full_subcomplex(i_set)
    j_set = vs(7, 2, 4, 7)
    sub_j = k.full_subcomplex(j_set)
    # map J into the re-indexed coordinates of K_I
    pos = {v: n + 1 for n, v in enumerate(sub_i.vertices)}
    j_in_i = VertexSet.of(sub_i.complex.m, [pos[v] for v in j_set])
    assert sub_i.complex.full_subcomplex(j_in_i).complex == sub_j.complex


# -- joins ------------------------------------------------------------------------------


def test_join_examples():
    square = boundary_simplex(1).join(boundary_simplex(1))
    assert [f.vertices for f in square.missing_faces()] == [(1, 2), (3, 4)]

    k = polygon(4)
    coned = cone(k)
    assert all(5 in f for f in coned.facets)

    j = boundary_simplex(1).join(boundary_simplex(2))
    assert [f.vertices for f in j.missing_faces()] == [(1, 2), (3, 4, 5)]


def test_join_missing_faces_disjoint_union():
    k1, k2 = polygon(5), cross_polytope(2)
    joined = k1.join(k2)
    expected = [f.vertices for f in k1.missing_faces()] + [
        tuple(v + k1.m for v in f.vertices) for f in k2.missing_faces()
    ]
    assert sorted(
        [f.vertices for f in joined.missing_faces()], key=lambda t: (len(t), t)
    ) == sorted(expected, key=lambda t: (len(t), t))


def test_join_budget():
    big = simplex(40)
    with pytest.raises(VertexBudgetExceeded):
        big.join(simplex(40))


# -- links -------------------------------------------------------------------------------


def test_link_examples():
    square = polygon(4)
    link1 = square.link(vs(4, 1))
    assert masks(link1.complex) == {0b01, 0b10}
    assert link1.vertices == (2, 4)

    assert square.link(VertexSet.empty(4)).complex == square

    edge_link = boundary_simplex(2).link(vs(3, 1, 2))
    assert edge_link.complex.m == 0

    with pytest.raises(NotAFace):
        square.link(vs(4, 1, 3))


def test_link_composition():
    k = random_complex(7, seed=21)
    sigma = None
    for f in k.facets:
        if len(f) >= 2:
            sigma = f.vertices[:2]
            break
    assert sigma is not None
    both = k.link(vs(7, *sigma))
    first = k.link(vs(7, sigma[0]))
    pos = {v: n + 1 for n, v in enumerate(first.vertices)}
    second = first.complex.link(VertexSet.of(first.complex.m, [pos[sigma[1]]]))
    assert second.complex == both.complex


# -- core ---------------------------------------------------------------------------------


def test_core_examples():
    core_simplex = simplex(2).core()
    assert core_simplex.complex.m == 0
    assert core_simplex.cone_vertices.vertices == (1, 2, 3)

    square = polygon(4)
    assert square.core().complex == square
    assert len(square.core().cone_vertices) == 0

    coned = cone(square)
    result = coned.core()
    assert result.cone_vertices.vertices == (5,)
    assert result.complex == square

    # idempotence
    again = result.complex.core()
    assert again.complex == result.complex


# -- polytope duals -------------------------------------------------------------------------


def simplex_polytope(n):
    """n-simplex as a simple polytope: n+1 facets, each vertex misses one."""
    m = n + 1
    entries = [[f for f in range(1, m + 1) if f != skip] for skip in range(1, m + 1)]
    return PolytopeIncidence.of(n, m, entries)


def polygon_polytope(m):
    entries = [[v, v % m + 1] for v in range(1, m + 1)]
    return PolytopeIncidence.of(2, m, entries)


def test_dual_of_polytope_examples():
    assert dual_of_polytope(simplex_polytope(3)) == boundary_simplex(3)

    pentagon = dual_of_polytope(polygon_polytope(5))
    assert pentagon.dim == 1 and len(pentagon.facets) == 5
    assert len(pentagon.missing_faces()) == 5

    prism = simplex_polytope(1).product(polygon_polytope(4))
    dual = dual_of_polytope(prism)
    expected = boundary_simplex(1).join(polygon(4))
    assert dual == expected  # same labeling: interval facets first

    with pytest.raises(NotSimple):
        PolytopeIncidence.of(2, 3, [[1, 2], [2, 3], [1, 2, 3]])


# -- join decomposition -----------------------------------------------------------------------


def rejoin(report):
    out = None
    for factor in report.factors:
        out = factor if out is None else out.join(factor)
    ncone = len(report.cone_vertices)
    if ncone:
        out = simplex(ncone - 1) if out is None else out.join(simplex(ncone - 1))
    order = [v for verts in report.factor_vertices for v in verts]
    order += list(report.cone_vertices.vertices)
    return out.relabel(order)


def brute_force_decomposable(k):
    """Oracle: some bipartition of the non-cone vertices splits the missing faces."""
    mfs = k.missing_face_masks
    rest = ((1 << k.m) - 1) & ~k.cone_vertex_mask()
    bits = [b for b in range(k.m) if rest >> b & 1]
    if len(bits) < 2:
        return False
    for assign in range(1 << (len(bits) - 1)):
        u = 1 << bits[0]
        for i, b in enumerate(bits[1:]):
            if assign >> i & 1:
                u |= 1 << b
        v = rest & ~u
        if v and all(mf & ~u == 0 or mf & ~v == 0 for mf in mfs):
            return True
    return False


def test_join_decomposition_square():
    report = polygon(4).join_decomposition()
    assert [p.vertices for p in report.parts] == [(1, 3), (2, 4)]
    assert len(report.cone_vertices) == 0
    assert not report.is_trivial


def test_join_decomposition_pentagon_indecomposable():
    report = polygon(5).join_decomposition()
    assert report.is_trivial and len(report.parts) == 1
    assert not brute_force_decomposable(polygon(5))


def test_join_decomposition_three_factors():
    k = projective_bundle_base([1, 2, 5])
    report = k.join_decomposition()
    assert sorted(len(p) for p in report.parts) == [2, 3, 5]


def test_join_decomposition_rejoin_roundtrip():
    for k in [polygon(4), cone(polygon(4)), projective_bundle_base([1, 2, 4]), simplex(2)]:
        report = k.join_decomposition()
        assert rejoin(report) == k


def test_join_decomposition_matches_brute_force():
    for seed in range(8):
        k = random_complex(6, seed=seed)
        report = k.join_decomposition()
        nontrivial = len(report.parts) >= 2
        assert nontrivial == brute_force_decomposable(k)


# -- catalog -------------------------------------------------------------------------------------


def test_catalog_builders():
    assert build("polygon", [5]) == polygon(5)
    four = build("cross_polytope", [2])
    assert [f.vertices for f in four.missing_faces()] == [(1, 2), (3, 4)]
    bott = build("bott_base", [1, 1])
    assert [f.vertices for f in bott.missing_faces()] == [(1, 2), (3, 4)]
    with pytest.raises(UnknownCatalogEntry):
        build("dodecahedron", [])
    with pytest.raises(BadParams):
        build("polygon", [2])
    with pytest.raises(BadParams):
        build("polygon", [])


def test_path_is_cone():
    assert path(3).core().cone_vertices.vertices == (2,)


def test_f_h_vectors():
    assert polygon(5).f_vector() == (1, 5, 5)
    assert polygon(5).h_vector() == (1, 3, 1)
    assert boundary_simplex(2).reduced_euler_characteristic() == 0
    assert boundary_simplex(1).reduced_euler_characteristic() == 1


# -- property tests ---------------------------------------------------------------------------------


@st.composite
def small_complexes(draw):
    m = draw(st.integers(min_value=2, max_value=6))
    n_facets = draw(st.integers(min_value=1, max_value=5))
    facets = [
        draw(st.sets(st.integers(min_value=1, max_value=m), min_size=1, max_size=m))
        for _ in range(n_facets)
    ]
    covered = set().union(*facets)
    facets.extend({v} for v in range(1, m + 1) if v not in covered)
    return SimplicialComplex.from_facets(m, facets)


@settings(max_examples=60, deadline=None)
@given(small_complexes())
def test_round_trip_from_facets(k):
    assert SimplicialComplex.from_facets(k.m, k.facets) == k


@settings(max_examples=60, deadline=None)
@given(small_complexes())
def test_missing_face_reconstruction(k):
    rebuilt = reconstruct_from_missing_faces(k.m, k.missing_faces())
    assert rebuilt == k


@settings(max_examples=40, deadline=None)
@given(small_complexes(), small_complexes())
def test_join_missing_faces_property(k1, k2):
    joined = k1.join(k2)
    got = sorted(f.vertices for f in joined.missing_faces())
    expected = sorted(
        [f.vertices for f in k1.missing_faces()]
        + [tuple(v + k1.m for v in f.vertices) for f in k2.missing_faces()]
    )
    assert got == expected


@settings(max_examples=40, deadline=None)
@given(small_complexes())
def test_decomposition_rejoin_property(k):
    assert rejoin(k.join_decomposition()) == k
