import itertools

import pytest
from hypothesis import given, settings

from potency.complex import (
    all_faces,
    barycentric_subdivision,
    boundary_subcomplex,
    check_closed_3_manifold,
    connected_components,
    empty_complex,
    euler_characteristic,
    f_vector,
    faces,
    format_complex,
    full_subcomplex,
    is_closed_surface,
    is_cycle,
    link,
    make_complex,
    orientability,
    parse_complex,
    read_complex,
    write_complex,
)
from potency.errors import (
    DimensionOutOfRange,
    DuplicateVertexInFacet,
    EmptyInput,
    NonMaximalFacet,
    NotPseudomanifold,
    NotPure,
    ParseError,
    SimplexNotInComplex,
    UnknownVertex,
)
from potency.homology import betti_numbers_rational
from potency.quotient import BARNETTE_FACETS, barnette_complex, knot_cycle_complex, mobius_complex, prism_complex

from strategies import complexes, simplex_boundary

TRIANGLE = make_complex([(0, 1, 2)])
TETRA = make_complex([(0, 1, 2, 3)])


# construction

def test_single_triangle():
    assert len(TRIANGLE.vertices) == 3
    assert TRIANGLE.facets == ((0, 1, 2),)
    assert TRIANGLE.dim == 2


def test_barnette_table_builds():
    B = make_complex(BARNETTE_FACETS)
    assert len(B.vertices) == 8 and len(B.facets) == 19 and B.dim == 3


def test_facets_are_sorted_internally():
    K = make_complex([(2, 0, 1), (3, 1)])
    assert K.facets == ((0, 1, 2), (1, 3))


def test_non_maximal_facet_rejected():
    with pytest.raises(NonMaximalFacet):
        make_complex([(0, 1), (0, 1, 2)])


def test_repeated_facet_rejected():
    with pytest.raises(NonMaximalFacet):
        make_complex([(0, 1, 2), (2, 1, 0)])


def test_duplicate_vertex_rejected():
    with pytest.raises(DuplicateVertexInFacet):
        make_complex([(0, 0, 1)])


def test_empty_inputs_rejected():
    with pytest.raises(EmptyInput):
        make_complex([])
    with pytest.raises(EmptyInput):
        make_complex([()])


def test_negative_label_rejected():
    with pytest.raises(ValueError):
        make_complex([(-1, 2)])


# faces and counts

def test_faces_of_triangle():
    assert faces(TRIANGLE, 1) == ((0, 1), (0, 2), (1, 2))


def test_faces_of_barnette():
    B = barnette_complex()
    assert faces(B, 0) == tuple((v,) for v in (0, 1, 2, 3, 8, 9, 10, 11))
    assert len(faces(B, 3)) == 19


def test_faces_dimension_range():
    with pytest.raises(DimensionOutOfRange):
        faces(TRIANGLE, 3)
    with pytest.raises(DimensionOutOfRange):
        faces(TRIANGLE, -1)


def test_f_vectors():
    assert f_vector(TRIANGLE) == [3, 3, 1]
    assert euler_characteristic(TRIANGLE) == 1
    fp = f_vector(prism_complex())
    assert fp[0] == 12 and fp[3] == 19


def test_mobius_f_vector_by_brute_force():
    # oracle: collect edges of the six triangles directly
    tris = mobius_complex().facets
    edges = {e for t in tris for e in itertools.combinations(t, 2)}
    verts = {v for t in tris for v in t}
    assert f_vector(mobius_complex()) == [len(verts), len(edges), len(tris)] == [6, 12, 6]
    assert euler_characteristic(mobius_complex()) == 0


# links and boundaries

def test_link_in_triangle():
    assert link(TRIANGLE, (0,)).facets == ((1, 2),)


def test_link_of_vertex_11_is_sphere():
    lk = link(barnette_complex(), (11,))
    assert is_closed_surface(lk)
    assert euler_characteristic(lk) == 2


def test_link_of_edge_is_cycle():
    assert is_cycle(link(barnette_complex(), (0, 1)))


def test_link_requires_member():
    with pytest.raises(SimplexNotInComplex):
        link(TRIANGLE, (0, 3))


def test_all_barnette_vertex_links_are_surfaces():
    B = barnette_complex()
    for v in B.vertices:
        assert is_closed_surface(link(B, (v,)))


def test_boundary_of_tetrahedron():
    assert boundary_subcomplex(TETRA).facets == simplex_boundary(3).facets


def test_boundary_of_mobius_is_knot_table():
    assert boundary_subcomplex(mobius_complex()).facets == knot_cycle_complex().facets


def test_boundary_of_barnette_is_empty():
    assert boundary_subcomplex(barnette_complex()).facets == ()


def test_boundary_twice_is_empty():
    for K in (TETRA, prism_complex()):
        assert boundary_subcomplex(boundary_subcomplex(K)).facets == ()


def test_boundary_requires_pure():
    with pytest.raises(NotPure):
        boundary_subcomplex(make_complex([(0, 1, 2), (2, 3)]))


# subdivision and full subcomplexes

def test_subdivide_edge():
    sd = barycentric_subdivision(make_complex([(0, 1)]))
    assert f_vector(sd) == [3, 2]
    assert is_connected_path(sd)


def is_connected_path(K):
    degrees = {v: sum(v in f for f in K.facets) for v in K.vertices}
    return sorted(degrees.values()) == [1, 1, 2] and len(connected_components(K)) == 1


def test_subdivide_barnette_facet_count():
    assert len(barycentric_subdivision(barnette_complex()).facets) == 19 * 24


def test_subdivision_labels_are_lexicographic_ranks():
    sd, labels = barycentric_subdivision(TRIANGLE, return_labels=True)
    assert list(labels) == sorted(all_faces(TRIANGLE))
    assert list(labels.values()) == list(range(7))
    assert sd.vertex_set == set(range(7))


@pytest.mark.parametrize("K", [TRIANGLE, simplex_boundary(3), mobius_complex(), barnette_complex()],
                         ids=["triangle", "tetra_boundary", "mobius", "barnette"])
def test_subdivision_preserves_rational_betti(K):
    assert betti_numbers_rational(barycentric_subdivision(K)) == betti_numbers_rational(K)


def test_full_subcomplex():
    assert full_subcomplex(TRIANGLE, {0, 1}).facets == ((0, 1),)
    assert full_subcomplex(TRIANGLE, {0, 1, 2}) == TRIANGLE
    sub = full_subcomplex(barnette_complex(), {0, 1, 2, 8, 9, 10})
    assert all(e in sub for e in knot_cycle_complex().facets)


def test_full_subcomplex_unknown_vertex():
    with pytest.raises(UnknownVertex):
        full_subcomplex(TRIANGLE, {0, 7})


@settings(max_examples=50, deadline=None)
@given(complexes())
def test_full_subcomplex_idempotent(K):
    V = sorted(K.vertex_set)[: max(1, len(K.vertex_set) // 2)]
    once = full_subcomplex(K, V)
    assert full_subcomplex(once, V) == once


@settings(max_examples=100, deadline=None)
@given(complexes())
def test_euler_characteristic_matches_betti(K):
    betti = betti_numbers_rational(K)
    assert euler_characteristic(K) == sum((-1) ** d * b for d, b in enumerate(betti))


# orientability and manifold checks

def test_orientability_examples():
    assert orientability(simplex_boundary(3)).orientable
    assert not orientability(mobius_complex()).orientable
    o = orientability(barnette_complex())
    assert o.orientable
    assert set(o.facet_signs) == set(barnette_complex().facets)
    assert set(o.facet_signs.values()) <= {1, -1}


def test_orientability_rejects_branching():
    with pytest.raises(NotPseudomanifold):
        orientability(make_complex([(0, 1, 2), (0, 1, 3), (0, 1, 4)]))


def test_manifold_check_on_barnette():
    report = check_closed_3_manifold(barnette_complex())
    assert report.ok
    assert [n for n, _, _ in report.entries] == [
        "pure_dim3", "triangles_in_two_facets", "edge_links_cycles", "vertex_links_spheres", "connected"]


def test_manifold_check_fails_on_prism_and_tetrahedron():
    failed = {n for n, _, _ in check_closed_3_manifold(prism_complex()).failures()}
    assert "triangles_in_two_facets" in failed
    assert not check_closed_3_manifold(TETRA).ok


def test_manifold_check_fails_on_wrong_dimension():
    assert not check_closed_3_manifold(TRIANGLE).ok


def test_manifold_check_fails_on_two_spheres():
    S = simplex_boundary(4)
    shifted = [tuple(v + 10 for v in f) for f in S.facets]
    report = check_closed_3_manifold(make_complex(list(S.facets) + shifted))
    assert [n for n, _, _ in report.failures()] == ["connected"]


# text format

def test_round_trip(tmp_path):
    for K in (prism_complex(), barnette_complex(), mobius_complex(), knot_cycle_complex()):
        path = tmp_path / "k.sc"
        write_complex(K, path)
        assert read_complex(path) == K
        assert path.read_bytes() == format_complex(K).encode()


def test_format_layout():
    assert format_complex(TRIANGLE) == "sc v1\ndim 2\nf 0 1 2\n"


def test_parse_comments_and_blanks():
    K = parse_complex("# a comment\nsc v1\n\ndim 1\n# edge\nf 0 1\n")
    assert K.facets == ((0, 1),)


def test_parse_empty_complex():
    assert parse_complex("sc v1\ndim -1\n") == empty_complex()


@pytest.mark.parametrize("text, lineno", [
    ("sc v1\ndim 2\nf 1 1 2\n", 3),
    ("sc v2\ndim 2\n", 1),
    ("sc v1\ndim x\n", 2),
    ("sc v1\ndim 1\nf 0 a\n", 3),
    ("sc v1\ndim 1\nf 0 1 2\n", 3),
    ("sc v1\ndim 1\nf 2 1\n", 3),
    ("sc v1\ndim 1\nf -1 2\n", 3),
])
def test_parse_errors_carry_line(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_complex(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}:")


def test_parse_rejects_non_maximal():
    with pytest.raises(ParseError):
        parse_complex("sc v1\ndim 2\nf 0 1\nf 0 1 2\n")


def test_parse_rejects_dim_mismatch():
    with pytest.raises(ParseError):
        parse_complex("sc v1\ndim 2\nf 0 1\n")
