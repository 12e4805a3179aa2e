import pytest
from hypothesis import given, settings

from potency.alexander import s3_representations
from potency.complex import make_complex
from potency.errors import Disconnected, ParseError, UnknownBase
from potency.presentation import (
    Presentation,
    abelianization_invariants,
    canonical_cyclic,
    cyclic_reduce,
    edge_path_presentation,
    format_presentation,
    free_reduce,
    invert,
    parse_presentation,
    tietze_simplify,
)
from potency.quotient import barnette_complex, mobius_complex, prism_complex

from strategies import complexes, presentations, simplex_boundary

TREFOIL = Presentation(2, ((1, 2, 1, -2, -1, -2),))


# words

def test_word_helpers():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert cyclic_reduce((-1, 2, 3, 1)) == (2, 3)
    assert invert((1, -2, 3)) == (-3, 2, -1)
    assert canonical_cyclic((2, 1)) == canonical_cyclic((1, 2)) == canonical_cyclic((-2, -1))


def test_presentation_validates_letters():
    with pytest.raises(ValueError):
        Presentation(1, ((2,),))
    with pytest.raises(ValueError):
        Presentation(1, ((0,),))


def test_presentation_str():
    assert str(Presentation(2, ((1, -2),))) == "< g1, g2 | g1 g2^-1 >"


# edge-path groups

def test_hollow_triangle_is_free_on_one():
    P = edge_path_presentation(simplex_boundary(2), base=0)
    assert P.n_generators == 1 and P.relators == ()


def test_tetrahedron_boundary_is_simply_connected():
    s = tietze_simplify(edge_path_presentation(simplex_boundary(3)))
    assert s.presentation.n_generators == 0


def test_barnette_is_simply_connected():
    raw = edge_path_presentation(barnette_complex())
    s = tietze_simplify(raw)
    assert s.presentation == Presentation(0, ())
    assert not s.exhausted


def test_generators_follow_tree():
    # BFS from 0 on the triangle boundary uses edges 01 and 02; 12 is the generator
    P = edge_path_presentation(make_complex([(0, 1), (0, 2), (1, 2)]))
    assert P.n_generators == 1
    # on the filled triangle that single generator is killed by the one relator
    Q = edge_path_presentation(make_complex([(0, 1, 2)]))
    assert Q == Presentation(1, ((1,),))


def test_mobius_group_is_z():
    s = tietze_simplify(edge_path_presentation(mobius_complex()))
    ab = abelianization_invariants(s.presentation)
    assert s.presentation.n_generators == 1 and ab.rank == 1


def test_deterministic():
    assert edge_path_presentation(prism_complex()) == edge_path_presentation(prism_complex())


def test_edge_path_errors():
    with pytest.raises(Disconnected):
        edge_path_presentation(make_complex([(0, 1), (2, 3)]))
    with pytest.raises(UnknownBase):
        edge_path_presentation(simplex_boundary(2), base=9)


def cone(K):
    apex = max(K.vertex_set) + 1
    return make_complex([f + (apex,) for f in K.facets])


@settings(max_examples=60, deadline=None)
@given(complexes(max_vertices=6, max_dim=2))
def test_cones_are_simply_connected(K):
    s = tietze_simplify(edge_path_presentation(cone(K)))
    assert s.presentation.n_generators == 0


# Tietze moves

def test_single_relator_kills():
    assert tietze_simplify(Presentation(1, ((1,),))).presentation == Presentation(0, ())


def test_identification():
    assert tietze_simplify(Presentation(2, ((1, -2),))).presentation == Presentation(1, ())


def test_duplicates_merged_up_to_rotation_and_inverse():
    P = Presentation(2, ((1, 1, 2, 2), (2, 2, 1, 1), (-1, -1, -2, -2)))
    s = tietze_simplify(P).presentation
    assert len(s.relators) == 1


def test_trefoil_left_alone():
    s = tietze_simplify(TREFOIL)
    assert s.presentation == TREFOIL and s.moves == 0


def test_budget_flag():
    raw = edge_path_presentation(barnette_complex())
    s = tietze_simplify(raw, budget=3)
    assert s.exhausted and s.moves == 3
    assert s.presentation.n_generators == raw.n_generators - 3


def hom_count(P):
    return sum(1 for _ in s3_representations(P))


@settings(max_examples=150, deadline=None)
@given(presentations())
def test_tietze_preserves_s3_homomorphism_count(P):
    assert hom_count(tietze_simplify(P).presentation) == hom_count(P)


@settings(max_examples=150, deadline=None)
@given(presentations())
def test_tietze_preserves_abelianization(P):
    a = abelianization_invariants(P, exponents=False)
    b = abelianization_invariants(tietze_simplify(P).presentation, exponents=False)
    assert (a.rank, a.torsion) == (b.rank, b.torsion)


# abelianization

def test_abelianization_examples():
    ab = abelianization_invariants(TREFOIL)
    assert (ab.rank, ab.torsion, ab.exponents) == (1, (), (1, 1))
    assert abelianization_invariants(Presentation(1, ())).rank == 1
    two = abelianization_invariants(Presentation(1, ((1, 1),)))
    assert (two.rank, two.torsion, two.exponents) == (0, (2,), None)


def test_exponents_are_primitive_kernel():
    # a^2 = b^3 abelianizes to Z with a -> 3, b -> 2
    ab = abelianization_invariants(Presentation(2, ((1, 1, -2, -2, -2),)))
    assert ab.rank == 1 and ab.exponents == (3, 2)


@settings(max_examples=100, deadline=None)
@given(presentations())
def test_exponents_kill_every_relator(P):
    ab = abelianization_invariants(P)
    if ab.exponents is not None:
        for r in P.relators:
            assert sum(ab.exponents[abs(x) - 1] * (1 if x > 0 else -1) for x in r) == 0


# text format

def test_presentation_round_trip():
    text = format_presentation(TREFOIL)
    assert text == "gp v1\ngens 2\nr 1 2 1 -2 -1 -2\n"
    assert parse_presentation(text) == TREFOIL
    assert parse_presentation("gp v1\ngens 0\n") == Presentation(0, ())


@pytest.mark.parametrize("text, lineno", [
    ("gp v2\n", 1),
    ("gp v1\ngens x\n", 2),
    ("gp v1\ngens 1\nr 2\n", 3),
    ("gp v1\ngens 1\nr 0\n", 3),
    ("gp v1\ngens 1\ns 1\n", 3),
])
def test_presentation_parse_errors(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert info.value.lineno == lineno
