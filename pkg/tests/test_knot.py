import pytest

from potency.complex import (
    boundary_subcomplex,
    check_closed_3_manifold,
    euler_characteristic,
    f_vector,
    is_closed_surface,
    empty_complex,
    is_connected,
    make_complex,
)
from potency.errors import DimensionOutOfRange, EmptyInput, NotClosed3Manifold, NotSubcomplex
from potency.homology import HomologyGroup, homology_groups
from potency.knot import analyze_knot, knot_complement_complex
from potency.presentation import edge_path_presentation, tietze_simplify
from potency.quotient import barnette_complex, knot_cycle_complex, mobius_complex, prism_complex
from potency.verify import unknot_fixture

Z = HomologyGroup(1)
ZERO = HomologyGroup(0)


@pytest.fixture(scope="module")
def trefoil():
    return analyze_knot(barnette_complex(), knot_cycle_complex())


@pytest.fixture(scope="module")
def complement():
    return knot_complement_complex(barnette_complex(), knot_cycle_complex())


def test_complement_homology(complement):
    assert homology_groups(complement) == [Z, Z, ZERO, ZERO]


def test_complement_is_pure_connected_manifold_with_torus_boundary(complement):
    assert complement.is_pure and complement.dim == 3 and is_connected(complement)
    bd = boundary_subcomplex(complement)
    assert is_closed_surface(bd) and euler_characteristic(bd) == 0
    assert homology_groups(bd) == [Z, HomologyGroup(2), Z]


def test_complement_size(complement):
    # the double subdivision has 19 * 24 * 24 facets; the exterior keeps most of them
    assert f_vector(complement) == [1984, 11488, 17856, 8352]
    assert complement.facets == knot_complement_complex(barnette_complex(), knot_cycle_complex()).facets


def test_trefoil_pipeline(trefoil):
    assert trefoil.simplified.n_generators <= 6
    assert trefoil.abelianization.rank == 1 and trefoil.abelianization.torsion == ()
    assert trefoil.alexander.coefficients() == [1, -1, 1]
    assert abs(trefoil.alexander(1)) == 1
    assert trefoil.s3_nonabelian is True
    assert not trefoil.budget_exhausted


def test_summary_lines(trefoil):
    lines = trefoil.summary_lines()
    assert "alexander 1 -1 1" in lines
    assert "s3_nonabelian true" in lines
    assert "complement homology H0=Z H1=Z H2=0 H3=0" in lines


def test_unknot_control():
    K, L = unknot_fixture()
    assert check_closed_3_manifold(K).ok
    a = analyze_knot(K, L)
    assert a.simplified.n_generators == 1 and a.simplified.relators == ()
    assert a.alexander.coefficients() == [1]
    assert a.s3_nonabelian is False


def test_unknot_complement_is_solid_torus():
    K, L = unknot_fixture()
    C = knot_complement_complex(K, L)
    assert homology_groups(C) == [Z, Z, ZERO, ZERO]
    P = tietze_simplify(edge_path_presentation(C)).presentation
    assert P.n_generators == 1 and P.relators == ()


def test_complement_rejects_bad_input():
    B = barnette_complex()
    with pytest.raises(NotSubcomplex):
        knot_complement_complex(B, make_complex([(0, 4), (4, 8)]))
    with pytest.raises(EmptyInput):
        knot_complement_complex(B, empty_complex())
    with pytest.raises(DimensionOutOfRange):
        knot_complement_complex(B, mobius_complex())
    with pytest.raises(NotClosed3Manifold):
        knot_complement_complex(prism_complex(), make_complex([(0, 1), (0, 2), (1, 2)]))


def test_stage_is_tagged():
    with pytest.raises(NotSubcomplex) as info:
        analyze_knot(barnette_complex(), make_complex([(0, 4)]))
    assert info.value.stage == "complement"


def test_budget_exhaustion_reported():
    a = analyze_knot(*unknot_fixture(), budget=10)
    assert a.budget_exhausted
    assert a.s3_nonabelian is None
    assert any("skipped" in n for n in a.notes)
