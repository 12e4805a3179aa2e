"""Simplicial complexes, homology, knot groups and exact geometry for the
three-point subsets of the circle."""

from .alexander import LaurentPolynomial, alexander_polynomial, exists_nonabelian_s3_rep
from .complex import (
    SimplicialComplex,
    all_faces,
    barycentric_subdivision,
    boundary_subcomplex,
    check_closed_3_manifold,
    euler_characteristic,
    f_vector,
    faces,
    full_subcomplex,
    link,
    make_complex,
    orientability,
    parse_complex,
    format_complex,
    read_complex,
    write_complex,
)
from .errors import *  # noqa: F401,F403
from .homology import HomologyGroup, boundary_matrix, homology_groups, smith_normal_form
from .knot import analyze_knot, knot_complement_complex
from .presentation import (
    Presentation,
    abelianization_invariants,
    edge_path_presentation,
    tietze_simplify,
)
from .quotient import (
    VertexMap,
    apply_vertex_map,
    barnette_complex,
    is_isomorphic,
    knot_cycle_complex,
    mobius_complex,
    prism_complex,
    q_map,
)
from .verify import CheckReport, run_verification

__version__ = "0.1.0"
