"""Hypothesis strategies shared by the property suites."""

import itertools

from hypothesis import strategies as st

from potency.complex import make_complex
from potency.presentation import Presentation


def _maximal(sets):
    sets = sorted(set(sets), key=len, reverse=True)
    kept = []
    for s in sets:
        if not any(set(s) < set(t) for t in kept):
            kept.append(s)
    return kept


@st.composite
def complexes(draw, max_vertices=7, max_dim=3, max_facets=8):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    simplex = st.lists(st.integers(0, n - 1), min_size=1, max_size=max_dim + 1, unique=True)
    raw = draw(st.lists(simplex, min_size=1, max_size=max_facets))
    return make_complex(_maximal(tuple(sorted(s)) for s in raw))


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6, bound=6):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    entry = st.integers(-bound, bound)
    return [[draw(entry) for _ in range(n)] for _ in range(m)]


@st.composite
def square_matrices(draw, max_size=6, bound=5):
    n = draw(st.integers(1, max_size))
    entry = st.integers(-bound, bound)
    return [[draw(entry) for _ in range(n)] for _ in range(n)]


@st.composite
def presentations(draw, max_gens=3, max_rels=3, max_len=6):
    n = draw(st.integers(1, max_gens))
    letter = st.integers(1, n).flatmap(lambda g: st.sampled_from((g, -g)))
    rels = draw(st.lists(st.lists(letter, min_size=1, max_size=max_len), max_size=max_rels))
    return Presentation(n, tuple(tuple(r) for r in rels))


def simplex_boundary(n):
    """Boundary of the n-simplex on vertices 0..n."""
    return make_complex(list(itertools.combinations(range(n + 1), n)))
