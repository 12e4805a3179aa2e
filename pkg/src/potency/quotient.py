"""Vertex-map quotients, isomorphism search and the concrete tables.

The constructors at the bottom return the triangulated prism, the
8-vertex Barnette sphere, the Moebius band of two-point subsets and its
boundary circle, exactly as tabulated (facet order does not matter; the
complex sorts them).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType

from .complex import SimplicialComplex, _maximalize, f_vector, link, make_complex
from .errors import DegenerateFacet, ParseError, UnknownVertex


class VertexMap:
    """Total map between finite sets of vertex labels."""

    def __init__(self, entries):
        entries = dict(entries)
        for k, v in entries.items():
            if not isinstance(k, int) or not isinstance(v, int) or k < 0 or v < 0:
                raise ValueError(f"bad vertex map entry {k!r} -> {v!r}")
        self._entries = MappingProxyType(dict(sorted(entries.items())))

    @classmethod
    def identity(cls, labels):
        return cls({v: v for v in labels})

    @property
    def domain(self):
        return frozenset(self._entries)

    def items(self):
        return self._entries.items()

    def __call__(self, v):
        try:
            return self._entries[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} outside the map's domain") from None

    def __getitem__(self, v):
        return self(v)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return isinstance(other, VertexMap) and dict(self._entries) == dict(other._entries)

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        return f"VertexMap({dict(self._entries)})"

    def then(self, other: VertexMap) -> VertexMap:
        """The composite ``other o self``."""
        return VertexMap({k: other(v) for k, v in self.items()})


def apply_vertex_map(K: SimplicialComplex, f: VertexMap, return_facet_map: bool = False):
    """Image complex of ``K`` under a vertex map.

    Raises :class:`DegenerateFacet` if some facet loses a vertex.  The
    image is re-maximalized; with ``return_facet_map`` the dictionary
    from each facet of ``K`` to its image simplex is returned as well.
    """
    missing = K.vertex_set - f.domain
    if missing:
        raise UnknownVertex(f"map undefined on vertices {sorted(missing)}")
    image = {}
    for facet in K.facets:
        img = tuple(sorted({f(v) for v in facet}))
        if len(img) != len(facet):
            raise DegenerateFacet(f"facet {facet} collapses to {img}")
        image[facet] = img
    result = _maximalize(image.values())
    if return_facet_map:
        return result, image
    return result


def _vertex_signature(K, v):
    return (len(K._facets_at_vertex.get(v, ())), tuple(f_vector(link(K, (v,)))))


def is_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex):
    """A vertex bijection carrying facets of ``K1`` onto facets of ``K2``, or None.

    Backtracking over vertices of ``K1`` in label order; candidates must
    share the facet degree and the f-vector of the vertex link.
    """
    if len(K1.vertex_set) != len(K2.vertex_set) or len(K1.facets) != len(K2.facets):
        return None
    if K1.dim != K2.dim or Counter(map(len, K1.facets)) != Counter(map(len, K2.facets)):
        return None
    if not K1.facets:
        return {}
    sig1 = {v: _vertex_signature(K1, v) for v in K1.vertices}
    sig2 = {v: _vertex_signature(K2, v) for v in K2.vertices}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None

    target = set(K2.facets)
    order = list(K1.vertices)
    position = {v: i for i, v in enumerate(order)}
    # facets whose last vertex (in search order) is v get checked when v is placed
    closing = {v: [] for v in order}
    for facet in K1.facets:
        closing[max(facet, key=position.__getitem__)].append(facet)

    mapping = {}
    used = set()

    def search(k):
        if k == len(order):
            return True
        v = order[k]
        for w in K2.vertices:
            if w in used or sig2[w] != sig1[v]:
                continue
            mapping[v] = w
            used.add(w)
            if all(tuple(sorted(mapping[u] for u in facet)) in target for facet in closing[v]):
                if search(k + 1):
                    return True
            del mapping[v]
            used.discard(w)
        return False

    if search(0):
        return dict(mapping)
    return None


def is_face_subcomplex(small: SimplicialComplex, big: SimplicialComplex) -> bool:
    return all(f in big for f in small.facets)


# text format for vertex maps ---------------------------------------------

def format_vertex_map(f: VertexMap) -> str:
    return "vm v1\n" + "".join(f"m {k} {v}\n" for k, v in f.items())


def parse_vertex_map(text: str) -> VertexMap:
    seen_header = False
    entries = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not seen_header:
            if tokens != ["vm", "v1"]:
                raise ParseError(f"expected header 'vm v1', got {line!r}", lineno)
            seen_header = True
            continue
        if len(tokens) != 3 or tokens[0] != "m":
            raise ParseError(f"expected 'm <src> <dst>', got {line!r}", lineno)
        try:
            src, dst = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if src < 0 or dst < 0:
            raise ParseError("labels must be non-negative", lineno)
        if src in entries:
            raise ParseError(f"vertex {src} mapped twice", lineno)
        entries[src] = dst
    if not seen_header:
        raise ParseError("missing header")
    return VertexMap(entries)


# the tables ---------------------------------------------------------------

PRISM_FACETS = (
    (4, 5, 7, 9), (5, 6, 7, 10), (4, 6, 7, 8),
    (4, 7, 8, 9), (5, 7, 9, 10), (6, 7, 8, 10),
    (4, 1, 8, 9), (5, 2, 9, 10), (0, 6, 8, 10),
    (0, 8, 10, 11), (1, 8, 9, 11), (2, 9, 10, 11),
    (0, 1, 8, 11), (1, 2, 9, 11), (0, 2, 10, 11),
    (7, 8, 9, 10), (8, 9, 10, 11), (0, 1, 2, 11),
    (0, 1, 2, 3),
)

BARNETTE_FACETS = (
    (0, 1, 3, 9), (1, 2, 3, 10), (0, 2, 3, 8),
    (0, 3, 8, 9), (1, 3, 9, 10), (2, 3, 8, 10),
    (0, 1, 8, 9), (1, 2, 9, 10), (0, 2, 8, 10),
    (0, 8, 10, 11), (1, 8, 9, 11), (2, 9, 10, 11),
    (0, 1, 8, 11), (1, 2, 9, 11), (0, 2, 10, 11),
    (3, 8, 9, 10), (8, 9, 10, 11), (0, 1, 2, 11),
    (0, 1, 2, 3),
)

MOBIUS_FACETS = (
    (0, 1, 8), (0, 2, 8),
    (0, 1, 9), (1, 2, 9),
    (0, 2, 10), (1, 2, 10),
)

KNOT_FACETS = (
    (1, 8), (2, 8),
    (0, 9), (2, 9),
    (0, 10), (1, 10),
)


def prism_complex() -> SimplicialComplex:
    return make_complex(PRISM_FACETS)


def barnette_complex() -> SimplicialComplex:
    return make_complex(BARNETTE_FACETS)


def mobius_complex() -> SimplicialComplex:
    return make_complex(MOBIUS_FACETS)


def knot_cycle_complex() -> SimplicialComplex:
    return make_complex(KNOT_FACETS)


def q_map() -> VertexMap:
    """Folds the top of the prism onto the bottom: 4..7 go to 0..3."""
    return VertexMap({i: i - 4 if 4 <= i <= 7 else i for i in range(12)})


@dataclass(frozen=True)
class IdentificationPair:
    source: tuple
    target: tuple
    correspondence: tuple  # ((src_vertex, dst_vertex), ...) in source order

    def __post_init__(self):
        srcs = tuple(a for a, _ in self.correspondence)
        dsts = tuple(b for _, b in self.correspondence)
        if srcs != self.source or dsts != self.target or len(set(dsts)) != 3:
            raise ValueError("correspondence must be a bijection source -> target")

    def __call__(self, v):
        return dict(self.correspondence)[v]


def _pair(source, target):
    return IdentificationPair(tuple(source), tuple(target), tuple(zip(source, target)))


def lemma_identification_pairs() -> list:
    """Boundary triangles of the prism glued affinely, vertex-by-vertex.

    The ``i``-th vertex of the source goes to the ``i``-th of the target.
    """
    return [
        _pair((0, 1, 2), (4, 5, 6)),
        _pair((0, 1, 6), (4, 1, 6)),
        _pair((1, 2, 4), (5, 2, 4)),
        _pair((2, 0, 5), (6, 0, 5)),
    ]

