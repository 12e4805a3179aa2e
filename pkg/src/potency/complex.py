"""Abstract simplicial complexes stored as facet lists over integer labels.

A simplex is a strictly increasing tuple of non-negative integers.  A
complex is determined by its facets (maximal simplices); every derived
quantity (faces, links, subdivisions) is computed on demand and returned
in lexicographic order so downstream matrices are reproducible.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    DimensionOutOfRange,
    DuplicateVertexInFacet,
    EmptyInput,
    NonMaximalFacet,
    NotPseudomanifold,
    NotPure,
    ParseError,
    PotencyError,
    SimplexNotInComplex,
    UnknownVertex,
)

Simplex = tuple  # tuple[int, ...], strictly increasing


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable complex; build it with :func:`make_complex`."""

    facets: tuple = ()

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(v for f in self.facets for v in f)

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted(self.vertex_set))

    @cached_property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def _faces(self) -> dict:
        return {}

    @cached_property
    def _all_faces(self) -> frozenset:
        return frozenset(s for d in range(self.dim + 1) for s in faces(self, d))

    @cached_property
    def _facets_at_vertex(self) -> dict:
        index = defaultdict(list)
        for f in self.facets:
            for v in f:
                index[v].append(f)
        return dict(index)

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self._all_faces

    def __len__(self) -> int:
        return len(self.facets)

    def __repr__(self) -> str:
        return (f"SimplicialComplex(dim={self.dim}, vertices={len(self.vertex_set)}, "
                f"facets={len(self.facets)})")


def _trusted(facets: Iterable[Simplex]) -> SimplicialComplex:
    """Wrap facets already known to be sorted, distinct and maximal."""
    return SimplicialComplex(tuple(sorted(facets)))


def _maximalize(simplices: Iterable[Simplex]) -> SimplicialComplex:
    """Complex generated by ``simplices``; faces of other entries are dropped."""
    candidates = sorted(set(simplices), key=lambda s: (-len(s), s))
    kept = []
    index = defaultdict(list)
    for s in candidates:
        if not s:
            continue
        pool = min((index.get(v, ()) for v in s), key=len)
        ss = set(s)
        if any(ss <= f for f in pool):
            continue
        fs = frozenset(s)
        kept.append(s)
        for v in s:
            index[v].append(fs)
    return _trusted(kept)


def make_complex(facets) -> SimplicialComplex:
    """Validate a facet list and build the complex.

    Raises :class:`NonMaximalFacet` when one listed facet is a face of
    another (including exact repeats); tables are meant to list facets only.
    """
    facets = [tuple(f) for f in facets]
    if not facets:
        raise EmptyInput("no facets given")
    normalized = []
    for f in facets:
        if not f:
            raise EmptyInput("empty facet")
        for v in f:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"vertex labels must be non-negative integers, got {v!r}")
        if len(set(f)) != len(f):
            raise DuplicateVertexInFacet(f"facet {f} repeats a vertex")
        normalized.append(tuple(sorted(f)))

    seen = set()
    for f in normalized:
        if f in seen:
            raise NonMaximalFacet(f"facet {f} is listed twice")
        seen.add(f)

    index = defaultdict(list)
    for f in normalized:
        for v in f:
            index[v].append(f)
    for f in normalized:
        fs = set(f)
        pool = min((index[v] for v in f), key=len)
        for g in pool:
            if len(g) > len(f) and fs.issubset(g):
                raise NonMaximalFacet(f"facet {f} is a face of {g}")
    return _trusted(normalized)


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex(())


def faces(K: SimplicialComplex, d: int) -> tuple:
    """All ``d``-faces of ``K`` in lexicographic order."""
    if d < 0 or d > K.dim:
        raise DimensionOutOfRange(f"dimension {d} outside 0..{K.dim}")
    cache = K._faces
    if d not in cache:
        out = set()
        for f in K.facets:
            if len(f) > d:
                out.update(itertools.combinations(f, d + 1))
        cache[d] = tuple(sorted(out))
    return cache[d]


def all_faces(K: SimplicialComplex) -> tuple:
    """Every non-empty face of ``K`` in lexicographic order (all dimensions)."""
    return tuple(sorted(K._all_faces))


def f_vector(K: SimplicialComplex) -> list:
    return [len(faces(K, d)) for d in range(K.dim + 1)]


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(f_vector(K)))


def _as_simplex(simplex) -> Simplex:
    s = tuple(sorted(simplex))
    if len(set(s)) != len(s):
        raise DuplicateVertexInFacet(f"simplex {simplex} repeats a vertex")
    return s


def link(K: SimplicialComplex, simplex) -> SimplicialComplex:
    """Link of ``simplex``: faces disjoint from it whose join with it is in K."""
    s = _as_simplex(simplex)
    if not s or s not in K:
        raise SimplexNotInComplex(f"{s} is not a face of the complex")
    ss = set(s)
    pool = K._facets_at_vertex[s[0]]
    out = []
    for f in pool:
        if ss.issubset(f) and len(f) > len(s):
            out.append(tuple(v for v in f if v not in ss))
    # distinct facets minus a common face remain distinct and maximal
    return _trusted(out)


def star(K: SimplicialComplex, simplex) -> SimplicialComplex:
    """Closed star: the facets of ``K`` that contain ``simplex``."""
    s = _as_simplex(simplex)
    if not s or s not in K:
        raise SimplexNotInComplex(f"{s} is not a face of the complex")
    ss = set(s)
    return _trusted(f for f in K._facets_at_vertex[s[0]] if ss.issubset(f))


def _ridge_incidence(K: SimplicialComplex) -> dict:
    incidence = defaultdict(list)
    for f in K.facets:
        for i in range(len(f)):
            incidence[f[:i] + f[i + 1:]].append((f, i))
    return incidence


def boundary_subcomplex(K: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by the ridges that lie in exactly one facet."""
    if not K.is_pure:
        raise NotPure("boundary is only defined here for pure complexes")
    if K.dim < 1:
        return empty_complex()
    ridges = [r for r, inc in _ridge_incidence(K).items() if len(inc) == 1]
    return _trusted(ridges)


def barycentric_subdivision(K: SimplicialComplex, return_labels: bool = False):
    """First barycentric subdivision.

    Vertex ``i`` of the result is the ``i``-th face of ``K`` in
    lexicographic order.  With ``return_labels`` the face -> label
    dictionary is returned alongside the complex.
    """
    labels = {s: i for i, s in enumerate(all_faces(K))}
    out = []
    for f in K.facets:
        for perm in itertools.permutations(f):
            chain = [labels[tuple(sorted(perm[:k]))] for k in range(1, len(f) + 1)]
            out.append(tuple(sorted(chain)))
    # maximal chains through distinct facets never nest
    result = _trusted(out)
    if return_labels:
        return result, labels
    return result


def full_subcomplex(K: SimplicialComplex, vertices) -> SimplicialComplex:
    """All faces of ``K`` spanned by vertices in ``vertices``."""
    keep = frozenset(vertices)
    unknown = keep - K.vertex_set
    if unknown:
        raise UnknownVertex(f"vertices {sorted(unknown)} are not in the complex")
    parts = (tuple(v for v in f if v in keep) for f in K.facets)
    return _maximalize(p for p in parts if p)


def is_subcomplex(L: SimplicialComplex, K: SimplicialComplex) -> bool:
    return all(f in K for f in L.facets)


def connected_components(K: SimplicialComplex) -> list:
    """Vertex sets of the connected components, sorted by smallest label."""
    parent = {v: v for v in K.vertex_set}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in K.facets:
        root = find(f[0])
        for v in f[1:]:
            other = find(v)
            if other != root:
                parent[other] = root
    groups = defaultdict(set)
    for v in K.vertex_set:
        groups[find(v)].add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def is_connected(K: SimplicialComplex) -> bool:
    return len(connected_components(K)) == 1


class Orientation(NamedTuple):
    orientable: bool
    facet_signs: dict | None


def orientability(K: SimplicialComplex) -> Orientation:
    """Try to orient the facets coherently.

    A facet ``f`` with sign ``s`` induces ``s * (-1)**i`` on the ridge
    obtained by deleting ``f[i]``; neighbours across a ridge must induce
    opposite signs.  Signs are propagated breadth-first from the smallest
    facet of each component.
    """
    if not K.is_pure:
        raise NotPure("orientability needs a pure complex")
    incidence = _ridge_incidence(K)
    for ridge, inc in incidence.items():
        if len(inc) > 2:
            raise NotPseudomanifold(f"ridge {ridge} lies in {len(inc)} facets")

    signs = {}
    for seed in K.facets:
        if seed in signs:
            continue
        signs[seed] = 1
        queue = deque([seed])
        while queue:
            f = queue.popleft()
            for i in range(len(f)):
                ridge = f[:i] + f[i + 1:]
                induced = signs[f] * (-1) ** i
                for g, j in incidence[ridge]:
                    if g == f:
                        continue
                    wanted = -induced * (-1) ** j
                    if g in signs:
                        if signs[g] != wanted:
                            return Orientation(False, None)
                    else:
                        signs[g] = wanted
                        queue.append(g)
    return Orientation(True, signs)


def is_cycle(K: SimplicialComplex) -> bool:
    """True when ``K`` is a single closed polygon."""
    if K.dim != 1 or not K.is_pure:
        return False
    degree = defaultdict(int)
    for a, b in K.facets:
        degree[a] += 1
        degree[b] += 1
    return all(d == 2 for d in degree.values()) and is_connected(K)


def is_closed_surface(K: SimplicialComplex) -> bool:
    """Connected closed combinatorial 2-manifold."""
    if K.dim != 2 or not K.is_pure:
        return False
    if any(len(inc) != 2 for inc in _ridge_incidence(K).values()):
        return False
    if not all(is_cycle(link(K, (v,))) for v in K.vertices):
        return False
    return is_connected(K)


@dataclass
class ManifoldReport:
    """Outcome of :func:`check_closed_3_manifold`; one entry per condition."""

    entries: list = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.entries.append((name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return bool(self.entries) and all(p for _, p, _ in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if not e[1]]

    def __bool__(self):
        return self.ok


def check_closed_3_manifold(K: SimplicialComplex) -> ManifoldReport:
    """Necessary combinatorial conditions for a closed 3-manifold.

    Vertex links are accepted as 2-spheres when they are connected closed
    surfaces with Euler characteristic 2.
    """
    report = ManifoldReport()
    pure3 = K.is_pure and K.dim == 3
    report.add("pure_dim3", pure3, f"dim={K.dim} pure={K.is_pure}")
    if not pure3:
        return report

    incidence = _ridge_incidence(K)
    bad = sorted(r for r, inc in incidence.items() if len(inc) != 2)
    report.add("triangles_in_two_facets", not bad,
               f"{len(incidence) - len(bad)}/{len(incidence)} ok" + (f"; first bad {bad[0]}" if bad else ""))

    edges = faces(K, 1)
    bad_edges = [e for e in edges if not is_cycle(link(K, e))]
    report.add("edge_links_cycles", not bad_edges,
               f"{len(edges) - len(bad_edges)}/{len(edges)} ok"
               + (f"; first bad {bad_edges[0]}" if bad_edges else ""))

    bad_vertices = []
    for v in K.vertices:
        lk = link(K, (v,))
        if not (is_closed_surface(lk) and euler_characteristic(lk) == 2):
            bad_vertices.append(v)
    report.add("vertex_links_spheres", not bad_vertices,
               f"{len(K.vertices) - len(bad_vertices)}/{len(K.vertices)} ok"
               + (f"; first bad {bad_vertices[0]}" if bad_vertices else ""))

    ncomp = len(connected_components(K))
    report.add("connected", ncomp == 1, f"components={ncomp}")
    return report


# text format --------------------------------------------------------------

def format_complex(K: SimplicialComplex) -> str:
    lines = ["sc v1", f"dim {K.dim}"]
    lines.extend("f " + " ".join(map(str, f)) for f in sorted(K.facets))
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    header = []
    facets = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(header) == 0:
            if tokens != ["sc", "v1"]:
                raise ParseError(f"expected header 'sc v1', got {line!r}", lineno)
            header.append(lineno)
            continue
        if len(header) == 1:
            if len(tokens) != 2 or tokens[0] != "dim":
                raise ParseError(f"expected 'dim <D>', got {line!r}", lineno)
            try:
                dim = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad dimension {tokens[1]!r}", lineno) from None
            if dim < -1:
                raise ParseError(f"bad dimension {dim}", lineno)
            header.append(dim)
            continue
        if tokens[0] != "f" or len(tokens) < 2:
            raise ParseError(f"expected facet line 'f v0 ... vD', got {line!r}", lineno)
        try:
            verts = [int(t) for t in tokens[1:]]
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if any(v < 0 for v in verts):
            raise ParseError("vertex labels must be non-negative", lineno)
        if any(a >= b for a, b in zip(verts, verts[1:])):
            raise ParseError("facet vertices must be strictly increasing", lineno)
        if len(verts) - 1 > header[1]:
            raise ParseError(f"facet of dimension {len(verts) - 1} exceeds dim {header[1]}", lineno)
        facets.append((lineno, tuple(verts)))
    if len(header) < 2:
        raise ParseError("missing header")
    dim = header[1]
    if not facets:
        if dim != -1:
            raise ParseError(f"no facets but dim {dim}")
        return empty_complex()
    if max(len(f) for _, f in facets) - 1 != dim:
        raise ParseError(f"declared dim {dim} does not match facets")
    try:
        return make_complex([f for _, f in facets])
    except PotencyError as err:
        raise ParseError(str(err)) from err


def write_complex(K: SimplicialComplex, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_complex(K))


def read_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())
