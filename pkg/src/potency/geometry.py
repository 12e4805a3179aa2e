"""Exact rational model of the prism, its strata and the map to subsets of the circle.

A point of the circle is an angle in turns, reduced to a rational in
``[0, 1)``; two points coincide exactly when their angles agree mod 1.
No floating point is used anywhere in this module.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import EmptyInput, TooMany
from .quotient import lemma_identification_pairs, q_map


class Point3(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction


def point(x, y, z) -> Point3:
    return Point3(Fraction(x), Fraction(y), Fraction(z))


@dataclass(frozen=True)
class CircleSubset:
    """One to three distinct points of the circle, sorted, each in ``[0, 1)``."""

    elements: tuple

    def __post_init__(self):
        els = self.elements
        if not 1 <= len(els) <= 3:
            raise ValueError(f"a subset has 1..3 points, got {len(els)}")
        if any(not isinstance(e, Fraction) or not 0 <= e < 1 for e in els):
            raise ValueError("elements must be Fractions in [0, 1)")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError("elements must be strictly increasing")

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


def _frac(q: Fraction) -> Fraction:
    return q - math.floor(q)


def pi_map(points) -> CircleSubset:
    """The set of 1..3 circle points named by the given angles."""
    points = [Fraction(p) for p in points]
    if not points:
        raise EmptyInput("no points")
    if len(points) > 3:
        raise TooMany(f"{len(points)} points; at most 3")
    return CircleSubset(tuple(sorted({_frac(p) for p in points})))


def p_map(pt) -> CircleSubset:
    return pi_map(pt)


def in_P(pt) -> bool:
    x, y, z = pt
    return x <= y <= z <= x + 1 and 0 <= x + y + z <= 1


def in_S(pt) -> bool:
    x, y, z = pt
    return in_P(pt) and (x == y or y == z or z == x + 1)


def in_D(pt) -> bool:
    x, y, z = pt
    return in_P(pt) and ((x == y == z) or (x == y == z - 1) or (x + 1 == y == z))


def in_open_cell(pt) -> bool:
    """Interior of the prism minus the two-point stratum."""
    x, y, z = pt
    return x < y < z < x + 1 and 0 < x + y + z < 1


PRISM_CORNERS = {
    0: point(0, 0, 0),
    1: point(Fraction(-2, 3), Fraction(1, 3), Fraction(1, 3)),
    2: point(Fraction(-1, 3), Fraction(-1, 3), Fraction(2, 3)),
    4: point(0, 0, 1),
    5: point(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
    6: point(Fraction(-1, 3), Fraction(2, 3), Fraction(2, 3)),
}


def barycenter(*pts) -> Point3:
    n = len(pts)
    return Point3(*(sum((p[i] for p in pts), Fraction(0)) / n for i in range(3)))


def affine_point(corners, weights) -> Point3:
    return Point3(*(sum((w * c[i] for w, c in zip(weights, corners)), Fraction(0)) for i in range(3)))


def prism_vertex_coordinates() -> dict:
    """Coordinates of all twelve vertices of the triangulated prism.

    3 and 7 are the centres of the bottom and top triangles, 8, 9, 10 the
    midpoints of the edges 1-6, 2-4, 0-5 (the one-point stratum), and 11 the
    centroid of the six corners.
    """
    c = PRISM_CORNERS
    coords = dict(c)
    coords[3] = barycenter(c[0], c[1], c[2])
    coords[7] = barycenter(c[4], c[5], c[6])
    coords[8] = barycenter(c[1], c[6])
    coords[9] = barycenter(c[2], c[4])
    coords[10] = barycenter(c[0], c[5])
    coords[11] = barycenter(*(c[k] for k in sorted(c)))
    return dict(sorted(coords.items()))


@dataclass
class SamplingReport:
    name: str
    checked: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)  # first few failing inputs
    counts: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.failures == 0 and self.checked > 0

    def fail(self, item):
        self.failures += 1
        if len(self.examples) < 5:
            self.examples.append(item)

    def detail(self):
        extra = "".join(f" {k}={v}" for k, v in self.counts.items())
        return f"checked={self.checked} failures={self.failures}{extra}"


def barycentric_grid(n: int):
    """Weights ``(i/n, j/n, k/n)`` with ``i + j + k = n``."""
    if n < 1:
        raise ValueError("grid size must be positive")
    for i in range(n + 1):
        for j in range(n + 1 - i):
            yield (Fraction(i, n), Fraction(j, n), Fraction(n - i - j, n))


def verify_lemma_identifications(n: int = 12) -> SamplingReport:
    """Glued boundary triangles carry the same subsets at corresponding points."""
    coords = prism_vertex_coordinates()
    report = SamplingReport("triangle_identifications")
    for pair in lemma_identification_pairs():
        src = [coords[v] for v in pair.source]
        dst = [coords[v] for v in pair.target]
        checked = 0
        for w in barycentric_grid(n):
            a = affine_point(src, w)
            b = affine_point(dst, w)
            report.checked += 1
            checked += 1
            if p_map(a) != p_map(b):
                report.fail((pair.source, pair.target, w))
        report.counts["<" + ",".join(map(str, pair.source)) + ">"] = checked
    return report


def grid_points(n: int):
    """Points of ``(1/n) Z^3`` in the prism's bounding box."""
    if n < 1:
        raise ValueError("grid size must be positive")
    corners = list(PRISM_CORNERS.values())
    ranges = []
    for axis in range(3):
        lo = min(c[axis] for c in corners)
        hi = max(c[axis] for c in corners)
        ranges.append(range(math.ceil(lo * n), math.floor(hi * n) + 1))
    for i, j, k in itertools.product(*ranges):
        yield Point3(Fraction(i, n), Fraction(j, n), Fraction(k, n))


def verify_stratification(n: int = 12) -> SamplingReport:
    """On grid points of the prism: at most two images iff in S, one iff in D.

    Also checks that distinct grid points of the open cell have distinct
    images.
    """
    report = SamplingReport("stratification")
    in_prism = in_s = in_d = 0
    open_cell = {}
    collisions = 0
    for pt in grid_points(n):
        if not in_P(pt):
            continue
        in_prism += 1
        image = p_map(pt)
        s, d = in_S(pt), in_D(pt)
        in_s += s
        in_d += d
        report.checked += 1
        if (len(image) <= 2) != s or (len(image) == 1) != d:
            report.fail(pt)
        if in_open_cell(pt):
            if image in open_cell:
                collisions += 1
                report.fail((pt, open_cell[image]))
            else:
                open_cell[image] = pt
    report.counts.update(in_P=in_prism, in_S=in_s, in_D=in_d,
                         open_cell=len(open_cell), collisions=collisions)
    return report


def verify_vertex_q_consistency() -> SamplingReport:
    """Each vertex and its image under the folding map name the same subset."""
    coords = prism_vertex_coordinates()
    q = q_map()
    report = SamplingReport("vertex_q_consistency")
    one_point = {0, 1, 2, 4, 5, 6, 8, 9, 10}
    for v, pt in coords.items():
        report.checked += 1
        image = p_map(pt)
        expected = 1 if v in one_point else 3
        if image != p_map(coords[q(v)]) or len(image) != expected:
            report.fail(v)
    return report


# export --------------------------------------------------------------------

# boundary faces of the prism as vertex cycles
PRISM_FACES = (
    (0, 1, 2),      # x + y + z = 0
    (4, 5, 6),      # x + y + z = 1
    (0, 2, 4, 5),   # x = y
    (0, 1, 6, 5),   # y = z
    (1, 2, 4, 6),   # z = x + 1
)

D_SEGMENTS = ((0, 5), (2, 4), (1, 6))


def _rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def prism_triangles() -> list:
    """Boundary faces split into triangles, fanned from the lowest label and
    oriented outward."""
    c = PRISM_CORNERS
    centre = barycenter(*c.values())
    out = []
    for face in PRISM_FACES:
        k = face.index(min(face))
        cyc = face[k:] + face[:k]
        for a, b in zip(cyc[1:], cyc[2:]):
            tri = (cyc[0], a, b)
            u = [c[tri[1]][i] - c[tri[0]][i] for i in range(3)]
            w = [c[tri[2]][i] - c[tri[0]][i] for i in range(3)]
            inward = [centre[i] - c[tri[0]][i] for i in range(3)]
            if _det3(u, w, inward) > 0:
                tri = (tri[0], tri[2], tri[1])
            out.append(tri)
    return out


def format_prism_off() -> str:
    labels = sorted(PRISM_CORNERS)
    index = {v: i for i, v in enumerate(labels)}
    tris = prism_triangles()
    lines = ["OFF", f"{len(labels)} {len(tris)} 0"]
    for v in labels:
        lines.append(" ".join(_rational(q) for q in PRISM_CORNERS[v]))
    for tri in tris:
        lines.append("3 " + " ".join(str(index[v]) for v in tri))
    return "\n".join(lines) + "\n"


def format_d_polylines() -> str:
    lines = ["polyline v1", f"segments {len(D_SEGMENTS)}"]
    for a, b in D_SEGMENTS:
        pa, pb = PRISM_CORNERS[a], PRISM_CORNERS[b]
        lines.append("s " + " ".join(_rational(q) for q in (*pa, *pb)))
    return "\n".join(lines) + "\n"
