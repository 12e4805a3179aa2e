"""The full verification suite over the concrete complexes and the prism geometry."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources

from . import geometry
from .complex import (
    boundary_subcomplex,
    check_closed_3_manifold,
    connected_components,
    euler_characteristic,
    f_vector,
    is_cycle,
    make_complex,
    orientability,
    parse_complex,
)
from .homology import HomologyGroup, homology_groups
from .knot import analyze_knot
from .presentation import DEFAULT_BUDGET, edge_path_presentation, tietze_simplify
from .quotient import (
    BARNETTE_FACETS,
    KNOT_FACETS,
    MOBIUS_FACETS,
    PRISM_FACETS,
    apply_vertex_map,
    knot_cycle_complex,
    mobius_complex,
    q_map,
)

DEFAULT_GRID = 12
BARNETTE_VERTICES = frozenset({0, 1, 2, 3, 8, 9, 10, 11})


@dataclass
class CheckReport:
    entries: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = ""):
        if any(n == name for n, _, _ in self.entries):
            raise ValueError(f"duplicate check name {name!r}")
        self.entries.append((name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.entries)

    def status(self, name):
        for n, p, _ in self.entries:
            if n == name:
                return p
        raise KeyError(name)

    def lines(self):
        return [f"CHECK {n} {'PASS' if p else 'FAIL'} {d}".rstrip() for n, p, d in self.entries]


def bundled_text(name: str) -> str:
    return resources.files("potency").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def unknot_fixture():
    """A 3-cycle bounding a triangle in the boundary of the 4-simplex."""
    return (parse_complex(bundled_text("sphere_boundary_4simplex.sc")),
            parse_complex(bundled_text("unknot_triangle.sc")))


def _homology_text(groups):
    return "(" + ",".join(str(g) for g in groups) + ")"


class _Suite:
    def __init__(self, report):
        self.report = report

    def check(self, name, fn):
        """Run one check; exceptions become FAIL entries."""
        start = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as err:  # noqa: BLE001 - a failing check must not stop the suite
            passed, detail = False, f"error {type(err).__name__}: {err}"
        elapsed = time.perf_counter() - start
        self.report.add(name, passed, f"{detail} time={elapsed:.2f}s".strip())


def run_verification(grid: int = DEFAULT_GRID, budget: int = DEFAULT_BUDGET,
                     prism_facets=PRISM_FACETS, barnette_facets=BARNETTE_FACETS) -> CheckReport:
    """Run every check in order and return the report.

    The facet tables can be replaced, e.g. by a corrupted copy in tests.
    """
    report = CheckReport()
    suite = _Suite(report)
    cache = {}

    def prism():
        if "prism" not in cache:
            cache["prism"] = make_complex(prism_facets)
        return cache["prism"]

    def barnette():
        if "barnette" not in cache:
            cache["barnette"] = make_complex(barnette_facets)
        return cache["barnette"]

    # table shapes
    def prism_shape():
        P = prism()
        fv = f_vector(P)
        ok = P.dim == 3 and P.is_pure and fv[0] == 12 and fv[3] == 19
        return ok, f"f_vector={fv}"

    def barnette_shape():
        B = barnette()
        fv = f_vector(B)
        ok = B.vertex_set == BARNETTE_VERTICES and fv[3] == 19 and B.is_pure
        return ok, f"vertices={sorted(B.vertex_set)} f_vector={fv}"

    def small_tables():
        M, L = make_complex(MOBIUS_FACETS), make_complex(KNOT_FACETS)
        return len(M.facets) == 6 and M.dim == 2 and len(L.facets) == 6 and L.dim == 1, \
            f"mobius={len(M.facets)} knot={len(L.facets)}"

    suite.check("table_prism", prism_shape)
    suite.check("table_barnette", barnette_shape)
    suite.check("table_mobius_knot", small_tables)

    def quotient():
        image, facet_map = apply_vertex_map(prism(), q_map(), return_facet_map=True)
        bijective = len(set(facet_map.values())) == len(facet_map) == 19
        same = set(image.facets) == set(barnette().facets)
        return same and bijective, f"image_facets={len(image.facets)} bijective={bijective} equal={same}"

    suite.check("quotient_isomorphism", quotient)

    # the sphere
    def sphere_manifold():
        r = check_closed_3_manifold(barnette())
        return r.ok, " ".join(f"{n}={'ok' if p else 'fail'}" for n, p, _ in r.entries)

    def sphere_orientable():
        o = orientability(barnette())
        return o.orientable, f"orientable={o.orientable}"

    def sphere_homology():
        H = homology_groups(barnette())
        expected = [HomologyGroup(1), HomologyGroup(0), HomologyGroup(0), HomologyGroup(1)]
        return H == expected, f"H={_homology_text(H)}"

    def sphere_pi1():
        raw = edge_path_presentation(barnette())
        s = tietze_simplify(raw, budget=budget)
        P = s.presentation
        return P.n_generators == 0, \
            f"raw_gens={raw.n_generators} simplified_gens={P.n_generators} rels={len(P.relators)}"

    suite.check("sphere_manifold", sphere_manifold)
    suite.check("sphere_orientable", sphere_orientable)
    suite.check("sphere_homology", sphere_homology)
    suite.check("sphere_simply_connected", sphere_pi1)

    # the Moebius band and its boundary
    def mobius_euler():
        chi = euler_characteristic(mobius_complex())
        return chi == 0, f"chi={chi}"

    def mobius_orientability():
        o = orientability(mobius_complex())
        return not o.orientable, f"orientable={o.orientable}"

    def mobius_homology():
        H = homology_groups(mobius_complex())
        return H[1] == HomologyGroup(1), f"H={_homology_text(H)}"

    def mobius_boundary():
        bd = boundary_subcomplex(mobius_complex())
        L = knot_cycle_complex()
        same = set(bd.facets) == set(L.facets)
        cycle = is_cycle(bd) and len(bd.facets) == 6 and len(connected_components(bd)) == 1
        return same and cycle, f"edges={len(bd.facets)} equal_to_knot={same} single_cycle={cycle}"

    suite.check("mobius_euler", mobius_euler)
    suite.check("mobius_nonorientable", mobius_orientability)
    suite.check("mobius_homology", mobius_homology)
    suite.check("mobius_boundary", mobius_boundary)

    # the knot
    def trefoil():
        if "trefoil" not in cache:
            cache["trefoil"] = analyze_knot(barnette(), knot_cycle_complex(), budget=budget)
        return cache["trefoil"]

    def trefoil_complement():
        a = trefoil()
        H = a.complement_homology
        ok = H[0] == HomologyGroup(1) and H[1] == HomologyGroup(1)
        return ok, f"facets={a.complement_f_vector[-1]} H={_homology_text(H)}"

    def trefoil_group():
        a = trefoil()
        ab = a.abelianization
        ok = ab.rank == 1 and not ab.torsion and not a.budget_exhausted
        return ok, (f"raw_gens={a.raw.n_generators} gens={a.simplified.n_generators} "
                    f"rels={len(a.simplified.relators)} abelianization_rank={ab.rank}")

    def trefoil_alexander():
        a = trefoil()
        coeffs = a.alexander.coefficients() if a.alexander is not None else None
        return coeffs == [1, -1, 1], f"alexander={coeffs and ' '.join(map(str, coeffs))}"

    def trefoil_s3():
        a = trefoil()
        return a.s3_nonabelian is True, f"s3_nonabelian={a.s3_nonabelian}"

    suite.check("trefoil_complement", trefoil_complement)
    suite.check("trefoil_group", trefoil_group)
    suite.check("trefoil_alexander", trefoil_alexander)
    suite.check("trefoil_s3", trefoil_s3)

    def unknot_control():
        K, L = unknot_fixture()
        a = analyze_knot(K, L, budget=budget)
        coeffs = a.alexander.coefficients() if a.alexander is not None else None
        ok = coeffs == [1] and a.s3_nonabelian is False
        return ok, f"alexander={coeffs} s3_nonabelian={a.s3_nonabelian}"

    suite.check("unknot_control", unknot_control)

    # geometry
    def sampled(fn):
        def run():
            r = fn()
            return r.ok, r.detail()
        return run

    suite.check("geometry_identifications", sampled(lambda: geometry.verify_lemma_identifications(grid)))
    suite.check("geometry_stratification", sampled(lambda: geometry.verify_stratification(grid)))
    suite.check("geometry_vertex_q", sampled(geometry.verify_vertex_q_consistency))
    return report


def summary_line(report: CheckReport) -> str:
    passed = sum(p for _, p, _ in report.entries)
    return f"SUMMARY {passed}/{len(report.entries)} {'PASS' if report.ok else 'FAIL'}"

