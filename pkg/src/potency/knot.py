"""Knot complements by second derived neighbourhoods, and the knot-group pipeline."""

from __future__ import annotations

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field

from .alexander import DEFAULT_GENERATOR_CAP, LaurentPolynomial, alexander_polynomial, exists_nonabelian_s3_rep
from .complex import (
    SimplicialComplex,
    all_faces,
    barycentric_subdivision,
    check_closed_3_manifold,
    f_vector,
    full_subcomplex,
    is_subcomplex,
)
from .errors import DimensionOutOfRange, EmptyInput, NotClosed3Manifold, NotSubcomplex, PotencyError
from .homology import homology_groups
from .presentation import (
    DEFAULT_BUDGET,
    AbelianInvariants,
    Presentation,
    abelianization_invariants,
    edge_path_presentation,
    tietze_simplify,
)

log = logging.getLogger(__name__)


def knot_complement_complex(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Complement of a 1-dimensional subcomplex ``L`` of a closed 3-manifold ``K``.

    ``L`` is pushed into the first subdivision ``K1``, where it becomes a
    full subcomplex ``L1``.  In the second subdivision the simplices
    meeting ``L1`` form a regular neighbourhood; the result is the full
    subcomplex spanned by the remaining vertices (faces of ``K1`` that are
    not faces of ``L1``).  It is a compact 3-manifold whose boundary is
    the neighbourhood's frontier and a deformation retract of ``|K| - |L|``.
    """
    if not L.facets:
        raise EmptyInput("the knot complex is empty")
    if L.dim != 1:
        raise DimensionOutOfRange(f"knot complex must be 1-dimensional, got dim {L.dim}")
    if not is_subcomplex(L, K):
        raise NotSubcomplex("knot is not a subcomplex of the ambient complex")
    report = check_closed_3_manifold(K)
    if not report.ok:
        raise NotClosed3Manifold(f"ambient complex fails {[n for n, _, _ in report.failures()]}")

    K1, labels1 = barycentric_subdivision(K, return_labels=True)
    knot1 = {labels1[s] for s in all_faces(L)}
    K2, labels2 = barycentric_subdivision(K1, return_labels=True)
    # L1 is full in K1, so a face of K1 lies in L1 iff all its vertices do
    keep = [lab for s, lab in labels2.items() if not knot1.issuperset(s)]
    return full_subcomplex(K2, keep)


@dataclass
class KnotAnalysis:
    """Every intermediate result of :func:`analyze_knot`."""

    complement_f_vector: list
    complement_homology: list
    raw: Presentation
    simplified: Presentation
    tietze_moves: int
    budget_exhausted: bool
    raw_abelianization: AbelianInvariants
    abelianization: AbelianInvariants
    alexander: LaurentPolynomial | None = None
    s3_nonabelian: bool | None = None
    notes: list = field(default_factory=list)

    def summary_lines(self):
        h = " ".join(f"H{d}={g}" for d, g in enumerate(self.complement_homology))
        lines = [
            f"complement f_vector={','.join(map(str, self.complement_f_vector))}",
            f"complement homology {h}",
            f"presentation raw gens={self.raw.n_generators} rels={len(self.raw.relators)}",
            f"presentation simplified gens={self.simplified.n_generators} "
            f"rels={len(self.simplified.relators)} moves={self.tietze_moves}"
            + (" budget_exhausted" if self.budget_exhausted else ""),
            f"abelianization rank={self.abelianization.rank} "
            f"torsion={list(self.abelianization.torsion)}",
        ]
        if self.alexander is not None:
            lines.append("alexander " + " ".join(map(str, self.alexander.coefficients())))
        if self.s3_nonabelian is not None:
            lines.append(f"s3_nonabelian {str(self.s3_nonabelian).lower()}")
        lines.extend(self.notes)
        return lines


@contextmanager
def _stage(name):
    """Tag package errors raised inside with the pipeline stage."""
    try:
        yield
    except PotencyError as err:
        err.stage = name
        raise


def analyze_knot(K: SimplicialComplex, L: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> KnotAnalysis:
    """Complement, knot group, abelianization, Alexander polynomial and S3 test.

    Errors from any stage carry the stage name in ``err.stage``.
    """
    with _stage("complement"):
        complement = knot_complement_complex(K, L)
    log.info("complement: %s", complement)
    with _stage("homology"):
        homology = homology_groups(complement)
    with _stage("presentation"):
        raw = edge_path_presentation(complement)
    log.info("raw presentation: %d generators, %d relators", raw.n_generators, len(raw.relators))
    with _stage("simplify"):
        simplified = tietze_simplify(raw, budget=budget)
    with _stage("abelianization"):
        raw_ab = abelianization_invariants(raw, exponents=False)
        small = simplified.presentation.n_generators <= DEFAULT_GENERATOR_CAP
        ab = abelianization_invariants(simplified.presentation, exponents=small)
    result = KnotAnalysis(
        complement_f_vector=f_vector(complement),
        complement_homology=homology,
        raw=raw,
        simplified=simplified.presentation,
        tietze_moves=simplified.moves,
        budget_exhausted=simplified.exhausted,
        raw_abelianization=raw_ab,
        abelianization=ab,
    )
    if (raw_ab.rank, raw_ab.torsion) != (ab.rank, ab.torsion):
        raise AssertionError("Tietze simplification changed the abelianization")
    n = simplified.presentation.n_generators
    if ab.rank != 1 or ab.torsion:
        result.notes.append("alexander skipped: abelianization is not Z")
    elif n > DEFAULT_GENERATOR_CAP:
        result.notes.append(f"alexander skipped: {n} generators exceed the cap; raise the budget")
    else:
        with _stage("alexander"):
            result.alexander = alexander_polynomial(simplified.presentation)
    if simplified.presentation.n_generators <= 6:
        with _stage("s3"):
            result.s3_nonabelian = exists_nonabelian_s3_rep(simplified.presentation)
    else:
        result.notes.append("s3 search skipped: more than 6 generators")
    return result
