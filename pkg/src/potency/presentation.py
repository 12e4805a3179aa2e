"""Finitely presented groups: edge-path presentations, Tietze moves, abelianization.

Words are tuples of non-zero integers; ``k`` is generator ``k`` (1-based)
and ``-k`` its inverse.
"""

from __future__ import annotations

import heapq
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .complex import SimplicialComplex, connected_components, faces
from .errors import Disconnected, ParseError, UnknownBase
from .homology import IntMatrix, smith_normal_form

DEFAULT_BUDGET = 10 ** 6
MAX_ELIMINATION_LENGTH = 16


def free_reduce(word) -> tuple:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word) -> tuple:
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def invert(word) -> tuple:
    return tuple(-x for x in reversed(word))


def canonical_cyclic(word) -> tuple:
    """Representative of a relator up to cyclic rotation and inversion."""
    w = cyclic_reduce(word)
    if not w:
        return w
    candidates = []
    for v in (w, invert(w)):
        candidates.extend(v[i:] + v[:i] for i in range(len(v)))
    return min(candidates)


@dataclass(frozen=True)
class Presentation:
    n_generators: int
    relators: tuple = ()

    def __post_init__(self):
        rels = tuple(tuple(int(x) for x in r) for r in self.relators)
        object.__setattr__(self, "relators", rels)
        if self.n_generators < 0:
            raise ValueError("negative generator count")
        for r in rels:
            for x in r:
                if x == 0 or abs(x) > self.n_generators:
                    raise ValueError(f"letter {x} outside generators 1..{self.n_generators}")

    @property
    def is_trivial(self):
        return self.n_generators == 0

    def total_length(self):
        return sum(len(r) for r in self.relators)

    def __str__(self):
        def letter(x):
            name = f"g{abs(x)}"
            return name if x > 0 else name + "^-1"
        gens = ", ".join(f"g{i}" for i in range(1, self.n_generators + 1))
        rels = ", ".join(" ".join(letter(x) for x in r) or "1" for r in self.relators)
        return f"< {gens} | {rels} >"


def edge_path_presentation(K: SimplicialComplex, base=None) -> Presentation:
    """Edge-path group of ``K`` based at ``base`` (default: smallest vertex).

    The spanning tree is grown breadth-first, visiting neighbours in label
    order.  Non-tree edges become generators in lexicographic order and each
    triangle ``a<b<c`` contributes ``g(a,b) g(b,c) g(a,c)^-1``.
    """
    if not K.facets:
        raise Disconnected("empty complex")
    if base is None:
        base = min(K.vertex_set)
    if base not in K.vertex_set:
        raise UnknownBase(f"base vertex {base} not in complex")
    if len(connected_components(K)) != 1:
        raise Disconnected("complex is not connected")

    edges = faces(K, 1) if K.dim >= 1 else ()
    adjacency = {v: [] for v in K.vertex_set}
    for a, b in edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    tree = set()
    seen = {base}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for w in sorted(adjacency[v]):
            if w not in seen:
                seen.add(w)
                tree.add((min(v, w), max(v, w)))
                queue.append(w)

    gen_of = {}
    for e in edges:
        if e not in tree:
            gen_of[e] = len(gen_of) + 1

    def g(a, b):
        k = gen_of.get((a, b))
        return (k,) if k else ()

    relators = []
    if K.dim >= 2:
        for a, b, c in faces(K, 2):
            r = free_reduce(g(a, b) + g(b, c) + invert(g(a, c)))
            if r:
                relators.append(r)
    return Presentation(len(gen_of), tuple(relators))


class Simplified(NamedTuple):
    presentation: Presentation
    moves: int
    exhausted: bool  # budget ran out before a fixpoint


def tietze_simplify(P: Presentation, budget: int = DEFAULT_BUDGET,
                    max_length: int = MAX_ELIMINATION_LENGTH) -> Simplified:
    """Simplify a presentation with deterministic Tietze moves.

    Relators are kept freely and cyclically reduced, empty ones dropped.
    Repeatedly the shortest relator (ties: oldest) of length at most
    ``max_length`` that contains some generator exactly once is used to
    eliminate that generator (the highest such index): it is solved for
    and substituted everywhere.  Length one relators thus kill a
    generator and length two relators identify two generators.  At the
    fixpoint relators equal up to rotation and inversion are merged and
    surviving generators are renumbered in order.
    """
    rels = {}
    occ = {g: set() for g in range(1, P.n_generators + 1)}
    heap = []

    def register(rid, word):
        rels[rid] = word
        for x in set(map(abs, word)):
            occ[x].add(rid)
        if len(word) <= max_length:
            heapq.heappush(heap, (len(word), rid))

    next_id = 0
    for r in P.relators:
        w = cyclic_reduce(r)
        if w:
            register(next_id, w)
        next_id += 1

    alive = set(occ)
    moves = 0
    exhausted = False
    while heap:
        if moves >= budget:
            exhausted = True
            break
        length, rid = heapq.heappop(heap)
        word = rels.get(rid)
        if word is None or len(word) != length:
            continue
        counts = Counter(map(abs, word))
        once = [x for x, c in counts.items() if c == 1]
        if not once:
            continue
        gen = max(once)
        pos = next(i for i, x in enumerate(word) if abs(x) == gen)
        rotated = word[pos:] + word[:pos]
        rest = rotated[1:]
        # g^e * rest = 1  =>  g = rest^-1 (e=1) or rest (e=-1)
        replacement = invert(rest) if rotated[0] > 0 else rest
        inverse_replacement = invert(replacement)

        del rels[rid]
        for x in counts:
            occ[x].discard(rid)
        for other in sorted(occ[gen]):
            old = rels.pop(other)
            for x in set(map(abs, old)):
                occ[x].discard(other)
            new = []
            for x in old:
                if x == gen:
                    new.extend(replacement)
                elif x == -gen:
                    new.extend(inverse_replacement)
                else:
                    new.append(x)
            new = cyclic_reduce(new)
            if new:
                register(other, new)
        del occ[gen]
        alive.discard(gen)
        moves += 1

    seen = set()
    kept = []
    for rid in sorted(rels):
        key = canonical_cyclic(rels[rid])
        if key not in seen:
            seen.add(key)
            kept.append(rels[rid])

    renumber = {g: i for i, g in enumerate(sorted(alive), start=1)}
    relators = tuple(tuple(renumber[abs(x)] * (1 if x > 0 else -1) for x in w) for w in kept)
    return Simplified(Presentation(len(renumber), relators), moves, exhausted)


class AbelianInvariants(NamedTuple):
    rank: int
    torsion: tuple
    exponents: tuple | None  # image of each generator in Z when the group abelianizes to Z


def exponent_matrix(P: Presentation) -> IntMatrix:
    """Relators x generators matrix of exponent sums."""
    cols = [{} for _ in range(P.n_generators)]
    for i, r in enumerate(P.relators):
        for x in r:
            col = cols[abs(x) - 1]
            v = col.get(i, 0) + (1 if x > 0 else -1)
            if v:
                col[i] = v
            else:
                col.pop(i, None)
    return IntMatrix(len(P.relators), P.n_generators, cols)


def _integer_kernel_vector(A: IntMatrix):
    """Primitive integer generator of a one-dimensional rational kernel.

    Sparse Gauss-Jordan elimination over Q, then read the kernel off the
    single free column.
    """
    n = A.ncols
    rows = [{} for _ in range(A.nrows)]
    for j, col in enumerate(A.columns):
        for i, v in col.items():
            rows[i][j] = Fraction(v)
    by_col = {j: set() for j in range(n)}
    for i, r in enumerate(rows):
        for j in r:
            by_col[j].add(i)
    pivot_of = {}  # column -> row
    for c in range(n):
        live = [i for i in by_col[c] if i not in pivot_of.values()]
        if not live:
            continue
        piv = min(live, key=lambda i: (len(rows[i]), i))
        prow = rows[piv]
        p = prow[c]
        for i in list(by_col[c]):
            if i == piv:
                continue
            row = rows[i]
            f = row[c] / p
            for j, v in prow.items():
                nv = row.get(j, 0) - f * v
                if nv:
                    if j not in row:
                        by_col[j].add(i)
                    row[j] = nv
                elif j in row:
                    del row[j]
                    by_col[j].discard(i)
        pivot_of[c] = piv
    free = [c for c in range(n) if c not in pivot_of]
    if len(free) != 1:
        raise ValueError(f"kernel has dimension {len(free)}, expected 1")
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for c, i in pivot_of.items():
        vec[c] = -rows[i].get(f, 0) / rows[i][c]
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def abelianization_invariants(P: Presentation, exponents: bool = True) -> AbelianInvariants:
    """Free rank and torsion of the abelianized group.

    When the abelianization is exactly Z and ``exponents`` is set, also
    the image of each generator under an isomorphism onto Z, normalized
    so the first non-zero image is positive.
    """
    A = exponent_matrix(P)
    snf = smith_normal_form(A)
    rank = P.n_generators - snf.rank
    torsion = tuple(x for x in snf.invariant_factors if x > 1)
    vec = None
    if exponents and rank == 1 and not torsion:
        vec = _integer_kernel_vector(A)
    return AbelianInvariants(rank, torsion, vec)


# text format ---------------------------------------------------------------

def format_presentation(P: Presentation) -> str:
    lines = ["gp v1", f"gens {P.n_generators}"]
    lines.extend(("r " + " ".join(map(str, r))).rstrip() for r in P.relators)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    state = 0
    n = 0
    relators = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if state == 0:
            if tokens != ["gp", "v1"]:
                raise ParseError(f"expected header 'gp v1', got {line!r}", lineno)
            state = 1
            continue
        if state == 1:
            if len(tokens) != 2 or tokens[0] != "gens" or not tokens[1].isdigit():
                raise ParseError(f"expected 'gens <n>', got {line!r}", lineno)
            n = int(tokens[1])
            state = 2
            continue
        if tokens[0] != "r":
            raise ParseError(f"expected relator line, got {line!r}", lineno)
        try:
            word = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise ParseError(f"non-integer letter in {line!r}", lineno) from None
        if any(x == 0 or abs(x) > n for x in word):
            raise ParseError(f"letter outside generators 1..{n}", lineno)
        relators.append(word)
    if state < 2:
        raise ParseError("missing header")
    return Presentation(n, tuple(relators))
