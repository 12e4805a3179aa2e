"""Integral simplicial homology through Smith normal forms of boundary matrices.

Everything here is exact integer arithmetic.  Large boundary matrices are
reduced with a sparse elimination that only uses unit pivots (boundary
matrices are full of them); whatever survives is handed to a dense Smith
normal form.  A transform-tracking dense routine is available for
verification on small matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .complex import SimplicialComplex, faces
from .errors import DimensionOutOfRange


@dataclass
class IntMatrix:
    """Integer matrix stored by columns as ``{row: value}`` dicts."""

    nrows: int
    ncols: int
    columns: list

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols, [{} for _ in range(ncols)])

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            for j, v in enumerate(r):
                if v:
                    cols[j][i] = int(v)
        return cls(nrows, ncols, cols)

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def __getitem__(self, key):
        i, j = key
        return self.columns[j].get(i, 0)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = []
        for ocol in other.columns:
            acc = {}
            for k, b in ocol.items():
                for i, a in self.columns[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            cols.append({i: v for i, v in acc.items() if v})
        return IntMatrix(self.nrows, other.ncols, cols)

    def is_zero(self):
        return not any(self.columns)

    def nnz(self):
        return sum(len(c) for c in self.columns)


class SNFResult(NamedTuple):
    invariant_factors: tuple
    rank: int
    left: list | None = None   # U with U*A*V diagonal (verification mode only)
    right: list | None = None  # V


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple = ()

    def __str__(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    @property
    def is_trivial(self):
        return self.betti == 0 and not self.torsion


def boundary_matrix(K: SimplicialComplex, d: int) -> IntMatrix:
    """Matrix of the boundary map from ``d``-chains to ``(d-1)``-chains.

    Deleting the ``i``-th vertex of a face contributes ``(-1)**i``.
    """
    if d < 1 or d > K.dim:
        raise DimensionOutOfRange(f"boundary dimension {d} outside 1..{K.dim}")
    lower = faces(K, d - 1)
    row_of = {s: i for i, s in enumerate(lower)}
    cols = []
    for s in faces(K, d):
        col = {}
        for i in range(len(s)):
            col[row_of[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
        cols.append(col)
    return IntMatrix(len(lower), len(cols), cols)


# Smith normal form --------------------------------------------------------

def _eliminate_unit_pivots(A: IntMatrix):
    """Sparse elimination on unit pivots.

    Returns ``(units, rows)`` where ``units`` counts eliminated pivots and
    ``rows`` is the residual matrix as ``{row: {col: value}}`` with no
    entry of absolute value one.
    """
    rows = {}
    cols = {}
    for j, col in enumerate(A.columns):
        if col:
            cols[j] = set(col)
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v

    units = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols, key=lambda j: (len(cols[j]), j)):
            members = cols.get(c)
            if not members:
                cols.pop(c, None)
                continue
            best = None
            for r in members:
                v = rows[r][c]
                if v == 1 or v == -1:
                    key = (len(rows[r]), r)
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                continue
            r = best[1]
            prow = rows.pop(r)
            p = prow[c]
            for j in prow:
                cols[j].discard(r)
            for i in list(cols[c]):
                target = rows[i]
                factor = target[c] * p
                for j, v in prow.items():
                    nv = target.get(j, 0) - factor * v
                    if nv:
                        if j not in target:
                            cols[j].add(i)
                        target[j] = nv
                    elif j in target:
                        del target[j]
                        cols[j].discard(i)
                if not target:
                    del rows[i]
            for j in prow:
                if not cols[j]:
                    del cols[j]
            cols.pop(c, None)
            units += 1
            progress = True
    return units, rows


def _dense_snf(M, track=False):
    """Classic Smith normal form on a dense list-of-lists.

    Returns ``(diagonal, U, V)``; ``U`` and ``V`` are ``None`` unless
    ``track`` is set.  The diagonal is positive and forms a divisibility chain.
    """
    A = [list(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        if track:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        if track:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        if track:
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        if track:
            for row in V:
                row[dst] += q * row[src]

    diag = []
    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                best = None
                for i in range(t, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                        best = (abs(A[i][t]), i, t)
                for j in range(t, n):
                    if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                        best = (abs(A[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            if track:
                U[t] = [-a for a in U[t]]
        diag.append(A[t][t])
        t += 1
    return diag, U, V


def _matmul_dense(X, Y):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*Y)] for row in X]


def smith_normal_form(A, verify: bool = False) -> SNFResult:
    """Invariant factors of an integer matrix.

    ``A`` may be an :class:`IntMatrix` or a dense list of rows.  With
    ``verify`` the dense transform-tracking algorithm is also run, the
    identity ``U*A*V == diag`` is checked, both routes must agree, and the
    transforms are returned.
    """
    if not isinstance(A, IntMatrix):
        A = IntMatrix.from_dense(A)
    units, rest = _eliminate_unit_pivots(A)
    if rest:
        row_ids = sorted(rest)
        col_ids = sorted({j for r in rest.values() for j in r})
        col_pos = {j: k for k, j in enumerate(col_ids)}
        dense = [[0] * len(col_ids) for _ in row_ids]
        for a, i in enumerate(row_ids):
            for j, v in rest[i].items():
                dense[a][col_pos[j]] = v
        tail, _, _ = _dense_snf(dense)
    else:
        tail = []
    factors = tuple([1] * units + tail)

    if not verify:
        return SNFResult(factors, len(factors))

    M = A.to_dense()
    diag, U, V = _dense_snf(M, track=True)
    D = _matmul_dense(_matmul_dense(U, M), V) if M and M[0] else [[] for _ in M]
    for i, row in enumerate(D):
        for j, v in enumerate(row):
            expected = diag[i] if i == j and i < len(diag) else 0
            if v != expected:
                raise AssertionError(f"U*A*V differs from the diagonal at ({i}, {j})")
    if any(b % a for a, b in zip(diag, diag[1:])):
        raise AssertionError("diagonal is not a divisibility chain")
    if tuple(diag) != factors:
        raise AssertionError(f"sparse factors {factors} disagree with dense {tuple(diag)}")
    return SNFResult(factors, len(factors), U, V)


def rational_rank(A) -> int:
    """Rank over Q by sparse Gaussian elimination with exact fractions.

    Independent of :func:`smith_normal_form`: any non-zero pivot is
    accepted and arithmetic happens in Q rather than Z.
    """
    if isinstance(A, IntMatrix):
        rows = [{} for _ in range(A.nrows)]
        for j, col in enumerate(A.columns):
            for i, v in col.items():
                rows[i][j] = Fraction(v)
    else:
        rows = [{j: Fraction(v) for j, v in enumerate(r) if v} for r in A]
    rows = [r for r in rows if r]
    by_col = {}
    for i, r in enumerate(rows):
        for j in r:
            by_col.setdefault(j, set()).add(i)
    rank = 0
    for c in sorted(by_col):
        live = by_col.pop(c, set())
        if not live:
            continue
        piv = min(live, key=lambda i: (len(rows[i]), i))
        prow = rows[piv]
        live.discard(piv)
        for j in prow:
            if j != c:
                by_col[j].discard(piv)
        p = prow[c]
        for i in live:
            row = rows[i]
            f = row.pop(c) / p
            for j, v in prow.items():
                if j == c:
                    continue
                nv = row.get(j, 0) - f * v
                if nv:
                    if j not in row:
                        by_col[j].add(i)
                    row[j] = nv
                elif j in row:
                    del row[j]
                    by_col[j].discard(i)
        rows[piv] = {}
        rank += 1
    return rank


def homology_groups(K: SimplicialComplex, reduced: bool = False) -> list:
    """``H_0 .. H_dim`` of ``K`` with integer coefficients."""
    if K.dim < 0:
        return []
    counts = [len(faces(K, d)) for d in range(K.dim + 1)]
    snfs = {d: smith_normal_form(boundary_matrix(K, d)) for d in range(1, K.dim + 1)}

    def rank(d):
        if d == 0:
            return 1 if reduced else 0
        if d > K.dim:
            return 0
        return snfs[d].rank

    groups = []
    for d in range(K.dim + 1):
        betti = counts[d] - rank(d) - rank(d + 1)
        torsion = ()
        if d + 1 in snfs:
            torsion = tuple(x for x in snfs[d + 1].invariant_factors if x > 1)
        groups.append(HomologyGroup(betti, torsion))
    return groups


def betti_numbers_rational(K: SimplicialComplex, reduced: bool = False) -> list:
    """Betti numbers from :func:`rational_rank`; an independent cross-check."""
    if K.dim < 0:
        return []
    ranks = {d: rational_rank(boundary_matrix(K, d)) for d in range(1, K.dim + 1)}
    ranks[0] = 1 if reduced else 0
    ranks[K.dim + 1] = 0
    return [len(faces(K, d)) - ranks[d] - ranks[d + 1] for d in range(K.dim + 1)]

