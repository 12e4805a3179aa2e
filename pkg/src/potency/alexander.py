"""Alexander polynomials via Fox calculus, and a brute-force S3 detector."""

from __future__ import annotations

import itertools
from math import comb, gcd

from .errors import AbelianizationNotZ, MatrixTooLarge, TooManyGenerators
from .presentation import Presentation, abelianization_invariants

DEFAULT_GENERATOR_CAP = 24
MAX_MINORS = 200_000


# dense integer polynomials: coefficient lists, lowest degree first ----------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pneg(a):
    return [-x for x in a]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivexact(a, b):
    """Quotient of ``a`` by ``b`` in Z[t]; raises if the division is not exact."""
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    rem = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1]
        if c % b[-1]:
            raise ArithmeticError("inexact polynomial division")
        c //= b[-1]
        q[k] = c
        if c:
            for i, y in enumerate(b):
                rem[k + i] -= c * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _content(p):
    g = 0
    for x in p:
        g = gcd(g, x)
    return g


def _primitive(p):
    c = _content(p)
    if c == 0:
        return []
    p = [x // c for x in p]
    return p if p[-1] > 0 else _pneg(p)


def _prem(a, b):
    """Pseudo-remainder of ``a`` by ``b``."""
    r = list(a)
    lc = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1]
        r = [lc * x for x in r]
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = _trim(r)
    return r


def _positive_lead(p):
    return p if not p or p[-1] > 0 else _pneg(p)


def poly_gcd(a, b):
    """Greatest common divisor in Z[t] with positive leading coefficient."""
    a, b = _trim(a), _trim(b)
    if not a or not b:
        return _positive_lead(a or b)
    content = gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    return [content * x for x in _primitive(a)]


# Laurent polynomials ---------------------------------------------------------

class LaurentPolynomial:
    """Integer Laurent polynomial in ``t``, stored as ``{exponent: coefficient}``."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        terms = dict(terms or {})
        self._terms = {int(e): int(c) for e, c in sorted(terms.items()) if c}

    @classmethod
    def from_coefficients(cls, coeffs, shift=0):
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def min_exponent(self):
        return min(self._terms) if self._terms else 0

    def max_exponent(self):
        return max(self._terms) if self._terms else 0

    def coefficients(self):
        """Coefficients from the lowest exponent up."""
        if not self._terms:
            return []
        lo, hi = self.min_exponent(), self.max_exponent()
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def __add__(self, other):
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return isinstance(other, LaurentPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __call__(self, value):
        return sum(c * value ** e for e, c in self._terms.items())

    def normalized(self):
        """Divide by the unit ``+-t^k`` making the lowest exponent 0 and its coefficient positive."""
        if not self._terms:
            return self
        lo = self.min_exponent()
        sign = 1 if self._terms[lo] > 0 else -1
        return LaurentPolynomial({e - lo: sign * c for e, c in self._terms.items()})

    def __repr__(self):
        return f"LaurentPolynomial({self._terms})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# Fox calculus ------------------------------------------------------------------

def fox_derivative(word, generator, exponents):
    """Abelianized Fox derivative of ``word`` with respect to ``generator``.

    ``exponents[k-1]`` is the image of generator ``k`` in Z, i.e. generator
    ``k`` maps to ``t**exponents[k-1]``.
    """
    terms = {}
    prefix = 0
    e_gen = exponents[generator - 1]
    for x in word:
        e = exponents[abs(x) - 1] * (1 if x > 0 else -1)
        if x == generator:
            terms[prefix] = terms.get(prefix, 0) + 1
        elif x == -generator:
            terms[prefix - e_gen] = terms.get(prefix - e_gen, 0) - 1
        prefix += e
    return LaurentPolynomial(terms)


def alexander_matrix(P: Presentation, exponents) -> list:
    return [[fox_derivative(r, j, exponents) for j in range(1, P.n_generators + 1)]
            for r in P.relators]


def _row_to_poly(row):
    """Shift a row of Laurent polynomials to ordinary polynomials (a unit factor)."""
    nonzero = [p for p in row if not p.is_zero()]
    lo = min((p.min_exponent() for p in nonzero), default=0)
    out = []
    for p in row:
        if p.is_zero():
            out.append([])
        else:
            coeffs = [0] * (p.min_exponent() - lo) + p.coefficients()
            out.append(_trim(coeffs))
    return out


def _det(M):
    """Determinant over Z[t] by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return [1]
    A = [[list(x) for x in row] for row in M]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return []
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _padd(_pmul(A[i][j], A[k][k]), _pneg(_pmul(A[i][k], A[k][j])))
                A[i][j] = _pdivexact(num, prev)
            A[i][k] = []
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign > 0 else _pneg(det)


def _cyclotomic_quotient(e):
    """(t^e - 1)/(t - 1) as a coefficient list."""
    return [1] * abs(e)


def alexander_polynomial(P: Presentation, column=None,
                         generator_cap: int = DEFAULT_GENERATOR_CAP) -> LaurentPolynomial:
    """Normalized Alexander polynomial of a group whose abelianization is Z.

    One column of the Alexander matrix is deleted (by default the lowest
    generator with non-zero image in Z) and the gcd of the remaining
    maximal minors is divided by ``(t^e - 1)/(t - 1)``, ``e`` being the
    deleted generator's image, so every admissible column gives the same
    answer.
    """
    if P.n_generators > generator_cap:
        raise MatrixTooLarge(f"{P.n_generators} generators exceed the cap of {generator_cap}; "
                             "simplify further first")
    ab = abelianization_invariants(P)
    if ab.exponents is None:
        raise AbelianizationNotZ(f"abelianization has rank {ab.rank} and torsion {ab.torsion}")
    exps = ab.exponents
    if column is None:
        column = next(k for k, e in enumerate(exps, start=1) if e)
    if not 1 <= column <= P.n_generators or exps[column - 1] == 0:
        raise ValueError(f"column {column} cannot be deleted")

    n = P.n_generators
    matrix = alexander_matrix(P, exps)
    keep = [j for j in range(n) if j != column - 1]
    rows = [_row_to_poly([row[j] for j in keep]) for row in matrix]
    size = n - 1
    if comb(len(rows), size) > MAX_MINORS:
        raise MatrixTooLarge(f"{comb(len(rows), size)} minors to evaluate")

    g = []
    for subset in itertools.combinations(range(len(rows)), size):
        d = _det([rows[i] for i in subset])
        if d:
            g = poly_gcd(g, d)
            if len(g) == 1 and abs(g[0]) == 1:
                break
    if not g:
        return LaurentPolynomial()
    g = _pdivexact(g, _cyclotomic_quotient(exps[column - 1]))
    return LaurentPolynomial.from_coefficients(g).normalized()


# S3 representations ------------------------------------------------------------

S3 = tuple(itertools.permutations(range(3)))
_IDENTITY = (0, 1, 2)


def _compose(p, q):
    """``p`` after ``q``."""
    return tuple(p[q[i]] for i in range(3))


def _inverse(p):
    out = [0, 0, 0]
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


_MUL = {(p, q): _compose(p, q) for p in S3 for q in S3}
_INV = {p: _inverse(p) for p in S3}


def _evaluate(word, images):
    acc = _IDENTITY
    for x in word:
        g = images[abs(x) - 1]
        acc = _MUL[acc, g if x > 0 else _INV[g]]
    return acc


def s3_representations(P: Presentation):
    """Yield every homomorphism to S3 as a tuple of generator images."""
    for images in itertools.product(S3, repeat=P.n_generators):
        if all(_evaluate(r, images) == _IDENTITY for r in P.relators):
            yield images


def exists_nonabelian_s3_rep(P: Presentation) -> bool:
    """True iff some homomorphism onto a non-cyclic subgroup of S3 exists.

    The non-cyclic subgroups of S3 are S3 itself, so this is the same as a
    non-abelian image.
    """
    if P.n_generators > 6:
        raise TooManyGenerators(f"{P.n_generators} generators; at most 6 supported")
    for images in s3_representations(P):
        if any(_MUL[a, b] != _MUL[b, a] for a, b in itertools.combinations(images, 2)):
            return True
    return False
