"""Exact Plucker symbol algebra, matrix evaluation, and the twist of matrices.

A PluckerPoly is a Laurent polynomial in formal symbols indexed by k-subsets
of [n]; coefficients are Fractions and arithmetic is exact.  Function
equality is decided by evaluation (full boundary-condition grids live in the
pairing module; random rational points are used here).
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import combinations


class PluckerError(ValueError):
    pass


def _norm_subset(I):
    t = tuple(sorted(int(x) for x in I))
    if len(set(t)) != len(t):
        raise PluckerError(f"index set {I} has repeats")
    return t


def _norm_mono(mono):
    return tuple(sorted((I, e) for I, e in mono if e != 0))


class PluckerPoly:
    """terms: {monomial: coefficient}; a monomial maps k-subsets to integer
    exponents (negative allowed), stored as a sorted tuple of (subset, exp)."""

    def __init__(self, k, n, terms=None):
        self.k = k
        self.n = n
        self.terms = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            mono = _norm_mono(mono)
            for I, _ in mono:
                if len(I) != k or not all(1 <= x <= n for x in I):
                    raise PluckerError(f"{I} is not a k-subset of [n]")
            self.terms[mono] = self.terms.get(mono, Fraction(0)) + c
        self.terms = {m: c for m, c in self.terms.items() if c != 0}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, k, n):
        return cls(k, n)

    @classmethod
    def constant(cls, k, n, c):
        return cls(k, n, {(): Fraction(c)})

    @classmethod
    def variable(cls, k, n, I, exponent=1):
        I = _norm_subset(I)
        return cls(k, n, {((I, exponent),): Fraction(1)})

    @classmethod
    def monomial(cls, k, n, subsets, coeff=1):
        """Product of Plucker symbols, one per entry of `subsets`."""
        counts = {}
        for I in subsets:
            I = _norm_subset(I)
            counts[I] = counts.get(I, 0) + 1
        return cls(k, n, {tuple(sorted(counts.items())): Fraction(coeff)})

    # -- ring operations -------------------------------------------------------

    def _check_compatible(self, other):
        if (self.k, self.n) != (other.k, other.n):
            raise PluckerError("mixing Plucker algebras of different (k, n)")

    def __add__(self, other):
        if not isinstance(other, PluckerPoly):
            other = PluckerPoly.constant(self.k, self.n, other)
        self._check_compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return PluckerPoly(self.k, self.n, terms)

    def __neg__(self):
        return PluckerPoly(self.k, self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, PluckerPoly) else PluckerPoly.constant(self.k, self.n, -Fraction(other)))

    def __mul__(self, other):
        if not isinstance(other, PluckerPoly):
            return PluckerPoly(
                self.k, self.n, {m: c * Fraction(other) for m, c in self.terms.items()}
            )
        self._check_compatible(other)
        terms = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                combined = dict(d1)
                for I, e in m2:
                    combined[I] = combined.get(I, 0) + e
                key = _norm_mono(combined.items())
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return PluckerPoly(self.k, self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, p):
        if not isinstance(p, int):
            raise PluckerError("powers must be integers")
        if p < 0:
            if len(self.terms) != 1:
                raise PluckerError("negative powers only for single monomials")
            ((mono, c),) = self.terms.items()
            inv = tuple((I, -e) for I, e in mono)
            base = PluckerPoly(self.k, self.n, {inv: 1 / c})
            return base ** (-p)
        out = PluckerPoly.constant(self.k, self.n, 1)
        for _ in range(p):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PluckerPoly)
            and (self.k, self.n) == (other.k, other.n)
            and self.terms == other.terms
        )

    def is_zero(self):
        return not self.terms

    def multidegree(self):
        """The common N^n degree of the terms; raises if inhomogeneous."""
        degs = set()
        for mono in self.terms:
            d = [0] * self.n
            for I, e in mono:
                for x in I:
                    d[x - 1] += e
            degs.add(tuple(d))
        if len(degs) > 1:
            raise PluckerError("polynomial is not multihomogeneous")
        return degs.pop() if degs else (0,) * self.n

    # -- evaluation -----------------------------------------------------------

    def evaluate_pluckers(self, values):
        """Evaluate at a vector of Plucker values {subset: Fraction}."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            prod = Fraction(c)
            for I, e in mono:
                v = values[I]
                if e < 0 and v == 0:
                    raise PluckerError(f"pole at point: minor {I} vanishes")
                prod *= Fraction(v) ** e
            total += prod
        return total

    def evaluate(self, point: "MatrixPoint"):
        return self.evaluate_pluckers(point.minors())

    # -- serialization -----------------------------------------------------------

    def to_json(self):
        out = []
        for mono, c in sorted(self.terms.items()):
            out.append(
                {
                    "coeff": str(c),
                    "mono": {",".join(map(str, I)): e for I, e in mono},
                }
            )
        return out

    @classmethod
    def from_json(cls, k, n, data):
        terms = {}
        for item in data:
            mono = tuple(
                (tuple(int(x) for x in key.split(",")), int(e))
                for key, e in item["mono"].items()
            )
            mono = _norm_mono(mono)
            terms[mono] = terms.get(mono, Fraction(0)) + Fraction(item["coeff"])
        return cls(k, n, terms)


class MatrixPoint:
    """A full-rank k x n matrix over Q."""

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.k = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        if any(len(row) != self.n for row in self.rows):
            raise PluckerError("ragged matrix")
        if self.k > self.n:
            raise PluckerError("need k <= n")
        self._minors = None
        if self.rank() != self.k:
            raise PluckerError("matrix is not of full rank k")

    def column(self, i):
        return [self.rows[a][i - 1] for a in range(self.k)]

    def rank(self):
        m = [row[:] for row in self.rows]
        rank = 0
        for col in range(self.n):
            piv = next((r for r in range(rank, self.k) if m[r][col] != 0), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            for r in range(self.k):
                if r != rank and m[r][col] != 0:
                    f = m[r][col] / m[rank][col]
                    for c2 in range(col, self.n):
                        m[r][c2] -= f * m[rank][c2]
            rank += 1
            if rank == self.k:
                break
        return rank

    def minor(self, I):
        I = _norm_subset(I)
        if len(I) != self.k:
            raise PluckerError(f"minor needs {self.k} columns, got {I}")
        return det([[self.rows[a][i - 1] for i in I] for a in range(self.k)])

    def minors(self):
        """All maximal minors, {k-subset: Fraction}.  Cached."""
        if self._minors is None:
            self._minors = {
                I: self.minor(I) for I in combinations(range(1, self.n + 1), self.k)
            }
        return self._minors

    def to_json(self):
        return {"k": self.k, "n": self.n, "entries": [[str(x) for x in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data):
        return cls([[Fraction(x) for x in row] for row in data["entries"]])


def det(m):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    m = [row[:] for row in m]
    size = len(m)
    sign = 1
    out = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        out *= m[col][col]
        for r in range(col + 1, size):
            if m[r][col] != 0:
                f = m[r][col] / m[col][col]
                for c2 in range(col, size):
                    m[r][c2] -= f * m[col][c2]
    return sign * out


def cross_product(vectors):
    """The vector v with v . w = det(v_1 ... v_{k-1} w) (vectors as columns)."""
    if not vectors:
        return [Fraction(1)]
    k = len(vectors[0])
    if len(vectors) != k - 1 or any(len(v) != k for v in vectors):
        raise PluckerError("cross product needs k-1 vectors of length k")
    out = []
    for i in range(k):
        sub = [[vectors[j][a] for j in range(k - 1)] for a in range(k) if a != i]
        val = det(sub)
        if (i + k + 1) % 2:
            val = -val
        out.append(val)
    return out


def _cyclic_interval(i, k, n):
    return tuple(sorted((i + t - 1) % n + 1 for t in range(k)))


def twist_matrix(M: MatrixPoint) -> MatrixPoint:
    """Column i of the twist is the signed cross product of the k-1 columns
    following i, with the wraparound columns moved to the front and a sign
    (-1)^(k-n+i-1) when i >= n-k+2."""
    k, n = M.k, M.n
    minors = M.minors()
    for i in range(1, n + 1):
        if minors[_cyclic_interval(i, k, n)] == 0:
            raise PluckerError(
                f"twist needs nonvanishing cyclically consecutive minors; {i} fails"
            )
    cols = []
    for i in range(1, n + 1):
        if i <= n - k + 1:
            vs = [M.column(i + t) for t in range(1, k)]
            col = cross_product(vs)
        else:
            wrap = i - n + k - 1
            vs = [M.column(j) for j in range(1, wrap + 1)]
            vs += [M.column(j) for j in range(i + 1, n + 1)]
            col = cross_product(vs)
            if (k - n + i - 1) % 2:
                col = [-x for x in col]
        cols.append(col)
    rows = [[cols[j][a] for j in range(n)] for a in range(k)]
    out = MatrixPoint(rows)
    return out


def epsilon_prime(i, k, n):
    """The sign table of the twist definition (cross-check form)."""
    if i >= n - k + 2:
        return -1 if ((k - 1) * (n - i + 1)) % 2 else 1
    return 1


def three_term_relations(k, n):
    """All relations D_Sac D_Sbd = D_Sab D_Scd + D_Sad D_Sbc with |S| = k-2."""
    for S in combinations(range(1, n + 1), k - 2):
        rest = [x for x in range(1, n + 1) if x not in S]
        for a, b, c, d in combinations(rest, 4):
            yield S, a, b, c, d


def check_plucker_relations(values, k, n):
    """Exact three-term relation check for a vector {k-subset: value}."""
    def v(S, x, y):
        return values[tuple(sorted(S + (x, y)))]

    for S, a, b, c, d in three_term_relations(k, n):
        if v(S, a, c) * v(S, b, d) != v(S, a, b) * v(S, c, d) + v(S, a, d) * v(S, b, c):
            return False
    return True


def random_rational(rng: random.Random, bound=10):
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def random_matrix(k, n, rng: random.Random, bound=10, generic=True):
    """Random k x n rational matrix; with generic=True all cyclically
    consecutive minors are nonzero (resampled until so)."""
    for _ in range(400):
        rows = [[random_rational(rng, bound) for _ in range(n)] for _ in range(k)]
        try:
            M = MatrixPoint(rows)
        except PluckerError:
            continue
        if not generic:
            return M
        minors = M.minors()
        if all(minors[_cyclic_interval(i, k, n)] != 0 for i in range(1, n + 1)):
            return M
    raise PluckerError("failed to sample a generic matrix")
