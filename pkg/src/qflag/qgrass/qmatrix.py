"""Quantum matrices ``O_q(M_{m,n})`` in PBW normal form.

Generators ``x_ij`` are numbered row-major, ``g = (i-1)*n + (j-1)``; a PBW
monomial is a nondecreasing tuple of generator numbers. Relations, for
``i < k`` and ``j < l``::

    x_ij x_il = q x_il x_ij        (same row)
    x_ij x_kj = q x_kj x_ij        (same column)
    x_il x_kj = x_kj x_il          (anti-diagonal pair)
    x_ij x_kl - x_kl x_ij = (q - q^-1) x_il x_kj

The scalar ring is either symbolic (:class:`~qflag.laurent.LaurentPoly` in
``q``) or ``Q`` after specialising ``q`` to a rational number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence, Union

from qflag.laurent import LaurentPoly

QScalar = LaurentPoly
Scalar = Union[LaurentPoly, Fraction]
Word = tuple[int, ...]

Q = LaurentPoly.monomial(1)
Q_INV = LaurentPoly.monomial(-1)


class ConfluenceError(RuntimeError):
    """The rewriting system failed its overlap self-test."""


class QMatrixAlgebra:
    """Rewriting engine for quantum ``m x n`` matrices.

    ``q=None`` keeps ``q`` symbolic; a rational ``q`` gives the specialised
    algebra with exact rational coefficients.
    """

    def __init__(self, m: int, n: int, q: int | Fraction | None = None,
                 check_confluence: bool = True) -> None:
        if m < 1 or n < 1:
            raise ValueError("m, n >= 1 required")
        self.m, self.n = m, n
        self.ngens = m * n
        self.symbolic = q is None
        if self.symbolic:
            self.one: Scalar = LaurentPoly.const(1)
            self.q: Scalar = Q
            self.q_inv: Scalar = Q_INV
        else:
            q = Fraction(q)
            if q == 0 or q in (1, -1):
                raise ValueError("q must be nonzero and not a root of unity")
            self.one, self.q, self.q_inv = Fraction(1), q, 1 / q
        self._cache: dict[tuple[Word, int], dict[Word, Scalar]] = {}
        self._rules = {(b, a): self._rule(b, a)
                       for b in range(self.ngens) for a in range(b)}
        if check_confluence:
            bad = self.confluence_failures()
            if bad:
                raise ConfluenceError(f"overlaps failing to resolve: {bad[:5]}")

    # -- generators ---------------------------------------------------------
    def gen(self, i: int, j: int) -> int:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError(f"x_{i}{j} outside a {self.m}x{self.n} matrix")
        return (i - 1) * self.n + (j - 1)

    def pos(self, g: int) -> tuple[int, int]:
        return g // self.n + 1, g % self.n + 1

    def gen_name(self, g: int) -> str:
        i, j = self.pos(g)
        return f"x{i}{j}" if max(self.m, self.n) < 10 else f"x{i}_{j}"

    def _rule(self, b: int, a: int) -> list[tuple[Scalar, Word]]:
        """Normal form of ``x_b x_a`` for ``b > a``."""
        i, j = self.pos(a)
        k, l = self.pos(b)
        if i == k or j == l:
            return [(self.q_inv, (a, b))]
        if j > l:
            return [(self.one, (a, b))]
        return [(self.one, (a, b)),
                (-(self.q - self.q_inv), (self.gen(i, l), self.gen(k, j)))]

    def relation_table(self) -> dict[tuple[int, int], list[tuple[Scalar, Word]]]:
        return dict(self._rules)

    # -- multiplication -----------------------------------------------------
    def mul_word_gen(self, word: Word, g: int) -> dict[Word, Scalar]:
        """Normal form of ``word * x_g``; ``word`` must already be PBW-ordered."""
        if not word or word[-1] <= g:
            return {word + (g,): self.one}
        key = (word, g)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        prefix, h = word[:-1], word[-1]
        out: dict[Word, Scalar] = {}
        for c, (a1, a2) in self._rules[(h, g)]:
            for w1, c1 in self.mul_word_gen(prefix, a1).items():
                for w2, c2 in self.mul_word_gen(w1, a2).items():
                    _acc(out, w2, c * c1 * c2)
        self._cache[key] = out
        return out

    def mul_terms(self, left: Mapping[Word, Scalar], right: Mapping[Word, Scalar]) -> dict[Word, Scalar]:
        out: dict[Word, Scalar] = {}
        for u, cu in left.items():
            for v, cv in right.items():
                partial = {u: cu * cv}
                for g in v:
                    nxt: dict[Word, Scalar] = {}
                    for w, c in partial.items():
                        for w2, c2 in self.mul_word_gen(w, g).items():
                            _acc(nxt, w2, c * c2)
                    partial = nxt
                for w, c in partial.items():
                    _acc(out, w, c)
        return out

    def reduce_word(self, word: Iterable[int]) -> dict[Word, Scalar]:
        """Normal form of an arbitrary product of generators, reduced left to right."""
        partial: dict[Word, Scalar] = {(): self.one}
        for g in word:
            nxt: dict[Word, Scalar] = {}
            for w, c in partial.items():
                for w2, c2 in self.mul_word_gen(w, g).items():
                    _acc(nxt, w2, c * c2)
            partial = nxt
        return partial

    def element(self, terms: Mapping[Word, Scalar]) -> NCPolynomial:
        return NCPolynomial(self, terms)

    def generator(self, i: int, j: int) -> NCPolynomial:
        return NCPolynomial(self, {(self.gen(i, j),): self.one})

    def word_element(self, word: Sequence[int]) -> NCPolynomial:
        return NCPolynomial(self, self.reduce_word(word))

    # -- diamond lemma ------------------------------------------------------
    def confluence_failures(self) -> list[tuple[int, int, int]]:
        """Overlaps ``x_c x_b x_a`` (``c > b > a``) whose two reductions disagree."""
        bad = []
        for a, b, c in combinations(range(self.ngens), 3):
            left: dict[Word, Scalar] = {}
            for coef, w in self._rules[(c, b)]:
                for w2, c2 in self.reduce_word(w + (a,)).items():
                    _acc(left, w2, coef * c2)
            right: dict[Word, Scalar] = {}
            for coef, w in self._rules[(b, a)]:
                for w2, c2 in self.reduce_word((c,) + w).items():
                    _acc(right, w2, coef * c2)
            if left != right:
                bad.append((c, b, a))
        return bad


def _acc(out: dict, key, value) -> None:
    v = out.get(key)
    v = value if v is None else v + value
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class NCPolynomial:
    """An element of a :class:`QMatrixAlgebra`, always in PBW normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QMatrixAlgebra, terms: Mapping[Word, Scalar] | None = None) -> None:
        self.algebra = algebra
        clean: dict[Word, Scalar] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if any(x > y for x, y in zip(w, w[1:])):
                for w2, c2 in algebra.reduce_word(w).items():
                    _acc(clean, w2, c * c2)
            else:
                _acc(clean, w, c)
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: NCPolynomial) -> NCPolynomial:
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NCPolynomial(self.algebra, out)

    def __neg__(self) -> NCPolynomial:
        return NCPolynomial(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: NCPolynomial) -> NCPolynomial:
        return self + (-other)

    def __mul__(self, other) -> NCPolynomial:
        if isinstance(other, NCPolynomial):
            return NCPolynomial(self.algebra, self.algebra.mul_terms(self.terms, other.terms))
        return NCPolynomial(self.algebra, {w: c * other for w, c in self.terms.items()})

    def __rmul__(self, scalar) -> NCPolynomial:
        return NCPolynomial(self.algebra, {w: scalar * c for w, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NCPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def exponent_vector(self, word: Word) -> tuple[int, ...]:
        e = [0] * self.algebra.ngens
        for g in word:
            e[g] += 1
        return tuple(e)

    def specialize(self, q: int | Fraction) -> dict[Word, Fraction]:
        out: dict[Word, Fraction] = {}
        for w, c in self.terms.items():
            v = c.evaluate(q) if isinstance(c, LaurentPoly) else Fraction(c)
            if v:
                out[w] = v
        return out

    def evaluate_commutative(self, matrix: Sequence[Sequence[int | Fraction]]) -> Fraction:
        """Value at ``q = 1`` with the generators replaced by the entries of ``matrix``."""
        alg = self.algebra
        total = Fraction(0)
        for w, c in self.specialize(1).items():
            prod = c
            for g in w:
                i, j = alg.pos(g)
                prod *= matrix[i - 1][j - 1]
            total += prod
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for w, c in sorted(self.terms.items()):
            mono = "".join(alg.gen_name(g) for g in w) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def build_qmatrix_algebra(m: int, n: int, q: int | Fraction | None = None) -> QMatrixAlgebra:
    return QMatrixAlgebra(m, n, q)


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


@dataclass(frozen=True)
class QuantumMinor:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.cols):
            raise ValueError("row and column sets must have equal size")
        for s in (self.rows, self.cols):
            if any(a >= b for a, b in zip(s, s[1:])):
                raise ValueError(f"index set {s} must be strictly increasing")


def quantum_minor(algebra: QMatrixAlgebra, rows: Sequence[int], cols: Sequence[int]) -> NCPolynomial:
    """``sum_sigma (-q)^inv(sigma) x_{r1 c_sigma(1)} ... x_{rk c_sigma(k)}``."""
    minor = QuantumMinor(tuple(rows), tuple(cols))
    if any(not 1 <= r <= algebra.m for r in minor.rows) or any(not 1 <= c <= algebra.n for c in minor.cols):
        raise IndexError(f"minor {minor} outside a {algebra.m}x{algebra.n} matrix")
    out: dict[Word, Scalar] = {}
    minus_q = -algebra.q
    for perm in permutations(range(len(minor.cols))):
        coef = algebra.one
        for _ in range(_inversions(perm)):
            coef = coef * minus_q
        word = [algebra.gen(r, minor.cols[p]) for r, p in zip(minor.rows, perm)]
        for w, c in algebra.reduce_word(word).items():
            _acc(out, w, coef * c)
    return NCPolynomial(algebra, out)


def quantum_determinant(algebra: QMatrixAlgebra) -> NCPolynomial:
    if algebra.m != algebra.n:
        raise ValueError("quantum determinant needs a square algebra")
    idx = tuple(range(1, algebra.n + 1))
    return quantum_minor(algebra, idx, idx)


def is_central(element: NCPolynomial) -> bool:
    alg = element.algebra
    for i in range(1, alg.m + 1):
        for j in range(1, alg.n + 1):
            x = alg.generator(i, j)
            if not (element * x - x * element).is_zero():
                return False
    return True
