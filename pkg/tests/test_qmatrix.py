from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qflag.laurent import LaurentPoly
from qflag.qgrass import (
    ConfluenceError,
    QMatrixAlgebra,
    QuantumMinor,
    build_qmatrix_algebra,
    is_central,
    quantum_determinant,
    quantum_minor,
)
from qflag.verify import classical_minor

q = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)


def term_dict(alg, pairs):
    """{'x11x22': coeff} -> PBW terms."""
    out = {}
    for name, c in pairs.items():
        word = tuple(alg.gen(int(name[k + 1]), int(name[k + 2])) for k in range(0, len(name), 3))
        out[word] = c
    return out


def test_diagonal_rewrite():
    A = build_qmatrix_algebra(2, 2)
    got = A.word_element([A.gen(2, 2), A.gen(1, 1)])
    assert got.terms == term_dict(A, {"x11x22": ONE, "x12x21": -(q - q ** -1)})


def test_row_and_column_rewrites():
    A = build_qmatrix_algebra(2, 2)
    assert A.word_element([A.gen(1, 2), A.gen(1, 1)]).terms == term_dict(A, {"x11x12": q ** -1})
    assert A.word_element([A.gen(2, 1), A.gen(1, 1)]).terms == term_dict(A, {"x11x21": q ** -1})
    assert A.word_element([A.gen(2, 1), A.gen(1, 2)]).terms == term_dict(A, {"x12x21": ONE})


def test_one_by_one_is_polynomial_ring():
    A = build_qmatrix_algebra(1, 1)
    x = A.generator(1, 1)
    assert (x * x * x).terms == {(0, 0, 0): ONE}


@pytest.mark.parametrize("m,n", [(m, n) for m in (1, 2, 3) for n in (1, 2, 3)])
def test_confluence(m, n):
    assert build_qmatrix_algebra(m, n).confluence_failures() == []


def test_confluence_detects_a_wrong_relation():
    A = QMatrixAlgebra(2, 3, check_confluence=False)
    a, b = A.gen(1, 1), A.gen(2, 2)
    A._rules[(b, a)] = [(ONE, (a, b)), (-(q + q ** -1), (A.gen(1, 2), A.gen(2, 1)))]
    A._cache.clear()
    assert A.confluence_failures()


def test_invalid_parameters():
    with pytest.raises(ValueError):
        build_qmatrix_algebra(0, 2)
    with pytest.raises(ValueError):
        QMatrixAlgebra(2, 2, q=1)
    with pytest.raises(IndexError):
        build_qmatrix_algebra(2, 2).gen(3, 1)


def test_minor_examples():
    A = build_qmatrix_algebra(2, 2)
    assert quantum_minor(A, [1], [2]) == A.generator(1, 2)
    det = quantum_determinant(A)
    assert det.terms == term_dict(A, {"x11x22": ONE, "x12x21": -q})
    # the other expansion order gives the same element
    other = A.word_element([A.gen(2, 2), A.gen(1, 1)]) - A.word_element([A.gen(1, 2), A.gen(2, 1)]) * q ** -1
    assert other == det


def test_minor_validation():
    A = build_qmatrix_algebra(2, 3)
    with pytest.raises(ValueError):
        QuantumMinor((1, 2), (1,))
    with pytest.raises(ValueError):
        quantum_minor(A, [2, 1], [1, 2])
    with pytest.raises(IndexError):
        quantum_minor(A, [1, 2], [3, 4])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_determinant_central(n):
    assert is_central(quantum_determinant(build_qmatrix_algebra(n, n)))


def test_non_square_minor_not_central():
    A = build_qmatrix_algebra(2, 3)
    assert not is_central(quantum_minor(A, [1, 2], [1, 2]))


def test_determinant_specializes_to_leibniz():
    A = build_qmatrix_algebra(3, 3)
    det = quantum_determinant(A)
    rng = random.Random(7)
    for _ in range(5):
        M = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        assert det.evaluate_commutative(M) == classical_minor(M, (1, 2, 3))


def test_specialized_algebra_agrees_with_symbolic():
    S = build_qmatrix_algebra(2, 3)
    N = build_qmatrix_algebra(2, 3, q=2)
    rng = random.Random(3)
    for _ in range(20):
        word = [rng.randrange(6) for _ in range(4)]
        sym = S.word_element(word).specialize(2)
        num = N.word_element(word).terms
        assert sym == num


def test_quantum_plane_count():
    # PBW words of degree d in mn generators: C(mn+d-1, d); products land inside them
    A = build_qmatrix_algebra(2, 2)
    x = [A.generator(i, j) for i in (1, 2) for j in (1, 2)]
    prod = x[3] * x[2] * x[1] * x[0]
    assert all(len(w) == 4 and list(w) == sorted(w) for w in prod.terms)


def test_scalar_multiplication_and_equality():
    A = build_qmatrix_algebra(2, 2)
    x = A.generator(1, 1)
    assert (x * Fraction(2)) == (2 * x)
    assert (x - x).is_zero()
    assert hash(x) == hash(A.generator(1, 1))
