from __future__ import annotations

from fractions import Fraction

import pytest

from qflag.laurent import LaurentPoly
from qflag.linalg import RowReducer, inverse, mat_vec, rank, solve
from qflag.polys import UPoly, int_poly_divmod_one_minus_tk, int_poly_mul

q = LaurentPoly.monomial(1)


def test_laurent_ring_ops():
    a = q + q ** -1
    assert a * a == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert (a - a).is_zero()
    assert (q - q ** -1) * (q + q ** -1) == q ** 2 - q ** -2
    assert LaurentPoly.monomial(Fraction(1, 3)) ** 3 == q


def test_laurent_units():
    assert (3 * q ** 2).inverse() == LaurentPoly.monomial(-2, Fraction(1, 3))
    with pytest.raises(ZeroDivisionError):
        (q + 1).inverse()
    assert (q ** 3 + q) / q == q ** 2 + 1


def test_laurent_evaluate_and_invert():
    p = 2 * q ** 2 - q ** -1 + 5
    assert p.evaluate(2) == Fraction(2 * 4 - Fraction(1, 2) + 5)
    assert p.substitute_inverse() == 2 * q ** -2 - q + 5
    assert LaurentPoly.monomial(Fraction(1, 2)).evaluate(1) == 1
    with pytest.raises(ValueError):
        LaurentPoly.monomial(Fraction(1, 2)).evaluate(2)


def test_laurent_no_zero_terms_and_format():
    p = LaurentPoly({1: 1, 2: 0})
    assert p.terms == {Fraction(1): Fraction(1)}
    assert str(q ** -1 - q) == "q^(-1) - q"
    assert (q ** 2).exponent_list() == [["2", "1"]]


def test_upoly():
    p = UPoly([1, 2, 1])
    assert p == UPoly([1, 1]) * UPoly([1, 1])
    assert p(3) == 16
    assert p.compose_affine(-1, -2) == UPoly([1, 2, 1])  # (-x-2+1)^2 = (x+1)^2
    assert UPoly([0, 0]).degree == -1


def test_int_poly_division():
    num = int_poly_mul([1, 1], [1, -1])  # 1 - t^2
    quot, exact = int_poly_divmod_one_minus_tk(num, 2)
    assert exact and quot == [1]
    _, exact = int_poly_divmod_one_minus_tk([1, 1], 1)
    assert not exact


def test_inverse_and_solve():
    A = [[2, 1], [1, 1]]
    inv = inverse(A)
    assert mat_vec(inv, mat_vec(A, [3, 5])) == (3, 5)
    with pytest.raises(ValueError):
        inverse([[1, 2], [2, 4]])
    cols = [{"a": 1, "b": 1}, {"b": 1, "c": 2}]
    assert solve(cols, {"a": 2, "b": 5, "c": 6}) == [2, 3]
    assert solve(cols, {"c": 1, "a": 1}) is None


def test_row_reducer_rank():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}, {0: 2, 1: 2}]
    assert rank(rows) == 2
    r = RowReducer()
    assert r.add({5: Fraction(1, 2)}) and not r.add({5: 3})
    assert r.copy().rank == 1
