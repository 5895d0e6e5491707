from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from qflag.charhilb import flag_hilbert_series, weyl_dim
from qflag.laurent import LaurentPoly
from qflag.posets import count_decreasing_chains
from qflag.qgrass import build_qmatrix_algebra, quantum_grassmannian
from qflag.rootsys import all_minuscule_cases, build_root_datum
from qflag.weylgroup import WeylElement, build_minuscule_poset

TYPES = ["A3", "B3", "C3", "D4", "G2", "F4", "E6"]
MINUSCULE = all_minuscule_cases(6)

laurent = st.dictionaries(
    st.integers(-3, 3), st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=4
).map(LaurentPoly)


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a + b) - b == a


@given(laurent, st.integers(1, 4))
def test_laurent_evaluation_is_a_homomorphism(a, x):
    assert (a * a).evaluate(x) == a.evaluate(x) ** 2


ALG = build_qmatrix_algebra(2, 2)
words = st.lists(st.integers(0, 3), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(words, words, words)
def test_qmatrix_multiplication_associative(u, v, w):
    a, b, c = (ALG.word_element(x) for x in (u, v, w))
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(words, words)
def test_qmatrix_specializes_to_commutative(u, v):
    a, b = ALG.word_element(u), ALG.word_element(v)
    M = [[2, 3], [5, 7]]
    assert (a * b).evaluate_commutative(M) == (b * a).evaluate_commutative(M)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_weyl_action_preserves_inner_product(name, data):
    d = build_root_datum(name)
    word = data.draw(st.lists(st.integers(1, d.rank), max_size=6))
    coords = st.lists(st.integers(-3, 3), min_size=d.rank, max_size=d.rank)
    x, y = d.weight(data.draw(coords)), d.weight(data.draw(coords))
    w = WeylElement.from_word(d, word)
    assert d.inner(w.act(x), w.act(y)) == d.inner(x, y)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(MINUSCULE), st.integers(0, 4))
def test_chain_counts_are_weyl_dimensions(case, n):
    letter, rank, s = case
    d = build_root_datum(letter, rank)
    P = build_minuscule_poset(d, s).to_finite_poset()
    assert count_decreasing_chains(P, n) == weyl_dim(d, n * d.fundamental_weight(s))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(MINUSCULE), st.integers(0, 5))
def test_series_coefficients_monotone(case, n):
    letter, rank, s = case
    coeffs = flag_hilbert_series(build_root_datum(letter, rank), s).coefficients(n + 2)
    assert coeffs[0] == 1 and coeffs[n] <= coeffs[n + 1]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 4), (2, 5), (1, 4)]), st.data())
def test_straighten_round_trip(mn, data):
    G = quantum_grassmannian(*mn)
    I = data.draw(st.sampled_from(G.subsets))
    J = data.draw(st.sampled_from(G.subsets))
    terms = G.straighten(I, J)
    total = None
    for key, c in terms.items():
        part = G.product(key) * c
        total = part if total is None else total + part
    assert total == G.product((I, J))
    for (A, B), c in terms.items():
        assert all(a >= b for a, b in zip(A, B))
        assert c.evaluate(1) == int(c.evaluate(1))


@given(st.fractions(min_value=Fraction(1, 3), max_value=3))
def test_laurent_inverse(x):
    p = LaurentPoly.monomial(2, x)
    assert (p * p.inverse()) == LaurentPoly.const(1)
