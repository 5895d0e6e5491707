from __future__ import annotations

from math import comb

import pytest

from qflag.posets import FinitePoset
from qflag.rootsys import RootSystemError, build_root_datum
from qflag.weylgroup import (
    BudgetError,
    WeylElement,
    bruhat_leq_general,
    bruhat_poset,
    build_minuscule_poset,
    enumerate_group,
    symmetric_group_bruhat,
)

GROUP_ORDERS = {"A1": 2, "A3": 24, "A4": 120, "B3": 48, "C3": 48, "D4": 192, "G2": 12, "B2": 8}


@pytest.mark.parametrize("name,order", sorted(GROUP_ORDERS.items()))
def test_group_orders(name, order):
    elems = enumerate_group(build_root_datum(name))
    assert len(elems) == order
    assert len(set(elems)) == order


def test_longest_element_length():
    for name in ("A3", "B3", "D4", "G2"):
        d = build_root_datum(name)
        assert max(w.length() for w in enumerate_group(d)) == len(d.positive_roots)


def test_length_matches_word_length_in_bfs():
    elems = enumerate_group(build_root_datum("B3"))
    assert all(len(w.word) == w.length() for w in elems)


def test_reflections_square_to_identity():
    d = build_root_datum("G2")
    e = WeylElement.identity(d)
    for a in d.positive_roots:
        r = WeylElement.reflection(d, a)
        assert r * r == e
        assert r.length() % 2 == 1


def test_words_compose_left_to_right():
    d = build_root_datum("A2")
    w = WeylElement.from_word(d, (1, 2))
    assert w == WeylElement.from_word(d, (1,)) * WeylElement.from_word(d, (2,))
    assert w != WeylElement.from_word(d, (2, 1))
    lam = d.fundamental_weight(1)
    # s1 s2 omega_1 = s1 omega_1
    assert w.act(lam) == WeylElement.from_word(d, (1,)).act(lam)


def test_full_group_budget():
    with pytest.raises(BudgetError):
        enumerate_group(build_root_datum("A5"))


def test_bruhat_order_via_covers_matches_subwords():
    # oracle: transitive closure of w -> s_alpha w with length + 1
    d = build_root_datum("A3")
    elems = enumerate_group(d)
    idx = {w: k for k, w in enumerate(elems)}
    refl = [WeylElement.reflection(d, a) for a in d.positive_roots]
    covers = []
    for w in elems:
        for r in refl:
            v = r * w
            if v.length() == w.length() + 1:
                covers.append((idx[w], idx[v]))
    closure = FinitePoset.from_covers(len(elems), covers)
    P = bruhat_poset(d)
    assert closure.leq == P.leq


def test_symmetric_group_sizes():
    assert symmetric_group_bruhat(3).size == 6
    with pytest.raises(RootSystemError):
        symmetric_group_bruhat(1)


ORBIT_SIZES = [
    ("A3", 2, 6), ("A5", 3, 20), ("A6", 2, comb(7, 2)), ("B4", 4, 16), ("C4", 1, 8),
    ("D5", 1, 10), ("D5", 5, 16), ("D6", 5, 32), ("E6", 1, 27), ("E6", 6, 27), ("E7", 7, 56),
]


@pytest.mark.parametrize("name,s,size", ORBIT_SIZES)
def test_minuscule_orbit_sizes(name, s, size):
    assert len(build_minuscule_poset(build_root_datum(name), s)) == size


@pytest.mark.parametrize("name,s,dim", [("A3", 2, 4), ("E6", 1, 16), ("E7", 7, 27), ("D5", 5, 10), ("B3", 3, 6)])
def test_maximal_length_is_dim_of_flag(name, s, dim):
    assert build_minuscule_poset(build_root_datum(name), s).max_length == dim


def test_a3_omega2_layers():
    P = build_minuscule_poset(build_root_datum("A3"), 2)
    assert P.layer_sizes() == [1, 1, 2, 1, 1]
    assert P.minimum == 0 and P.maximum == 5


def test_non_minuscule_rejected():
    with pytest.raises(RootSystemError, match="minuscule"):
        build_minuscule_poset(build_root_datum("C3"), 2)
    with pytest.raises(RootSystemError):
        build_minuscule_poset(build_root_datum("E8"), 8)


MINUSCULE_SMALL = [("A3", 1), ("A3", 2), ("A4", 2), ("B3", 3), ("C3", 1), ("D4", 1), ("D4", 4), ("B4", 4), ("C4", 1)]


@pytest.mark.parametrize("name,s", MINUSCULE_SMALL)
def test_orbit_poset_agrees_with_full_bruhat_order(name, s):
    d = build_root_datum(name)
    P = build_minuscule_poset(d, s)
    reps = [e.rep for e in P.elements]
    assert all(r.is_min_coset_rep(P.S) for r in reps)
    assert all(e.rep.length() == e.length for e in P.elements)
    for x in range(len(P)):
        for y in range(len(P)):
            assert P.leq(x, y) == bruhat_leq_general(reps[x], reps[y])


@pytest.mark.parametrize("name,s", MINUSCULE_SMALL)
def test_coset_representatives_exhaust_quotient(name, s):
    d = build_root_datum(name)
    P = build_minuscule_poset(d, s)
    S = P.S
    mins = {w for w in enumerate_group(d) if w.is_min_coset_rep(S)}
    assert mins == {e.rep for e in P.elements}


@pytest.mark.parametrize("name,s", MINUSCULE_SMALL + [("E6", 1), ("D6", 6)])
def test_covers_are_simple_reflections(name, s):
    d = build_root_datum(name)
    P = build_minuscule_poset(d, s)
    F = P.to_finite_poset()
    labelled = {(a, b) for a, b, _ in P.covers}
    assert labelled == set(F.covers)
    for a, b, i in P.covers:
        assert P.elements[b].rep == P.elements[a].rep.left_mul(i)
        assert P.elements[b].length == P.elements[a].length + 1


@pytest.mark.parametrize("name,s", MINUSCULE_SMALL + [("E6", 1), ("E7", 7)])
def test_diamond_property_upward_and_downward(name, s):
    d = build_root_datum(name)
    P = build_minuscule_poset(d, s)
    by_rep = {e.rep: e.index for e in P.elements}
    for e in P.elements:
        w = e.rep
        for sign in (1, -1):
            movers = [i for i in range(1, d.rank + 1)
                      if w.left_mul(i) in by_rep and P.elements[by_rep[w.left_mul(i)]].length == e.length + sign]
            for i in movers:
                for j in movers:
                    if i == j:
                        continue
                    v = w.left_mul(j).left_mul(i)
                    assert v == w.left_mul(i).left_mul(j)
                    assert v in by_rep
                    assert P.elements[by_rep[v]].length == e.length + 2 * sign


def test_order_reverses_weight_dominance():
    d = build_root_datum("D5")
    P = build_minuscule_poset(d, 1)
    for x in range(len(P)):
        for y in range(len(P)):
            wx, wy = P.elements[x].weight, P.elements[y].weight
            assert P.leq(x, y) == d.dominance_leq(wy, wx)


def test_to_json_round_trip_fields():
    P = build_minuscule_poset(build_root_datum("A2"), 1)
    j = P.to_json()
    assert j["type"] == "A2" and len(j["elements"]) == 3
    assert all(isinstance(c, str) for e in j["elements"] for c in e["weight"])
