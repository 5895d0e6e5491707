from __future__ import annotations

from collections import Counter

import pytest

from qflag.charhilb import (
    HilbertSeries,
    UnsupportedWeightError,
    big_cell_hilbert_series,
    bn_dn_coincidence_check,
    chain_weight_multiset,
    character_identity_report,
    d_partner,
    dimension_polynomial,
    flag_hilbert_series,
    freudenthal_multiplicities,
    gkdim,
    gorenstein_certificate,
    reciprocity_report,
    schubert_hilbert_function,
    series_from_polynomial,
    verify_character_identity,
    weyl_dim,
)
from qflag.polys import UPoly
from qflag.rootsys import build_root_datum
from qflag.weylgroup import build_minuscule_poset, enumerate_group


def test_a3_omega2_series():
    H = flag_hilbert_series(build_root_datum("A3"), 2)
    assert H == HilbertSeries((1, 1), (1,) * 5)
    assert str(H) == "(1+t)/(1-t)^5"
    assert H.coefficients(5) == [1, 6, 20, 50, 105]
    assert gkdim(H) == 5
    cert = gorenstein_certificate(H)
    assert cert.holds and (cert.m, cert.sign) == (4, -1)


# Classical Hilbert series of homogeneous coordinate rings.
CLASSICAL_SERIES = [
    ("A4", 1, (1,), 5),               # P^4
    ("A4", 2, (1, 3, 1), 7),          # G(2,5)
    ("D5", 1, (1, 1), 9),             # 8-dimensional quadric
    ("B3", 1, (1, 1), 6),             # 5-dimensional quadric
    ("E6", 1, (1, 10, 28, 28, 10, 1), 17),
    ("C3", 1, (1,), 6),               # P^5
]


@pytest.mark.parametrize("name,s,num,poles", CLASSICAL_SERIES)
def test_classical_series(name, s, num, poles):
    H = flag_hilbert_series(build_root_datum(name), s)
    assert H == HilbertSeries(num, (1,) * poles)


@pytest.mark.parametrize("name,s", [("A5", 3), ("D6", 6), ("E7", 7), ("B4", 4), ("B4", 1), ("C4", 1)])
def test_series_coefficients_are_weyl_dimensions(name, s):
    d = build_root_datum(name)
    H = flag_hilbert_series(d, s)
    lam = d.fundamental_weight(s)
    assert H.coefficients(6) == [weyl_dim(d, k * lam) for k in range(6)]


@pytest.mark.parametrize("name,s", [("A3", 2), ("D5", 5), ("E6", 1), ("E7", 7), ("B3", 3)])
def test_gkdim_is_dim_plus_one(name, s):
    d = build_root_datum(name)
    P = build_minuscule_poset(d, s)
    assert gkdim(flag_hilbert_series(d, s)) == P.max_length + 1


def test_series_from_polynomial_rejects_non_integral_h():
    with pytest.raises(ValueError):
        series_from_polynomial(UPoly([0, 0.5]))


def test_gorenstein_negative_and_signs():
    assert not gorenstein_certificate(HilbertSeries((1, 2), (1, 1))).holds
    e7 = gorenstein_certificate(flag_hilbert_series(build_root_datum("E7"), 7))
    assert e7.holds and (e7.m, e7.sign) == (18, 1)
    d5 = gorenstein_certificate(flag_hilbert_series(build_root_datum("D5"), 5))
    assert (d5.m, d5.sign) == (8, -1)
    e6 = gorenstein_certificate(flag_hilbert_series(build_root_datum("E6"), 1))
    assert e6.m == 12


def test_big_cell_series():
    assert big_cell_hilbert_series(build_root_datum("A3"), 2) == HilbertSeries((1,), (1,) * 4)
    assert big_cell_hilbert_series(build_root_datum("B4"), 1) == HilbertSeries((1,), (1,) * 7)
    # C_n / omega_1 is not cominuscule: one generator sits in degree 2
    assert big_cell_hilbert_series(build_root_datum("C3"), 1) == HilbertSeries((1,), (1, 1, 1, 1, 2))
    assert gorenstein_certificate(big_cell_hilbert_series(build_root_datum("C3"), 1)).holds


def test_unsupported_weights():
    with pytest.raises(UnsupportedWeightError):
        flag_hilbert_series(build_root_datum("C3"), 2)
    with pytest.raises(UnsupportedWeightError):
        flag_hilbert_series(build_root_datum("F4"), 1)
    with pytest.raises(UnsupportedWeightError):
        reciprocity_report(build_root_datum("B3"), 3)


def test_freudenthal_small_cases():
    # sl_3 adjoint: zero weight with multiplicity 2
    d = build_root_datum("A2")
    m = freudenthal_multiplicities(d, d.weight((1, 1)))
    assert sum(m.values()) == 8 and m[(0, 0)] == 2
    g2 = build_root_datum("G2")
    m = freudenthal_multiplicities(g2, g2.weight((0, 1)))
    assert sum(m.values()) == 14 and m[(0, 0)] == 2


def test_freudenthal_weyl_invariance():
    d = build_root_datum("B3")
    lam = d.weight((1, 0, 1))
    m = freudenthal_multiplicities(d, lam)
    assert sum(m.values()) == weyl_dim(d, lam)
    for w in enumerate_group(d)[:20]:
        for mu, k in m.items():
            assert m[w.act(d.weight(mu)).coords] == k


def test_chain_weight_multiset_is_character():
    d = build_root_datum("A3")
    P = build_minuscule_poset(d, 2)
    lam = d.fundamental_weight(2)
    for n in (1, 2, 3):
        assert dict(chain_weight_multiset(P, n)) == freudenthal_multiplicities(d, n * lam)
    assert chain_weight_multiset(P, 0) == Counter({(0, 0, 0): 1})


@pytest.mark.parametrize("name,s", [("D4", 1), ("B4", 4), ("C4", 1), ("A4", 2), ("B2", 2)])
def test_character_identity_weight_level(name, s):
    d = build_root_datum(name)
    rep = character_identity_report(d, s, 3)
    assert rep.weight_level_checked and rep.weight_level_ok and rep.holds


def test_character_identity_dimension_level_e7():
    rep = character_identity_report(build_root_datum("E7"), 7, 4, full=False)
    assert rep.holds and rep.chain_count == weyl_dim(build_root_datum("E7"), 4 * build_root_datum("E7").fundamental_weight(7))
    assert verify_character_identity(build_root_datum("A2"), 1, 2)


def test_schubert_hilbert_function_p2():
    d = build_root_datum("A3")
    P = build_minuscule_poset(d, 2)
    w = next(e.index for e in P.elements if e.length == 2)
    # the length-2 Schubert variety is a plane
    assert [schubert_hilbert_function(d, 2, w, n) for n in range(4)] == [1, 3, 6, 10]
    assert schubert_hilbert_function(d, 2, 0, 5) == 1


@pytest.mark.parametrize("name,s", [("A3", 2), ("A6", 3), ("D5", 1), ("D6", 6), ("E6", 1), ("E7", 7)])
def test_reciprocity(name, s):
    rep = reciprocity_report(build_root_datum(name), s)
    assert rep.zeros_ok and rep.functional_equation_ok
    assert rep.complement_counts_symmetric


def test_dimension_polynomial_zeros_type_a():
    d = build_root_datum("A3")
    p = dimension_polynomial(d, 2)
    assert [p(-k) for k in (1, 2, 3)] == [0, 0, 0] and p(1) == 6


def test_bn_dn_coincidences():
    assert all(bn_dn_coincidence_check(n) for n in (2, 3, 4, 5))
    d, s = d_partner(2)
    assert (d.name, s) == ("A3", 3)
