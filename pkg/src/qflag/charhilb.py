"""Characters, Hilbert series and the Gorenstein functional equation.

Covers the Weyl dimension formula, Freudenthal multiplicities, the
decreasing-chain character identity, Hilbert series of flag manifolds,
Schubert varieties and big cells, GK dimension, and the palindromicity
certificate ``H(t) = sign * t^(-m) * H(1/t)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from qflag.laurent import LaurentPoly
from qflag.polys import UPoly, int_poly_divmod_one_minus_tk, int_poly_mul, trim
from qflag.posets import count_decreasing_chains
from qflag.rootsys import (RootDatum, RootSystemError, Weight, build_root_datum, levi_complement_roots,
                           levi_roots, relative_height)
from qflag.weylgroup import MinusculePoset, build_minuscule_poset

FULL_CHARACTER_MAX_RANK = 4


class UnsupportedWeightError(ValueError):
    """The requested weight is outside the cases where the series is supported."""


def weyl_dim(datum: RootDatum, mu: Weight) -> int:
    """``prod (mu + rho, alpha^vee) / (rho, alpha^vee)`` over positive roots."""
    datum._check(mu)
    if not (mu.is_dominant() and mu.is_integral()):
        raise ValueError(f"{mu!r} is not dominant integral")
    num = Fraction(1)
    rho = datum.rho
    for a in datum.positive_roots:
        num *= datum.coroot_pairing(mu + rho, a) / datum.coroot_pairing(rho, a)
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# Freudenthal


def freudenthal_multiplicities(datum: RootDatum, highest: Weight) -> dict[tuple, int]:
    """Weight multiplicities of ``V(highest)``, keyed by fundamental coordinates."""
    datum._check(highest)
    if not (highest.is_dominant() and highest.is_integral()):
        raise ValueError(f"{highest!r} is not dominant integral")
    r = datum.rank
    G = datum.weight_gram
    roots = [(a.height(), datum.root_to_weight(a).coords, a) for a in datum.positive_roots]
    simple = [datum.root_to_weight(datum.simple_root(i)).coords for i in range(1, r + 1)]

    def form(x, y):
        return sum(G[i][j] * x[i] * y[j] for i in range(r) if x[i] for j in range(r) if y[j])

    lam = tuple(highest.coords)
    rho = (Fraction(1),) * r
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    top = form(lam_rho, lam_rho)
    mult: dict[tuple, int] = {lam: 1}
    layer = [lam]
    depth = 0
    while layer:
        depth += 1
        candidates = sorted({tuple(x - s for x, s in zip(mu, si)) for mu in layer for si in simple})
        nxt = []
        for nu in candidates:
            if not datum.dominance_leq(_dominant_conjugate(datum, nu), highest):
                continue
            total = Fraction(0)
            for h, aw, _ in roots:
                j = 1
                while j * h <= depth:
                    shifted = tuple(x + j * y for x, y in zip(nu, aw))
                    m = mult.get(shifted)
                    if m:
                        total += m * form(shifted, aw)
                    j += 1
            nu_rho = tuple(a + b for a, b in zip(nu, rho))
            denom = top - form(nu_rho, nu_rho)
            value = 2 * total / denom
            assert value.denominator == 1 and value >= 0
            if value:
                mult[nu] = int(value)
                nxt.append(nu)
        layer = nxt
    return mult


def _dominant_conjugate(datum: RootDatum, coords: tuple) -> Weight:
    mu = list(coords)
    while True:
        i = next((k for k, c in enumerate(mu) if c < 0), None)
        if i is None:
            return Weight(tuple(mu), datum.name)
        c = mu[i]
        mu = [x - c * a for x, a in zip(mu, datum.cartan[i])]


def chain_weight_multiset(poset: MinusculePoset, n: int) -> Counter:
    """Multiset of ``w_1 lambda + ... + w_n lambda`` over decreasing chains in ``poset``."""
    r = poset.datum.rank
    if n == 0:
        return Counter({(Fraction(0),) * r: 1})
    P = poset.to_finite_poset()
    size = len(poset)
    wts = [e.weight.coords for e in poset.elements]
    below = [[y for y in range(size) if P.leq[y][x]] for x in range(size)]
    g = [Counter({wts[x]: 1}) for x in range(size)]
    for _ in range(n - 1):
        new = []
        for x in range(size):
            acc: Counter = Counter()
            for y in below[x]:
                acc.update(g[y])
            new.append(Counter({tuple(a + b for a, b in zip(k, wts[x])): v for k, v in acc.items()}))
        g = new
    total: Counter = Counter()
    for c in g:
        total.update(c)
    return total


@dataclass(frozen=True)
class CharacterIdentityReport:
    datum: str
    s: int
    n: int
    weyl_dimension: int
    chain_count: int
    weight_level_checked: bool
    weight_level_ok: bool | None

    @property
    def holds(self) -> bool:
        return self.weyl_dimension == self.chain_count and self.weight_level_ok is not False

    def to_json(self) -> dict:
        return {"type": self.datum, "s": self.s, "n": self.n,
                "weyl_dim": str(self.weyl_dimension), "chain_count": str(self.chain_count),
                "weight_level_checked": self.weight_level_checked,
                "weight_level_ok": self.weight_level_ok, "holds": self.holds}


def character_identity_report(datum: RootDatum, s: int, n: int,
                              full: bool | None = None) -> CharacterIdentityReport:
    poset = build_minuscule_poset(datum, s)
    lam = datum.fundamental_weight(s)
    dim = weyl_dim(datum, n * lam)
    count = count_decreasing_chains(poset.to_finite_poset(), n)
    if full is None:
        full = datum.rank <= FULL_CHARACTER_MAX_RANK
    ok = None
    if full:
        ok = dict(chain_weight_multiset(poset, n)) == freudenthal_multiplicities(datum, n * lam)
    return CharacterIdentityReport(datum.name, s, n, dim, count, full, ok)


def verify_character_identity(datum: RootDatum, s: int, n: int) -> bool:
    """Decreasing chains of length ``n`` reproduce ``char V(n omega_s)``."""
    return character_identity_report(datum, s, n).holds


# ---------------------------------------------------------------------------
# Dimension polynomial and Hilbert series


def _check_supported(datum: RootDatum, s: int) -> None:
    if not 1 <= s <= datum.rank:
        raise RootSystemError(f"no fundamental weight omega_{s} in {datum.name}")
    if datum.is_minuscule(s) or (datum.type_letter == "B" and s == 1):
        return
    raise UnsupportedWeightError(
        f"omega_{s} of {datum.name} is neither minuscule nor (B_n, omega_1); "
        f"supported minuscule indices: {datum.minuscule_weights() or 'none'}")


@dataclass(frozen=True)
class DimensionPolynomial:
    """``p(n) = dim V(n omega_s) = prod (slope*n + shift) / denom``.

    One factor per positive root ``alpha`` with ``(omega_s, alpha^vee) = slope > 0``;
    ``shift = denom = (rho, alpha^vee)``. For minuscule weights every slope is 1.
    """

    factors: tuple[tuple[Fraction, Fraction, Fraction], ...]

    @property
    def poly(self) -> UPoly:
        p = UPoly([1])
        for slope, shift, denom in self.factors:
            p = p * UPoly([shift / denom, slope / denom])
        return p

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.poly.coeffs

    @property
    def degree(self) -> int:
        return len(self.factors)

    def __call__(self, n: int | Fraction) -> Fraction:
        out = Fraction(1)
        for slope, shift, denom in self.factors:
            out *= (slope * n + shift) / denom
        return out


def dimension_polynomial(datum: RootDatum, s: int) -> DimensionPolynomial:
    lam = datum.fundamental_weight(s)
    factors = []
    for a in datum.positive_roots:
        k = datum.coroot_pairing(lam, a)
        if k:
            c = datum.coroot_pairing(datum.rho, a)
            factors.append((k, c, c))
    return DimensionPolynomial(tuple(factors))


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / prod(1 - t^d for d in denominator_exponents)``, integer numerator."""

    numerator: tuple[int, ...]
    denominator_exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", tuple(trim(self.numerator)))
        object.__setattr__(self, "denominator_exponents",
                           tuple(sorted(self.denominator_exponents)))
        if any(d <= 0 for d in self.denominator_exponents):
            raise ValueError("denominator exponents must be positive")

    def normalized(self) -> HilbertSeries:
        """Cancel every factor ``1 - t^d`` that divides the numerator."""
        num = list(self.numerator)
        dens = list(self.denominator_exponents)
        changed = True
        while changed and num:
            changed = False
            for d in sorted(set(dens), reverse=True):
                q, exact = int_poly_divmod_one_minus_tk(num, d)
                if exact:
                    num = q
                    dens.remove(d)
                    changed = True
                    break
        return HilbertSeries(tuple(num), tuple(dens))

    def coefficients(self, count: int) -> list[int]:
        c = list(self.numerator[:count]) + [0] * max(0, count - len(self.numerator))
        for d in self.denominator_exponents:
            for k in range(d, count):
                c[k] += c[k - d]
        return c

    def denominator_poly(self) -> list[int]:
        out = [1]
        for d in self.denominator_exponents:
            out = int_poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out

    def same_function(self, other: HilbertSeries) -> bool:
        """Equality as rational functions (cross-multiplied)."""
        return (trim(int_poly_mul(self.numerator, other.denominator_poly()))
                == trim(int_poly_mul(other.numerator, self.denominator_poly())))

    def __str__(self) -> str:
        num = _format_int_poly(self.numerator)
        if len(self.numerator) > 1:
            num = f"({num})"
        parts = []
        for d, k in sorted(Counter(self.denominator_exponents).items()):
            base = "(1-t)" if d == 1 else f"(1-t^{d})"
            parts.append(base if k == 1 else f"{base}^{k}")
        if not parts:
            return num
        den = "".join(parts)
        return f"{num}/{den}"

    def to_json(self) -> dict:
        return {"numerator": [str(c) for c in self.numerator],
                "denominator_exponents": [str(d) for d in self.denominator_exponents]}


def _format_int_poly(c: Sequence[int]) -> str:
    if not c:
        return "0"
    terms = []
    for k, a in enumerate(c):
        if not a:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            terms.append(str(a))
        elif a == 1:
            terms.append(mono)
        elif a == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{a}{mono}")
    return "+".join(terms).replace("+-", "-")


def series_from_polynomial(p) -> HilbertSeries:
    """``sum p(n) t^n`` for a polynomial ``p`` of degree ``d``, as ``h(t)/(1-t)^(d+1)``.

    ``h_k = sum_j (-1)^j C(d+1, j) p(k-j)`` (iterated finite differences of p).
    """
    d = p.degree
    h = []
    for k in range(d + 1):
        v = sum(((-1) ** j * comb(d + 1, j) * p(k - j) for j in range(k + 1)), Fraction(0))
        if v.denominator != 1:
            raise ValueError("dimension polynomial does not give an integral h-vector")
        h.append(int(v))
    return HilbertSeries(tuple(h), (1,) * (d + 1)).normalized()


def flag_hilbert_series(datum: RootDatum, s: int) -> HilbertSeries:
    """Hilbert series of the quantum flag manifold of ``omega_s``: ``sum dim V(n omega_s) t^n``."""
    _check_supported(datum, s)
    return series_from_polynomial(dimension_polynomial(datum, s))


def big_cell_hilbert_series(datum: RootDatum, s: int) -> HilbertSeries:
    """``prod 1/(1 - t^ht_S(alpha))`` over positive roots not orthogonal to ``omega_s``."""
    _check_supported(datum, s)
    S = [i for i in range(1, datum.rank + 1) if i != s]
    exps = tuple(relative_height(a, S) for a in levi_complement_roots(datum, s))
    return HilbertSeries((1,), exps)


def schubert_hilbert_function(datum: RootDatum, s: int, w: int, n: int) -> int:
    """Number of standard monomials of degree ``n`` on the Schubert variety of ``w``."""
    poset = build_minuscule_poset(datum, s)
    return count_decreasing_chains(poset.to_finite_poset(), n, top=w)


def gkdim(H: HilbertSeries) -> int:
    """Order of the pole of ``H`` at ``t = 1``."""
    num = list(H.numerator)
    if not num:
        raise ValueError("zero series")
    zeros = 0
    while True:
        q, exact = int_poly_divmod_one_minus_tk(num, 1)
        if not exact:
            break
        num = q
        zeros += 1
    return len(H.denominator_exponents) - zeros


# ---------------------------------------------------------------------------
# Gorenstein / palindromicity


@dataclass(frozen=True)
class GorensteinCertificate:
    """``holds`` iff ``H(t) = sign * t^(-m) * H(1/t)``; equivalently ``H(1/t) = sign * t^m H(t)``."""

    holds: bool
    m: int | None = None
    sign: int | None = None

    def to_json(self) -> dict:
        return {"holds": self.holds,
                "m": None if self.m is None else str(self.m),
                "sign": None if self.sign is None else str(self.sign)}


def gorenstein_certificate(H: HilbertSeries) -> GorensteinCertificate:
    """Search ``(m, sign)`` with ``N(t) D(1/t) = sign * t^(-m) N(1/t) D(t)`` exactly."""
    N = LaurentPoly.from_coeffs(H.numerator)
    D = LaurentPoly.from_coeffs(H.denominator_poly())
    if N.is_zero():
        return GorensteinCertificate(False)
    lhs = N * D.substitute_inverse()
    rhs = N.substitute_inverse() * D
    bound = len(H.numerator) + sum(H.denominator_exponents)
    for m in range(-bound, bound + 1):
        shifted = rhs.shift(-m)
        for sign in (1, -1):
            if lhs == shifted * sign:
                return GorensteinCertificate(True, m, sign)
    return GorensteinCertificate(False)


# ---------------------------------------------------------------------------
# Reciprocity of the dimension polynomial (simply-laced cases)


@dataclass(frozen=True)
class ReciprocityReport:
    datum: str
    s: int
    r: int
    length: int
    zeros_ok: bool
    functional_equation_ok: bool
    complement_height_counts: dict
    levi_height_counts: dict
    complement_counts_symmetric: bool
    levi_counts_symmetric: bool

    @property
    def holds(self) -> bool:
        return self.zeros_ok and self.functional_equation_ok

    def to_json(self) -> dict:
        return {"type": self.datum, "s": self.s, "r": str(self.r), "l_wS": str(self.length),
                "zeros_ok": self.zeros_ok, "functional_equation_ok": self.functional_equation_ok,
                "height_counts_complement": {str(k): str(v) for k, v in
                                             sorted(self.complement_height_counts.items())},
                "height_counts_levi": {str(k): str(v) for k, v in
                                       sorted(self.levi_height_counts.items())},
                "complement_symmetric": self.complement_counts_symmetric,
                "levi_symmetric": self.levi_counts_symmetric,
                "holds": self.holds}


def _height_counts(datum: RootDatum, roots, r: int) -> tuple[dict, bool]:
    counts = Counter(int(datum.inner(datum.rho, a)) for a in roots)
    full = {k: counts.get(k, 0) for k in range(1, r + 1)}
    symmetric = all(full[k] == full[r + 1 - k] for k in range(1, r + 1))
    return full, symmetric


def reciprocity_report(datum: RootDatum, s: int) -> ReciprocityReport:
    if datum.type_letter not in "ADE":
        raise UnsupportedWeightError(
            f"reciprocity is checked in types A, D, E only; B_n/omega_n and C_n/omega_1 "
            f"reduce to D_(n+1)/omega_(n+1) and a polynomial ring ({datum.name} given)")
    if not datum.is_minuscule(s):
        raise UnsupportedWeightError(f"omega_{s} is not minuscule for {datum.name}")
    p = dimension_polynomial(datum, s)
    poly = p.poly
    r = int(datum.inner(datum.rho, datum.highest_root))
    length = p.degree
    zeros_ok = all(poly(-k) == 0 for k in range(1, r + 1))
    mirrored = poly.compose_affine(-1, -r - 1) * ((-1) ** length)
    comp, comp_sym = _height_counts(datum, levi_complement_roots(datum, s), r)
    levi, levi_sym = _height_counts(datum, levi_roots(datum, s), r)
    return ReciprocityReport(datum.name, s, r, length, zeros_ok, mirrored == poly,
                             comp, levi, comp_sym, levi_sym)


def reciprocity_check(datum: RootDatum, s: int) -> bool:
    return reciprocity_report(datum, s).holds


def d_partner(n: int) -> tuple[RootDatum, int]:
    """``(D_(n+1), n+1)``, with ``D_3`` realised as ``A_3``."""
    if n == 2:
        return build_root_datum("A", 3), 3
    return build_root_datum("D", n + 1), n + 1


def bn_dn_coincidence_check(n: int) -> bool:
    """Flag series of ``(B_n, omega_n)`` equals that of ``(D_(n+1), omega_(n+1))``.

    For ``n = 2`` the partner ``D_3`` is taken as ``A_3`` with ``omega_3``.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    b = flag_hilbert_series(build_root_datum("B", n), n)
    d = flag_hilbert_series(*d_partner(n))
    return b == d and b.same_function(d)
