"""Quantum Grassmannians ``G_q(m, n)`` and their Schubert quotients.

The generators are the maximal quantum minors ``[I]`` of a quantum ``m x n``
matrix (rows ``1..m``, columns ``I``). ``I <= J`` componentwise is the Bruhat
order on ``W^S`` for ``A_{n-1}/omega_m``; the straightening order is its
inverse. A standard monomial ``[A_1][A_2]...[A_d]`` therefore has
``A_1 >= A_2 >= ... >= A_d`` componentwise, its first factor the largest.

Symbolic work keeps ``q`` generic. Rank computations run at ``q = 2``:
independence there implies independence over ``Q(q)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from qflag.laurent import LaurentPoly
from qflag.linalg import RowReducer
from qflag.posets import FinitePoset
from qflag.qgrass.qmatrix import NCPolynomial, QMatrixAlgebra, Scalar, Word, quantum_minor
from qflag.rootsys import build_root_datum
from qflag.weylgroup import BudgetError, build_minuscule_poset

MAX_N = 6
MAX_DEGREE = 3
RANK_Q = Fraction(2)

Subset = tuple[int, ...]
Chain = tuple[Subset, ...]


class StraighteningError(RuntimeError):
    """A product failed to expand in standard monomials, or the expansion did not round-trip."""


# -- the minor poset -------------------------------------------------------

def _check_mn(m: int, n: int) -> None:
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")


def subset_length(I: Sequence[int]) -> int:
    """Bruhat length of the coset representative attached to ``I``."""
    return sum(I) - len(I) * (len(I) + 1) // 2


def m_subsets(m: int, n: int) -> list[Subset]:
    """All ``m``-subsets of ``{1..n}``, sorted by length, then lexicographically."""
    _check_mn(m, n)
    return sorted(combinations(range(1, n + 1), m), key=lambda s: (subset_length(s), s))


def subset_leq(I: Sequence[int], J: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(I, J))


def subset_label(I: Sequence[int]) -> str:
    if all(k < 10 for k in I):
        return "".join(map(str, I))
    return ",".join(map(str, I))


def parse_subset(text: str, m: int, n: int) -> Subset:
    parts = text.split(",") if "," in text else list(text)
    try:
        I = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot read {text!r} as a subset") from None
    if len(I) != m or any(a >= b for a, b in zip(I, I[1:])) or not all(1 <= k <= n for k in I):
        raise ValueError(f"{text!r} is not an increasing {m}-subset of 1..{n}")
    return I


def subset_weight(I: Sequence[int], n: int) -> tuple[Fraction, ...]:
    """Fundamental-weight coordinates of ``eps_I`` projected to ``sl_n``."""
    s = set(I)
    return tuple(Fraction(int(k in s) - int(k + 1 in s)) for k in range(1, n))


def subset_pairing(I: Sequence[int], J: Sequence[int], n: int) -> Fraction:
    """``(eps_I, eps_J)`` for the traceless projections."""
    return len(set(I) & set(J)) - Fraction(len(I) * len(J), n)


def minor_poset(m: int, n: int) -> FinitePoset:
    subs = m_subsets(m, n)
    leq = [[subset_leq(a, b) for b in subs] for a in subs]
    return FinitePoset(leq, labels=subs, validate=False)


def poset_isomorphism(m: int, n: int) -> dict[Subset, int]:
    """Map each subset to its index in the minuscule poset of ``A_{n-1}/omega_m``.

    Raises ``ValueError`` unless the map is an order isomorphism.
    """
    _check_mn(m, n)
    if m == n:
        raise ValueError("m = n gives a single minor and no minuscule weight")
    datum = build_root_datum("A", n - 1)
    poset = build_minuscule_poset(datum, m)
    subs = m_subsets(m, n)
    mapping = {I: poset.index_of(datum.weight(subset_weight(I, n))) for I in subs}
    if sorted(mapping.values()) != list(range(len(poset))):
        raise ValueError("weight map is not a bijection")
    for I in subs:
        for J in subs:
            if subset_leq(I, J) != poset.leq(mapping[I], mapping[J]):
                raise ValueError(f"order mismatch at {I}, {J}")
        if subset_length(I) != poset.elements[mapping[I]].length:
            raise ValueError(f"length mismatch at {I}")
    return mapping


def standard_chains(subsets: Sequence[Subset], degree: int, top: Subset | None = None) -> list[Chain]:
    """Chains ``A_1 >= ... >= A_d`` with ``A_1 <= top``."""
    pool = [I for I in subsets if top is None or subset_leq(I, top)]
    out: list[Chain] = []

    def grow(prefix: list[Subset]) -> None:
        if len(prefix) == degree:
            out.append(tuple(prefix))
            return
        for I in pool:
            if not prefix or subset_leq(I, prefix[-1]):
                grow(prefix + [I])

    grow([])
    return out


# -- the algebra -----------------------------------------------------------

def _leading_word(terms: dict[Word, Scalar], ngens: int) -> Word:
    """Lex-largest PBW word, ``x_11`` most significant."""
    def key(w: Word):
        e = [0] * ngens
        for g in w:
            e[g] += 1
        return e
    return max(terms, key=key)


class QuantumGrassmannian:
    """Minors of a quantum ``m x n`` matrix, their products and straightening."""

    def __init__(self, m: int, n: int, q: int | Fraction | None = None) -> None:
        _check_mn(m, n)
        self.m, self.n = m, n
        self.algebra = QMatrixAlgebra(m, n, q)
        self.subsets = m_subsets(m, n)
        self._minors: dict[Subset, NCPolynomial] = {}
        self._products: dict[Chain, NCPolynomial] = {}
        self._leading: dict[int, dict[Word, tuple[Chain, Scalar]]] = {}

    @property
    def minimum(self) -> Subset:
        return self.subsets[0]

    @property
    def maximum(self) -> Subset:
        return self.subsets[-1]

    def minor(self, I: Sequence[int]) -> NCPolynomial:
        I = tuple(I)
        if I not in self._minors:
            if len(I) != self.m:
                raise ValueError(f"{I} is not an {self.m}-subset")
            self._minors[I] = quantum_minor(self.algebra, range(1, self.m + 1), I)
        return self._minors[I]

    def product(self, chain: Sequence[Sequence[int]]) -> NCPolynomial:
        chain = tuple(tuple(I) for I in chain)
        hit = self._products.get(chain)
        if hit is None:
            if not chain:
                hit = NCPolynomial(self.algebra, {(): self.algebra.one})
            elif len(chain) == 1:
                hit = self.minor(chain[0])
            else:
                hit = self.minor(chain[0]) * self.product(chain[1:])
            self._products[chain] = hit
        return hit

    def standard_monomials(self, degree: int, top: Subset | None = None) -> list[Chain]:
        return standard_chains(self.subsets, degree, top)

    def _leading_table(self, degree: int) -> dict[Word, tuple[Chain, Scalar]]:
        table = self._leading.get(degree)
        if table is None:
            table = {}
            for chain in self.standard_monomials(degree):
                terms = self.product(chain).terms
                lw = _leading_word(terms, self.algebra.ngens)
                if lw in table:
                    raise StraighteningError(f"standard monomials {table[lw][0]} and {chain} share a leading word")
                table[lw] = (chain, terms[lw])
            self._leading[degree] = table
        return table

    def express(self, element: NCPolynomial, degree: int) -> dict[Chain, Scalar]:
        """Coefficients of a homogeneous element in the degree-``degree`` standard monomials.

        Triangular elimination on leading PBW words, then a round-trip check.
        """
        table = self._leading_table(degree)
        rest = dict(element.terms)
        out: dict[Chain, Scalar] = {}
        while rest:
            lw = _leading_word(rest, self.algebra.ngens)
            if lw not in table:
                raise StraighteningError(f"no standard monomial leads with {lw}")
            chain, lc = table[lw]
            c = rest[lw] / lc
            out[chain] = out.get(chain, 0) + c
            for w, v in self.product(chain).terms.items():
                nv = rest.get(w, 0) - c * v
                if nv:
                    rest[w] = nv
                else:
                    rest.pop(w, None)
        out = {k: v for k, v in out.items() if v}
        back = NCPolynomial(self.algebra, {})
        for chain, c in out.items():
            back = back + self.product(chain) * c
        if back != element:
            raise StraighteningError("expansion does not reproduce the product")
        return out

    def straighten(self, I: Sequence[int], J: Sequence[int]) -> dict[tuple[Subset, Subset], Scalar]:
        return self.express(self.product((tuple(I), tuple(J))), 2)

    # -- q = 2 linear algebra ---------------------------------------------
    def _rank_row(self, chain: Chain) -> dict[Word, Fraction]:
        poly = self.product(chain)
        if self.algebra.symbolic:
            return poly.specialize(RANK_Q)
        return dict(poly.terms)

    def _span(self, candidates: Iterable[Chain], reducer: RowReducer | None = None) -> tuple[RowReducer, list[Chain]]:
        reducer = reducer or RowReducer()
        kept = []
        for chain in candidates:
            if reducer.add(self._rank_row(chain)):
                kept.append(chain)
        return reducer, kept

    @lru_cache(maxsize=None)
    def component_basis(self, degree: int) -> tuple[Chain, ...]:
        """Products of minors forming a basis of the degree-``degree`` component."""
        if degree == 0:
            return ((),)
        prev = self.component_basis(degree - 1)
        _, kept = self._span((I,) + P for P in prev for I in self.subsets)
        return tuple(kept)

    @lru_cache(maxsize=None)
    def ideal_basis(self, degree: int, top: Subset) -> tuple[Chain, ...]:
        """Basis of the degree part of the ideal generated by ``[I]``, ``I`` not below ``top``."""
        if degree == 0:
            return ()
        outside = [I for I in self.subsets if not subset_leq(I, top)]
        cands = [(I,) + P for P in self.ideal_basis(degree - 1, top) for I in self.subsets]
        cands += [(I,) + P for P in self.component_basis(degree - 1) for I in outside]
        _, kept = self._span(cands)
        return tuple(kept)

    def quotient_dimension(self, degree: int, top: Subset | None = None) -> int:
        full = len(self.component_basis(degree))
        if top is None or top == self.maximum:
            return full
        return full - len(self.ideal_basis(degree, top))

    def standard_independent_mod_ideal(self, degree: int, top: Subset | None = None) -> list[Chain]:
        """Standard monomials (below ``top``) that fail to be independent modulo the ideal."""
        reducer = RowReducer()
        if top is not None and top != self.maximum:
            reducer, _ = self._span(self.ideal_basis(degree, top))
        bad = []
        for chain in self.standard_monomials(degree, top):
            if not reducer.add(self._rank_row(chain)):
                bad.append(chain)
        return bad


@lru_cache(maxsize=None)
def quantum_grassmannian(m: int, n: int) -> QuantumGrassmannian:
    return QuantumGrassmannian(m, n)


def _budget(n: int, degree: int | None = None) -> None:
    if n > MAX_N:
        raise BudgetError(f"n = {n} exceeds the verification budget n <= {MAX_N}")
    if degree is not None and degree > MAX_DEGREE:
        raise BudgetError(f"degree {degree} exceeds the verification budget D = {MAX_DEGREE}")


def _resolve_top(G: QuantumGrassmannian, w) -> Subset | None:
    if w is None:
        return None
    if isinstance(w, str):
        return parse_subset(w, G.m, G.n)
    if isinstance(w, int):
        return G.subsets[w]
    w = tuple(w)
    if w not in G.subsets:
        raise ValueError(f"{w} is not an {G.m}-subset of 1..{G.n}")
    return w


def straighten_product(m: int, n: int, I: Sequence[int], J: Sequence[int]) -> list[tuple[Chain, LaurentPoly]]:
    """``[I][J]`` as a combination of standard monomials ``[A][B]``, ``A >= B``."""
    G = quantum_grassmannian(m, n)
    for K in (I, J):
        if tuple(K) not in G.subsets:
            raise ValueError(f"{tuple(K)} is not an {m}-subset of 1..{n}")
    table = G.straighten(I, J)
    return sorted(table.items(), key=lambda kv: (G.subsets.index(kv[0][0]), G.subsets.index(kv[0][1])))


def schubert_quotient_dimension(m: int, n: int, w, degree: int) -> int:
    """Dimension of the degree part of ``G_q(m,n)`` modulo ``[I]`` for ``I`` not below ``w``."""
    _budget(n, degree)
    G = quantum_grassmannian(m, n)
    return G.quotient_dimension(degree, _resolve_top(G, w))


def quasi_commutation_exponents(m: int, n: int) -> dict[Subset, Fraction]:
    """Exponent ``e`` in ``[e_min][J] = q^e [J][e_min]`` for every ``J``."""
    G = quantum_grassmannian(m, n)
    out = {}
    for J in G.subsets:
        table = G.straighten(G.minimum, J)
        if len(table) != 1:
            raise StraighteningError(f"[{G.minimum}][{J}] is not a single standard term")
        (chain, c), = table.items()
        if chain != (J, G.minimum) or not c.is_monomial() or c.terms.get(c.min_exponent()) != 1:
            raise StraighteningError(f"[{G.minimum}][{J}] -> {c} * {chain}")
        out[J] = c.min_exponent()
    return out


def orientation_sign(m: int, n: int) -> int:
    """``s`` with ``e(J) == s * ((eps_J, eps_min) - (eps_min, eps_min))`` for all ``J``; 0 if none."""
    exps = quasi_commutation_exponents(m, n)
    lo = tuple(range(1, m + 1))
    pred = {J: subset_pairing(J, lo, n) - subset_pairing(lo, lo, n) for J in exps}
    for s in (1, -1):
        if all(exps[J] == s * pred[J] for J in exps):
            return s
    return 0


# -- ASL axioms ------------------------------------------------------------

@dataclass
class AxiomResult:
    name: str
    passed: bool
    offending: list = field(default_factory=list)
    note: str = ""

    def to_json(self) -> dict:
        return {"axiom": self.name, "passed": self.passed,
                "offending": [[subset_label(x) if isinstance(x, tuple) and x and isinstance(x[0], int)
                               else [subset_label(y) for y in x] for x in item] for item in self.offending],
                "note": self.note}


@dataclass
class ASLReport:
    m: int
    n: int
    top: Subset
    degree: int
    axioms: list[AxiomResult]
    table: dict[tuple[Subset, Subset], dict[tuple[Subset, Subset], LaurentPoly]]
    commutation_scalars: dict[tuple[Subset, Subset], tuple[LaurentPoly, LaurentPoly]]
    orientation: int

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)

    def axiom(self, name: str) -> AxiomResult:
        return next(a for a in self.axioms if a.name == name)

    def to_json(self) -> dict:
        return {
            "m": self.m, "n": self.n, "w": subset_label(self.top), "degree": self.degree,
            "passed": self.passed,
            "orientation_sign": self.orientation,
            "axioms": [a.to_json() for a in self.axioms],
            "straightening": [
                {"product": [subset_label(I), subset_label(J)],
                 "terms": [{"A": subset_label(A), "B": subset_label(B), "coefficient": c.exponent_list()}
                           for (A, B), c in sorted(exp.items())]}
                for (I, J), exp in sorted(self.table.items())
            ],
            "commutation": [
                {"pair": [subset_label(I), subset_label(J)],
                 "numerator": num.exponent_list(), "denominator": den.exponent_list()}
                for (I, J), (num, den) in sorted(self.commutation_scalars.items())
            ],
        }


def _strictly_below_in_asl(A: Subset, I: Subset) -> bool:
    # inverse Bruhat: A < I there iff A > I componentwise
    return A != I and subset_leq(I, A)


def _proportional(f: dict, g: dict) -> tuple[LaurentPoly, LaurentPoly] | None:
    """``(num, den)`` with ``den * f == num * g`` and both nonzero, else ``None``."""
    if set(f) != set(g):
        return None
    if not f:
        one = LaurentPoly.const(1)
        return one, one
    k0 = min(f)
    num, den = f[k0], g[k0]
    if all(f[k] * den == g[k] * num for k in f):
        return num, den
    return None


def verify_asl_axioms(m: int, n: int, w=None, degree: int = 2) -> ASLReport:
    """Check the quantum graded ASL conditions for ``G_q(m,n)`` or its quotient below ``w``.

    Condition 3 is checked up to ``degree``; 4 and 5 are statements about
    products of two generators.
    """
    _budget(n, degree)
    G = quantum_grassmannian(m, n)
    top = _resolve_top(G, w) or G.maximum
    pool = [I for I in G.subsets if subset_leq(I, top)]
    axioms: list[AxiomResult] = []

    rows = tuple(range(1, m + 1))
    bad1 = []
    for I in pool:
        for word in G.minor(I).terms:
            content = sorted(G.algebra.pos(g) for g in word)
            if [r for r, _ in content] != list(rows) or sorted(c for _, c in content) != list(I):
                bad1.append((I,))
                break
    axioms.append(AxiomResult("1", not bad1, bad1, "generators are homogeneous of degree 1"))
    axioms.append(AxiomResult("2", True, [], "the algebra is generated by the minors by definition"))

    bad3 = []
    for d in range(1, degree + 1):
        bad3 += G.standard_independent_mod_ideal(d, top)
    axioms.append(AxiomResult("3", not bad3, bad3, f"standard monomials independent up to degree {degree} at q = {RANK_Q}"))

    table = {}
    for I in pool:
        for J in pool:
            table[(I, J)] = {k: v for k, v in G.straighten(I, J).items() if subset_leq(k[0], top)}

    bad4 = []
    for I in pool:
        for J in pool:
            if subset_leq(I, J) or subset_leq(J, I):
                continue
            for (A, B) in table[(I, J)]:
                if not (subset_leq(B, A) and _strictly_below_in_asl(A, I) and _strictly_below_in_asl(A, J)):
                    bad4.append((I, J))
                    break
    axioms.append(AxiomResult("4", not bad4, bad4, "incomparable products straighten into lower terms"))

    bad5 = []
    scalars = {}
    for I in pool:
        for J in pool:
            low = lambda exp: {k: v for k, v in exp.items()
                               if not (_strictly_below_in_asl(k[0], I) and _strictly_below_in_asl(k[0], J))}
            ratio = _proportional(low(table[(I, J)]), low(table[(J, I)]))
            if ratio is None:
                bad5.append((I, J))
            else:
                scalars[(I, J)] = ratio
    axioms.append(AxiomResult("5", not bad5, bad5, "[I][J] - c[J][I] has only lower terms"))

    return ASLReport(m, n, top, degree, axioms, table, scalars, orientation_sign(m, n))
