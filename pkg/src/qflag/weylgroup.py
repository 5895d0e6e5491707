"""Weyl group elements, Bruhat order and minuscule orbit posets.

Words ``(i1, ..., ik)`` denote the product ``s_i1 s_i2 ... s_ik``. An element
is identified by the images of the fundamental weights, which determine it
uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from qflag.posets import FinitePoset
from qflag.rootsys import Root, RootDatum, RootSystemError, Weight, build_root_datum

MAX_FULL_GROUP_RANK = 4

_Key = tuple[tuple[Fraction, ...], ...]


class BudgetError(RuntimeError):
    """A computation was refused because it exceeds the enumeration budget."""


def apply_reflection(datum: RootDatum, i: int, weight: Weight) -> Weight:
    """``s_i(mu) = mu - (mu, alpha_i^vee) alpha_i``."""
    datum._check(weight)
    if not 1 <= i <= datum.rank:
        raise RootSystemError(f"simple index {i} out of range for {datum.name}")
    k = weight.coords[i - 1]
    if k == 0:
        return weight
    row = datum.cartan[i - 1]
    return Weight(tuple(c - k * a for c, a in zip(weight.coords, row)), datum.name)


def _act_coords(key: _Key, coords: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * len(key)
    for m, image in zip(coords, key):
        if m:
            for j, x in enumerate(image):
                out[j] += m * x
    return tuple(out)


class WeylElement:
    """An element of the Weyl group of ``datum``, with a word recording how it was built."""

    __slots__ = ("datum", "word", "key", "_length")

    def __init__(self, datum: RootDatum, word: Sequence[int], key: _Key) -> None:
        self.datum = datum
        self.word = tuple(word)
        self.key = key
        self._length: int | None = None

    @classmethod
    def identity(cls, datum: RootDatum) -> WeylElement:
        return cls(datum, (), tuple(w.coords for w in datum.fundamental_weights))

    @classmethod
    def from_word(cls, datum: RootDatum, word: Iterable[int]) -> WeylElement:
        w = cls.identity(datum)
        for i in reversed(tuple(word)):
            w = w.left_mul(i)
        return w

    @classmethod
    def reflection(cls, datum: RootDatum, alpha: Root) -> WeylElement:
        """The reflection ``s_alpha`` for a positive root ``alpha`` (word left empty)."""
        aw = datum.root_to_weight(alpha).coords
        key = []
        for w in datum.fundamental_weights:
            c = datum.coroot_pairing(w, alpha)
            key.append(tuple(x - c * a for x, a in zip(w.coords, aw)))
        return cls(datum, (), tuple(key))

    def act(self, weight: Weight) -> Weight:
        self.datum._check(weight)
        return Weight(_act_coords(self.key, weight.coords), self.datum.name)

    def act_root(self, root: Root) -> tuple[Fraction, ...]:
        """Image of a root, in simple-root coordinates."""
        return self.datum.weight_to_root_coords(self.act(self.datum.root_to_weight(root)))

    def left_mul(self, i: int) -> WeylElement:
        """``s_i * self``."""
        d = self.datum
        key = tuple(apply_reflection(d, i, Weight(img, d.name)).coords for img in self.key)
        return WeylElement(d, (i,) + self.word, key)

    def right_mul(self, i: int) -> WeylElement:
        """``self * s_i``."""
        alpha_img = _act_coords(self.key, self.datum.cartan[i - 1])
        key = list(self.key)
        key[i - 1] = tuple(a - b for a, b in zip(key[i - 1], alpha_img))
        return WeylElement(self.datum, self.word + (i,), tuple(key))

    def __mul__(self, other: WeylElement) -> WeylElement:
        key = tuple(_act_coords(self.key, img) for img in other.key)
        return WeylElement(self.datum, self.word + other.word, key)

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        if self._length is None:
            d = self.datum
            wrho = self.act(d.rho)
            self._length = sum(1 for a in d.positive_roots if d.inner(wrho, a) < 0)
        return self._length

    def is_min_coset_rep(self, S: Iterable[int]) -> bool:
        """True iff ``l(w s_j) > l(w)`` for every ``j`` in ``S``."""
        for j in S:
            if any(c < 0 for c in self.act_root(self.datum.simple_root(j))):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def word_str(self) -> str:
        return "".join(f"s{i}" for i in self.word) or "e"

    def __repr__(self) -> str:
        return f"WeylElement({self.datum.name}, {self.word_str()})"


def enumerate_group(datum: RootDatum) -> list[WeylElement]:
    """All elements, ordered by length then by shortlex-least reduced word."""
    if datum.rank > MAX_FULL_GROUP_RANK:
        raise BudgetError(
            f"full Weyl group enumeration limited to rank <= {MAX_FULL_GROUP_RANK}, "
            f"got {datum.name}")
    e = WeylElement.identity(datum)
    seen = {e}
    out = [e]
    layer = [e]
    while layer:
        nxt = []
        for w in layer:
            for i in range(1, datum.rank + 1):
                v = w.right_mul(i)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        out.extend(nxt)
        layer = nxt
    return out


_LOWER_SETS: dict[tuple, frozenset] = {}


def _subword_products(w: WeylElement) -> frozenset:
    cache_key = (w.datum.name, w.key)
    if cache_key not in _LOWER_SETS:
        if w.datum.rank > MAX_FULL_GROUP_RANK:
            raise BudgetError(f"general Bruhat comparison limited to rank <= {MAX_FULL_GROUP_RANK}")
        word = w.word
        if len(word) != w.length():
            word = _reduced_word(w)
        products = {WeylElement.identity(w.datum)}
        for i in word:
            products |= {x.right_mul(i) for x in products}
        _LOWER_SETS[cache_key] = frozenset(products)
    return _LOWER_SETS[cache_key]


def _reduced_word(w: WeylElement) -> tuple[int, ...]:
    d = w.datum
    word: list[int] = []
    cur = w
    while cur.length() > 0:
        for i in range(1, d.rank + 1):
            v = cur.left_mul(i)
            if v.length() < cur.length():
                word.append(i)
                cur = v
                break
    return tuple(word)


def bruhat_leq_general(w: WeylElement, v: WeylElement) -> bool:
    """Subword criterion: ``w <= v`` iff ``w`` is a product of a subword of a reduced word of ``v``."""
    if w.datum != v.datum:
        raise RootSystemError("elements of different Weyl groups")
    return w in _subword_products(v)


def bruhat_poset(datum: RootDatum) -> FinitePoset:
    """The full Weyl group under Bruhat order, labelled by :class:`WeylElement`."""
    elems = enumerate_group(datum)
    n = len(elems)
    leq = [[False] * n for _ in range(n)]
    index = {w: k for k, w in enumerate(elems)}
    for j, v in enumerate(elems):
        for w in _subword_products(v):
            leq[index[w]][j] = True
    return FinitePoset.from_leq(leq, labels=elems)


def symmetric_group_bruhat(n: int) -> FinitePoset:
    if n < 2:
        raise RootSystemError("symmetric group S_n needs n >= 2")
    return bruhat_poset(build_root_datum("A", n - 1))


@dataclass(frozen=True)
class PosetElement:
    index: int
    weight: Weight
    length: int
    rep: WeylElement


class MinusculePoset:
    """``(W^S, <=)`` for a minuscule ``omega_s``, realised on the orbit ``W omega_s``.

    ``covers`` holds ``(lower, upper, i)`` with ``upper = s_i * lower`` and
    ``weight(upper) = weight(lower) - alpha_i``.
    """

    def __init__(self, datum: RootDatum, s: int, elements: list[PosetElement],
                 covers: list[tuple[int, int, int]]) -> None:
        self.datum = datum
        self.s = s
        self.elements = elements
        self.covers = covers
        self._index = {e.weight: e.index for e in elements}
        self._root_coords = [datum.weight_to_root_coords(e.weight) for e in elements]
        self._finite: FinitePoset | None = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def S(self) -> list[int]:
        return [i for i in range(1, self.datum.rank + 1) if i != self.s]

    @property
    def minimum(self) -> int:
        return 0

    @property
    def maximum(self) -> int:
        return len(self.elements) - 1

    @property
    def max_length(self) -> int:
        return self.elements[-1].length

    def index_of(self, weight: Weight) -> int:
        return self._index[weight]

    def layer_sizes(self) -> list[int]:
        sizes = [0] * (self.max_length + 1)
        for e in self.elements:
            sizes[e.length] += 1
        return sizes

    def leq(self, x: int, y: int) -> bool:
        return bruhat_leq_minuscule(self, x, y)

    def to_finite_poset(self) -> FinitePoset:
        if self._finite is None:
            n = len(self)
            leq = [[self.leq(x, y) for y in range(n)] for x in range(n)]
            self._finite = FinitePoset.from_leq(leq, labels=list(range(n)))
        return self._finite

    def to_json(self) -> dict:
        return {
            "type": self.datum.name,
            "s": self.s,
            "elements": [
                {"index": e.index, "weight": [str(c) for c in e.weight.coords],
                 "length": e.length, "word": list(e.rep.word)}
                for e in self.elements
            ],
            "covers": [{"lower": a, "upper": b, "label": i} for a, b, i in self.covers],
        }


def bruhat_leq_minuscule(poset: MinusculePoset, x: int, y: int) -> bool:
    """``x <= y`` iff ``weight(x) - weight(y)`` is a nonnegative integer sum of simple roots."""
    cx, cy = poset._root_coords[x], poset._root_coords[y]
    return all(a >= b for a, b in zip(cx, cy))


def build_minuscule_poset(datum: RootDatum, s: int) -> MinusculePoset:
    if not datum.is_minuscule(s):
        raise RootSystemError(
            f"omega_{s} is not minuscule for {datum.name} "
            f"(minuscule indices: {datum.minuscule_weights() or 'none'})")
    lam = datum.fundamental_weight(s)
    found: dict[Weight, tuple[int, WeylElement]] = {lam: (0, WeylElement.identity(datum))}
    layer = [lam]
    edges: list[tuple[Weight, Weight, int]] = []
    depth = 0
    while layer:
        depth += 1
        nxt = []
        for mu in layer:
            rep = found[mu][1]
            for i in range(1, datum.rank + 1):
                if mu.coords[i - 1] == 1:
                    nu = apply_reflection(datum, i, mu)
                    edges.append((mu, nu, i))
                    if nu not in found:
                        found[nu] = (depth, rep.left_mul(i))
                        nxt.append(nu)
        layer = nxt
    order = sorted(found, key=lambda m: (found[m][0], m.coords))
    index = {m: k for k, m in enumerate(order)}
    elements = [PosetElement(k, m, found[m][0], found[m][1]) for k, m in enumerate(order)]
    covers = sorted((index[a], index[b], i) for a, b, i in edges)
    return MinusculePoset(datum, s, elements, covers)
