"""Finite root systems with exact rational arithmetic.

Simple roots follow Bourbaki numbering. Roots are stored in the simple-root
basis and weights in the fundamental-weight basis. The invariant form is
normalised so that short roots have squared length 2, which makes
``(rho, alpha)`` the height of ``alpha`` in the simply-laced types.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from qflag.linalg import inverse, mat_vec, transpose

# Squared root lengths, Dynkin bonds (i, j, multiplicity), 1-based.
_ValidRanks = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (4, None),
               "E": (6, 8), "F": (4, 4), "G": (2, 2)}

CLASSICAL_MINUSCULE = {
    "A": lambda n: list(range(1, n + 1)),
    "B": lambda n: [n],
    "C": lambda n: [1],
    "D": lambda n: [1, n - 1, n],
    "E": lambda n: {6: [1, 6], 7: [7], 8: []}[n],
    "F": lambda n: [],
    "G": lambda n: [],
}


class RootSystemError(ValueError):
    """Invalid Cartan type or an operation mixing different root data."""


def _dynkin(letter: str, n: int) -> tuple[list[int], list[tuple[int, int, int]]]:
    lengths = [2] * n
    edges: list[tuple[int, int, int]] = []
    if letter == "A":
        edges = [(i, i + 1, 1) for i in range(1, n)]
    elif letter in "BC":
        edges = [(i, i + 1, 1) for i in range(1, n - 1)] + [(n - 1, n, 2)]
        if letter == "B":
            lengths = [4] * (n - 1) + [2]
        else:
            lengths = [2] * (n - 1) + [4]
    elif letter == "D":
        edges = [(i, i + 1, 1) for i in range(1, n - 1)] + [(n - 2, n, 1)]
    elif letter == "E":
        edges = [(1, 3, 1), (2, 4, 1)] + [(i, i + 1, 1) for i in range(3, n)]
    elif letter == "F":
        edges = [(1, 2, 1), (2, 3, 2), (3, 4, 1)]
        lengths = [4, 4, 2, 2]
    elif letter == "G":
        edges = [(1, 2, 3)]
        lengths = [2, 6]
    return lengths, edges


@dataclass(frozen=True)
class Root:
    """A root (or root-lattice element) in simple-root coordinates."""

    coords: tuple[int, ...]
    ctype: str = field(default="", compare=True)

    def height(self) -> int:
        return sum(self.coords)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords) and any(self.coords)

    def __add__(self, other: Root) -> Root:
        _same(self, other)
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)), self.ctype)

    def __sub__(self, other: Root) -> Root:
        _same(self, other)
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)), self.ctype)

    def __neg__(self) -> Root:
        return Root(tuple(-a for a in self.coords), self.ctype)

    def __repr__(self) -> str:
        return f"Root{self.coords}"


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]
    ctype: str = field(default="", compare=True)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other: Weight) -> Weight:
        _same(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.ctype)

    def __sub__(self, other: Weight) -> Weight:
        _same(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.ctype)

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords), self.ctype)

    def __mul__(self, k: int | Fraction) -> Weight:
        return Weight(tuple(k * a for a in self.coords), self.ctype)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def key(self) -> tuple[Fraction, ...]:
        return self.coords

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"


def _same(x, y) -> None:
    if x.ctype != y.ctype or len(x.coords) != len(y.coords):
        raise RootSystemError(f"mixing elements of {x.ctype or '?'} and {y.ctype or '?'}")


def parse_cartan_type(text: str) -> tuple[str, int]:
    """Parse ``"E7"`` into ``("E", 7)`` and validate the pair."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text or "")
    if not m:
        raise RootSystemError(f"bad Cartan type string {text!r}; expected e.g. 'A3', 'D5', 'E7'")
    letter, rank = m.group(1).upper(), int(m.group(2))
    _validate(letter, rank)
    return letter, rank


def _validate(letter: str, rank: int) -> None:
    if letter not in _ValidRanks:
        raise RootSystemError(f"unknown Cartan type letter {letter!r}")
    lo, hi = _ValidRanks[letter]
    if rank < lo or (hi is not None and rank > hi):
        if letter == "D" and rank == 3:
            raise RootSystemError("D3 is A3; use type A3 instead")
        span = f"{lo}" + (f"..{hi}" if hi != lo else "") if hi is not None else f">= {lo}"
        raise RootSystemError(f"type {letter} needs rank {span}, got {rank}")


class RootDatum:
    """Cartan matrix, invariant form and positive roots of a simple type.

    ``cartan[i][j]`` is the pairing ``(alpha_i, alpha_j^vee)``.
    """

    def __init__(self, type_letter: str, rank: int) -> None:
        _validate(type_letter, rank)
        self.type_letter = type_letter
        self.rank = rank
        self.name = f"{type_letter}{rank}"
        lengths, edges = _dynkin(type_letter, rank)
        gram = [[Fraction(0)] * rank for _ in range(rank)]
        for i in range(rank):
            gram[i][i] = Fraction(lengths[i])
        for i, j, bond in edges:
            v = Fraction(-bond * min(lengths[i - 1], lengths[j - 1]), 2)
            gram[i - 1][j - 1] = gram[j - 1][i - 1] = v
        self.gram = gram
        self.symmetrizers = tuple(Fraction(L, 2) for L in lengths)
        self.cartan = tuple(
            tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(rank)) for i in range(rank)
        )
        # (omega_i, omega_j) = (D G^-1 D)_ij
        ginv = inverse(gram)
        d = self.symmetrizers
        self.weight_gram = [[d[i] * ginv[i][j] * d[j] for j in range(rank)] for i in range(rank)]
        self._to_root_coords = inverse(transpose(self.cartan))
        self.positive_roots: tuple[Root, ...] = tuple(self._generate_positive_roots())

    def __repr__(self) -> str:
        return f"RootDatum({self.name})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootDatum) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    # -- construction -----------------------------------------------------
    def _generate_positive_roots(self) -> list[Root]:
        r = self.rank
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        found = set(simple)
        layer = list(simple)
        ordered = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(r):
                    if beta == simple[i]:
                        continue
                    pairing = sum(beta[j] * self.cartan[j][i] for j in range(r))
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in found:
                            p += 1
                        else:
                            break
                    if p - pairing > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            nxt.sort()
            ordered.extend(nxt)
            layer = nxt
        return [Root(c, self.name) for c in ordered]

    # -- elements ---------------------------------------------------------
    def simple_root(self, i: int) -> Root:
        return Root(tuple(int(i == j + 1) for j in range(self.rank)), self.name)

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(tuple(int(i == j + 1) for j in range(self.rank)), self.name)

    @property
    def fundamental_weights(self) -> list[Weight]:
        return [self.fundamental_weight(i) for i in range(1, self.rank + 1)]

    @property
    def rho(self) -> Weight:
        return Weight((1,) * self.rank, self.name)

    def zero_weight(self) -> Weight:
        return Weight((0,) * self.rank, self.name)

    def weight(self, coords: Iterable[int | Fraction]) -> Weight:
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise RootSystemError(f"{self.name} weights have {self.rank} coordinates")
        return Weight(coords, self.name)

    def root(self, coords: Iterable[int]) -> Root:
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise RootSystemError(f"{self.name} roots have {self.rank} coordinates")
        return Root(coords, self.name)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=Root.height)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    # -- conversions and pairings -----------------------------------------
    def root_to_weight(self, root: Root) -> Weight:
        self._check(root)
        r = self.rank
        return Weight(tuple(sum(root.coords[j] * self.cartan[j][i] for j in range(r))
                            for i in range(r)), self.name)

    def weight_to_root_coords(self, weight: Weight) -> tuple[Fraction, ...]:
        """Coordinates of ``weight`` in the simple-root basis (rational in general)."""
        self._check(weight)
        return mat_vec(self._to_root_coords, weight.coords)

    def _check(self, x: Root | Weight) -> None:
        if x.ctype != self.name or len(x.coords) != self.rank:
            raise RootSystemError(f"{x!r} does not belong to {self.name}")

    def _as_weight(self, x: Root | Weight) -> Weight:
        return self.root_to_weight(x) if isinstance(x, Root) else x

    def inner(self, x: Root | Weight, y: Root | Weight) -> Fraction:
        """The invariant form, with short roots of squared length 2."""
        self._check(x)
        self._check(y)
        if isinstance(x, Root) and isinstance(y, Root):
            g = self.gram
            return sum((g[i][j] * a * b for i, a in enumerate(x.coords) if a
                        for j, b in enumerate(y.coords) if b), Fraction(0))
        if isinstance(x, Root):
            x, y = y, x
        if isinstance(y, Root):
            # (omega_i, alpha_j) = d_j delta_ij
            d = self.symmetrizers
            return sum((m * b * d[i] for i, (m, b) in enumerate(zip(x.coords, y.coords))),
                       Fraction(0))
        wg = self.weight_gram
        return sum((wg[i][j] * a * b for i, a in enumerate(x.coords) if a
                    for j, b in enumerate(y.coords) if b), Fraction(0))

    def coroot_pairing(self, x: Root | Weight, alpha: Root) -> Fraction:
        """``(x, alpha^vee) = 2 (x, alpha) / (alpha, alpha)``."""
        return 2 * self.inner(x, alpha) / self.inner(alpha, alpha)

    def is_minuscule(self, s: int) -> bool:
        return s in self.minuscule_weights()

    def minuscule_weights(self) -> list[int]:
        out = []
        for s in range(1, self.rank + 1):
            w = self.fundamental_weight(s)
            if all(self.coroot_pairing(w, a) in (0, 1) for a in self.positive_roots):
                out.append(s)
        return out

    def dominance_leq(self, mu: Weight, nu: Weight) -> bool:
        """``mu <= nu`` iff ``nu - mu`` is a nonnegative integer sum of simple roots."""
        c = self.weight_to_root_coords(nu - mu)
        return all(x >= 0 and x.denominator == 1 for x in c)


def build_root_datum(type_letter: str, rank: int | None = None) -> RootDatum:
    """Build the root datum for ``("E", 6)`` or for a type string such as ``"E6"``."""
    if rank is None:
        type_letter, rank = parse_cartan_type(type_letter)
    return _cached_datum(type_letter.upper(), rank)


_DATA: dict[tuple[str, int], RootDatum] = {}


def _cached_datum(letter: str, rank: int) -> RootDatum:
    key = (letter, rank)
    if key not in _DATA:
        _DATA[key] = RootDatum(letter, rank)
    return _DATA[key]


def inner(datum: RootDatum, x: Root | Weight, y: Root | Weight) -> Fraction:
    return datum.inner(x, y)


def relative_height(root: Root, S: Iterable[int]) -> int:
    """Sum of the simple-root coefficients of ``root`` outside the index set ``S``."""
    S = set(S)
    return sum(c for i, c in enumerate(root.coords, start=1) if i not in S)


def minuscule_weights(datum: RootDatum) -> list[int]:
    return datum.minuscule_weights()


def levi_complement_roots(datum: RootDatum, s: int) -> list[Root]:
    """Positive roots ``alpha`` with ``(omega_s, alpha) != 0``."""
    return [a for a in datum.positive_roots if a.coords[s - 1] != 0]


def levi_roots(datum: RootDatum, s: int) -> list[Root]:
    """Positive roots orthogonal to ``omega_s``."""
    return [a for a in datum.positive_roots if a.coords[s - 1] == 0]


def all_minuscule_cases(max_rank: int = 7) -> list[tuple[str, int, int]]:
    """Every (letter, rank, s) with ``omega_s`` minuscule, ``rank <= max_rank``, ordered."""
    cases = []
    for letter in "ABCDE":
        lo, hi = _ValidRanks[letter]
        top = max_rank if hi is None else min(hi, max_rank)
        for n in range(lo, top + 1):
            for s in CLASSICAL_MINUSCULE[letter](n):
                cases.append((letter, n, s))
    return cases


def weight_sum(datum: RootDatum, weights: Sequence[Weight]) -> Weight:
    total = datum.zero_weight()
    for w in weights:
        total = total + w
    return total
