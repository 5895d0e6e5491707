"""Finite posets: covers, duals, intervals, wonderfulness and multichain counts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

# Transitivity is O(n^3); skip the self-check above this size.
_VALIDATE_LIMIT = 300


class PosetError(ValueError):
    pass


class FinitePoset:
    """A partial order on ``range(size)`` given by a boolean matrix.

    ``leq[x][y]`` is True iff ``x <= y``. ``labels`` optionally attaches an
    object to every element (Weyl group elements, orbit indices, ...).
    """

    def __init__(self, leq: Sequence[Sequence[bool]], labels: Sequence[Any] | None = None,
                 validate: bool = True) -> None:
        n = len(leq)
        self.size = n
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise PosetError("one label per element required")
        if validate and n <= _VALIDATE_LIMIT:
            self._validate()
        self._up = [[y for y in range(n) if self._is_cover(x, y)] for x in range(n)]
        self._down = [[] for _ in range(n)]
        for x in range(n):
            for y in self._up[x]:
                self._down[y].append(x)

    @classmethod
    def from_leq(cls, leq, labels=None) -> FinitePoset:
        return cls(leq, labels)

    @classmethod
    def from_covers(cls, size: int, covers: Iterable[tuple[int, int]],
                    labels: Sequence[Any] | None = None) -> FinitePoset:
        """Reflexive-transitive closure of a cover list ``(lower, upper)``."""
        up: list[set[int]] = [set() for _ in range(size)]
        for a, b in covers:
            up[a].add(b)
        leq = [[False] * size for _ in range(size)]
        for x in range(size):
            stack = [x]
            while stack:
                y = stack.pop()
                if not leq[x][y]:
                    leq[x][y] = True
                    stack.extend(up[y])
        return cls(leq, labels)

    def _validate(self) -> None:
        n, L = self.size, self.leq
        for x in range(n):
            if not L[x][x]:
                raise PosetError(f"not reflexive at {x}")
            for y in range(n):
                if x != y and L[x][y] and L[y][x]:
                    raise PosetError(f"not antisymmetric at {x}, {y}")
                if L[x][y]:
                    for z in range(n):
                        if L[y][z] and not L[x][z]:
                            raise PosetError(f"not transitive at {x} <= {y} <= {z}")

    def _is_cover(self, x: int, y: int) -> bool:
        L = self.leq
        if x == y or not L[x][y]:
            return False
        return not any(L[x][z] and L[z][y] for z in range(self.size) if z != x and z != y)

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinitePoset) and self.leq == other.leq

    def __hash__(self) -> int:
        return hash(self.leq)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def comparable(self, x: int, y: int) -> bool:
        return self.leq[x][y] or self.leq[y][x]

    def upper_covers(self, x: int) -> list[int]:
        return self._up[x]

    def lower_covers(self, x: int) -> list[int]:
        return self._down[x]

    @property
    def covers(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.size) for y in self._up[x]]

    def minimum(self) -> int | None:
        mins = [x for x in range(self.size) if all(self.leq[x][y] for y in range(self.size))]
        return mins[0] if mins else None

    def maximum(self) -> int | None:
        maxs = [y for y in range(self.size) if all(self.leq[x][y] for x in range(self.size))]
        return maxs[0] if maxs else None

    def induced(self, subset: Iterable[int]) -> FinitePoset:
        """Subposet on ``subset`` (kept in ascending index order)."""
        keep = sorted(set(subset))
        leq = [[self.leq[a][b] for b in keep] for a in keep]
        return FinitePoset(leq, [self.labels[a] for a in keep], validate=False)

    def to_json(self) -> dict:
        return {"size": self.size, "covers": [list(c) for c in self.covers]}

    def __repr__(self) -> str:
        return f"FinitePoset(size={self.size}, covers={len(self.covers)})"


def dual(poset: FinitePoset) -> FinitePoset:
    n = poset.size
    leq = [[poset.leq[y][x] for y in range(n)] for x in range(n)]
    return FinitePoset(leq, poset.labels, validate=False)


def interval_below(poset: FinitePoset, w: int) -> FinitePoset:
    return poset.induced(x for x in range(poset.size) if poset.leq[x][w])


def chain_poset(n: int) -> FinitePoset:
    return FinitePoset([[i <= j for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class WonderfulReport:
    """Outcome of :func:`check_wonderful`.

    ``witness`` is ``(z, x, y, u)`` with ``z -> x <= u`` and ``z -> y <= u`` but
    no common upper neighbour of ``x`` and ``y`` below ``u``. A poset without
    a least or greatest element gets the sentinel ``(-1, -1, -1, -1)``.
    """

    is_wonderful: bool
    witness: tuple[int, int, int, int] | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {"is_wonderful": self.is_wonderful,
                "witness": list(self.witness) if self.witness else None,
                "reason": self.reason}


NO_BOUNDS = (-1, -1, -1, -1)


def is_wonderful_violation(poset: FinitePoset, z: int, x: int, y: int, u: int) -> bool:
    """Re-check a witness against the definition, independently of the search."""
    L = poset.leq
    up = poset.upper_covers
    if x == y or x not in up(z) or y not in up(z):
        return False
    if not (L[x][u] and L[y][u]):
        return False
    return not any(w in up(y) and L[w][u] for w in up(x))


def iter_wonderful_violations(poset: FinitePoset):
    """All witnesses; ``z`` runs downward from the top, everything else upward by index."""
    L = poset.leq
    n = poset.size
    for z in reversed(range(n)):
        ups = poset.upper_covers(z)
        for a in range(len(ups)):
            for b in range(a + 1, len(ups)):
                x, y = ups[a], ups[b]
                common = set(poset.upper_covers(x)) & set(poset.upper_covers(y))
                for u in range(n):
                    if L[x][u] and L[y][u] and not any(L[w][u] for w in common):
                        yield (z, x, y, u)


def check_wonderful(poset: FinitePoset) -> WonderfulReport:
    if poset.minimum() is None or poset.maximum() is None:
        return WonderfulReport(False, NO_BOUNDS, "no least or greatest element")
    for witness in iter_wonderful_violations(poset):
        return WonderfulReport(False, witness, "upper neighbours without a common upper neighbour")
    return WonderfulReport(True)


def count_decreasing_chains(poset: FinitePoset, n: int, top: int | None = None) -> int:
    """Number of tuples ``w_1 >= w_2 >= ... >= w_n`` (with ``w_1 <= top`` if given)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    size = poset.size
    below = [[y for y in range(size) if poset.leq[y][x]] for x in range(size)]
    # f[x]: chains of the current length whose first entry is x
    f = [1] * size
    for _ in range(n - 1):
        f = [sum(f[y] for y in below[x]) for x in range(size)]
    if top is None:
        return sum(f)
    return sum(f[x] for x in below[top])
