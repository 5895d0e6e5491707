"""Small exact linear algebra over the rationals.

Matrices are lists of rows; rows used by :class:`RowReducer` are sparse
``{column: Fraction}`` dicts with mutually comparable column keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence


def inverse(matrix: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_vec(matrix: Sequence[Sequence[Fraction | int]], vec: Sequence[Fraction | int]) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in matrix)


def transpose(matrix: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*matrix)]


class RowReducer:
    """Incremental echelon form for sparse rational rows.

    ``add(row)`` reduces the row against the stored pivots and keeps it if it
    is independent; the return value says whether the rank went up.
    """

    def __init__(self) -> None:
        self._pivots: dict[Hashable, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row: Mapping[Hashable, Fraction]) -> dict:
        vec = {k: Fraction(v) for k, v in row.items() if v != 0}
        while vec:
            key = max(vec)
            piv = self._pivots.get(key)
            if piv is None:
                return vec
            f = vec[key]
            for k, v in piv.items():
                nv = vec.get(k, 0) - f * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    def add(self, row: Mapping[Hashable, Fraction]) -> bool:
        vec = self.reduce(row)
        if not vec:
            return False
        key = max(vec)
        lead = vec[key]
        self._pivots[key] = {k: v / lead for k, v in vec.items()}
        return True

    def copy(self) -> "RowReducer":
        other = RowReducer()
        other._pivots = dict(self._pivots)
        return other


def rank(rows: Iterable[Mapping[Hashable, Fraction]]) -> int:
    reducer = RowReducer()
    for row in rows:
        reducer.add(row)
    return reducer.rank


def solve(columns: Sequence[Mapping[Hashable, Fraction]],
          target: Mapping[Hashable, Fraction]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum(c_k * columns[k]) == target``.

    The columns must be linearly independent; ``None`` if ``target`` lies
    outside their span.
    """
    keys = sorted({k for col in columns for k in col} | set(target))
    index = {k: i for i, k in enumerate(keys)}
    ncols = len(columns)
    rows = [[Fraction(0)] * (ncols + 1) for _ in keys]
    for j, col in enumerate(columns):
        for k, v in col.items():
            rows[index[k]][j] = Fraction(v)
    for k, v in target.items():
        rows[index[k]][ncols] = Fraction(v)
    r = 0
    pivots = []
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            raise ValueError("columns are linearly dependent")
        rows[r], rows[p] = rows[p], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(r)
        r += 1
    if any(row[ncols] != 0 for row in rows[r:]):
        return None
    return [rows[i][ncols] for i in pivots]
