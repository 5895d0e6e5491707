"""Dense univariate polynomials over Q, coefficient lists from low to high degree."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int | Fraction] = ()) -> None:
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def linear(cls, slope, intercept) -> UPoly:
        return cls([intercept, slope])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: UPoly) -> UPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> UPoly:
        return UPoly(-x for x in self.coeffs)

    def __sub__(self, other: UPoly) -> UPoly:
        return self + (-other)

    def __mul__(self, other: UPoly | int | Fraction) -> UPoly:
        if not isinstance(other, UPoly):
            return UPoly(x * other for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def compose_affine(self, a, b) -> UPoly:
        """``p(a*x + b)``."""
        lin = UPoly([b, a])
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + UPoly([c])
        return acc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UPoly({[str(c) for c in self.coeffs]})"


def int_poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def int_poly_divmod_one_minus_tk(a: Sequence[int], k: int) -> tuple[list[int], bool]:
    """Divide by ``1 - t^k``; returns ``(quotient, exact)``."""
    rem = list(a)
    quot = [0] * max(len(a) - k, 0)
    for i in range(len(rem) - 1, k - 1, -1):
        c = rem[i]
        if c:
            # c t^i = -c t^(i-k) (1 - t^k) + c t^(i-k)
            quot[i - k] -= c
            rem[i] = 0
            rem[i - k] += c
    exact = not any(rem)
    return _trim(quot), exact


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def trim(a: Sequence[int]) -> list[int]:
    return _trim(list(a))
