"""Sparse Laurent polynomials with rational exponents and rational coefficients.

Used both as the scalar ring ``Q[q^(1/N), q^(-1/N)]`` of the quantum matrix
engine and for the Laurent identities behind the Gorenstein check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


class LaurentPoly:
    """``sum(c_e * q**e)`` stored as ``{e: c_e}`` without zero coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Number, Number] | None = None) -> None:
        clean: dict[Fraction, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = Fraction(e)
                    v = clean.get(e, 0) + Fraction(c)
                    if v:
                        clean[e] = v
                    else:
                        clean.pop(e, None)
        self.terms = clean
        self._hash: int | None = None

    @classmethod
    def const(cls, c: Number) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: Number, c: Number = 1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], shift: int = 0) -> LaurentPoly:
        return cls({k + shift: c for k, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: LaurentPoly | Number) -> LaurentPoly:
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly | Number) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Number) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | Number) -> LaurentPoly:
        other = _coerce(other)
        out: dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> LaurentPoly:
        """Only single terms are units."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not invertible")
        (e, c), = self.terms.items()
        return LaurentPoly({-e: 1 / c})

    def __truediv__(self, other: LaurentPoly | Number) -> LaurentPoly:
        return self * _coerce(other).inverse()

    def shift(self, k: Number) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def substitute_inverse(self) -> LaurentPoly:
        """``q -> q**-1``."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def evaluate(self, q: Number) -> Fraction:
        """Exact value at a rational ``q``; fractional exponents need ``q == 1``."""
        q = Fraction(q)
        total = Fraction(0)
        for e, c in self.terms.items():
            if q == 1:
                total += c
            elif e.denominator != 1:
                raise ValueError(f"cannot evaluate q^{e} at q={q} exactly")
            else:
                total += c * q ** int(e)
        return total

    def min_exponent(self) -> Fraction:
        return min(self.terms)

    def max_exponent(self) -> Fraction:
        return max(self.terms)

    def exponent_list(self) -> list[list[str]]:
        """``[[exponent, coefficient], ...]`` as exact strings, ascending exponents."""
        return [[str(e), str(c)] for e, c in sorted(self.terms.items())]

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self, var: str = "q") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            else:
                mono = f"{var}^{e}" if e.denominator == 1 and e > 0 else f"{var}^({e})"
            if mono == "":
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    def format(self, var: str = "q") -> str:
        return self.__str__(var)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.const(x)
