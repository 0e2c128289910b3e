"""
Laurent polynomials in one variable v with integer coefficients.

>>> v = LaurentPoly.v()
>>> p = (v - v**-1) * (v - v**-1)
>>> str(p)
'v^2 - 2 + v^-2'
>>> p(1)
0
>>> LaurentPoly.parse(str(p)) == p
True
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from fractions import Fraction

__all__ = ["LaurentPoly"]


class LaurentPoly:
    """Immutable finitely supported map exponent -> nonzero integer."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def v(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            if k < 0 and abs(c) != 1:
                raise ValueError("only unit monomials are invertible")
            # c is +-1 when k < 0, and then c^k = c^|k|
            return LaurentPoly({e * k: c ** abs(k)})
        if k < 0:
            raise ValueError("only unit monomials are invertible")
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, value):
        """Evaluate at an int or Fraction."""
        x = Fraction(value)
        total = sum((c * x ** e for e, c in self._terms.items()), Fraction(0))
        return int(total) if total.denominator == 1 else total

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def degree_range(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        return min(self._terms), max(self._terms)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self):
        """Descending exponents, spaces around signs: 'v^2 - 1 + v^-2'."""
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "v" if e == 1 else f"v^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*(v(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of `str`."""
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(text):
            match = cls._TERM.match(text, pos)
            if not match or match.end() == pos:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sgn, digits, var, exp = match.groups()
            if not digits and not var:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            coeff = int(digits) if digits else 1
            if sgn == "-":
                coeff = -coeff
            e = 0 if not var else int(exp) if exp is not None else 1
            terms[e] = terms.get(e, 0) + coeff
            pos = match.end()
            while pos < len(text) and text[pos] == " ":
                pos += 1
        return cls(terms)
