"""
Exact real arithmetic in the field generated by $c = 2\\cos(\\pi/M)$.

Elements are polynomials in $c$ with rational coefficients, reduced modulo the
minimal polynomial of $c$. Signs are decided exactly by refining a rational
isolating interval for $c$ until the interval enclosure of the element no
longer contains zero.

When every finite Coxeter entry is 2 or 3 all the values that occur are
rational, and the `RationalField` fast path is used instead: its elements are
plain `int`/`Fraction` values.

>>> K = CosineField(5)
>>> K.minpoly
(-1, -1, 1)
>>> golden = K.two_cos(5)
>>> golden * golden - golden - 1
0
>>> (golden - Fraction(8, 5)).sign()
1
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "Number", "Scalar", "CosineField", "RationalField", "make_field",
    "sign", "normalize", "cyclotomic", "dickson", "cosine_minpoly",
]

# coefficients of an integer polynomial, lowest degree first
IntPoly = tuple[int, ...]

Number = Union[int, Fraction, "Scalar"]


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_divexact(p: list[int], q: list[int]) -> list[int]:
    """Exact division of integer polynomials with monic divisor."""
    p = list(p)
    assert q[-1] == 1
    out = [0] * (len(p) - len(q) + 1)
    for k in range(len(out) - 1, -1, -1):
        coef = p[k + len(q) - 1]
        out[k] = coef
        if coef:
            for j, b in enumerate(q):
                p[k + j] -= coef * b
    assert not any(p), "division was not exact"
    return out


@lru_cache(maxsize=None)
def cyclotomic(N: int) -> IntPoly:
    """
    The N-th cyclotomic polynomial.

    >>> cyclotomic(12)
    (1, 0, -1, 0, 1)
    """
    p = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            p = _poly_divexact(p, list(cyclotomic(d)))
    return tuple(p)


@lru_cache(maxsize=None)
def dickson(k: int) -> IntPoly:
    """
    The polynomial D_k with $D_k(x + x^{-1}) = x^k + x^{-k}$.

    Equivalently $D_k(2\\cos\\theta) = 2\\cos(k\\theta)$, i.e. $D_k(y) = 2T_k(y/2)$
    for the Chebyshev polynomial $T_k$ of the first kind.

    >>> dickson(3)
    (0, -3, 0, 1)
    """
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    prev, cur = [2], [0, 1]
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, a in enumerate(prev):
            nxt[i] -= a
        prev, cur = cur, _trim(nxt)
    return tuple(cur)


@lru_cache(maxsize=None)
def cosine_minpoly(M: int) -> IntPoly:
    """
    Minimal polynomial over Q of $2\\cos(\\pi/M)$, for M >= 2.

    $2\\cos(\\pi/M) = \\zeta + \\zeta^{-1}$ with $\\zeta$ a primitive 2M-th root of
    unity, so the palindromic cyclotomic polynomial of order 2M is rewritten in
    the variable $y = x + x^{-1}$.

    >>> cosine_minpoly(4)
    (-2, 0, 1)
    >>> cosine_minpoly(7)
    (1, -2, -1, 1)
    """
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    phi = cyclotomic(2 * M)
    d = (len(phi) - 1) // 2
    # x^{-d} phi(x) = a_0 + sum_k a_k (x^k + x^{-k}), with a_k = phi[d + k]
    out = [phi[d]]
    for k in range(1, d + 1):
        Dk = dickson(k)
        out += [0] * (len(Dk) - len(out))
        for i, b in enumerate(Dk):
            out[i] += phi[d + k] * b
    return tuple(_trim(out))


def _eval_exact(poly, x):
    acc = 0
    for a in reversed(poly):
        acc = acc * x + a
    return acc


def _interval_eval(poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Horner evaluation of `poly` over the interval [lo, hi]."""
    plo = phi = Fraction(0)
    for a in reversed(poly):
        prods = (plo * lo, plo * hi, phi * lo, phi * hi)
        plo, phi = min(prods) + a, max(prods) + a
    return plo, phi


class RationalField:
    """The field Q, used when every 2cos(pi/m) that occurs is rational."""

    degree = 1
    M = None

    def two_cos(self, m: int) -> Number:
        """2cos(pi/m) for m in {1, 2, 3}; m=0 stands for infinity and gives 2."""
        values = {0: 2, 1: -2, 2: 0, 3: 1}
        try:
            return values[m]
        except KeyError:
            raise ValueError(f"2cos(pi/{m}) is not rational") from None

    def __repr__(self):
        return "RationalField()"


class CosineField:
    """
    The real number field Q(c), c = 2cos(pi/M), embedded in R.

    Elements are `Scalar` instances. The isolating interval for c is shared by
    all elements and only ever shrinks.
    """

    def __init__(self, M: int):
        if M < 4:
            raise ValueError("use RationalField for M < 4")
        self.M = M
        self.minpoly = cosine_minpoly(M)
        self.degree = len(self.minpoly) - 1
        approx = 2 * math.cos(math.pi / M)
        scale = sum(abs(a) * abs(approx) ** i for i, a in enumerate(self.minpoly))
        if abs(_eval_exact(self.minpoly, approx)) > 1e-12 * scale:
            raise ArithmeticError(f"minimal polynomial check failed for M={M}")
        self._init_interval()
        self.c = Scalar(self, (Fraction(0), Fraction(1)))

    def _init_interval(self) -> None:
        # c is the largest root of the minimal polynomial; every other root is
        # at most 2cos(3pi/M), so [lo, 2] isolates c once lo is above that.
        M = self.M
        mid = (math.cos(math.pi / M) + math.cos(3 * math.pi / M))
        lo, hi = Fraction(mid), Fraction(2)
        slo = _sgn(_eval_exact(self.minpoly, lo))
        shi = _sgn(_eval_exact(self.minpoly, hi))
        if slo == 0 or shi == 0 or slo == shi:
            raise ArithmeticError(f"could not isolate 2cos(pi/{M})")
        # one tuple, replaced atomically, so concurrent readers see a valid pair
        self._iv = (lo, hi)
        self._slo = slo
        self.refine(40)

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._iv

    def refine(self, steps: int = 1) -> None:
        """Halve the isolating interval `steps` times."""
        (lo, hi), slo = self._iv, self._slo
        for _ in range(steps):
            mid = (lo + hi) / 2
            smid = _sgn(_eval_exact(self.minpoly, mid))
            if smid == 0:
                lo = hi = mid
                break
            if smid == slo:
                lo = mid
            else:
                hi = mid
        self._iv = (lo, hi)

    def reduce(self, coeffs) -> tuple[Fraction, ...]:
        coeffs = [Fraction(a) for a in coeffs]
        d = self.degree
        mp = self.minpoly
        for k in range(len(coeffs) - 1, d - 1, -1):
            a = coeffs[k]
            if a:
                for j in range(d + 1):
                    coeffs[k - d + j] -= a * mp[j]
        return tuple(_trim(coeffs[:d]))

    def element(self, coeffs) -> Scalar:
        return Scalar(self, self.reduce(coeffs))

    def two_cos(self, m: int) -> Scalar:
        """2cos(pi/m) as D_{M/m}(c); m=0 stands for infinity and gives 2."""
        if m == 0:
            return self.element([2])
        if self.M % m:
            raise ValueError(f"{m} does not divide M={self.M}")
        return self.element(dickson(self.M // m))

    def sign_of(self, coeffs: tuple[Fraction, ...]) -> int:
        if not coeffs:
            return 0
        if len(coeffs) == 1:
            return _sgn(coeffs[0])
        while True:
            ilo, ihi = self._iv
            lo, hi = _interval_eval(coeffs, ilo, ihi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if ilo == ihi:
                # c is rational only for M < 4; kept for safety
                return _sgn(lo)
            self.refine(16)

    def __repr__(self):
        return f"CosineField(M={self.M})"


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


class Scalar:
    """An element of a `CosineField`, as a reduced polynomial in c."""

    __slots__ = ("field", "coeffs", "_sign", "_hash")

    def __init__(self, field: CosineField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs
        self._sign = None
        self._hash = None

    def _lift(self, other) -> tuple[Fraction, ...] | None:
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise ValueError("scalars from different fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) if other else ()
        return None

    def __add__(self, other):
        q = self._lift(other)
        if q is None:
            return NotImplemented
        p = self.coeffs
        n = max(len(p), len(q))
        out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
        return Scalar(self.field, tuple(_trim(out)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return self + Scalar(self.field, tuple(-a for a in q))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Scalar(self.field, ())
            return Scalar(self.field, tuple(a * other for a in self.coeffs))
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return Scalar(self.field, self.field.reduce(_poly_mul(self.coeffs, q)))

    __rmul__ = __mul__

    def sign(self) -> int:
        if self._sign is None:
            self._sign = self.field.sign_of(self.coeffs)
        return self._sign

    def __eq__(self, other):
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return self.coeffs == q

    def __hash__(self):
        if self._hash is None:
            if len(self.coeffs) <= 1:
                self._hash = hash(self.coeffs[0] if self.coeffs else 0)
            else:
                self._hash = hash(self.coeffs)
        return self._hash

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.coeffs)

    def __float__(self):
        c = 2 * math.cos(math.pi / self.field.M)
        return float(sum(float(a) * c ** i for i, a in enumerate(self.coeffs)))

    def __repr__(self):
        """Polynomial in c, highest power first: 'c^2 - 1/2'."""
        if not self.coeffs:
            return "0"
        out = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            var = "" if i == 0 else "c" if i == 1 else f"c^{i}"
            mag = abs(a)
            body = str(mag) if not var else var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(body if a > 0 else f"-{body}")
            else:
                out.append(("+ " if a > 0 else "- ") + body)
        return " ".join(out)


def sign(x: Number) -> int:
    """Exact sign of an int, Fraction or Scalar."""
    if isinstance(x, Scalar):
        return x.sign()
    return _sgn(x)


def normalize(x: Number) -> Number:
    """Collapse a Fraction with denominator 1 to int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def make_field(finite_entries) -> RationalField | CosineField:
    """Pick the smallest field holding 2cos(pi/m) for every m in `finite_entries`."""
    entries = [m for m in finite_entries if m >= 2]
    if all(m in (2, 3) for m in entries):
        return RationalField()
    M = math.lcm(*entries)
    return CosineField(M)
