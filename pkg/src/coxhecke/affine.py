"""
The extended affine Weyl group of GL_n as affine permutations, and the
superbasic twist.

An affine permutation is a bijection v of Z with v(i + n) = v(i) + n, stored
by its window (v(1), ..., v(n)). Products compose right to left,
(uv)(i) = u(v(i)). The translation by a cocharacter lambda is
i -> i + n*lambda_i, and v = v_f eps^lambda has window v_f(i) + n*lambda_i.
Generators: s_i swaps i and i+1 (indices mod n), so s_0 swaps 0 and 1.

The superbasic element b of slope m/n is the shift i -> i + m, and the twist
is conjugation by it: beta(v)(i) = v(i - m) + m.

>>> v = translation((1, 0, -1))
>>> v.window, v.length
((4, 2, 0), 4)
>>> d = SuperbasicDatum(3, 1)
>>> beta_twist(generator(3, 0), d) == generator(3, 1)
True
>>> str(bound_f(3))
'f(z) = z - 9'
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NewType

from .coxeter import CoxeterSystem, GroupElement, preset
from .hecke import HeckeAlgebra

__all__ = [
    "Cocharacter", "AffinePermutation", "SuperbasicDatum", "BoundSpec",
    "generator", "identity", "translation", "from_word", "from_parts", "to_parts",
    "length_affine", "beta_twist", "twist_defect", "s_k_sum", "d_of",
    "bound_f", "printed_cap", "effective_cap", "enumerate_ball", "ball_shells",
    "small_twist_set", "candidate_cells", "in_twisted_support", "hecke_algebra", "affine_system", "to_coxeter", "from_coxeter",
]

# lambda = (lambda_1, ..., lambda_n), read periodically: lambda_i = lambda_{i mod n}
Cocharacter = NewType("Cocharacter", tuple[int, ...])


def _periodic(seq: Sequence[int], i: int) -> int:
    """seq_i for 1-based periodic index i."""
    return seq[(i - 1) % len(seq)]


@dataclass(frozen=True, order=True)
class AffinePermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(a) for a in self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if n < 1:
            raise ValueError("empty window")
        if sorted(a % n for a in window) != list(range(n)):
            raise ValueError(f"window {window} does not have distinct residues mod {n}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    @property
    def component(self) -> int:
        """Valuation of the determinant; 0 exactly on W_a."""
        n = self.n
        return (sum(self.window) - n * (n + 1) // 2) // n

    def in_affine_weyl(self) -> bool:
        return self.component == 0

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("affine permutations of different rank")
        return AffinePermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> AffinePermutation:
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.window, start=1):
            q, r = divmod(a - 1, n)
            out[r] = i - q * n
        return AffinePermutation(tuple(out))

    @property
    def length(self) -> int:
        return length_affine(self)

    def right_descent(self, i: int) -> bool:
        """l(v s_i) < l(v), i.e. v(i) > v(i+1)."""
        return self(i) > self(i + 1)

    def left_descent(self, i: int) -> bool:
        return self.inverse().right_descent(i)

    def mul_gen(self, i: int) -> AffinePermutation:
        """v s_i, which swaps the values at positions i and i+1."""
        n = self.n
        i %= n
        w = list(self.window)
        if i == 0:
            w[0], w[n - 1] = self.window[n - 1] - n, self.window[0] + n
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePermutation(tuple(w))

    @property
    def word(self) -> tuple[int, ...]:
        """Greedy normal form: repeatedly strip the smallest-index left descent."""
        word = []
        inv = self.inverse()
        while True:
            for i in range(inv.n):
                if inv.right_descent(i):
                    word.append(i)
                    inv = inv.mul_gen(i)
                    break
            else:
                return tuple(word)

    def sort_key(self):
        return (self.length, self.window)

    def __str__(self):
        return "w:" + ",".join(map(str, self.window))


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(tuple(range(1, n + 1)))


def generator(n: int, i: int) -> AffinePermutation:
    return identity(n).mul_gen(i)


def from_word(n: int, word: Sequence[int]) -> AffinePermutation:
    v = identity(n)
    for i in word:
        if not 0 <= i < n:
            raise ValueError(f"generator index {i} out of range 0..{n - 1}")
        v = v.mul_gen(i)
    return v


def translation(lam: Sequence[int]) -> AffinePermutation:
    """eps^lambda: i -> i + n*lambda_i."""
    n = len(lam)
    return AffinePermutation(tuple(i + n * a for i, a in enumerate(lam, start=1)))


def from_parts(v_f: Sequence[int], lam: Sequence[int]) -> AffinePermutation:
    """v_f eps^lambda, where v_f is a permutation of 1..n in one-line notation."""
    n = len(v_f)
    if sorted(v_f) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(v_f)} is not a permutation of 1..{n}")
    if len(lam) != n:
        raise ValueError("cocharacter and permutation have different sizes")
    return AffinePermutation(tuple(v_f[i] + n * lam[i] for i in range(n)))


def to_parts(v: AffinePermutation) -> tuple[tuple[int, ...], Cocharacter]:
    n = v.n
    v_f = tuple((a - 1) % n + 1 for a in v.window)
    lam = tuple((a - b) // n for a, b in zip(v.window, v_f))
    return v_f, Cocharacter(lam)


def length_affine(v: AffinePermutation) -> int:
    """
    Number of inversions #{(i, j): 1 <= i <= n, i < j, v(i) > v(j)}, by the
    closed form sum_{i<j} |floor((v(j) - v(i)) / n)|.
    """
    w, n = v.window, v.n
    return sum(abs((w[j] - w[i]) // n) for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class SuperbasicDatum:
    """Slope m/n with gcd(m, n) = 1; b is the shift e_i -> e_{i+m}."""
    n: int
    m: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if math.gcd(self.m, self.n) != 1:
            raise ValueError(f"m = {self.m} and n = {self.n} are not coprime")

    @property
    def b(self) -> AffinePermutation:
        return AffinePermutation(tuple(i + self.m for i in range(1, self.n + 1)))

    @property
    def b1(self) -> AffinePermutation:
        return AffinePermutation(tuple(i + 1 for i in range(1, self.n + 1)))

    @property
    def newton_point(self) -> tuple[Fraction, ...]:
        return (Fraction(self.m, self.n),) * self.n


def beta_twist(v: AffinePermutation, d: SuperbasicDatum) -> AffinePermutation:
    """b v b^{-1}, i.e. beta(v)(i) = v(i - m) + m."""
    if v.n != d.n:
        raise ValueError(f"rank mismatch: permutation has n = {v.n}, datum has n = {d.n}")
    return AffinePermutation(tuple(v(i - d.m) + d.m for i in range(1, d.n + 1)))


def twist_defect(v: AffinePermutation, d: SuperbasicDatum) -> AffinePermutation:
    """beta(v) v^{-1}."""
    return beta_twist(v, d) * v.inverse()


def s_k_sum(lam: Sequence[int], k: int) -> int:
    """S_k = sum_{i=1}^n |lambda_{i+k} - lambda_i|, indices read mod n."""
    n = len(lam)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k = {k} out of range 1..{n - 1}")
    return sum(abs(_periodic(lam, i + k) - _periodic(lam, i)) for i in range(1, n + 1))


def d_of(d: SuperbasicDatum, k: int) -> int:
    """The unique 0 <= d(m,k) < n with m*d(m,k) = k mod n."""
    return (k * pow(d.m, -1, d.n)) % d.n


@dataclass(frozen=True)
class BoundSpec:
    """f(z) = a z + b, together with the finite-part cap c used to derive b."""
    a: Fraction
    b: Fraction
    c: int

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError("slope must be positive")

    def __call__(self, z: int) -> Fraction:
        return self.a * z + self.b

    def max_below(self, r) -> int:
        """Largest integer z with f(z) < r."""
        return math.ceil((r - self.b) / self.a) - 1

    def max_at_most(self, r) -> int:
        """Largest integer z with f(z) <= r."""
        return math.floor((r - self.b) / self.a)

    def __str__(self):
        a, b = self.a, self.b
        slope = "z" if a == 1 else f"{a}z" if a.denominator == 1 else f"{a} z"
        if b == 0:
            return f"f(z) = {slope}"
        return f"f(z) = {slope} {'-' if b < 0 else '+'} {abs(b)}"


def printed_cap(n: int) -> int:
    """2n - 3, the bound on l(v_f) used for the printed constant."""
    return 2 * n - 3


def effective_cap(n: int) -> int:
    """max(2n - 3, n(n-1)/2): a true bound on the length of any v_f in S_n."""
    return max(printed_cap(n), n * (n - 1) // 2)


def bound_f(n: int, cap: int | None = None) -> BoundSpec:
    """
    f(z) = 2/(n-1) z - (2 + 2/(n-1)) c.

    With the default cap c = 2n - 3 this is 2/(n-1) z - 2n(2n-3)/(n-1).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    c = printed_cap(n) if cap is None else cap
    a = Fraction(2, n - 1)
    return BoundSpec(a, -(2 + a) * c, c)


def ball_shells(n: int, L: int) -> Iterator[list[AffinePermutation]]:
    """Length shells 0..L of W_a, each sorted by window."""
    shell = [identity(n)]
    yield shell
    for _ in range(L):
        nxt = set()
        for v in shell:
            for i in range(n):
                if not v.right_descent(i):
                    nxt.add(v.mul_gen(i))
        shell = sorted(nxt, key=lambda u: u.window)
        yield shell


def enumerate_ball(n: int, L: int) -> Iterator[AffinePermutation]:
    """Every v in W_a with l(v) <= L, once each, in (length, window) order."""
    if L < 0:
        return
    for shell in ball_shells(n, L):
        yield from shell


def small_twist_set(d: SuperbasicDatum, r: int) -> list[AffinePermutation]:
    """
    {v in W_a : l(beta(v) v^{-1}) < r}, sorted by (length, window).

    Only lengths up to the largest z with f(z) < r are scanned, with f built
    from the effective cap; every member lies in that ball.
    """
    radius = bound_f(d.n, effective_cap(d.n)).max_below(r)
    return [v for v in enumerate_ball(d.n, max(radius, 0)) if twist_defect(v, d).length < r]


@lru_cache(maxsize=None)
def affine_system(n: int) -> CoxeterSystem:
    """The Coxeter system of W_a with generators s_0, ..., s_{n-1}."""
    return preset(f"affine-A{n - 1}")


def to_coxeter(v: AffinePermutation) -> GroupElement:
    if not v.in_affine_weyl():
        raise ValueError(f"{v} is not in W_a (component {v.component})")
    return affine_system(v.n).element(v.word)


def from_coxeter(x: GroupElement, n: int) -> AffinePermutation:
    return from_word(n, x.word)


@lru_cache(maxsize=None)
def hecke_algebra(n: int) -> HeckeAlgebra:
    return HeckeAlgebra(affine_system(n))


def in_twisted_support(v: AffinePermutation, w_a: AffinePermutation, d: SuperbasicDatum) -> bool:
    """w_a in D(v^{-1}, beta(v))."""
    H = hecke_algebra(d.n)
    target = to_coxeter(w_a)
    return target in H.t_mult(to_coxeter(v.inverse()), to_coxeter(beta_twist(v, d)))


def candidate_cells(d: SuperbasicDatum, w_a: AffinePermutation) -> list[AffinePermutation]:
    """
    {v in W_a : w_a in D(v^{-1}, beta(v))}, sorted by (length, window).

    Membership forces l(w_a) >= l(v^{-1} beta(v)) >= f(l(v)), which bounds the
    scan radius; pairs failing the length bound are skipped before the Hecke
    product is expanded.
    """
    if w_a.n != d.n:
        raise ValueError(f"rank mismatch: element has n = {w_a.n}, datum has n = {d.n}")
    if not w_a.in_affine_weyl():
        raise ValueError(f"{w_a} is not in W_a (component {w_a.component})")
    target_len = w_a.length
    radius = bound_f(d.n, effective_cap(d.n)).max_at_most(target_len)
    out = []
    for v in enumerate_ball(d.n, max(radius, 0)):
        bv = beta_twist(v, d)
        lo = (v.inverse() * bv).length
        if not lo <= target_len <= 2 * v.length:
            continue
        if in_twisted_support(v, w_a, d):
            out.append(v)
    return out
