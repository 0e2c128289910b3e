"""
The Iwahori-Hecke algebra of a Coxeter system over Z[v, v^-1].

Normalization: $(T_s - v_s)(T_s + v_s^{-1}) = 0$ with $v_s = v^{L(s)}$, so
$T_s^2 = (v_s - v_s^{-1}) T_s + 1$. Products are computed in the T-basis by
right multiplication with one generator at a time.

>>> from coxhecke.coxeter import preset
>>> W = preset("A2")
>>> H = HeckeAlgebra(W)
>>> x, y = W.element([0, 1]), W.element([1, 0])
>>> for w, r in sorted(H.t_mult(x, y).items(), key=lambda t: t[0].word):
...     print(list(w.word), r)
[] 1
[0] v - v^-1
[0, 1, 0] v - v^-1
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass

from .coxeter import INF, CoxeterSystem, GroupElement
from .laurent import LaurentPoly

__all__ = ["WeightFunction", "HeckeElement", "HeckeAlgebra"]


@dataclass(frozen=True)
class WeightFunction:
    """Per-generator weights L(s); conjugate generators must agree."""
    weights: tuple[int, ...]

    def check(self, W: CoxeterSystem) -> None:
        if len(self.weights) != W.rank:
            raise ValueError(f"weight function has {len(self.weights)} entries, system has rank {W.rank}")
        for s in range(W.rank):
            for t in range(s + 1, W.rank):
                m = W.matrix[s, t]
                if m != INF and m % 2 == 1 and self.weights[s] != self.weights[t]:
                    raise ValueError(
                        f"L({s}) = {self.weights[s]} != L({t}) = {self.weights[t]} but m_{s}{t} = {m} is odd")

    @classmethod
    def equal(cls, rank: int) -> WeightFunction:
        return cls((1,) * rank)


class HeckeElement(Mapping):
    """A finitely supported map W -> Z[v, v^-1]; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[GroupElement, LaurentPoly] | None = None):
        self._terms = {w: p for w, p in (terms or {}).items() if p}

    def __getitem__(self, w: GroupElement) -> LaurentPoly:
        return self._terms.get(w, LaurentPoly())

    def __contains__(self, w):
        return w in self._terms

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self._terms)
        for w, p in other.items():
            out[w] = out.get(w, LaurentPoly()) + p
        return HeckeElement(out)

    def scale(self, p: LaurentPoly) -> HeckeElement:
        return HeckeElement({w: q * p for w, q in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def support(self) -> frozenset[GroupElement]:
        return frozenset(self._terms)

    def sorted_items(self) -> list[tuple[GroupElement, LaurentPoly]]:
        return sorted(self._terms.items(), key=lambda t: (t[0].length, t[0].word))

    def to_json(self) -> list[dict]:
        return [
            {"word": list(w.word), "length": w.length, "coeff": p.to_json()}
            for w, p in self.sorted_items()
        ]

    def __repr__(self):
        inner = ", ".join(f"T{list(w.word)}: {p}" for w, p in self.sorted_items())
        return f"HeckeElement({{{inner}}})"


class HeckeAlgebra:
    """
    Hecke algebra of `system` with weight function `weights` (default L = 1).

    Everything here is a pure function of its arguments; the only state is a
    memo table for `support_upper`.
    """

    def __init__(self, system: CoxeterSystem, weights: WeightFunction | Sequence[int] | None = None):
        if weights is None:
            weights = WeightFunction.equal(system.rank)
        elif not isinstance(weights, WeightFunction):
            weights = WeightFunction(tuple(weights))
        weights.check(system)
        self.system = system
        self.weights = weights
        self._quad = [
            LaurentPoly({L: 1}) - LaurentPoly({-L: 1}) for L in weights.weights
        ]
        self._upper_memo: dict[tuple[GroupElement, GroupElement], frozenset[GroupElement]] = {}

    def v_s(self, s: int) -> LaurentPoly:
        return LaurentPoly.monomial(self.weights.weights[s])

    def T(self, x: GroupElement) -> HeckeElement:
        return HeckeElement({x: LaurentPoly.const(1)})

    def one(self) -> HeckeElement:
        return self.T(self.system.identity)

    def t_mult_generator(self, h: HeckeElement, s: int) -> HeckeElement:
        """h * T_s."""
        out: dict[GroupElement, LaurentPoly] = {}
        quad = self._quad[s]
        for x, p in h.items():
            xs = x.mul_gen(s)
            if x.right_descent(s):
                # T_x T_s = (v_s - v_s^-1) T_x + T_{xs}
                out[x] = out.get(x, LaurentPoly()) + quad * p
            out[xs] = out.get(xs, LaurentPoly()) + p
        return HeckeElement(out)

    def from_word(self, word: Iterable[int], start: HeckeElement | None = None) -> HeckeElement:
        """start * T_{s_1} ... T_{s_k}; for a reduced word with start = 1 this is T_x."""
        h = self.one() if start is None else start
        for s in word:
            h = self.t_mult_generator(h, s)
        return h

    def t_mult(self, x: GroupElement, y: GroupElement) -> HeckeElement:
        """T_x T_y, folding over the canonical reduced word of y."""
        if x.system is not self.system or y.system is not self.system:
            raise ValueError("elements do not belong to this algebra's Coxeter system")
        return self.from_word(y.word, self.T(x))

    def mult(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        out = HeckeElement()
        for y, q in b.items():
            part = HeckeElement()
            for x, p in a.items():
                part = part + self.t_mult(x, y).scale(p)
            out = out + part.scale(q)
        return out

    def structure_constant(self, x: GroupElement, y: GroupElement, w: GroupElement) -> LaurentPoly:
        return self.t_mult(x, y)[w]

    def support(self, x: GroupElement, y: GroupElement) -> frozenset[GroupElement]:
        """D(x, y): the w with nonzero coefficient in T_x T_y."""
        return self.t_mult(x, y).support()

    def support_upper(self, x: GroupElement, y: GroupElement) -> frozenset[GroupElement]:
        """
        The recursive over-approximation D'(x, y) of D(x, y).

        Peels the smallest-index left descent s of y: D'(xs, sy) when
        l(xs) > l(x), and D'(xs, sy) | D'(x, sy) otherwise.
        """
        key = (x, y)
        memo = self._upper_memo
        if key in memo:
            return memo[key]
        if y.is_identity():
            result = frozenset([x])
        else:
            s = next(t for t in range(self.system.rank) if y.left_descent(t))
            xs, sy = x.mul_gen(s), y.gen_mul(s)
            result = self.support_upper(xs, sy)
            if x.right_descent(s):
                result = result | self.support_upper(x, sy)
        memo[key] = result
        return result

    def check_support_bounds(self, x: GroupElement, y: GroupElement) -> bool:
        """Every w in D(x, y) has l(xy) <= l(w) <= l(x) + l(y)."""
        lo, hi = (x * y).length, x.length + y.length
        return all(lo <= w.length <= hi for w in self.support(x, y))
