"""
Coxeter systems through their geometric realization.

A `CoxeterSystem` carries the symmetric bilinear form
$(e_s, e_t) = -\\cos(\\pi/m_{st})$ on the real span of the simple roots, with
values in an exact field (see `coxhecke.scalar`). Group elements are the
matrices of the reflection representation; lengths, descents, reduced words
and inversion sets are all computed from exact sign tests on those matrices.

>>> W = preset("A2")
>>> x = W.element([0, 1])
>>> x.length, x.word
(2, (0, 1))
>>> sorted(str(a) for a in x.inversion_set())
['e0 + e1', 'e1']
>>> W.reduce_word([1, 0, 1])
(0, 1, 0)
"""

from __future__ import annotations

import json
import math
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .scalar import CosineField, Number, RationalField, make_field, normalize, sign

__all__ = [
    "INF", "CoxeterMatrixError", "CoxeterMatrix", "CoxeterSystem", "Root",
    "GroupElement", "InversionSet", "new_system", "inversion_product_parts",
    "preset", "load_system", "ball", "positive_roots",
]

INF = math.inf

# a matrix stored row by row; column j holds the coordinates of x.e_j
Mat = tuple[tuple[Number, ...], ...]


class CoxeterMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of orders m_st; `INF` marks m_st = infinity."""
    entries: tuple[tuple[int | float, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise CoxeterMatrixError("Coxeter matrix must have at least one generator")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise CoxeterMatrixError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(n):
                m = rows[i][j]
                if m != INF and (not isinstance(m, int) or isinstance(m, bool)):
                    raise CoxeterMatrixError(f"entry ({i},{j}) = {m!r} is not an integer or infinity")
                if i == j and m != 1:
                    raise CoxeterMatrixError(f"diagonal entry ({i},{i}) = {m} must be 1")
                if i != j and m != INF and m < 2:
                    raise CoxeterMatrixError(f"off-diagonal entry ({i},{j}) = {m} must be >= 2 or infinity")
                if rows[j][i] != m:
                    raise CoxeterMatrixError(
                        f"entry ({i},{j}) = {m} differs from entry ({j},{i}) = {rows[j][i]}: not symmetric")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_json(self) -> dict:
        return {
            "rank": self.size,
            "matrix": [[0 if m == INF else m for m in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> CoxeterMatrix:
        rows = data["matrix"]
        if "rank" in data and data["rank"] != len(rows):
            raise CoxeterMatrixError(f"rank {data['rank']} does not match a {len(rows)}-row matrix")
        return cls(tuple(tuple(INF if m == 0 else m for m in row) for row in rows))


@dataclass(frozen=True)
class Root:
    """A vector sum_s a_s e_s of the geometric realization."""
    coords: tuple[Number, ...]

    def __neg__(self) -> Root:
        return Root(tuple(-a for a in self.coords))

    def __add__(self, other: Root) -> Root:
        return Root(tuple(normalize(a + b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Root) -> Root:
        return self + (-other)

    def scale(self, k: Number) -> Root:
        return Root(tuple(normalize(k * a) for a in self.coords))

    def sign(self) -> int:
        """Sign of the first nonzero coordinate; the sign of the root when it is one."""
        for a in self.coords:
            s = sign(a)
            if s:
                return s
        return 0

    def coordinate_signs(self) -> set[int]:
        return {sign(a) for a in self.coords} - {0}

    def is_positive(self) -> bool:
        return self.sign() > 0

    def is_negative(self) -> bool:
        return self.sign() < 0

    def __str__(self):
        terms = []
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            if a == 1:
                terms.append(f"e{i}")
            elif a == -1:
                terms.append(f"-e{i}")
            else:
                terms.append(f"({a})e{i}")
        out = " + ".join(terms) or "0"
        return out.replace("+ -", "- ")


def _identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _matmul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    cols = list(zip(*b))
    return tuple(
        tuple(normalize(sum(x * y for x, y in zip(row, col) if x and y)) for col in cols)
        for row in a
    )


def _column(a: Mat, j: int) -> tuple[Number, ...]:
    return tuple(row[j] for row in a)


def _column_sign(a: Mat, j: int) -> int:
    for row in a:
        s = sign(row[j])
        if s:
            return s
    return 0


class CoxeterSystem:
    """
    A Coxeter system with its exact geometric realization.

    Generators are numbered 0..rank-1. Reduced words are memoized per element,
    keyed by matrix; the cache only ever gains correct entries.
    """

    def __init__(self, matrix: CoxeterMatrix, name: str | None = None):
        self.matrix = matrix
        self.name = name
        n = self.rank = matrix.size
        finite = [matrix[i, j] for i in range(n) for j in range(n) if i != j and matrix[i, j] != INF]
        self.field: RationalField | CosineField = make_field(finite)

        def two_cos(m):
            return self.field.two_cos(0 if m == INF else m)

        # 2(e_s, e_t) = -2cos(pi/m_st), the values used by the reflections
        self._form2: Mat = tuple(tuple(normalize(-two_cos(matrix[i, j])) for j in range(n)) for i in range(n))
        self.form: Mat = tuple(tuple(normalize(Fraction(1, 2) * v) for v in row) for row in self._form2)
        self._reflections = [self._reflection_matrix(s) for s in range(n)]
        self._words: dict[Mat, tuple[int, ...]] = {}
        self.identity = GroupElement(self, _identity(n), _identity(n))
        self._words[self.identity.mat] = ()
        self.generators = tuple(
            GroupElement(self, self._reflections[s], self._reflections[s]) for s in range(n))
        for s, g in enumerate(self.generators):
            self._words[g.mat] = (s,)

    def _reflection_matrix(self, s: int) -> Mat:
        # s.e_t = e_t - 2(e_t, e_s) e_s
        n = self.rank
        return tuple(
            tuple(normalize((1 if u == t else 0) - (self._form2[t][s] if u == s else 0)) for t in range(n))
            for u in range(n)
        )

    def __repr__(self):
        return f"CoxeterSystem({self.name or self.matrix.entries!r})"

    def _check_gen(self, s: int) -> None:
        if not isinstance(s, int) or not 0 <= s < self.rank:
            raise ValueError(f"generator index {s!r} out of range 0..{self.rank - 1}")

    def simple_root(self, s: int) -> Root:
        self._check_gen(s)
        return Root(tuple(1 if i == s else 0 for i in range(self.rank)))

    def bilinear(self, a: Root, b: Root) -> Number:
        total = 0
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        total = total + x * y * self.form[i][j]
        return normalize(total)

    def act(self, s: int, e: Root) -> Root:
        """The reflection s applied to e: e - 2(e, e_s) e_s."""
        self._check_gen(s)
        k = sum(a * self._form2[t][s] for t, a in enumerate(e.coords) if a)
        coords = list(e.coords)
        coords[s] = normalize(coords[s] - k)
        return Root(tuple(coords))

    def gen(self, s: int) -> GroupElement:
        self._check_gen(s)
        return self.generators[s]

    def element(self, word: Iterable[int]) -> GroupElement:
        x = self.identity
        for s in word:
            x = x.mul_gen(s)
        return x

    def reduce_word(self, word: Sequence[int]) -> tuple[int, ...]:
        """Canonical reduced word of the product of `word`."""
        for s in word:
            self._check_gen(s)
        return self.element(word).word

    def canonical_word(self, x: GroupElement) -> tuple[int, ...]:
        """
        Greedy normal form: strip the smallest-index left descent until the
        identity is reached.
        """
        cached = self._words.get(x.mat)
        if cached is not None:
            return cached
        word = []
        trail = []
        cur = x
        while True:
            cached = self._words.get(cur.mat)
            if cached is not None:
                word.extend(cached)
                break
            trail.append(cur)
            for s in range(self.rank):
                if cur.left_descent(s):
                    word.append(s)
                    cur = cur.gen_mul(s)
                    break
            else:
                raise AssertionError("non-identity element without left descent")
        word = tuple(word)
        # every suffix of a canonical word is canonical for the stripped element
        for k, y in enumerate(trail):
            self._words.setdefault(y.mat, word[k:])
        return word

    def to_json(self) -> dict:
        return self.matrix.to_json()


class GroupElement:
    """
    An element of W, held as its reflection matrix and that of its inverse.

    Equality is matrix equality; the representation is faithful.
    """

    __slots__ = ("system", "mat", "inv", "_hash")

    def __init__(self, system: CoxeterSystem, mat: Mat, inv: Mat):
        self.system = system
        self.mat = mat
        self.inv = inv
        self._hash = hash(mat)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.system is other.system and self.mat == other.mat

    def __hash__(self):
        return self._hash

    def __mul__(self, other: GroupElement) -> GroupElement:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.system is not self.system:
            raise ValueError("cannot multiply elements of different Coxeter systems")
        return GroupElement(self.system, _matmul(self.mat, other.mat), _matmul(other.inv, self.inv))

    def inverse(self) -> GroupElement:
        return GroupElement(self.system, self.inv, self.mat)

    def mul_gen(self, s: int) -> GroupElement:
        """x * s, by a column update of x and a row update of x^{-1}."""
        W = self.system
        W._check_gen(s)
        f = W._form2
        mat = tuple(
            tuple(normalize(row[j] - row[s] * f[j][s]) if row[s] and f[j][s] else row[j]
                  for j in range(W.rank))
            for row in self.mat)
        return GroupElement(W, mat, _row_reflect(self.inv, s, f))

    def gen_mul(self, s: int) -> GroupElement:
        """s * x."""
        return self.inverse().mul_gen(s).inverse()

    def apply(self, e: Root) -> Root:
        return Root(tuple(
            normalize(sum(a * b for a, b in zip(row, e.coords) if a and b)) for row in self.mat))

    def right_descent(self, s: int) -> bool:
        """True iff l(xs) < l(x), i.e. x.e_s is a negative root."""
        self.system._check_gen(s)
        return _column_sign(self.mat, s) < 0

    def left_descent(self, s: int) -> bool:
        """True iff l(sx) < l(x), i.e. x^{-1}.e_s is a negative root."""
        self.system._check_gen(s)
        return _column_sign(self.inv, s) < 0

    @property
    def word(self) -> tuple[int, ...]:
        return self.system.canonical_word(self)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return self.mat == self.system.identity.mat

    def preserves_form(self) -> bool:
        W = self.system
        n = W.rank
        cols = [Root(_column(self.mat, j)) for j in range(n)]
        return all(W.bilinear(cols[i], cols[j]) == W.form[i][j] for i in range(n) for j in range(n))

    def inversion_set(self) -> InversionSet:
        """
        Phi_x, built from a reduced word s_1...s_k as the roots
        s_k...s_{i+1}.e_{s_i}.
        """
        roots = []
        P = self.system.identity
        for s in reversed(self.word):
            roots.append(Root(_column(P.mat, s)))
            P = P.mul_gen(s)
        return InversionSet(self, frozenset(roots))

    def __repr__(self):
        return f"GroupElement({list(self.word)})"

    def __str__(self):
        return " ".join(map(str, self.word)) or "e"


def _row_reflect(a: Mat, s: int, f: Mat) -> Mat:
    # S * a: only row s changes, row_s -= sum_t 2(e_t, e_s) row_t
    n = len(a)
    new = []
    for j in range(n):
        acc = a[s][j]
        for t in range(n):
            if f[t][s] and a[t][j]:
                acc = acc - f[t][s] * a[t][j]
        new.append(normalize(acc))
    return tuple(tuple(new) if u == s else a[u] for u in range(n))


@dataclass(frozen=True)
class InversionSet:
    """Phi_x: the positive roots sent to negative roots by x."""
    owner: GroupElement
    roots: frozenset[Root]

    def __len__(self):
        return len(self.roots)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __contains__(self, root):
        return root in self.roots

    def negated(self) -> frozenset[Root]:
        return frozenset(-a for a in self.roots)


def new_system(matrix: CoxeterMatrix | Sequence[Sequence], name: str | None = None) -> CoxeterSystem:
    if not isinstance(matrix, CoxeterMatrix):
        matrix = CoxeterMatrix(tuple(tuple(row) for row in matrix))
    return CoxeterSystem(matrix, name)


def inversion_product_parts(x: GroupElement, y: GroupElement) -> tuple[frozenset[Root], frozenset[Root]]:
    """
    The two halves of Phi_{xy}:
    (Phi_y minus y^{-1}.Phi_x^-,  y^{-1}.Phi_x minus Phi_y^-).
    """
    if x.system is not y.system:
        raise ValueError("elements of different Coxeter systems")
    yinv = y.inverse()
    phi_x = x.inversion_set()
    phi_y = y.inversion_set().roots
    neg_phi_y = frozenset(-a for a in phi_y)
    moved_x = frozenset(yinv.apply(a) for a in phi_x)
    moved_neg_x = frozenset(-a for a in moved_x)
    return phi_y - moved_neg_x, moved_x - neg_phi_y


def ball(W: CoxeterSystem, radius: int) -> list[GroupElement]:
    """All elements of length <= radius, by length shells then canonical word."""
    shell = [W.identity]
    seen = {W.identity}
    out = [W.identity]
    for _ in range(radius):
        nxt = set()
        for x in shell:
            for s in range(W.rank):
                if not x.right_descent(s):
                    y = x.mul_gen(s)
                    if y not in seen:
                        nxt.add(y)
        if not nxt:
            break
        seen |= nxt
        shell = sorted(nxt, key=lambda g: g.word)
        out.extend(shell)
    return out


def positive_roots(W: CoxeterSystem, depth: int) -> dict[Root, int]:
    """
    Positive roots of depth <= `depth`, mapped to their depth.

    Depth 1 are the simple roots; s.beta has depth one more than beta when
    (beta, e_s) < 0.
    """
    found = {W.simple_root(s): 1 for s in range(W.rank)}
    frontier = list(found)
    for d in range(2, depth + 1):
        nxt = []
        for beta in frontier:
            for s in range(W.rank):
                if sign(W.bilinear(beta, W.simple_root(s))) < 0:
                    gamma = W.act(s, beta)
                    if gamma not in found:
                        found[gamma] = d
                        nxt.append(gamma)
        frontier = nxt
    return found


# ---- presets ---------------------------------------------------------------

def _type_a(k: int):
    return [[1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(k)] for i in range(k)]


def _type_b(k: int):
    m = _type_a(k)
    if k >= 2:
        m[k - 2][k - 1] = m[k - 1][k - 2] = 4
    return m


def _affine_a(k: int):
    # generators s_0..s_k, s_i and s_j adjacent iff i - j = +-1 mod k+1
    n = k + 1
    if n == 2:
        return [[1, INF], [INF, 1]]
    return [[1 if i == j else 3 if (i - j) % n in (1, n - 1) else 2 for j in range(n)] for i in range(n)]


def _dihedral(m: int):
    return [[1, m], [m, 1]]


def _free(k: int):
    return [[1 if i == j else INF for j in range(k)] for i in range(k)]


_PRESETS = [
    (re.compile(r"A(\d+)$"), _type_a, 1),
    (re.compile(r"B(\d+)$"), _type_b, 2),
    (re.compile(r"affine-A(\d+)$"), _affine_a, 1),
    (re.compile(r"I2\((\d+)\)$"), _dihedral, 2),
    (re.compile(r"free\((\d+)\)$"), _free, 1),
]

_preset_cache: dict[str, CoxeterSystem] = {}


def preset(name: str) -> CoxeterSystem:
    """
    Named systems: "A<k>", "B<k>", "affine-A<k>", "I2(<m>)", "free(<k>)".

    Instances are shared, so elements from two lookups of the same name can be
    multiplied together.
    """
    if name in _preset_cache:
        return _preset_cache[name]
    for pattern, build, minimum in _PRESETS:
        match = pattern.match(name)
        if match:
            k = int(match.group(1))
            if k < minimum:
                raise ValueError(f"preset {name!r} needs parameter >= {minimum}")
            W = new_system(build(k), name=name)
            return _preset_cache.setdefault(name, W)
    raise ValueError(f"unknown preset {name!r}")


def load_system(path: str | Path) -> CoxeterSystem:
    """Read a system file {"rank": n, "matrix": [[...]]}, with 0 for infinity."""
    with open(path) as fh:
        data = json.load(fh)
    return CoxeterSystem(CoxeterMatrix.from_json(data), name=str(path))
