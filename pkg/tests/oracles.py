"""Independent models used as test oracles: S_n as permutations, Hecke via permutations."""

from __future__ import annotations

from itertools import permutations

from coxhecke.laurent import LaurentPoly

Perm = tuple[int, ...]


def perm_gen(n: int, s: int) -> Perm:
    p = list(range(n))
    p[s], p[s + 1] = p[s + 1], p[s]
    return tuple(p)


def compose(p: Perm, q: Perm) -> Perm:
    """(pq)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def perm_of_word(n: int, word) -> Perm:
    p = tuple(range(n))
    for s in word:
        p = compose(p, perm_gen(n, s))
    return p


def inversions(p: Perm) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def all_perms(n: int) -> list[Perm]:
    return list(permutations(range(n)))


def perm_hecke_mult(x: Perm, word_y, n: int) -> dict[Perm, LaurentPoly]:
    """T_x T_{s_1} ... T_{s_k} with equal parameters, using inversion counts for descents."""
    q = LaurentPoly({1: 1, -1: -1})
    h = {x: LaurentPoly.const(1)}
    for s in word_y:
        g = perm_gen(n, s)
        out: dict[Perm, LaurentPoly] = {}
        for w, p in h.items():
            ws = compose(w, g)
            if inversions(ws) < inversions(w):
                out[w] = out.get(w, LaurentPoly()) + q * p
            out[ws] = out.get(ws, LaurentPoly()) + p
        h = {w: p for w, p in out.items() if p}
    return h
