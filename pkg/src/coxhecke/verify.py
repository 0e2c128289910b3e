"""
Invariant suites: exhaustive or seeded-random checks of every identity and
inequality the library is built around.

Each `check_*` function is standalone, takes explicit parameters and returns a
`Tally`; `run_verify` assembles them into a report for the CLI.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from . import affine as aff
from .coxeter import CoxeterSystem, GroupElement, Root, ball, inversion_product_parts, positive_roots, preset
from .hecke import HeckeAlgebra
from .scalar import sign

__all__ = [
    "Tally", "SuiteResult", "VerifyScope", "run_verify", "format_report",
    "brute_force_inversions", "random_cocharacters",
]


@dataclass
class Tally:
    cases: int = 0
    failures: int = 0
    first_failure: str | None = None
    notes: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: Callable[[], str] | str = "") -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = what() if callable(what) else what

    def __iadd__(self, other: Tally) -> Tally:
        self.cases += other.cases
        self.failures += other.failures
        if self.first_failure is None:
            self.first_failure = other.first_failure
        self.notes.extend(other.notes)
        return self

    @property
    def ok(self) -> bool:
        return self.failures == 0


# ---- coxeter_core ----------------------------------------------------------

def check_root_signs(W: CoxeterSystem, elements: Sequence[GroupElement], depth: int) -> Tally:
    """Every root x.e_s, and every enumerated positive root, has coordinates of one sign."""
    t = Tally()
    for x in elements:
        for s in range(W.rank):
            root = x.apply(W.simple_root(s))
            t.check(len(root.coordinate_signs()) == 1, lambda: f"{x}.e{s} = {root}")
    for beta in positive_roots(W, depth):
        t.check(beta.coordinate_signs() == {1}, lambda: f"positive root {beta}")
    return t


def check_root_norms(W: CoxeterSystem, elements: Sequence[GroupElement], depth: int) -> Tally:
    """(a, a) = 1 for roots, and every x preserves the form."""
    t = Tally()
    for beta in positive_roots(W, depth):
        t.check(W.bilinear(beta, beta) == 1, lambda: f"(a,a) != 1 for {beta}")
    for x in elements:
        t.check(x.preserves_form(), lambda: f"{x} does not preserve the form")
        for a in x.inversion_set():
            t.check(W.bilinear(a, a) == 1, lambda: f"(a,a) != 1 for {a}")
    return t


def check_simple_permutes(W: CoxeterSystem, depth: int) -> Tally:
    """Phi_s = {e_s}, and s maps positive roots other than e_s to positive roots other than e_s."""
    t = Tally()
    roots = positive_roots(W, depth + 1)
    for s in range(W.rank):
        es = W.simple_root(s)
        t.check(W.gen(s).inversion_set().roots == {es}, f"Phi_{s} != {{e{s}}}")
        for beta, d in roots.items():
            if d > depth or beta == es:
                continue
            image = W.act(s, beta)
            t.check(image != es and image in roots, lambda: f"s{s}.{beta} = {image}")
    return t


def check_descents_and_lengths(elements: Sequence[GroupElement]) -> Tally:
    """l(xs) > l(x) iff e_s not in Phi_x, and |Phi_x| = l(x) with the defining property."""
    t = Tally()
    for x in elements:
        W = x.system
        phi = x.inversion_set()
        t.check(len(phi) == x.length, lambda: f"|Phi_x| = {len(phi)} != l(x) for {x}")
        for a in phi:
            t.check(a.is_positive() and x.apply(a).is_negative(), lambda: f"{a} in Phi_x for {x}")
        for s in range(W.rank):
            up = x.mul_gen(s).length > x.length
            t.check(up == (W.simple_root(s) not in phi), lambda: f"descent criterion at {x}, s{s}")
    return t


def check_inverse_inversions(elements: Sequence[GroupElement]) -> Tally:
    """Phi_{x^-1} = x.(-Phi_x)."""
    t = Tally()
    for x in elements:
        lhs = x.inverse().inversion_set().roots
        rhs = frozenset(x.apply(-a) for a in x.inversion_set())
        t.check(lhs == rhs, lambda: f"Phi_(x^-1) mismatch for {x}")
    return t


def check_product_parts(pairs) -> Tally:
    """Phi_{xy} is the disjoint union of the two parts."""
    t = Tally()
    for x, y in pairs:
        a1, a2 = inversion_product_parts(x, y)
        phi = (x * y).inversion_set().roots
        t.check(not (a1 & a2) and (a1 | a2) == phi, lambda: f"parts of Phi_xy for x={x}, y={y}")
    return t


def check_root_exchange(W: CoxeterSystem, elements: Sequence[GroupElement], depth: int) -> Tally:
    """
    For l(xs) > l(x), beta > 0, beta != e_s, s.beta - beta = n e_s with n >= 0:
    s.beta in Phi_x implies beta in Phi_x.
    """
    t = Tally()
    roots = list(positive_roots(W, depth))
    for x in elements:
        for s in range(W.rank):
            if x.right_descent(s):
                continue
            es = W.simple_root(s)
            for beta in roots:
                if beta == es:
                    continue
                sb = W.act(s, beta)
                # s.beta - beta = -2(beta, e_s) e_s
                if sign(W.bilinear(beta, es)) > 0:
                    continue
                if x.apply(sb).is_negative():
                    t.check(x.apply(beta).is_negative(), lambda: f"x={x}, s={s}, beta={beta}")
    return t


def check_length_exchange(elements: Sequence[GroupElement]) -> tuple[Tally, Tally]:
    """
    l(xs) > l(x) and l(sy) > l(y) imply l(xsy) > l(xy); if moreover
    l(xy) = l(x) + l(y) then l(xsy) = l(x) + l(y) + 1.
    Returns (main tally, corollary tally).
    """
    main, cor = Tally(), Tally()
    if not elements:
        return main, cor
    W = elements[0].system
    for x in elements:
        lx = x.length
        for s in range(W.rank):
            if x.right_descent(s):
                continue
            xs = x.mul_gen(s)
            for y in elements:
                if y.left_descent(s):
                    continue
                lxy = (x * y).length
                lxsy = (xs * y).length
                main.check(lxsy > lxy, lambda: f"x={x}, s={s}, y={y}")
                if lxy == lx + y.length:
                    cor.check(lxsy == lx + y.length + 1, lambda: f"x={x}, s={s}, y={y}")
    return main, cor


def check_reduce_word(W: CoxeterSystem, rng: random.Random, samples: int, max_len: int) -> Tally:
    t = Tally()
    for _ in range(samples):
        word = [rng.randrange(W.rank) for _ in range(rng.randint(0, max_len))]
        red = W.reduce_word(word)
        t.check(
            len(red) <= len(word) and (len(word) - len(red)) % 2 == 0
            and W.reduce_word(red) == red and W.element(red) == W.element(word),
            lambda: f"reduce_word({word}) = {red}")
    return t


# ---- hecke -----------------------------------------------------------------

def right_greedy_word(x: GroupElement) -> tuple[int, ...]:
    """A second reduced word: strip the largest-index right descent each time."""
    word = []
    cur = x
    while not cur.is_identity():
        s = max(t for t in range(x.system.rank) if cur.right_descent(t))
        word.append(s)
        cur = cur.mul_gen(s)
    return tuple(reversed(word))


def check_matsumoto(H: HeckeAlgebra, elements: Sequence[GroupElement]) -> Tally:
    t = Tally()
    for x in elements:
        w1, w2 = x.word, right_greedy_word(x)
        t.check(H.from_word(w1) == H.from_word(w2) == H.T(x), lambda: f"T_x depends on word for {x}")
    return t


def check_associativity(H: HeckeAlgebra, triples) -> Tally:
    t = Tally()
    for x, y, z in triples:
        Tx, Ty, Tz = H.T(x), H.T(y), H.T(z)
        t.check(H.mult(H.mult(Tx, Ty), Tz) == H.mult(Tx, H.mult(Ty, Tz)), lambda: f"({x}, {y}, {z})")
    return t


def check_hecke_pairs(H: HeckeAlgebra, pairs) -> dict[str, Tally]:
    """Support bounds, D within D', and the v -> 1 specialization, one product per pair."""
    bounds, upper, spec = Tally(), Tally(), Tally()
    for x, y in pairs:
        prod = H.t_mult(x, y)
        xy = x * y
        lo, hi = xy.length, x.length + y.length
        for w in prod:
            bounds.check(lo <= w.length <= hi, lambda: f"w={w} in D({x}, {y})")
        dp = H.support_upper(x, y)
        upper.check(prod.support() <= dp, lambda: f"D not in D' for ({x}, {y})")
        upper.check(xy in dp, lambda: f"xy not in D' for ({x}, {y})")
        upper.check(min(w.length for w in dp) >= lo, lambda: f"m(x,y) < l(xy) for ({x}, {y})")
        at_one = {w: p(1) for w, p in prod.items()}
        spec.check(
            all(val == (1 if w == xy else 0) for w, val in at_one.items()) and at_one.get(xy) == 1,
            lambda: f"specialization at v=1 for ({x}, {y})")
    return {"support-lengths": bounds, "d-subset-dprime": upper, "specialization": spec}


# ---- affine_typeA ----------------------------------------------------------

def brute_force_inversions(v: aff.AffinePermutation) -> int:
    """Count pairs 1 <= i <= n, i < j with v(i) > v(j) directly."""
    n = v.n
    hi, lo = max(v.window), min(v.window)
    # for j >= n + hi - lo + 1, v(j) >= lo + j - n > hi
    bound = n + hi - lo
    return sum(1 for i in range(1, n + 1) for j in range(i + 1, bound + 1) if v(i) > v(j))


def random_cocharacters(rng: random.Random, samples: int, ranks=(2, 3, 4, 5), span: int = 5):
    return [tuple(rng.randint(-span, span) for _ in range(rng.choice(ranks))) for _ in range(samples)]


def coprime_residues(n: int) -> list[int]:
    return [m for m in range(1, n) if math.gcd(m, n) == 1]


def check_translation_length(lams) -> Tally:
    t = Tally()
    for lam in lams:
        v = aff.translation(lam)
        formula = sum(abs(a - b) for a, b in itertools.permutations(lam, 2))
        t.check(2 * v.length == formula == 2 * brute_force_inversions(v), lambda: f"lambda={lam}")
        t.check(sum(aff.s_k_sum(lam, k) for k in range(1, len(lam))) == formula, lambda: f"sum S_k, {lam}")
    return t


def check_sk_bound(lams) -> Tally:
    t = Tally()
    for lam in lams:
        n = len(lam)
        for m in coprime_residues(n):
            d = aff.SuperbasicDatum(n, m)
            sm = aff.s_k_sum(lam, m)
            for k in range(1, n):
                t.check(aff.s_k_sum(lam, k) <= aff.d_of(d, k) * sm, lambda: f"lambda={lam}, m={m}, k={k}")
    return t


def check_translation_twist(lams) -> Tally:
    """beta(eps^lam) eps^-lam is the translation by lam_{i-m} - lam_i, and the chain of inequalities."""
    t = Tally()
    for lam in lams:
        n = len(lam)
        for m in coprime_residues(n):
            d = aff.SuperbasicDatum(n, m)
            v = aff.translation(lam)
            defect = aff.twist_defect(v, d)
            mu = tuple(lam[(i - m) % n] - lam[i] for i in range(n))
            t.check(defect == aff.translation(mu), lambda: f"twist of eps^{lam}, m={m}")
            sm = aff.s_k_sum(lam, m)
            dl = defect.length
            t.check(n * sm <= 2 * dl, lambda: f"n S_m > 2l for {lam}, m={m}")
            t.check(2 * v.length <= n * (n - 1) // 2 * sm <= (n - 1) * dl, lambda: f"chain for {lam}, m={m}")
    return t


def check_beta_automorphism(n: int, radius: int, rng: random.Random, samples: int) -> Tally:
    t = Tally()
    elems = list(aff.enumerate_ball(n, radius))
    for m in coprime_residues(n):
        d = aff.SuperbasicDatum(n, m)
        for i in range(n):
            t.check(aff.beta_twist(aff.generator(n, i), d) == aff.generator(n, (i + m) % n), f"beta(s{i}), m={m}")
        for v in elems:
            t.check(aff.beta_twist(v, d).length == v.length, lambda: f"beta length, {v}")
        for _ in range(samples if elems else 0):
            u, v = rng.choice(elems), rng.choice(elems)
            t.check(aff.beta_twist(u * v, d) == aff.beta_twist(u, d) * aff.beta_twist(v, d), lambda: f"{u}, {v}")
    return t


def check_twist_bound(n: int, radius: int, bound: aff.BoundSpec, ms: Sequence[int] | None = None) -> Tally:
    """l(beta(v) v^-1) >= f(l(v)) for every v in the ball and every allowed m."""
    t = Tally()
    ms = coprime_residues(n) if ms is None else ms
    worst = None
    for m in ms:
        d = aff.SuperbasicDatum(n, m)
        for v in aff.enumerate_ball(n, radius):
            lhs = aff.twist_defect(v, d).length
            slack = lhs - bound(v.length)
            if worst is None or slack < worst:
                worst = slack
            t.check(slack >= 0, lambda: f"n={n}, m={m}, v={v}: {lhs} < {bound(v.length)}")
    t.notes.append(f"minimum slack {worst}")
    return t


def check_model_agreement(n: int, radius: int) -> Tally:
    t = Tally()
    W = aff.affine_system(n)
    coxeter_ball = ball(W, radius)
    perms = list(aff.enumerate_ball(n, radius))
    t.check(len(coxeter_ball) == len(perms), f"ball sizes {len(coxeter_ball)} != {len(perms)}")
    for x in coxeter_ball:
        v = aff.from_coxeter(x, n)
        t.check(v.length == x.length == brute_force_inversions(v), lambda: f"length of {x}")
        t.check(aff.to_coxeter(v) == x, lambda: f"round trip of {x}")
    return t


def check_small_twist(n: int, rs: Sequence[int]) -> Tally:
    """small_twist_set against filtering a strictly larger ball."""
    t = Tally()
    for m in coprime_residues(n):
        d = aff.SuperbasicDatum(n, m)
        for r in rs:
            got = aff.small_twist_set(d, r)
            radius = aff.bound_f(n, aff.effective_cap(n)).max_below(r)
            wide = [v for v in aff.enumerate_ball(n, max(radius, 0) + 4) if aff.twist_defect(v, d).length < r]
            t.check(got == wide, lambda: f"n={n}, m={m}, r={r}")
    return t


def check_candidates(n: int, w_list: Sequence[aff.AffinePermutation], probe_radius: int) -> Tally:
    """
    Re-verify every returned cell, and check completeness against cells found
    from the other side: for v in a small ball and w in D(v^-1, beta(v)),
    v must be a candidate for w.
    """
    t = Tally()
    for m in coprime_residues(n):
        d = aff.SuperbasicDatum(n, m)
        if n == 2 and m == 1:
            t.check(aff.candidate_cells(d, aff.identity(n)) == [aff.identity(n)], "candidates(e) != {e}")
        for w in w_list:
            for v in aff.candidate_cells(d, w):
                t.check(aff.in_twisted_support(v, w, d), lambda: f"v={v} for w={w}")
        H = aff.hecke_algebra(n)
        probes = {}
        for v in aff.enumerate_ball(n, probe_radius):
            prod = H.t_mult(aff.to_coxeter(v.inverse()), aff.to_coxeter(aff.beta_twist(v, d)))
            for x in prod:
                probes.setdefault(aff.from_coxeter(x, n), set()).add(v)
        for w, vs in sorted(probes.items(), key=lambda kv: kv[0].sort_key())[:12]:
            cells = set(aff.candidate_cells(d, w))
            t.check(vs <= cells, lambda: f"missing candidates for w={w}, m={m}")
    return t


# ---- driver ----------------------------------------------------------------

@dataclass(frozen=True)
class VerifyScope:
    preset: str = "A2"
    radius: int = 8
    samples: int = 200
    seed: int = 0
    root_depth: int = 8
    affine_ranks: tuple[int, ...] = (2, 3)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    failures: int
    millis: int
    informational: bool = False
    first_failure: str | None = None
    notes: tuple[str, ...] = ()


def run_verify(scope: VerifyScope, system: CoxeterSystem | None = None) -> list[SuiteResult]:
    W = system if system is not None else preset(scope.preset)
    rng = random.Random(scope.seed)
    results: list[SuiteResult] = []
    R = scope.radius
    depth = min(scope.root_depth, R) if R > 0 else 0
    cache: dict[str, object] = {}

    def elements():
        if "ball" not in cache:
            cache["ball"] = ball(W, R)
        return cache["ball"]

    def run(name: str, fn, informational: bool = False):
        start = time.perf_counter()
        out = fn()
        millis = int((time.perf_counter() - start) * 1000)
        tallies = out if isinstance(out, dict) else {name: out}
        for key, tally in tallies.items():
            results.append(SuiteResult(key, tally.cases, tally.failures, millis, informational,
                                       tally.first_failure, tuple(tally.notes)))

    H = HeckeAlgebra(W)
    pairs = lambda: itertools.product(elements(), repeat=2)  # noqa: E731

    def triples():
        els = elements()
        return [(rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(min(scope.samples, 50))]

    run("root-signs", lambda: check_root_signs(W, elements(), depth))
    run("root-norms", lambda: check_root_norms(W, elements(), depth))
    run("simple-permutes", lambda: check_simple_permutes(W, depth))
    run("length-inversions", lambda: check_descents_and_lengths(elements()))
    run("inverse-inversions", lambda: check_inverse_inversions(elements()))
    run("product-inversions", lambda: check_product_parts(pairs()))
    run("root-exchange", lambda: check_root_exchange(W, elements(), depth))
    run("length-exchange", lambda: dict(zip(("length-exchange", "length-exchange-additive"), check_length_exchange(elements()))))
    run("reduce-word", lambda: check_reduce_word(W, rng, scope.samples, 2 * R))
    run("matsumoto", lambda: check_matsumoto(H, elements()))
    run("associativity", lambda: check_associativity(H, triples()))
    run("hecke-pairs", lambda: check_hecke_pairs(H, pairs()))

    lams = random_cocharacters(rng, scope.samples)
    run("translation-length", lambda: check_translation_length(lams))
    run("sk-bound", lambda: check_sk_bound(lams))
    run("translation-twist", lambda: check_translation_twist(lams))
    for n in scope.affine_ranks:
        run(f"beta-automorphism-n{n}", lambda: check_beta_automorphism(n, R, rng, scope.samples))
        run(f"model-agreement-n{n}", lambda: check_model_agreement(n, R))
        run(f"twist-bound-n{n}", lambda: check_twist_bound(n, R, aff.bound_f(n)))
        run(f"small-twist-n{n}", lambda: check_small_twist(n, range(1, min(R, 8) + 1)))
    run("candidates-n2", lambda: check_candidates(2, list(aff.enumerate_ball(2, min(R, 3))), min(R, 2)))
    # the printed constant rests on l(v_f) <= 2n-3, which fails for n >= 4
    run("twist-bound-n4-printed", lambda: check_twist_bound(4, R, aff.bound_f(4)), informational=True)
    run("twist-bound-n4-corrected", lambda: check_twist_bound(4, R, aff.bound_f(4, aff.effective_cap(4))))
    return results


def format_report(results: Sequence[SuiteResult], scope: VerifyScope, timing: bool = True) -> str:
    lines = [f"# seed={scope.seed} preset={scope.preset} radius={scope.radius} samples={scope.samples}"]
    for r in results:
        millis = r.millis if timing else 0
        lines.append(f"{r.name}\t{r.cases}\t{r.failures}\t{millis}")
    for r in results:
        if r.failures and not r.informational:
            lines.append(f"# FAIL {r.name}: {r.first_failure}")
    printed = next((r for r in results if r.name == "twist-bound-n4-printed"), None)
    fixed = next((r for r in results if r.name == "twist-bound-n4-corrected"), None)
    if printed is not None:
        verdict = "holds" if printed.failures == 0 else "fails"
        lines.append(f"# paper-f {verdict} at n=4 (radius {scope.radius}, f(z) = {_f_text(4)}, "
                     f"{printed.failures} violations, {'; '.join(printed.notes)})")
    if fixed is not None:
        verdict = "holds" if fixed.failures == 0 else "fails"
        lines.append(f"# corrected-cap f {verdict} at n=4 (c' = {aff.effective_cap(4)}, "
                     f"f(z) = {_f_text(4, aff.effective_cap(4))}, {'; '.join(fixed.notes)})")
    return "\n".join(lines) + "\n"


def _f_text(n: int, cap: int | None = None) -> str:
    return str(aff.bound_f(n, cap)).removeprefix("f(z) = ")


def all_passed(results: Sequence[SuiteResult]) -> bool:
    return all(r.failures == 0 for r in results if not r.informational)
