import math
import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxhecke import affine as aff
from coxhecke.affine import AffinePermutation, SuperbasicDatum
from coxhecke.verify import brute_force_inversions


def W(*window):
    return AffinePermutation(tuple(window))


# ---- basic structure -------------------------------------------------------

def test_window_validation():
    with pytest.raises(ValueError):
        W(1, 3)
    with pytest.raises(ValueError):
        W()
    assert W(3, 0).component == 0
    assert W(2, 3).component == 1 and not W(2, 3).in_affine_weyl()


def test_generators():
    assert aff.generator(2, 0) == W(0, 3)
    assert aff.generator(3, 1) == W(2, 1, 3)
    assert aff.generator(3, 0) == W(0, 2, 4)
    for n in (2, 3, 4):
        for i in range(n):
            s = aff.generator(n, i)
            assert s * s == aff.identity(n) and s.length == 1


def test_s0_is_translation_times_reflection():
    # s_0 = eps^{theta} s_theta with theta = (1, 0, ..., 0, -1)
    for n in (2, 3, 4, 5):
        theta = [0] * n
        theta[0], theta[-1] = 1, -1
        s_theta = list(range(1, n + 1))
        s_theta[0], s_theta[-1] = n, 1
        s_theta_affine = AffinePermutation(tuple(s_theta))
        assert aff.translation(theta) * s_theta_affine == aff.generator(n, 0)


def test_from_parts_examples():
    assert aff.from_parts((1, 2, 3), (0, 0, 0)) == aff.identity(3)
    assert aff.from_parts((1, 2), (1, -1)) == W(3, 0)
    assert aff.from_parts((1, 2, 3), (1, 0, -1)) == W(4, 2, 0)


@settings(max_examples=100)
@given(data=st.data(), n=st.integers(2, 6))
def test_from_parts_roundtrip(data, n):
    perm = data.draw(st.permutations(range(1, n + 1)))
    lam = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    v = aff.from_parts(perm, lam)
    assert aff.to_parts(v) == (tuple(perm), tuple(lam))
    # v = v_f eps^lambda as a product
    assert v == AffinePermutation(tuple(perm)) * aff.translation(lam)


def test_length_examples():
    assert aff.identity(3).length == 0
    assert aff.translation((1, 0, -1)).length == 4
    assert brute_force_inversions(aff.translation((1, 0, -1))) == 4
    assert aff.translation((1, -1)).length == 2


@settings(max_examples=200)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=5).flatmap(
    lambda lam: st.permutations(range(1, len(lam) + 1)).map(lambda p: aff.from_parts(p, lam))))
def test_length_matches_inversion_count(v):
    assert v.length == brute_force_inversions(v)
    assert len(v.word) == v.length
    if v.in_affine_weyl():
        assert aff.from_word(v.n, v.word) == v
        assert aff.to_coxeter(v).length == v.length


def test_to_coxeter_requires_wa():
    with pytest.raises(ValueError):
        aff.to_coxeter(W(2, 3))


# ---- superbasic twist ------------------------------------------------------

def test_datum_validation():
    with pytest.raises(ValueError):
        SuperbasicDatum(4, 2)
    with pytest.raises(ValueError):
        SuperbasicDatum(1, 1)
    d = SuperbasicDatum(3, 2)
    assert d.newton_point == (Fraction(2, 3),) * 3
    assert d.b.component == 2 and d.b1.component == 1


def test_beta_examples():
    d = SuperbasicDatum(3, 1)
    assert aff.beta_twist(aff.generator(3, 0), d) == aff.generator(3, 1)
    assert aff.beta_twist(aff.identity(3), d) == aff.identity(3)
    d2 = SuperbasicDatum(2, 1)
    assert aff.beta_twist(aff.translation((1, -1)), d2) == aff.translation((-1, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_beta_on_generators(n):
    for m in range(-n, 2 * n):
        if math.gcd(m, n) != 1:
            continue
        d = SuperbasicDatum(n, m)
        for i in range(n):
            assert aff.beta_twist(aff.generator(n, i), d) == aff.generator(n, (i + m) % n)


@settings(max_examples=100)
@given(n=st.integers(2, 5), data=st.data())
def test_beta_automorphism(n, data):
    m = data.draw(st.sampled_from([m for m in range(1, n) if math.gcd(m, n) == 1]))
    d = SuperbasicDatum(n, m)
    words = st.lists(st.integers(0, n - 1), max_size=8)
    u, v = aff.from_word(n, data.draw(words)), aff.from_word(n, data.draw(words))
    assert aff.beta_twist(u * v, d) == aff.beta_twist(u, d) * aff.beta_twist(v, d)
    assert aff.beta_twist(u, d).length == u.length
    assert aff.beta_twist(u, d) == d.b * u * d.b.inverse()


# ---- sums and the bound ----------------------------------------------------

def test_s_k_examples():
    assert aff.s_k_sum((0, 0, 0), 1) == 0 and aff.s_k_sum((0, 0, 0), 2) == 0
    assert aff.s_k_sum((2, 0, 1), 1) == 4
    assert aff.s_k_sum((2, 0, 1), 2) == 4
    assert 2 * aff.translation((2, 0, 1)).length == 8
    with pytest.raises(ValueError):
        aff.s_k_sum((2, 0, 1), 3)


def test_d_of_examples():
    d = SuperbasicDatum(3, 2)
    assert aff.d_of(d, 0) == 0
    # exhaustive oracle
    assert aff.d_of(d, 1) == next(x for x in range(3) if (2 * x - 1) % 3 == 0) == 2
    assert aff.d_of(d, 2) == 1
    for n in range(2, 9):
        for m in range(1, n):
            if math.gcd(m, n) == 1:
                dd = SuperbasicDatum(n, m)
                assert sorted(aff.d_of(dd, k) for k in range(1, n)) == list(range(1, n))


def test_bound_examples():
    assert str(aff.bound_f(2)) == "f(z) = 2z - 4"
    assert str(aff.bound_f(3)) == "f(z) = z - 9"
    assert aff.bound_f(4).b == Fraction(-40, 3)
    f = aff.bound_f(2)
    d = SuperbasicDatum(2, 1)
    s1 = aff.generator(2, 1)
    defect = aff.twist_defect(s1, d)
    assert defect == aff.from_word(2, [0, 1]) and defect.length == 2
    assert f(1) == -2 <= defect.length
    assert aff.effective_cap(3) == 3 and aff.effective_cap(4) == 6 and aff.effective_cap(6) == 15
    with pytest.raises(ValueError):
        aff.bound_f(1)


def test_bound_radius_helpers():
    f = aff.bound_f(2)
    assert f.max_below(3) == 3 and f.max_at_most(2) == 3
    g = aff.bound_f(4, 6)
    z = g.max_below(5)
    assert g(z) < 5 <= g(z + 1)


# ---- enumeration -----------------------------------------------------------

def test_enumerate_examples():
    assert list(aff.enumerate_ball(2, 0)) == [aff.identity(2)]
    ball = list(aff.enumerate_ball(2, 3))
    assert len(ball) == 7
    expected = [[], [0], [1], [0, 1], [1, 0], [0, 1, 0], [1, 0, 1]]
    assert set(ball) == {aff.from_word(2, w) for w in expected}
    assert len(list(aff.enumerate_ball(3, 2))) == 10
    assert list(aff.enumerate_ball(3, -1)) == []


@pytest.mark.parametrize("n, L", [(2, 6), (3, 5), (4, 4)])
def test_enumerate_matches_word_closure(n, L):
    # oracle: all words of length <= L, deduplicated, filtered by length
    seen = {aff.identity(n)}
    frontier = {aff.identity(n)}
    for _ in range(L):
        frontier = {v.mul_gen(i) for v in frontier for i in range(n)} - seen
        seen |= frontier
    expected = {v for v in seen if v.length <= L}
    got = list(aff.enumerate_ball(n, L))
    assert len(got) == len(set(got)) and set(got) == expected
    assert [v.length for v in got] == sorted(v.length for v in got)


def test_small_twist_examples():
    d = SuperbasicDatum(2, 1)
    assert aff.small_twist_set(d, 1) == [aff.identity(2)]
    assert set(aff.small_twist_set(d, 3)) == {aff.identity(2), aff.generator(2, 0), aff.generator(2, 1)}
    assert aff.twist_defect(aff.generator(2, 0), d) == aff.from_word(2, [1, 0])
    for n, m in [(3, 1), (3, 2)]:
        assert aff.identity(n) in aff.small_twist_set(SuperbasicDatum(n, m), 1)


# ---- candidate cells -------------------------------------------------------

def test_candidate_examples():
    d = SuperbasicDatum(2, 1)
    assert aff.candidate_cells(d, aff.identity(2)) == [aff.identity(2)]
    for n, m in [(3, 1), (3, 2), (4, 1)]:
        assert aff.identity(n) in aff.candidate_cells(SuperbasicDatum(n, m), aff.identity(n))


def test_candidates_s0s1_against_wide_scan():
    d = SuperbasicDatum(2, 1)
    w = aff.from_word(2, [0, 1])
    got = aff.candidate_cells(d, w)
    # oracle: no length pre-filter, scan well past the analytic radius
    wide = [v for v in aff.enumerate_ball(2, 7) if aff.in_twisted_support(v, w, d)]
    assert got == wide == [aff.generator(2, 0)]


def test_candidate_errors():
    with pytest.raises(ValueError):
        aff.candidate_cells(SuperbasicDatum(2, 1), W(2, 3))
    with pytest.raises(ValueError):
        aff.candidate_cells(SuperbasicDatum(3, 1), aff.identity(2))
