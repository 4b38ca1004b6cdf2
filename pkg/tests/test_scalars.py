"""Ring tower: constructors, predicates, and the number-theoretic criteria."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import exactlie as xl
from exactlie.errors import (
    NonPrimeModulus,
    NotMaximal,
    ReduciblePolynomial,
    TwoNotInvertible,
    Unsupported,
)


def test_fp_basic():
    F7 = xl.fp(7)
    assert F7.cardinality == 7 and F7.characteristic == 7
    assert F7.add(5, 4) == 2 and F7.mul(3, 5) == 1
    with pytest.raises(NonPrimeModulus):
        xl.fp(6)


def irreducible_by_roots(coeffs, p):
    """Independent quadratic/cubic irreducibility: no roots in F_p."""

    def evaluate(x):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        return acc

    return all(evaluate(x) != 0 for x in range(p))


def test_fq_default_modulus_is_lex_least():
    # oracle: scan the nine monic quadratics over F_3 in lexicographic order
    # of (c1, c0) and take the first with no root
    expected = None
    for c1, c0 in itertools.product(range(3), repeat=2):
        coeffs = (c0, c1, 1)
        if irreducible_by_roots(coeffs, 3):
            expected = coeffs
            break
    assert expected == (1, 0, 1)  # x^2 + 1
    F9 = xl.fq(3, 2)
    assert F9.modulus == expected
    assert F9.cardinality == 9 and F9.characteristic == 3


def test_fq_rejects_reducible_or_malformed():
    with pytest.raises(ReduciblePolynomial):
        xl.fq(3, 2, (0, 0, 1))  # x^2 = x * x
    with pytest.raises(ReduciblePolynomial):
        xl.fq(3, 2, (1, 0, 2))  # not monic
    with pytest.raises(ReduciblePolynomial):
        xl.fq(5, 2, (4, 0, 1))  # x^2 - 1 = (x-1)(x+1)


def test_dup_of_rationals_has_sqrt_minus_one():
    D = xl.dup(xl.rationals())
    i = (D.base.zero(), D.base.one())
    assert D.mul(i, i) == D.neg(D.one())
    assert xl.sqrt_minus_one(D) == i


def test_sqrt_minus_one_examples():
    # F_5: exhaustive oracle over 0..4
    expected = next(s for s in range(5) if (s * s) % 5 == 4)
    assert expected == 2
    assert xl.sqrt_minus_one(xl.fp(5)) == 2
    assert xl.sqrt_minus_one(xl.fp(7)) is None
    assert xl.sqrt_minus_one(xl.dup(xl.fp(7))) == (0, 1)
    assert xl.sqrt_minus_one(xl.rationals()) is None
    with pytest.raises(Unsupported):
        xl.sqrt_minus_one(xl.prod(xl.rationals(), xl.rationals()))


def _odd_prime_powers(bound):
    for q in range(3, bound + 1, 2):
        p = min(k for k in range(2, q + 1) if q % k == 0)
        m, n = q, 0
        while m % p == 0:
            m //= p
            n += 1
        if m == 1:
            yield q, p, n


def test_sqrt_matches_residue_class_up_to_289():
    for q, p, n in _odd_prime_powers(289):
        R = xl.fp(p) if n == 1 else xl.fq(p, n)
        assert (xl.sqrt_minus_one(R) is not None) == (q % 4 == 1), q


def test_two_formally_real_iff_no_sqrt_up_to_121():
    for q, p, n in _odd_prime_powers(121):
        R = xl.fp(p) if n == 1 else xl.fq(p, n)
        real = xl.is_m_two_formally_real(R, xl.zero_ideal(R))
        assert real == (xl.sqrt_minus_one(R) is None), q


def test_m_two_formally_real_examples():
    F3, F5 = xl.fp(3), xl.fp(5)
    assert xl.is_m_two_formally_real(F3, xl.zero_ideal(F3)) is True
    assert xl.is_m_two_formally_real(F5, xl.zero_ideal(F5)) is False
    Z15 = xl.zn(15)
    m5 = xl.ideal(Z15, (5,))
    # oracle: the exhaustive double loop, written out independently
    violated = any(
        (x * x + y * y) % 15 % 5 == 0 and (x % 5 and y % 5)
        for x in range(15)
        for y in range(15)
    )
    assert violated
    assert xl.is_m_two_formally_real(Z15, m5) is False
    with pytest.raises(NotMaximal):
        xl.is_m_two_formally_real(Z15, xl.zero_ideal(Z15))


def test_maximal_ideals():
    Z15 = xl.zn(15)
    sets = sorted(sorted(m.element_set) for m in xl.maximal_ideals(Z15))
    assert sets == [sorted({0, 3, 6, 9, 12}), sorted({0, 5, 10})]
    F9 = xl.fq(3, 2)
    (m,) = xl.maximal_ideals(F9)
    assert m.is_zero
    (m9,) = xl.maximal_ideals(xl.zn(9))
    assert sorted(m9.element_set) == [0, 3, 6]
    P = xl.prod(xl.fp(3), xl.zn(4))
    assert len(xl.maximal_ideals(P)) == 2


def test_decompositions():
    Z15 = xl.zn(15)
    # oracle: exhaustive idempotent search
    idem = {e for e in range(15) if (e * e) % 15 == e}
    assert idem == {0, 1, 6, 10}
    pairs = xl.decompositions(Z15)
    assert len(pairs) == 2
    parts = {frozenset(map(frozenset, ((a.element_set, b.element_set)))) for a, b in pairs}
    assert frozenset({frozenset({0}), frozenset(range(15))}) in parts
    assert frozenset({frozenset({0, 3, 6, 9, 12}), frozenset({0, 5, 10})}) in parts
    assert len(xl.decompositions(xl.fp(7))) == 1
    z6_pairs = xl.decompositions(xl.zn(6))
    assert len(z6_pairs) == 2


def test_decomposition_pairs_split_the_ring():
    for ring in (xl.zn(6), xl.zn(15), xl.zn(21), xl.fp(7)):
        for a, b in xl.decompositions(ring):
            assert a.element_set & b.element_set == {0}
            sums = {ring.add(x, y) for x in a.element_set for y in b.element_set}
            assert len(sums) == ring.cardinality


def test_dup_automorphism_counts():
    assert len(xl.dup_automorphisms(xl.fp(7))) == 2
    assert len(xl.dup_automorphisms(xl.fp(3))) == 2
    # oracle: count square roots of unity mod 15
    assert sum(1 for b in range(15) if (b * b) % 15 == 1) == 4
    assert len(xl.dup_automorphisms(xl.zn(15))) == 4
    with pytest.raises(TwoNotInvertible):
        xl.dup_automorphisms(xl.fp(2))


def test_dup_automorphism_count_matches_mu2():
    for ring in (xl.fp(3), xl.fp(5), xl.fp(7), xl.fq(3, 2), xl.zn(9), xl.zn(15),
                 xl.zn(21), xl.zn(25), xl.zn(35), xl.fq(7, 2)):
        assert len(xl.dup_automorphisms(ring)) == len(xl.mu2(ring))


def test_q_form_check():
    assert xl.q_form_check(5) is True
    assert xl.q_form_check(7) is False
    assert xl.q_form_check(13) is True
    for q in range(2, 500):
        assert xl.q_form_check(q) == (q % 4 == 1), q


RING_ZOO = [
    xl.fp(2), xl.fp(3), xl.fq(2, 2), xl.fq(3, 2), xl.zn(6), xl.zn(15),
    xl.dup(xl.fp(5)), xl.prod(xl.fp(3), xl.zn(4)), xl.rationals(), xl.dup(xl.rationals()),
]


@pytest.mark.parametrize("ring", RING_ZOO, ids=lambda r: r.spec())
def test_ring_axioms_on_large_sample(ring):
    xs = ring.sample_elements(10)
    one = ring.one()
    for x in xs:
        assert ring.mul(one, x) == x
    count = 0
    for x, y, z in itertools.product(xs, repeat=3):
        assert ring.mul(x, y) == ring.mul(y, x)
        assert ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z))
        assert ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z))
        count += 1
    assert count >= min(1000, (ring.cardinality or 1000) ** 3)


@pytest.mark.parametrize("ring", RING_ZOO, ids=lambda r: r.spec())
def test_element_text_roundtrip(ring):
    for x in ring.sample_elements(8):
        assert ring.parse_element(ring.format_element(x)) == x


def test_ring_spec_roundtrip():
    for spec in ("fp:5", "fq:3^2:1,0,1", "zn:15", "q", "dup(fp:7)",
                 "prod(fp:3,zn:9)", "dup(dup(q))"):
        R = xl.make_ring(spec)
        assert xl.make_ring(R.spec()) == R


def test_dup_field_detection():
    assert xl.dup(xl.fp(7)).is_field          # no sqrt(-1) below
    assert not xl.dup(xl.fp(5)).is_field      # (1,2)*(1,-2) = 0
    assert xl.dup(xl.rationals()).is_field
    assert not xl.dup(xl.dup(xl.rationals())).is_field
    D5 = xl.dup(xl.fp(5))
    z = D5.mul((1, 2), (1, 3))
    assert z == (0, 0)


def test_fq_inverse_and_enumeration_order():
    F9 = xl.fq(3, 2)
    elems = list(F9.elements())
    assert elems[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    for x in elems:
        if x != (0, 0):
            assert F9.mul(x, F9.inv(x)) == F9.one()


@settings(max_examples=60, deadline=None)
@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(1, 30))
def test_rationals_are_canonical(a, b, d):
    Q = xl.rationals()
    x = Q.parse_element(f"{a}/{d}")
    y = Q.parse_element(f"{b}/{d}")
    s = Q.add(x, y)
    assert s.denominator > 0
    from math import gcd

    assert gcd(s.numerator, s.denominator) == 1


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(0, 14), max_size=3))
def test_ideal_closure_properties_z15(gens):
    Z15 = xl.zn(15)
    ideal = xl.ideal(Z15, tuple(gens))
    els = ideal.element_set
    for g in gens:
        assert g in els
    for x in els:
        for r in range(15):
            assert (r * x) % 15 in els
    for x in els:
        for y in els:
            assert (x + y) % 15 in els
