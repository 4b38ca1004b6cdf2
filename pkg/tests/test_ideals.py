"""Closures, classification, sweeps, and the explicit ideal witnesses."""

import random

import pytest

import exactlie as xl
from exactlie import ideals, liealg, linalg
from exactlie.errors import (
    NotAnIdeal,
    NotPerfect,
    PreconditionFailed,
    SizeLimit,
)


def closure_oracle_f2(L, x):
    """Independent oracle over F_2: close the literal element set under
    addition and bracketing with basis vectors, no echelon forms involved."""
    current = {x, (0,) * 6}
    while True:
        new = set()
        for v in current:
            for w in current:
                s = tuple((a + b) % 2 for a, b in zip(v, w))
                if s not in current:
                    new.add(s)
            for i in range(6):
                br = xl.bracket(L, v, L.basis(i))
                if br not in current:
                    new.add(br)
        if not new:
            return current
        current |= new


def test_closure_char2_examples():
    F2 = xl.fp(2)
    L = xl.make_algebra("lorentz", F2)
    gen = (1, 0, 0, 0, 0, 1)
    cl = xl.ideal_closure(L, [gen])
    assert cl.rows == ((1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0))
    oracle = closure_oracle_f2(L, gen)
    members = {v for v in oracle}
    assert all(xl.member(cl, v) for v in members)
    assert len(members) == 2 ** cl.rank


def test_closure_generates_everything_over_f3():
    F3 = xl.fp(3)
    L = xl.make_algebra("lorentz", F3)
    assert xl.ideal_closure(L, [L.basis(0)]).rank == 6
    assert xl.ideal_closure(L, []).is_zero


def test_fast_path_equals_fixpoint():
    rng = random.Random(17)
    for spec, name in (("fp:3", "lorentz"), ("fp:5", "lorentz"), ("zn:6", "sl2"),
                       ("zn:9", "lorentz"), ("fq:2^2", "lorentz"), ("fq:3^2", "poincare")):
        R = xl.make_ring(spec)
        L = xl.make_algebra(name, R)
        q = R.cardinality
        elems = list(R.elements())
        for _ in range(12):
            x = tuple(elems[rng.randrange(q)] for _ in range(L.dim))
            assert ideals.closure_via_packed(L, x) == xl.ideal_closure(L, [x]), (spec, x)


def test_closure_monotone_and_idempotent():
    rng = random.Random(23)
    F3 = xl.fp(3)
    L = xl.make_algebra("lorentz", F3)
    for _ in range(20):
        gens = [tuple(rng.randrange(3) for _ in range(6)) for _ in range(2)]
        extra = tuple(rng.randrange(3) for _ in range(6))
        c1 = xl.ideal_closure(L, gens)
        c2 = xl.ideal_closure(L, list(c1.rows) + [extra])
        assert all(xl.member(c2, row) for row in c1.rows)
        assert xl.ideal_closure(L, c1.rows) == c1


def test_classify_over_z9():
    Z9 = xl.zn(9)
    L = xl.make_algebra("lorentz", Z9)
    m3 = xl.ideal(Z9, (3,))
    three_L = xl.canonicalize(Z9, [tuple(3 if j == i else 0 for j in range(6))
                                   for i in range(6)], 6)
    assert xl.classify(L, m3, three_L) == "m-null"
    plus_minus = []
    for i, j in ((0, 5), (1, 4), (2, 3)):
        for sign in (1, 8):
            row = [0] * 6
            row[i] = 1
            row[j] = sign
            plus_minus.append(tuple(row))
    I = xl.canonicalize(Z9, plus_minus, 6)
    assert xl.classify(L, m3, I) == "m-total"
    assert xl.classify(L, m3, xl.canonicalize(Z9, [], 6)) == "m-null"


def test_simplicity_small_fields():
    assert xl.is_simple(xl.make_algebra("lorentz", xl.fp(3))) is True
    rep5 = xl.simplicity_report(xl.make_algebra("lorentz", xl.fp(5)))
    assert rep5.verdict is False and rep5.witness is not None
    wit_closure = xl.ideal_closure(xl.make_algebra("lorentz", xl.fp(5)), [rep5.witness])
    assert 0 < wit_closure.rank < 6
    assert xl.is_simple(xl.make_algebra("lorentz", xl.fq(3, 2))) is False


def test_simplicity_budget_guard():
    with pytest.raises(SizeLimit):
        xl.simplicity_report(
            xl.make_algebra("lorentz", xl.fp(13)), mode="full", budget=1000
        )


def test_sl2_is_simple_over_small_odd_fields():
    for spec in ("fp:3", "fp:5", "fp:7", "fq:3^2", "fp:11", "fp:13", "fq:5^2",
                 "fq:3^3", "fq:7^2"):
        L = xl.make_algebra("sl2", xl.make_ring(spec))
        rep = xl.simplicity_report(L, mode="full", budget=10**6)
        assert rep.verdict, spec


def test_m_simplicity_z9_and_z15():
    Z9 = xl.zn(9)
    L9 = xl.make_algebra("lorentz", Z9)
    m3 = xl.ideal(Z9, (3,))
    rep = xl.m_simplicity_report(L9, m3)
    assert rep.verdict and rep.mode == "full" and rep.examined == 9**6 - 1
    Z15 = xl.zn(15)
    L15 = xl.make_algebra("lorentz", Z15)
    m5 = xl.ideal(Z15, (5,))
    rep5 = xl.m_simplicity_report(L15, m5, mode="sampled", samples=30_000)
    assert rep5.verdict is False and rep5.witness is not None
    rep3 = xl.m_simplicity_report(L15, xl.ideal(Z15, (3,)), mode="sampled", samples=30_000)
    assert rep3.verdict is True
    # sweep verdicts match the scalar criterion
    assert xl.is_m_two_formally_real(Z15, m5) is False
    assert xl.is_m_two_formally_real(Z15, xl.ideal(Z15, (3,))) is True
    assert xl.is_m_two_formally_real(Z9, m3) is True


def test_notsimple_witness_field_cases():
    F5 = xl.fp(5)
    L5 = xl.make_algebra("lorentz", F5)
    rep = xl.notsimple_witness(L5, xl.zero_ideal(F5), 1, 2)
    assert rep.closure.rank == 3
    assert rep.classifications == {"(0)": "neither"}
    F13 = xl.fp(13)
    assert (1 + 5 * 5) % 13 == 0  # the parameter pair really is isotropic
    rep13 = xl.notsimple_witness(
        xl.make_algebra("lorentz", F13), xl.zero_ideal(F13), 1, 5
    )
    assert rep13.closure.rank == 3
    with pytest.raises(PreconditionFailed):
        xl.notsimple_witness(L5, xl.zero_ideal(F5), 1, 1)
    with pytest.raises(PreconditionFailed):
        xl.notsimple_witness(L5, xl.zero_ideal(F5), 0, 2)


def test_notsimple_witness_z15():
    Z15 = xl.zn(15)
    L = xl.make_algebra("lorentz", Z15)
    m5 = xl.ideal(Z15, (5,))
    rep = xl.notsimple_witness(L, m5, 1, 2)
    assert rep.classifications == {"(5)": "neither"}
    assert rep.flags["image_rank_mod_m"] == 3


def test_char2_ideal_f2_and_f4():
    for spec in ("fp:2", "fq:2^2"):
        L = xl.make_algebra("lorentz", xl.make_ring(spec))
        rep = xl.char2_ideal(L)
        assert rep.abelian and rep.minimal and rep.unique and rep.quotient_verified
        assert sorted(rep.closure_ranks) == [3, 6]
        # closure of the single generator b3+b4 is the whole ideal
        R = L.ring
        one, z = R.one(), R.zero()
        single = xl.ideal_closure(L, [(z, z, one, one, z, z)])
        assert single == rep.ideal


def test_dimension_exclusion():
    for spec in ("fp:2", "fp:3", "fp:5"):
        L = xl.make_algebra("lorentz", xl.make_ring(spec))
        ok, counts, offender = xl.dimension_exclusion_check(L)
        assert ok and offender is None
        assert set(counts) <= {0, 3, 6}
    with pytest.raises(NotPerfect):
        xl.dimension_exclusion_check(liealg.abelian_algebra(xl.fp(2), 6))


def test_sl2_ideal_form():
    Z15 = xl.zn(15)
    L = xl.make_algebra("sl2", Z15)
    closure = xl.ideal_closure(L, [(3, 0, 0)])
    scal = xl.sl2_ideal_form(L, closure)
    assert scal.element_set == frozenset({0, 3, 6, 9, 12})
    F7 = xl.fp(7)
    L7 = xl.make_algebra("sl2", F7)
    full = xl.canonicalize(F7, [L7.basis(i) for i in range(3)], 3)
    assert len(xl.sl2_ideal_form(L7, full).element_set) == 7
    zero = xl.canonicalize(F7, [], 3)
    assert xl.sl2_ideal_form(L7, zero).is_zero
    not_ideal = xl.canonicalize(Z15, [(1, 0, 0)], 3)
    with pytest.raises(NotAnIdeal):
        xl.sl2_ideal_form(L, not_ideal)


def test_splitting_z21_sampled():
    Z21 = xl.zn(21)
    L = xl.make_algebra("lorentz", Z21)
    rep = xl.splitting_report(L, samples=5_000, seed=11)
    assert rep.verdict and rep.direct_sum_ok
    assert set(rep.observed) <= {"3L", "7L", "L"}
    assert rep.target_labels == ["3L", "7L", "L"]


def test_z9_null_stratum_behavior():
    """Nonzero elements of 3L generate inside 3L and [3L, 3L] = 0 over Z_9."""
    Z9 = xl.zn(9)
    L = xl.make_algebra("lorentz", Z9)
    three_L = xl.canonicalize(
        Z9, [tuple(3 if j == i else 0 for j in range(6)) for i in range(6)], 6
    )
    rng = random.Random(4)
    for _ in range(40):
        x = tuple(3 * rng.randrange(3) for _ in range(6))
        if not any(x):
            continue
        cl = xl.ideal_closure(L, [x])
        assert all(xl.member(three_L, row) for row in cl.rows)
    for u in three_L.rows:
        for v in three_L.rows:
            assert linalg.is_zero_vector(Z9, xl.bracket(L, u, v))


def test_sweep_report_json_is_deterministic():
    L = xl.make_algebra("lorentz", xl.fp(13))
    r1 = xl.simplicity_report(L, mode="sampled", samples=2_000, seed=99).to_json()
    r2 = xl.simplicity_report(L, mode="sampled", samples=2_000, seed=99).to_json()
    assert r1 == r2
    r3 = xl.simplicity_report(L, mode="sampled", samples=2_000, seed=100).to_json()
    assert r3["seed"] == 100
