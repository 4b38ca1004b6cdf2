"""The ten-dimensional algebra: lattice, radical, derivations, automorphisms."""

import pytest

import exactlie as xl
from exactlie import liealg, linalg, poincare, witnesses
from exactlie.errors import NoSqrtMinusOne, NotStabilizing, NotUnit, SizeLimit


def test_build_lattice_ranks():
    for spec in ("fq:3^2", "fp:13"):
        w = xl.build_lattice(xl.make_ring(spec))
        assert (w.r.rank, w.i.rank, w.j.rank) == (4, 7, 7)
        assert w.flags["quotients_are_sl2"]
        assert linalg.intersect_modules(w.i, w.j) == w.r
        assert linalg.sum_modules(w.i, w.j).rank == 10
    with pytest.raises(NoSqrtMinusOne):
        xl.build_lattice(xl.fp(7))


def test_radical_is_abelian_and_minimal():
    F9 = xl.fq(3, 2)
    w = xl.build_lattice(F9)
    alg = w.algebra
    for u in w.r.rows:
        for v in w.r.rows:
            assert linalg.is_zero_vector(F9, xl.bracket(alg, u, v))
    ok, tags, examined = xl.radical_minimality(w)
    assert ok and examined == 9**4 - 1
    assert tags["isotropic"] + tags["nonisotropic"] == examined
    # minimality does not need the i/j split
    ok3, tags3, examined3 = xl.radical_minimality(xl.fp(3))
    assert ok3 and examined3 == 3**4 - 1
    with pytest.raises(SizeLimit):
        xl.radical_minimality(xl.fq(7, 2))  # 49^4 > 10^6


def test_specific_translation_closures():
    F9 = xl.fq(3, 2)
    alg = xl.make_algebra("poincare", F9)
    w = xl.build_lattice(F9)
    t1 = alg.basis(0)
    assert xl.ideal_closure(alg, [t1]) == w.r
    iota = xl.sqrt_minus_one(F9)
    isotropic = (F9.one(), iota) + (F9.zero(),) * 8
    q = F9.add(F9.mul(F9.one(), F9.one()), F9.mul(iota, iota))
    assert q == F9.zero()
    assert xl.ideal_closure(alg, [isotropic]) == w.r


def test_poincare_der_report():
    F9 = xl.fq(3, 2)
    rep = xl.poincare_der(F9)
    assert rep.dim == 11 and rep.inner_dim == 10
    assert rep.commutators_ok and rep.projection_ok
    zero_map = poincare.kernel_derivation(F9, F9.zero(), (F9.zero(),) * 4)
    assert all(all(x == F9.zero() for x in row) for row in zero_map.rows)


def test_poincare_der_over_dup_q():
    D = xl.dup(xl.rationals())
    rep = xl.poincare_der(D, n_random=4)
    assert rep.dim == 11 and rep.inner_dim == 10


def test_spectrum_sample_small():
    F9 = xl.fq(3, 2)
    w = xl.build_lattice(F9)
    rep = xl.ideal_spectrum_sample(w, n_samples=5_000, seed=42)
    assert rep.verdict
    assert not rep.counterexamples
    assert set(rep.counts) == {"r", "i", "j", "full"}
    assert sum(rep.counts.values()) == 5_000


def test_aut_family_identity_and_relations():
    F9 = xl.fq(3, 2)
    ident = xl.Matrix.identity(F9, 4)
    f0 = xl.aut_family(F9, F9.one(), (F9.zero(),) * 4, ident)
    assert f0.map.as_matrix().is_identity()
    lam = F9.from_int(2)
    v0 = (F9.one(), F9.zero(), F9.zero(), F9.zero())
    one, z = F9.one(), F9.zero()
    neg = F9.neg(one)
    diag = xl.Matrix.from_rows(F9, [
        (one, z, z, z), (z, one, z, z), (z, z, one, z), (z, z, z, neg)
    ])
    f = xl.aut_family(F9, lam, v0, diag)
    swap12 = xl.Matrix.from_rows(F9, [
        (z, one, z, z), (one, z, z, z), (z, z, one, z), (z, z, z, one)
    ])
    g = xl.aut_family(F9, one, (z, z, z, z), swap12)
    assert poincare.aut_compose_check(F9, f, g)
    assert poincare.aut_inverse_check(F9, f)


def test_aut_family_relations_random():
    F9 = xl.fq(3, 2)
    import random

    rng = random.Random(77)
    elems = list(F9.elements())
    units = [u for u in elems if F9.is_unit(u)]
    mats = witnesses.orthogonal_sample(F9, 4, 12, seed=77)
    for k in range(10):
        f = xl.aut_family(
            F9,
            units[rng.randrange(len(units))],
            tuple(elems[rng.randrange(9)] for _ in range(4)),
            mats[rng.randrange(len(mats))],
        )
        g = xl.aut_family(
            F9,
            units[rng.randrange(len(units))],
            tuple(elems[rng.randrange(9)] for _ in range(4)),
            mats[rng.randrange(len(mats))],
        )
        assert poincare.aut_compose_check(F9, f, g)
        assert poincare.aut_inverse_check(F9, f)


def test_aut_family_errors():
    F9 = xl.fq(3, 2)
    ident = xl.Matrix.identity(F9, 4)
    with pytest.raises(NotUnit):
        xl.aut_family(F9, F9.zero(), (F9.zero(),) * 4, ident)
    one, z = F9.one(), F9.zero()
    iota = xl.sqrt_minus_one(F9)  # iota^2 = -1 != 1, so conjugation breaks skewness
    skewed = xl.Matrix.from_rows(F9, [
        (one, z, z, z), (z, iota, z, z), (z, z, one, z), (z, z, z, one)
    ])
    with pytest.raises(NotStabilizing):
        xl.aut_family(F9, one, (z,) * 4, skewed)
    singular = xl.Matrix.zero(F9, 4, 4)
    with pytest.raises(NotStabilizing):
        xl.aut_family(F9, one, (z,) * 4, singular)


def test_poincare_report_shape():
    F9 = xl.fq(3, 2)
    rep = xl.poincare_report(F9, samples=3_000, seed=5, relation_trials=5)
    assert rep["failures"] == []
    assert rep["ranks"] == {"r": 4, "i": 7, "j": 7}
    assert rep["der_dim"] == 11 and rep["inner_dim"] == 10
    assert rep["relations_checked"] == 5
    assert rep["spectrum"]["shadow_ok"]
