"""Exact linear algebra: canonical forms, membership, kernels, inversion."""

import itertools
import random

import pytest

import exactlie as xl
from exactlie import linalg
from exactlie.errors import NotSquare, UnsupportedRing


def test_canonicalize_examples():
    F3 = xl.fp(3)
    S = xl.canonicalize(F3, [(1, 1, 0), (2, 2, 0)])
    assert S.rows == ((1, 1, 0),) and S.rank == 1
    Z4 = xl.zn(4)
    H = xl.canonicalize(Z4, [(2, 0), (0, 2)])
    assert H.rows == ((2, 0), (0, 2))
    assert xl.member(H, (2, 2))
    assert not xl.member(H, (1, 0))
    Z = xl.canonicalize(F3, [], ambient=3)
    assert Z.rank == 0 and Z.is_zero


def test_canonicalize_idempotent():
    rng = random.Random(11)
    for ring in (xl.fp(5), xl.zn(6), xl.zn(4)):
        q = ring.cardinality
        for _ in range(25):
            rows = [tuple(ring.from_int(rng.randrange(q)) for _ in range(4))
                    for _ in range(3)]
            S = xl.canonicalize(ring, rows)
            assert xl.canonicalize(ring, S.rows, 4) == S


def test_canonicalize_shuffle_invariant():
    rng = random.Random(5)
    for ring in (xl.fp(5), xl.zn(6), xl.zn(4), xl.fq(2, 2)):
        q = ring.cardinality
        rows = [tuple(ring.from_int(rng.randrange(q)) for _ in range(4)) for _ in range(4)]
        base = xl.canonicalize(ring, rows)
        for _ in range(100):
            shuffled = rows[:]
            rng.shuffle(shuffled)
            assert xl.canonicalize(ring, shuffled) == base


def _brute_span(ring, gens, dim):
    """Oracle: the literal set of all coefficient combinations."""
    out = set()
    elems = list(ring.elements())
    for coeffs in itertools.product(elems, repeat=len(gens)):
        v = [ring.zero()] * dim
        for c, g in zip(coeffs, gens):
            for t in range(dim):
                v[t] = ring.add(v[t], ring.mul(c, g[t]))
        out.add(tuple(v))
    if not gens:
        out.add((ring.zero(),) * dim)
    return out


@pytest.mark.parametrize(
    "ring,dim,max_gens",
    [(xl.zn(4), 2, 2), (xl.zn(6), 2, 2), (xl.fp(2), 3, 3), (xl.fp(3), 2, 2)],
    ids=("z4^2", "z6^2", "f2^3", "f3^2"),
)
def test_member_agrees_with_brute_force_on_all_submodules(ring, dim, max_gens):
    """Every submodule arises as the span of <= max_gens vectors here."""
    vectors = list(itertools.product(ring.elements(), repeat=dim))
    seen = set()
    all_points = list(itertools.product(ring.elements(), repeat=dim))
    for k in range(0, max_gens + 1):
        for gens in itertools.combinations(vectors, k):
            S = xl.canonicalize(ring, list(gens), dim)
            if S.rows in seen:
                continue
            seen.add(S.rows)
            brute = _brute_span(ring, gens, dim)
            for v in all_points:
                assert xl.member(S, v) == (v in brute), (gens, v)
            assert S.size() == len(brute)


def test_howell_shadow_row_case():
    # span{(2,1)} over Z4 contains 2*(2,1) = (0,2); the Howell basis must show it
    Z4 = xl.zn(4)
    S = xl.canonicalize(Z4, [(2, 1)])
    assert S.rows == ((2, 1), (0, 2))
    assert xl.member(S, (0, 2))
    assert not xl.member(S, (0, 1))


def test_rank_nullity_on_random_matrices():
    rng = random.Random(2025)
    for ring in (xl.fp(2), xl.fp(3), xl.fp(5), xl.rationals()):
        for _ in range(200):
            n_rows = rng.randrange(1, 5)
            n_cols = rng.randrange(1, 5)
            rows = [
                tuple(ring.from_int(rng.randrange(-4, 5)) for _ in range(n_cols))
                for _ in range(n_rows)
            ]
            A = xl.Matrix.from_rows(ring, rows)
            assert linalg.rank(A) + xl.nullspace(A).rank == n_rows


def test_nullspace_examples():
    F7 = xl.fp(7)
    assert xl.nullspace(xl.Matrix.identity(F7, 3)).is_zero
    Q = xl.rationals()
    Z = xl.Matrix.zero(Q, 2, 2)
    assert xl.nullspace(Z).rank == 2
    F5 = xl.fp(5)
    N = xl.nullspace(xl.Matrix.from_rows(F5, [(1, 2), (2, 4)]))
    assert N.rank == 1 and xl.member(N, (3, 1))
    with pytest.raises(UnsupportedRing):
        xl.nullspace(xl.Matrix.identity(xl.zn(6), 2))


def test_invert_examples():
    F3 = xl.fp(3)
    assert xl.invert(xl.Matrix.identity(F3, 4)).is_identity()
    Z4 = xl.zn(4)
    assert xl.invert(xl.Matrix.from_rows(Z4, [(2, 0), (0, 1)])) is None
    swap = xl.Matrix.from_rows(F3, [(0, 1), (1, 0)])
    assert xl.invert(swap).entries == swap.entries
    with pytest.raises(NotSquare):
        xl.invert(xl.Matrix.from_rows(F3, [(1, 0, 0), (0, 1, 0)]))


def test_invert_times_matrix_is_identity():
    rng = random.Random(9)
    for ring in (xl.fp(5), xl.zn(6), xl.rationals(), xl.zn(9)):
        successes = 0
        for _ in range(60):
            n = rng.randrange(1, 5)
            rows = [
                tuple(ring.from_int(rng.randrange(-5, 6)) for _ in range(n))
                for _ in range(n)
            ]
            A = xl.Matrix.from_rows(ring, rows)
            inv = xl.invert(A)
            if inv is not None:
                assert inv.mul(A).is_identity()
                assert A.mul(inv).is_identity()
                successes += 1
        assert successes > 5


def test_kernel_over_zn():
    Z4 = xl.zn(4)
    ker = linalg.kernel_rows(Z4, [(2,)], 1)
    S = xl.canonicalize(Z4, ker, 1)
    assert xl.member(S, (2,)) and not xl.member(S, (1,))


def test_intersection_and_sum():
    F5 = xl.fp(5)
    A = xl.canonicalize(F5, [(1, 0, 0), (0, 1, 0)])
    B = xl.canonicalize(F5, [(0, 1, 0), (0, 0, 1)])
    inter = linalg.intersect_modules(A, B)
    assert inter.rows == ((0, 1, 0),)
    total = linalg.sum_modules(A, B)
    assert total.rank == 3
    Z6 = xl.zn(6)
    C = xl.canonicalize(Z6, [(2, 0), (0, 2)])
    D = xl.canonicalize(Z6, [(3, 0), (0, 3)])
    inter = linalg.intersect_modules(C, D)
    assert inter.is_zero
    assert linalg.sum_modules(C, D).size() == 36  # 2Z6 + 3Z6 = Z6 componentwise


def test_rational_pivot_weights_do_not_change_answers():
    Q = xl.rationals()
    rows = [
        tuple(Q.parse_element(s) for s in row)
        for row in (("1/2", "3", "-2"), ("5", "1/3", "0"), ("7", "7", "7"))
    ]
    S = xl.canonicalize(Q, rows)
    assert S.rank == 3
    A = xl.Matrix.from_rows(Q, rows)
    inv = xl.invert(A)
    assert inv.mul(A).is_identity()
