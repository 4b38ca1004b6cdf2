"""Explicit isomorphisms, decompositions, and automorphism families.

Every witness is constructed from a closed-form recipe and then re-verified
through the generic checkers (homomorphism + invertibility); a failed
verification is a hard error, since it would mean the recipe was transcribed
wrong.  Nothing here is trusted by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    AlphaConditionUnsatisfiable,
    MissingInverse2,
    NoSqrtMinusOne,
    NotAnIdeal,
    NotDiagonalOnH,
    NotOrthogonal,
    NotSymmetricTraceless,
    NotUnit,
    PreconditionFailed,
    WrongCharacteristic,
)
from . import ideals, liealg, linalg, scalars
from .liealg import (
    LinearMap,
    StructureAlgebra,
    bracket,
    is_automorphism,
    is_homomorphism,
    make_algebra,
    restrict_scalars,
    skew_pairs,
)
from .linalg import Matrix, Submodule, canonicalize
from .scalars import Ring, RingIdeal, dup, sqrt_minus_one


@dataclass
class IsoWitness:
    """A checked isomorphism between two catalog algebras."""

    name: str
    source: StructureAlgebra
    target: StructureAlgebra
    map: LinearMap
    verified: bool
    notes: str = ""

    def to_json(self) -> dict:
        R = self.source.ring
        return {
            "name": self.name,
            "ring": R.spec(),
            "matrix": [[R.format_element(x) for x in row] for row in self.map.rows],
            "verified": self.verified,
            "claim": self.notes,
        }


def _checked_iso(name, source, target, rows, notes="") -> IsoWitness:
    f = LinearMap.from_rows(source, target, rows)
    ok = is_homomorphism(f) and linalg.invert(f.as_matrix()) is not None
    assert ok, f"witness {name} failed verification"
    return IsoWitness(name=name, source=source, target=target, map=f, verified=True, notes=notes)


def _half(R: Ring):
    two = R.from_int(2)
    if not R.is_unit(two):
        raise MissingInverse2(f"2 is not invertible in {R.spec()}")
    return R.inv(two)


# ---------------------------------------------------------------------------
# lorentz -> o(4) when sqrt(-1) exists
# ---------------------------------------------------------------------------


def lemma_one_iso(R: Ring) -> IsoWitness:
    """b1,b2,b3 |-> -i * (a12,a13,a14) and b4,b5,b6 |-> (a23,a24,a34)."""
    s = sqrt_minus_one(R)
    if s is None:
        raise NoSqrtMinusOne(f"{R.spec()} has no square root of -1")
    lor = make_algebra("lorentz", R)
    o4 = make_algebra("o", R, 4)
    z = R.zero()
    ms = R.neg(s)
    rows = [
        (ms, z, z, z, z, z),
        (z, ms, z, z, z, z),
        (z, z, ms, z, z, z),
        (z, z, z, R.one(), z, z),
        (z, z, z, z, R.one(), z),
        (z, z, z, z, z, R.one()),
    ]
    return _checked_iso(
        "lorentz_to_o4", lor, o4, rows,
        notes="rank-6 Lorentz-type algebra is o(4) once -1 is a square",
    )


# ---------------------------------------------------------------------------
# the two sl2 summands of o(4)
# ---------------------------------------------------------------------------


@dataclass
class Sl2SplitReport:
    ring: Ring
    I: Submodule
    J: Submodule
    pair_iso: IsoWitness  # sl2 x sl2 -> o(4)
    exchange: LinearMap  # the summand-swapping automorphism of o(4)
    relations_verified: bool

    @property
    def split_rows(self):
        return self.pair_iso.map.rows


def sl2_split(R: Ring) -> Sl2SplitReport:
    """Split o(4;R) into two commuting sl2 ideals (needs sqrt(-1) and 1/2).

    The six generators are built from the closed-form combinations of the
    skew basis; the sl2 relations, [I, J] = 0, and the direct sum are all
    re-verified, as is the exchange automorphism that swaps the summands.
    """
    s = sqrt_minus_one(R)
    if s is None:
        raise NoSqrtMinusOne(f"{R.spec()} has no square root of -1")
    half = _half(R)
    o4 = make_algebra("o", R, 4)
    z = R.zero()
    ns = R.neg(s)
    ih = R.mul(s, half)  # i/2
    nih = R.neg(ih)
    nhalf = R.neg(half)
    # o4 coordinates in basis (a12, a13, a14, a23, a24, a34)
    h_a = (ns, z, z, z, z, ns)
    h_b = (s, z, z, z, z, ns)
    v_a = (z, half, ih, ih, nhalf, z)
    v_b = (z, nhalf, nih, ih, nhalf, z)
    v_ma = (z, nhalf, ih, ih, half, z)
    v_mb = (z, half, nih, ih, half, z)
    alpha = (h_a, v_a, v_ma)
    beta = (h_b, v_b, v_mb)
    two = R.from_int(2)
    ok = True
    for (h, vp, vm) in (alpha, beta):
        ok &= bracket(o4, h, vp) == linalg.vscale(R, two, vp)
        ok &= bracket(o4, h, vm) == linalg.vscale(R, R.neg(two), vm)
        ok &= bracket(o4, vp, vm) == h
    for u in alpha:
        for v in beta:
            ok &= linalg.is_zero_vector(R, bracket(o4, u, v))
    assert ok, "sl2 split relations failed"
    I = canonicalize(R, list(alpha), 6)
    J = canonicalize(R, list(beta), 6)
    pair = make_algebra("sl2_pair", R)
    pair_iso = _checked_iso(
        "sl2_pair_to_o4", pair, o4, list(alpha) + list(beta),
        notes="o(4) is the direct sum of two commuting sl2 ideals",
    )
    # exchange automorphism: swap the two triples
    S = Matrix.from_rows(R, list(alpha) + list(beta))
    S_inv = linalg.invert(S)
    perm = [3, 4, 5, 0, 1, 2]
    P = Matrix.from_rows(R, [S.row(p) for p in perm])
    W = S_inv.mul(P)
    exchange = LinearMap(o4, o4, W.entries)
    assert is_automorphism(exchange), "exchange map failed verification"
    return Sl2SplitReport(
        ring=R, I=I, J=J, pair_iso=pair_iso, exchange=exchange, relations_verified=ok
    )


# ---------------------------------------------------------------------------
# restriction of scalars model (any R with 1/2)
# ---------------------------------------------------------------------------


@dataclass
class DupIsoReport:
    witness: IsoWitness
    basis_rows: tuple  # the six combinations x1..x6 in b-coordinates
    table_source: dict  # (i, j) -> coordinates of [x_i, x_j] in the x basis
    table_target: dict  # (i, j) -> structure constants of sl2(dup R) restricted
    tables_match: bool


# x1..x6 in b-coordinates: the unique combinations sending the bracket table
# onto the h, e, f, i*h, i*e, i*f table of sl2 over the duplication ring.
_DUP_BASIS_INT = (
    (2, 0, 0, 0, 0, 0),
    (0, 0, -1, 0, -1, 0),
    (0, 0, -1, 0, 1, 0),
    (0, 0, 0, 0, 0, 2),
    (0, -1, 0, -1, 0, 0),
    (0, 1, 0, -1, 0, 0),
)


def dup_iso(R: Ring) -> DupIsoReport:
    """lorentz(R) is sl2 over Dup(R), restricted to R scalars (needs 1/2).

    The two multiplication tables (the x-basis table inside the Lorentz-type
    algebra and the restricted sl2 table) are both computed and compared
    entry by entry before the isomorphism itself is checked.
    """
    _half(R)
    lor = make_algebra("lorentz", R)
    D = dup(R)
    sl2d = make_algebra("sl2", D)
    restricted = restrict_scalars(sl2d)
    xs = [tuple(R.from_int(c) for c in row) for row in _DUP_BASIS_INT]
    X = Matrix.from_rows(R, xs)
    X_inv = linalg.invert(X)
    assert X_inv is not None, "x-basis is singular"
    table_source = {}
    table_target = {}
    match = True
    for i in range(6):
        for j in range(i + 1, 6):
            br = bracket(lor, xs[i], xs[j])
            # solve c * X = br  =>  c = br * X^{-1}
            coords = linalg.matvec(R, br, X_inv.entries)
            table_source[(i, j)] = coords
            table_target[(i, j)] = restricted.table[i][j]
            if coords != restricted.table[i][j]:
                match = False
    assert match, "printed tables disagree"
    witness = _checked_iso(
        "lorentz_to_sl2_dup", lor, restricted, X_inv.entries,
        notes="Lorentz-type algebra as restriction of scalars of sl2 over Dup(R)",
    )
    return DupIsoReport(
        witness=witness,
        basis_rows=tuple(xs),
        table_source=table_source,
        table_target=table_target,
        tables_match=match,
    )


# ---------------------------------------------------------------------------
# ideals of sl2 x sl2
# ---------------------------------------------------------------------------


@dataclass
class PairDecomposition:
    i_ideal: RingIdeal
    j_ideal: RingIdeal
    a_ideal: RingIdeal | None = None
    b_ideal: RingIdeal | None = None
    splitting_verified: bool = False


def _coefficient_ideal(L: StructureAlgebra, I: Submodule, slot: int) -> RingIdeal:
    R = L.ring
    z = R.zero()
    members = []
    for x in R.elements():
        vec = [z] * L.dim
        vec[slot] = x
        if linalg.member(I, tuple(vec)):
            members.append(x)
    return scalars.ideal(R, tuple(members))


def sl2pair_decompose(L: StructureAlgebra, I: Submodule, J: Submodule | None = None):
    """Write an ideal of sl2(R) x sl2(R) as sl2(i) x sl2(j).

    With a complementary ideal J (both annihilators zero), also recovers the
    splitting R = a (+) b with I = sl2(a) x sl2(b) and J = sl2(b) x sl2(a).
    """
    R = L.ring
    if L.dim != 6:
        raise PreconditionFailed("sl2 x sl2 has dimension 6")
    if not R.is_unit(R.from_int(2)):
        raise PreconditionFailed("2 must be invertible")
    if R.cardinality is None:
        raise PreconditionFailed("finite scalars required")
    if not ideals.is_bracket_stable(L, I):
        raise NotAnIdeal("I is not bracket-stable")
    i_ideal = _coefficient_ideal(L, I, 0)
    j_ideal = _coefficient_ideal(L, I, 3)
    rebuilt = _pair_module(L, i_ideal, j_ideal)
    if rebuilt != I:
        raise NotAnIdeal("I is not of the form sl2(i) x sl2(j)")
    out = PairDecomposition(i_ideal=i_ideal, j_ideal=j_ideal)
    if J is None:
        return out
    if not ideals.is_bracket_stable(L, J):
        raise NotAnIdeal("J is not bracket-stable")
    if _annihilator(R, I) or _annihilator(R, J):
        raise PreconditionFailed("both annihilators must vanish")
    summed = linalg.sum_modules(I, J)
    if not (summed.rank == 6 and I.size() * J.size() == R.cardinality**6):
        raise PreconditionFailed("I and J do not split the algebra")
    jj = sl2pair_decompose(L, J)
    a, b = i_ideal, j_ideal
    splitting = (
        jj.i_ideal == b
        and jj.j_ideal == a
        and a.element_set & b.element_set == {R.zero()}
        and {R.add(x, y) for x in a.element_set for y in b.element_set}
        == set(R.elements())
    )
    out.a_ideal, out.b_ideal = a, b
    out.splitting_verified = splitting
    return out


def _pair_module(L, i_ideal: RingIdeal, j_ideal: RingIdeal) -> Submodule:
    R = L.ring
    z = R.zero()
    rows = []
    for x in i_ideal.element_set:
        for k in range(3):
            vec = [z] * 6
            vec[k] = x
            rows.append(tuple(vec))
    for x in j_ideal.element_set:
        for k in range(3, 6):
            vec = [z] * 6
            vec[k] = x
            rows.append(tuple(vec))
    return canonicalize(R, rows, 6)


def _annihilator(R: Ring, I: Submodule):
    out = []
    for r in R.elements():
        if r == R.zero():
            continue
        if all(linalg.is_zero_vector(R, linalg.vscale(R, r, row)) for row in I.rows):
            out.append(r)
    return out


# ---------------------------------------------------------------------------
# characteristic 2: the V x V model and its automorphisms
# ---------------------------------------------------------------------------


def crossmodel_algebra(K: Ring) -> StructureAlgebra:
    """K^3 x K^3 with [(x,y),(z,t)] = (x^z, x^z + x^t + y^z), char 2 only."""
    if K.characteristic != 2:
        raise WrongCharacteristic("the cross-product model needs characteristic 2")
    one = K.one()
    third = {(0, 1): 2, (0, 2): 1, (1, 2): 0}  # e_a ^ e_b = e_c in char 2
    entries: dict = {}
    for (a, b), c in third.items():
        entries[(a, b)] = {c: one, 3 + c: one}          # [(ea,0),(eb,0)]
        entries[(a, 3 + b)] = {3 + c: one}              # [(ea,0),(0,eb)]
        entries[(b, 3 + a)] = {3 + c: one}              # [(eb,0),(0,ea)]
    labels = ("u1", "u2", "u3", "w1", "w2", "w3")
    return liealg.algebra_from_table(K, labels, entries, name="crossmodel")


def char2_crossmodel(K: Ring) -> IsoWitness:
    """The checked isomorphism from the V x V model onto lorentz(K), char 2."""
    model = crossmodel_algebra(K)
    lor = make_algebra("lorentz", K)
    one, z = K.one(), K.zero()
    rows = [
        (one, z, z, z, z, z),
        (z, one, z, z, z, z),
        (z, z, one, z, z, z),
        (one, z, z, z, z, one),
        (z, one, z, z, one, z),
        (z, z, one, one, z, z),
    ]
    return _checked_iso(
        "crossmodel_to_lorentz", model, lor, rows,
        notes="cross-product pair model of the characteristic-2 Lorentz-type algebra",
    )


def _char2_mixed_basis(K: Ring) -> Matrix:
    """Rows: x1, x2, x3 (the ideal) then the coset representatives c1, c2, c3.

    The representatives must bracket exactly as [c_i, c_j] = c_k with no
    component back in the ideal, which in the standard coordinates singles out
    the rotation generators b6, b5, b4 (equivalently the diagonal (e_i, e_i)
    of the cross-product pair model).
    """
    one, z = K.one(), K.zero()
    return Matrix.from_rows(K, [
        (one, z, z, z, z, one),
        (z, one, z, z, one, z),
        (z, z, one, one, z, z),
        (z, z, z, z, z, one),
        (z, z, z, z, one, z),
        (z, z, z, one, z, z),
    ])


@dataclass
class KernelAut:
    map: LinearMap  # on lorentz(K), standard basis
    a: object
    m_rows: tuple


def char2_kernel_aut(K: Ring, a, m_rows) -> KernelAut:
    """The automorphism with block matrix [[a*1,0],[M,1]] on {x1,x2,x3,b1,b2,b3}.

    M must be symmetric with zero trace; the result is re-verified as an
    automorphism of lorentz(K) in the standard basis.
    """
    if K.characteristic != 2:
        raise WrongCharacteristic("characteristic 2 required")
    if not K.is_unit(a):
        raise NotUnit("the scaling parameter must be a unit")
    m_rows = tuple(tuple(r) for r in m_rows)
    if len(m_rows) != 3 or any(len(r) != 3 for r in m_rows):
        raise NotSymmetricTraceless("M must be 3x3")
    for i in range(3):
        for j in range(3):
            if m_rows[i][j] != m_rows[j][i]:
                raise NotSymmetricTraceless("M must be symmetric")
    tr = K.add(K.add(m_rows[0][0], m_rows[1][1]), m_rows[2][2])
    if tr != K.zero():
        raise NotSymmetricTraceless("M must have zero trace")
    lor = make_algebra("lorentz", K)
    z = K.zero()
    mixed = [
        [a if i == j else z for j in range(3)] + [z] * 3 for i in range(3)
    ]
    for i in range(3):
        mixed.append(list(m_rows[i]) + [K.one() if j == i else z for j in range(3)])
    C = _char2_mixed_basis(K)
    C_inv = linalg.invert(C)
    W = C_inv.mul(Matrix.from_rows(K, mixed)).mul(C)
    f = LinearMap(lor, lor, W.entries)
    assert is_automorphism(f), "kernel-family map failed verification"
    return KernelAut(map=f, a=a, m_rows=m_rows)


def kernel_aut_params(K: Ring, f: LinearMap):
    """Re-extract (a, M) from a kernel-family automorphism; None if not one."""
    C = _char2_mixed_basis(K)
    C_inv = linalg.invert(C)
    F = C.mul(f.as_matrix()).mul(C_inv)
    rows = F.entries
    z = K.zero()
    a = rows[0][0]
    for i in range(3):
        for j in range(6):
            expect = a if i == j else z
            if rows[i][j] != expect:
                return None
    for i in range(3):
        for j in range(3):
            if rows[3 + i][3 + j] != (K.one() if i == j else z):
                return None
    m = tuple(tuple(rows[3 + i][j] for j in range(3)) for i in range(3))
    return a, m


def char2_lift_o3(K: Ring, g_rows, alphas) -> tuple[LinearMap, Matrix]:
    """Lift an orthogonal g on o(3) to an automorphism of the V x V model.

    Needs units a1, a2, a3 with a1+a2+a3 != 1; unsatisfiable over F_2, where
    the only unit is 1.
    """
    if K.characteristic != 2:
        raise WrongCharacteristic("characteristic 2 required")
    if K.cardinality == 2:
        raise AlphaConditionUnsatisfiable("over F_2 every unit is 1 and the sum is 1")
    g = Matrix.from_rows(K, g_rows)
    gt = Matrix.from_rows(K, list(zip(*g.entries)))
    if not g.mul(gt).is_identity():
        raise NotOrthogonal("g * g^t != 1")
    a1, a2, a3 = alphas
    if not all(K.is_unit(x) for x in (a1, a2, a3)):
        raise AlphaConditionUnsatisfiable("the three parameters must be units")
    total = K.add(K.add(a1, a2), a3)
    if total == K.one():
        raise AlphaConditionUnsatisfiable("a1 + a2 + a3 must differ from 1")
    a0 = K.add(total, K.one())
    model = crossmodel_algebra(K)
    rows = []
    for a_i, row in zip((a1, a2, a3), g.entries):
        rows.append(tuple(row) + tuple(K.mul(a_i, x) for x in row))
    z = K.zero()
    for row in g.entries:
        rows.append((z, z, z) + tuple(K.mul(a0, x) for x in row))
    f = LinearMap(model, model, tuple(rows))
    assert is_automorphism(f), "orthogonal lift failed verification"
    induced = Matrix.from_rows(K, [r[:3] for r in rows[:3]])
    assert induced.entries == g.entries, "induced quotient map differs from g"
    return f, induced


# ---------------------------------------------------------------------------
# inner form of sl2 automorphisms fixing the torus
# ---------------------------------------------------------------------------


def sl2_inner_form(K: Ring, theta: LinearMap) -> Matrix:
    """P with Ad(P) = theta for an sl2 automorphism with theta(h) = +-h."""
    if K.characteristic == 2:
        raise WrongCharacteristic("characteristic != 2 required")
    if not is_automorphism(theta):
        raise PreconditionFailed("theta must be a verified automorphism")
    z, one = K.zero(), K.one()
    h_row = theta.rows[0]
    if h_row == (one, z, z):
        lam = theta.rows[1][1]
        assert theta.rows[1] == (z, lam, z), "unexpected image of e"
        P = Matrix.from_rows(K, [(lam, z), (z, one)])
    elif h_row == (K.neg(one), z, z):
        lam = theta.rows[1][2]
        assert theta.rows[1] == (z, z, lam), "unexpected image of e"
        P = Matrix.from_rows(K, [(z, K.inv(lam)), (one, z)])
    else:
        raise NotDiagonalOnH("theta(h) must be h or -h")
    # verify Ad(P) = theta by conjugating the basis
    P_inv = linalg.invert(P)
    basis_mats = [
        Matrix.from_rows(K, [(one, z), (z, K.neg(one))]),  # h
        Matrix.from_rows(K, [(z, one), (z, z)]),           # e
        Matrix.from_rows(K, [(z, z), (one, z)]),           # f
    ]
    for i, B in enumerate(basis_mats):
        conj = P.mul(B).mul(P_inv).entries
        coords = (
            conj[0][0],
            conj[0][1],
            conj[1][0],
        )
        assert coords == (
            theta.rows[i][0],
            theta.rows[i][1],
            theta.rows[i][2],
        ), "Ad(P) does not reproduce theta"
    return P


# ---------------------------------------------------------------------------
# the cocycle space beta([M,M']) = beta(M)M' - beta(M')M on o(4)
# ---------------------------------------------------------------------------


@dataclass
class CocycleReport:
    dim: int
    basis: list  # 6x4 Matrix objects
    all_row_action_form: bool  # every solution is M |-> vM for some v
    pattern: list  # 6x4 grid of parameter strings


def vector_cocycle_space(K: Ring) -> CocycleReport:
    """Solve beta([M,M']) = beta(M)M' - beta(M')M for beta: o(4;K) -> K^4.

    The solution space is computed as a nullspace in the 24 entries of the
    6x4 parameter matrix; the report also checks that it coincides with the
    maps M |-> vM.
    """
    if K.characteristic == 2:
        raise WrongCharacteristic("characteristic != 2 required")
    o4 = make_algebra("o", K, 4)
    pairs = skew_pairs(4)
    mats = []
    for (i, j) in pairs:
        grid = [[K.zero()] * 4 for _ in range(4)]
        grid[i][j] = K.one()
        grid[j][i] = K.neg(K.one())
        mats.append(tuple(tuple(r) for r in grid))
    eq_pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    n_eqs = len(eq_pairs) * 4
    rows = [[K.zero()] * n_eqs for _ in range(24)]
    for e, (i, j) in enumerate(eq_pairs):
        cij = o4.table[i][j]
        for t in range(4):
            col = e * 4 + t
            for k in range(6):
                if cij[k] != K.zero():
                    rows[k * 4 + t][col] = K.add(rows[k * 4 + t][col], cij[k])
            for s in range(4):
                a_j = mats[j][s][t]
                if a_j != K.zero():
                    rows[i * 4 + s][col] = K.sub(rows[i * 4 + s][col], a_j)
                a_i = mats[i][s][t]
                if a_i != K.zero():
                    rows[j * 4 + s][col] = K.add(rows[j * 4 + s][col], a_i)
    sol = linalg.kernel_rows(K, [tuple(r) for r in rows], n_eqs)
    span = canonicalize(K, sol, 24)
    # the row-action maps M |-> vM
    vm_rows = []
    for a in range(4):
        vec = []
        for k in range(6):
            vec.extend(mats[k][a])
        vm_rows.append(tuple(vec))
    vm_span = canonicalize(K, vm_rows, 24)
    all_vm = span == vm_span
    basis = [
        Matrix.from_rows(K, [vec[k * 4:(k + 1) * 4] for k in range(6)])
        for vec in span.rows
    ]
    # human-readable pattern in terms of the pivot parameters p1..p4
    pivots = []
    for row in span.rows:
        pivots.append(next(t for t, x in enumerate(row) if x != K.zero()))
    pattern = []
    for k in range(6):
        line = []
        for t in range(4):
            coord = k * 4 + t
            terms = []
            for r, row in enumerate(span.rows):
                c = row[coord]
                if c != K.zero():
                    coef = K.format_element(c)
                    terms.append(f"p{r+1}" if coef == "1" else f"{coef}*p{r+1}")
            line.append(" + ".join(terms) if terms else "0")
        pattern.append(line)
    return CocycleReport(
        dim=span.rank, basis=basis, all_row_action_form=all_vm, pattern=pattern
    )


# ---------------------------------------------------------------------------
# orthogonal test matrices
# ---------------------------------------------------------------------------


def orthogonal_sample(K: Ring, n: int, count: int, seed: int = 2025) -> list[Matrix]:
    """Products of permutations, sign flips, and 2x2 rotation blocks with
    c^2 + s^2 = 1; enough to exercise the constructions without enumerating
    the whole orthogonal group.
    """
    rng = random.Random(seed)
    rotations = []
    for c in K.elements():
        for s in K.elements():
            if K.add(K.mul(c, c), K.mul(s, s)) == K.one():
                rotations.append((c, s))
    out = []
    one, z = K.one(), K.zero()
    for _ in range(count):
        g = Matrix.identity(K, n)
        for _ in range(rng.randrange(1, 4)):
            kind = rng.randrange(3)
            if kind == 0:
                perm = list(range(n))
                i, j = rng.sample(range(n), 2)
                perm[i], perm[j] = perm[j], perm[i]
                step = Matrix.from_rows(K, [
                    tuple(one if c == perm[r] else z for c in range(n)) for r in range(n)
                ])
            elif kind == 1:
                signs = [K.neg(one) if rng.random() < 0.5 else one for _ in range(n)]
                step = Matrix.from_rows(K, [
                    tuple(signs[r] if c == r else z for c in range(n)) for r in range(n)
                ])
            else:
                c, s = rotations[rng.randrange(len(rotations))]
                i, j = sorted(rng.sample(range(n), 2))
                rows = [[one if a == b else z for b in range(n)] for a in range(n)]
                rows[i][i], rows[i][j] = c, s
                rows[j][i], rows[j][j] = K.neg(s), c
                step = Matrix.from_rows(K, [tuple(r) for r in rows])
            g = g.mul(step)
        gt = Matrix.from_rows(K, list(zip(*g.entries)))
        assert g.mul(gt).is_identity()
        out.append(g)
    return out
