"""Structure-constant Lie algebras and their verification primitives.

The catalog covers the rank-6 Lorentz-type algebra (integer table below),
split orthogonal algebras o(n), sl2, sl2 x sl2, and the ten-dimensional
Poincare-type algebra.  Constants are stored over Z once and pushed through
the canonical Z -> R map at construction, so every ring sees the same table.

Elements are coordinate tuples over the algebra's ring; maps follow the
row-vector convention v |-> v * M.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    AlgebraMismatch,
    BadParams,
    NotDupRing,
    RingMismatch,
    UnsupportedRing,
)
from . import linalg
from .linalg import Matrix, Submodule, canonicalize, kernel_rows, matvec
from .scalars import DupRing, Ring, make_ring


# ---------------------------------------------------------------------------
# integer master tables
# ---------------------------------------------------------------------------

# Bracket table of the rank-6 Lorentz-type algebra on the basis b1..b6
# (b1,b2,b3 the symmetric generators, b4,b5,b6 the rotations); 0-based,
# entries only for i < j, as {k: coefficient}.
_LORENTZ_TABLE = {
    (0, 1): {3: 1},
    (0, 2): {4: 1},
    (0, 3): {1: 1},
    (0, 4): {2: 1},
    (1, 2): {5: 1},
    (1, 3): {0: -1},
    (1, 5): {2: 1},
    (2, 4): {0: -1},
    (2, 5): {1: -1},
    (3, 4): {5: -1},
    (3, 5): {4: 1},
    (4, 5): {3: -1},
}

_SL2_TABLE = {  # basis h, e, f
    (0, 1): {1: 2},
    (0, 2): {2: -2},
    (1, 2): {0: 1},
}


def skew_pairs(n: int) -> list[tuple[int, int]]:
    """Index pairs (i < j) labelling the basis e_ij - e_ji of o(n)."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def skew_matrix(n: int, i: int, j: int) -> list[list[int]]:
    """The integer matrix e_ij - e_ji (0-based indices)."""
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    m[j][i] = -1
    return m


def _int_mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def _int_bracket(a, b):
    ab = _int_mat_mul(a, b)
    ba = _int_mat_mul(b, a)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)]


@lru_cache(maxsize=None)
def _o_int_table(n: int):
    pairs = skew_pairs(n)
    mats = [skew_matrix(n, i, j) for i, j in pairs]
    table = {}
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            br = _int_bracket(mats[a], mats[b])
            entry = {}
            for k, (i, j) in enumerate(pairs):
                c = br[i][j]
                if c:
                    entry[k] = c
            table[(a, b)] = entry
    return table


@lru_cache(maxsize=None)
def _sl2_pair_int_table():
    table = {}
    for (i, j), entry in _SL2_TABLE.items():
        table[(i, j)] = dict(entry)
        table[(i + 3, j + 3)] = {k + 3: c for k, c in entry.items()}
    return table


@lru_cache(maxsize=None)
def _poincare_int_table():
    """Translations t1..t4 then the six rotations of o(4).

    [t_a, M] is the translation by row a of M; translations commute; the
    rotation block is the o(4) table.
    """
    pairs = skew_pairs(4)
    mats = [skew_matrix(4, i, j) for i, j in pairs]
    table = {}
    for a in range(4):
        for m, mat in enumerate(mats):
            entry = {}
            for k, c in enumerate(mat[a]):
                if c:
                    entry[k] = c
            table[(a, 4 + m)] = entry
    for (i, j), entry in _o_int_table(4).items():
        table[(4 + i, 4 + j)] = {4 + k: c for k, c in entry.items()}
    return table


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureAlgebra:
    """A Lie algebra on a free module, given by its structure-constant table.

    table[i][j] is the coordinate tuple of [b_i, b_j]; the alternating and
    Jacobi identities are checked at construction, never assumed.
    """

    ring: Ring
    dim: int
    labels: tuple
    table: tuple
    name: str = "custom"

    def basis(self, i: int):
        z = self.ring.zero()
        return tuple(self.ring.one() if k == i else z for k in range(self.dim))

    def zero(self):
        return (self.ring.zero(),) * self.dim

    def constants(self, i: int, j: int, k: int):
        return self.table[i][j][k]

    def __repr__(self):
        return f"{self.name}<{self.ring.spec()}>"


def bracket(L: StructureAlgebra, x, y):
    """Bilinear extension of the structure tensor to coordinate tuples."""
    if len(x) != L.dim or len(y) != L.dim:
        raise AlgebraMismatch("coordinate length does not match the algebra")
    R = L.ring
    zero = R.zero()
    out = [zero] * L.dim
    for i, xi in enumerate(x):
        if xi == zero:
            continue
        ti = L.table[i]
        for j, yj in enumerate(y):
            if yj == zero or i == j:
                continue
            c = R.mul(xi, yj)
            for k, v in enumerate(ti[j]):
                if v != zero:
                    out[k] = R.add(out[k], R.mul(c, v))
    return tuple(out)


def validate_structure(L: StructureAlgebra) -> None:
    """Alternating + Jacobi on all basis triples; raises BadParams on failure."""
    R = L.ring
    zero_vec = L.zero()
    for i in range(L.dim):
        if L.table[i][i] != zero_vec:
            raise BadParams(f"[b{i}, b{i}] != 0")
        for j in range(L.dim):
            neg = tuple(R.neg(c) for c in L.table[j][i])
            if L.table[i][j] != neg:
                raise BadParams(f"table not antisymmetric at ({i}, {j})")
    basis = [L.basis(i) for i in range(L.dim)]
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            bij = L.table[i][j]
            for k in range(j + 1, L.dim):
                s1 = bracket(L, bij, basis[k])
                s2 = bracket(L, L.table[j][k], basis[i])
                s3 = bracket(L, L.table[k][i], basis[j])
                total = tuple(
                    R.add(a, R.add(b, c)) for a, b, c in zip(s1, s2, s3)
                )
                if total != zero_vec:
                    raise BadParams(f"Jacobi fails on basis triple ({i}, {j}, {k})")


def _algebra_from_int_table(ring: Ring, dim: int, labels, int_table, name: str) -> StructureAlgebra:
    zero = ring.zero()
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), entry in int_table.items():
        for k, c in entry.items():
            v = ring.from_int(c)
            table[i][j][k] = v
            table[j][i][k] = ring.neg(v)
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in table)
    alg = StructureAlgebra(ring, dim, tuple(labels), frozen, name)
    validate_structure(alg)
    return alg


def algebra_from_table(ring: Ring, labels, entries, name: str = "custom") -> StructureAlgebra:
    """Build and validate an algebra from {(i, j): {k: ring value}} with i < j."""
    labels = tuple(labels)
    dim = len(labels)
    zero = ring.zero()
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), entry in entries.items():
        if not 0 <= i < j < dim:
            raise BadParams("table keys must satisfy 0 <= i < j < dim")
        for k, v in entry.items():
            table[i][j][k] = v
            table[j][i][k] = ring.neg(v)
    frozen = tuple(tuple(tuple(row) for row in plane) for plane in table)
    alg = StructureAlgebra(ring, dim, labels, frozen, name)
    validate_structure(alg)
    return alg


def abelian_algebra(ring: Ring, dim: int) -> StructureAlgebra:
    labels = tuple(f"z{i+1}" for i in range(dim))
    return algebra_from_table(ring, labels, {}, name=f"abelian{dim}")


_ALGEBRA_CACHE: dict = {}


def make_algebra(name: str, ring: Ring, n: int | None = None) -> StructureAlgebra:
    """Catalog constructor: lorentz, o(n) for 2 <= n <= 6, sl2, sl2_pair, poincare."""
    if name.startswith("o") and len(name) == 2 and name[1].isdigit():
        n = int(name[1])
        name = "o"
    key = (name, ring.spec(), n)
    if key in _ALGEBRA_CACHE:
        return _ALGEBRA_CACHE[key]
    if name == "lorentz":
        alg = _algebra_from_int_table(
            ring, 6, ("b1", "b2", "b3", "b4", "b5", "b6"), _LORENTZ_TABLE, "lorentz"
        )
    elif name == "sl2":
        alg = _algebra_from_int_table(ring, 3, ("h", "e", "f"), _SL2_TABLE, "sl2")
    elif name == "sl2_pair":
        labels = ("h1", "e1", "f1", "h2", "e2", "f2")
        alg = _algebra_from_int_table(ring, 6, labels, _sl2_pair_int_table(), "sl2_pair")
    elif name == "poincare":
        labels = ("t1", "t2", "t3", "t4") + tuple(
            f"a{i+1}{j+1}" for i, j in skew_pairs(4)
        )
        alg = _algebra_from_int_table(ring, 10, labels, _poincare_int_table(), "poincare")
    elif name == "o":
        if n is None or not 2 <= n <= 6:
            raise BadParams("o(n) requires 2 <= n <= 6")
        labels = tuple(f"a{i+1}{j+1}" for i, j in skew_pairs(n))
        alg = _algebra_from_int_table(
            ring, n * (n - 1) // 2, labels, _o_int_table(n), f"o{n}"
        )
    else:
        raise BadParams(f"unknown catalog algebra {name!r}")
    _ALGEBRA_CACHE[key] = alg
    return alg


# ---------------------------------------------------------------------------
# linear maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearMap:
    """A linear map between algebras over one ring; row i is the image of b_i."""

    source: StructureAlgebra
    target: StructureAlgebra
    rows: tuple

    @staticmethod
    def from_rows(source, target, rows) -> "LinearMap":
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != source.dim or any(len(r) != target.dim for r in rows):
            raise AlgebraMismatch("map shape does not match the algebras")
        return LinearMap(source, target, rows)

    @staticmethod
    def identity(alg: StructureAlgebra) -> "LinearMap":
        return LinearMap(alg, alg, Matrix.identity(alg.ring, alg.dim).entries)

    def apply(self, v):
        if len(v) != self.source.dim:
            raise AlgebraMismatch("coordinate length does not match the source")
        return matvec(self.source.ring, v, self.rows)

    def as_matrix(self) -> Matrix:
        return Matrix.from_rows(self.source.ring, self.rows)

    def compose(self, then: "LinearMap") -> "LinearMap":
        """self followed by `then` (matrix product self.rows * then.rows)."""
        if self.target.dim != then.source.dim:
            raise AlgebraMismatch("composition shape mismatch")
        prod = self.as_matrix().mul(then.as_matrix())
        return LinearMap(self.source, then.target, prod.entries)


def is_homomorphism(f: LinearMap) -> bool:
    """f[b_i, b_j] == [f b_i, f b_j] on all basis pairs i < j."""
    if f.source.ring != f.target.ring:
        raise RingMismatch("source and target must share the scalar ring")
    for i in range(f.source.dim):
        for j in range(i + 1, f.source.dim):
            lhs = f.apply(f.source.table[i][j])
            rhs = bracket(f.target, f.rows[i], f.rows[j])
            if lhs != rhs:
                return False
    return True


def is_automorphism(f: LinearMap) -> bool:
    if f.source is not f.target and (
        f.source.dim != f.target.dim or f.source.table != f.target.table
    ):
        raise AlgebraMismatch("automorphism check needs an endomorphism")
    if not is_homomorphism(f):
        return False
    return linalg.invert(f.as_matrix()) is not None


# ---------------------------------------------------------------------------
# adjoints, derivations, center, derived subalgebra
# ---------------------------------------------------------------------------


def ad(L: StructureAlgebra, x) -> LinearMap:
    """The map y |-> [x, y] as a LinearMap."""
    rows = tuple(bracket(L, x, L.basis(j)) for j in range(L.dim))
    return LinearMap(L, L, rows)


def _right_bracket_matrices(L: StructureAlgebra):
    """A_j with [v, b_j] = v * A_j; entry (a, k) is c[a][j][k]."""
    mats = []
    for j in range(L.dim):
        rows = tuple(L.table[a][j] for a in range(L.dim))
        mats.append(rows)
    return mats


def derivation_space(L: StructureAlgebra):
    """Canonical basis of Der(L) over a field.

    Unknowns are the dim^2 entries of D (row-major, row i = image of b_i);
    one block of equations per basis pair i < j, in lexicographic order.
    """
    if not L.ring.is_field:
        raise UnsupportedRing("derivation spaces are computed over fields")
    R = L.ring
    dim = L.dim
    zero = R.zero()
    pairs = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    n_eqs = len(pairs) * dim
    # unknown u = (i, a) -> coefficient rows of the big system, column per equation
    rows = [[zero] * n_eqs for _ in range(dim * dim)]
    for e, (i, j) in enumerate(pairs):
        cij = L.table[i][j]
        for ell in range(dim):
            col = e * dim + ell
            for k in range(dim):
                if cij[k] != zero:
                    rows[k * dim + ell][col] = R.add(rows[k * dim + ell][col], cij[k])
            for a in range(dim):
                cajl = L.table[a][j][ell]
                if cajl != zero:
                    rows[i * dim + a][col] = R.sub(rows[i * dim + a][col], cajl)
                cail = L.table[a][i][ell]
                if cail != zero:
                    rows[j * dim + a][col] = R.add(rows[j * dim + a][col], cail)
    sol = kernel_rows(R, [tuple(r) for r in rows], n_eqs)
    basis = canonicalize(R, sol, dim * dim) if sol else canonicalize(R, [], dim * dim)
    maps = []
    for vec in basis.rows:
        mat = tuple(tuple(vec[i * dim: (i + 1) * dim]) for i in range(dim))
        d = LinearMap(L, L, mat)
        assert _is_derivation(L, d), "solver returned a non-derivation"
        maps.append(d)
    return len(maps), maps


def _is_derivation(L: StructureAlgebra, d: LinearMap) -> bool:
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = d.apply(L.table[i][j])
            rhs = linalg.vadd(
                L.ring,
                bracket(L, d.rows[i], L.basis(j)),
                bracket(L, L.basis(i), d.rows[j]),
            )
            if lhs != rhs:
                return False
    return True


def is_derivation(L: StructureAlgebra, d: LinearMap) -> bool:
    """Public wrapper: D[x,y] = [Dx,y] + [x,Dy] on all basis pairs."""
    return _is_derivation(L, d)


def inner_derivation_span(L: StructureAlgebra) -> Submodule:
    """Span of {ad(b_i)} inside the dim^2-dimensional map space."""
    if not L.ring.is_field:
        raise UnsupportedRing("inner spans are computed over fields")
    vecs = []
    for i in range(L.dim):
        m = ad(L, L.basis(i))
        vecs.append(tuple(x for row in m.rows for x in row))
    return canonicalize(L.ring, vecs, L.dim * L.dim)


def center(L: StructureAlgebra) -> Submodule:
    """Joint kernel of all right-bracket maps."""
    R = L.ring
    if not (R.is_field or R.kind == "zn"):
        raise UnsupportedRing("center over fields and Z/n only")
    mats = _right_bracket_matrices(L)
    rows = []
    for a in range(L.dim):
        big = []
        for A in mats:
            big.extend(A[a])
        rows.append(tuple(big))
    ker = kernel_rows(R, rows, L.dim * L.dim)
    return canonicalize(R, ker, L.dim)


def derived_subalgebra(L: StructureAlgebra) -> Submodule:
    """Canonical span of all basis brackets."""
    R = L.ring
    if not (R.is_field or R.kind == "zn"):
        raise UnsupportedRing("derived subalgebra over fields and Z/n only")
    vecs = [L.table[i][j] for i in range(L.dim) for j in range(i + 1, L.dim)]
    return canonicalize(R, vecs, L.dim)


def restrict_scalars(L: StructureAlgebra) -> StructureAlgebra:
    """View an algebra over Dup(R) as an algebra over R of twice the dimension.

    The new basis is b_1..b_n, i*b_1..i*b_n with i = (0,1).
    """
    if not isinstance(L.ring, DupRing):
        raise NotDupRing("restrict_scalars needs an algebra over a duplication ring")
    D: DupRing = L.ring
    R = D.base
    dim = L.dim
    iu = D.sqrt_minus_one()
    entries = {}
    for i1 in range(2 * dim):
        for j1 in range(i1 + 1, 2 * dim):
            i, fi = i1 % dim, i1 // dim
            j, fj = j1 % dim, j1 // dim
            if i == j:
                continue  # [b_i, i*b_i] = i*[b_i, b_i] = 0
            vec = L.table[i][j]
            flags = fi + fj
            if flags == 1:
                vec = tuple(D.mul(iu, c) for c in vec)
            elif flags == 2:
                vec = tuple(D.neg(c) for c in vec)
            entry = {}
            for k, c in enumerate(vec):
                re, im = c
                if re != R.zero():
                    entry[k] = R.add(entry.get(k, R.zero()), re)
                if im != R.zero():
                    entry[dim + k] = R.add(entry.get(dim + k, R.zero()), im)
            if entry:
                entries[(i1, j1)] = entry
    labels = tuple(L.labels) + tuple(lab + "'" for lab in L.labels)
    return algebra_from_table(R, labels, entries, name=L.name + "^restricted")


# ---------------------------------------------------------------------------
# structure-constant file format
# ---------------------------------------------------------------------------


def algebra_to_json(L: StructureAlgebra) -> dict:
    """{dim, labels, ring, triples} with only nonzero c[i][j][k], i < j."""
    triples = []
    zero = L.ring.zero()
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k, c in enumerate(L.table[i][j]):
                if c != zero:
                    triples.append([i, j, k, L.ring.format_element(c)])
    return {
        "dim": L.dim,
        "labels": list(L.labels),
        "ring": L.ring.spec(),
        "triples": triples,
    }


def algebra_from_json(doc: dict, name: str = "imported") -> StructureAlgebra:
    ring = make_ring(doc["ring"])
    dim = int(doc["dim"])
    labels = tuple(doc["labels"])
    if len(labels) != dim:
        raise BadParams("label count does not match dim")
    entries: dict = {}
    for i, j, k, coeff in doc["triples"]:
        entries.setdefault((int(i), int(j)), {})[int(k)] = ring.parse_element(coeff)
    return algebra_from_table(ring, labels, entries, name=name)


def dump_algebra(L: StructureAlgebra) -> str:
    return json.dumps(algebra_to_json(L), sort_keys=True)


def load_algebra(text: str, name: str = "imported") -> StructureAlgebra:
    return algebra_from_json(json.loads(text), name=name)
