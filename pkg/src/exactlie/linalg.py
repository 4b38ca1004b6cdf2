"""Exact linear algebra over the scalar tower.

Vectors are tuples of canonical ring values; the row-vector convention
v |-> v * M is used everywhere.  Canonical forms are reduced row echelon over
fields and Howell form over Z/n; Howell bases decide membership and give a
unique representative per submodule, which is what lets ideals be compared
as values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as _gcd

from .errors import DimensionMismatch, NotSquare, UnsupportedRing
from .scalars import ModularRing, Ring

# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


def vadd(ring: Ring, u, v):
    return tuple(ring.add(a, b) for a, b in zip(u, v))


def vsub(ring: Ring, u, v):
    return tuple(ring.sub(a, b) for a, b in zip(u, v))


def vscale(ring: Ring, c, u):
    return tuple(ring.mul(c, a) for a in u)


def vzero(ring: Ring, n: int):
    return (ring.zero(),) * n


def is_zero_vector(ring: Ring, u) -> bool:
    z = ring.zero()
    return all(a == z for a in u)


def matvec(ring: Ring, v, rows):
    """Row vector times matrix given as a sequence of rows."""
    n = len(rows[0]) if rows else 0
    out = [ring.zero()] * n
    for c, row in zip(v, rows):
        if c == ring.zero():
            continue
        for k in range(n):
            out[k] = ring.add(out[k], ring.mul(c, row[k]))
    return tuple(out)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Matrix:
    """A dense exact matrix; entries are canonical ring values."""

    ring: Ring
    nrows: int
    ncols: int
    entries: tuple

    @staticmethod
    def from_rows(ring: Ring, rows) -> "Matrix":
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return Matrix(ring, len(rows), ncols, rows)

    @staticmethod
    def identity(ring: Ring, n: int) -> "Matrix":
        one, zero = ring.one(), ring.zero()
        return Matrix(ring, n, n, tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        ))

    @staticmethod
    def zero(ring: Ring, nrows: int, ncols: int) -> "Matrix":
        z = ring.zero()
        return Matrix(ring, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    def row(self, i):
        return self.entries[i]

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("matrix product shape mismatch")
        R = self.ring
        rows = tuple(matvec(R, r, other.entries) for r in self.entries)
        return Matrix(R, self.nrows, other.ncols, rows)

    def add(self, other: "Matrix") -> "Matrix":
        R = self.ring
        return Matrix(R, self.nrows, self.ncols, tuple(
            vadd(R, a, b) for a, b in zip(self.entries, other.entries)
        ))

    def sub(self, other: "Matrix") -> "Matrix":
        R = self.ring
        return Matrix(R, self.nrows, self.ncols, tuple(
            vsub(R, a, b) for a, b in zip(self.entries, other.entries)
        ))

    def scale(self, c) -> "Matrix":
        R = self.ring
        return Matrix(R, self.nrows, self.ncols, tuple(vscale(R, c, r) for r in self.entries))

    def apply(self, v):
        """Row vector v of length nrows maps to v * M."""
        if len(v) != self.nrows:
            raise DimensionMismatch("vector/matrix shape mismatch")
        return matvec(self.ring, v, self.entries)

    def is_identity(self) -> bool:
        one, zero = self.ring.one(), self.ring.zero()
        return self.nrows == self.ncols and all(
            e == (one if i == j else zero)
            for i, r in enumerate(self.entries)
            for j, e in enumerate(r)
        )


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Submodule:
    """Canonically represented submodule of R^n.

    Over a field the basis is the reduced row echelon form; over Z/n it is the
    Howell form.  Two submodules are equal iff their basis grids are equal.
    """

    ring: Ring
    ambient: int
    rows: tuple

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def contains(self, v) -> bool:
        return member(self, v)

    def size(self) -> int:
        """Number of elements (finite rings only)."""
        R = self.ring
        if isinstance(R, ModularRing):
            n = R.n
            out = 1
            for row in self.rows:
                piv = next(x for x in row if x != 0)
                out *= n // _gcd(piv, n)
            return out
        if R.cardinality is not None:
            return R.cardinality ** self.rank
        raise UnsupportedRing("size of a module over an infinite ring")


def _rref_rows(ring: Ring, rows):
    """Reduced row echelon form over a field; returns (rows, pivot_cols)."""
    work = [list(r) for r in rows]
    m = len(work)
    ncols = len(work[0]) if work else 0
    zero = ring.zero()
    piv_cols = []
    r = 0
    for c in range(ncols):
        # choose the pivot: nonzero entry minimizing pivot_weight (bit size over Q)
        best = None
        for i in range(r, m):
            if work[i][c] != zero:
                w = ring.pivot_weight(work[i][c])
                if best is None or w < best[0]:
                    best = (w, i)
        if best is None:
            continue
        i = best[1]
        work[r], work[i] = work[i], work[r]
        inv = ring.inv(work[r][c])
        work[r] = [ring.mul(inv, x) for x in work[r]]
        for k in range(m):
            if k != r and work[k][c] != zero:
                f = work[k][c]
                work[k] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(work[k], work[r])]
        piv_cols.append(c)
        r += 1
    out = [tuple(row) for row in work[:r]]
    return out, piv_cols


def _howell_echelon_pass(n: int, work):
    """One echelon pass over Z/n using unimodular 2x2 gcd transforms."""
    m = len(work)
    ncols = len(work[0]) if work else 0
    r = 0
    piv = []
    for c in range(ncols):
        pivot = None
        for i in range(r, m):
            if work[i][c] % n:
                if pivot is None:
                    pivot = i
                else:
                    a, b = work[pivot][c], work[i][c]
                    g, s, t = _ext_gcd(a, b)
                    u, v = -(b // g), a // g
                    rp, ri = work[pivot], work[i]
                    work[pivot] = [(s * x + t * y) % n for x, y in zip(rp, ri)]
                    work[i] = [(u * x + v * y) % n for x, y in zip(rp, ri)]
        if pivot is not None:
            work[r], work[pivot] = work[pivot], work[r]
            piv.append(c)
            r += 1
    del work[r:]
    return piv


def _ext_gcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _unit_multiplier(g: int, n: int) -> tuple[int, int]:
    """A unit u mod n with u*g = gcd(g, n) mod n (g nonzero mod n)."""
    d = _gcd(g, n)
    target = d % n
    # brute force is fine at the moduli this package handles
    for u in range(1, n):
        if _gcd(u, n) == 1 and (u * g) % n == target:
            return u, d
    raise ArithmeticError(f"no unit multiplier for {g} mod {n}")  # pragma: no cover


def _howell_rows(ring: ModularRing, rows):
    """Howell form over Z/n: unique basis with membership-complete span."""
    n = ring.n
    work = [list(int(x) % n for x in r) for r in rows]
    work = [r for r in work if any(r)]
    if not work:
        return []
    # echelonize, then fold in annihilator shadows of non-unit pivots until stable
    _howell_echelon_pass(n, work)
    for _ in range(len(work[0]) ** 2 + 8):
        shadows = []
        for row in work:
            c = next(i for i, x in enumerate(row) if x)
            mult = n // _gcd(row[c], n)
            if mult > 1:
                shadow = [(mult * x) % n for x in row]
                if any(shadow):
                    shadows.append(shadow)
        if not shadows:
            break
        before = [tuple(r) for r in work]
        work = work + shadows
        _howell_echelon_pass(n, work)
        if [tuple(r) for r in work] == before:
            break
    else:  # pragma: no cover
        raise ArithmeticError("Howell reduction did not stabilize")
    # normalize pivots to their canonical divisor and reduce entries above
    for i, row in enumerate(work):
        c = next(k for k, x in enumerate(row) if x)
        u, d = _unit_multiplier(row[c], n)
        if u != 1:
            work[i] = [(u * x) % n for x in row]
    for i, row in enumerate(work):
        c = next(k for k, x in enumerate(row) if x)
        d = row[c]
        for j in range(i):
            q = work[j][c] // d  # reduce the entry above into 0 <= e < d
            if q:
                work[j] = [(x - q * y) % n for x, y in zip(work[j], row)]
    return [tuple(r) for r in work]


def canonicalize(ring: Ring, rows, ambient: int | None = None) -> Submodule:
    """Canonical Submodule spanning the given rows (RREF or Howell basis)."""
    rows = [tuple(r) for r in rows]
    if ambient is None:
        if not rows:
            raise DimensionMismatch("ambient dimension required for an empty span")
        ambient = len(rows[0])
    if any(len(r) != ambient for r in rows):
        raise DimensionMismatch("rows of mixed length")
    if ring.is_field:
        reduced, _ = _rref_rows(ring, [r for r in rows if not is_zero_vector(ring, r)])
        return Submodule(ring, ambient, tuple(reduced))
    if isinstance(ring, ModularRing):
        return Submodule(ring, ambient, tuple(_howell_rows(ring, rows)))
    raise UnsupportedRing(f"no canonical form over {ring.spec()}")


def member(sub: Submodule, v) -> bool:
    """Decide membership by reduction against the canonical basis."""
    ring = sub.ring
    if len(v) != sub.ambient:
        raise DimensionMismatch("vector has the wrong ambient dimension")
    v = list(v)
    zero = ring.zero()
    if ring.is_field:
        for row in sub.rows:
            c = next(i for i, x in enumerate(row) if x != zero)
            if v[c] != zero:
                f = v[c]
                v = [ring.sub(x, ring.mul(f, y)) for x, y in zip(v, row)]
        return all(x == zero for x in v)
    if isinstance(ring, ModularRing):
        n = ring.n
        v = [int(x) % n for x in v]
        for row in sub.rows:
            c = next(i for i, x in enumerate(row) if x)
            d = row[c]  # pivot divides n in Howell form
            if v[c] % d:
                return False
            q = v[c] // d
            if q:
                v = [(x - q * y) % n for x, y in zip(v, row)]
        return not any(v)
    raise UnsupportedRing(f"membership over {ring.spec()}")


def sum_modules(a: Submodule, b: Submodule) -> Submodule:
    if a.ambient != b.ambient or a.ring != b.ring:
        raise DimensionMismatch("mismatched modules")
    return canonicalize(a.ring, list(a.rows) + list(b.rows), a.ambient)


def kernel_rows(ring: Ring, rows, ncols: int):
    """Basis of {x : x * M = 0} where M has the given rows."""
    m = len(rows)
    if m == 0:
        return []
    zero = ring.zero()
    one = ring.one()
    aug = []
    for i, r in enumerate(rows):
        tail = [zero] * m
        tail[i] = one
        aug.append(tuple(list(r) + tail))
    if ring.is_field:
        reduced, _ = _rref_rows(ring, aug)
    elif isinstance(ring, ModularRing):
        reduced = _howell_rows(ring, aug)
    else:
        raise UnsupportedRing(f"kernel over {ring.spec()}")
    out = []
    for row in reduced:
        if all(x == zero for x in row[:ncols]):
            out.append(tuple(row[ncols:]))
    return out


def intersect_modules(a: Submodule, b: Submodule) -> Submodule:
    """Intersection of two spans via relations among stacked generators."""
    if a.ambient != b.ambient or a.ring != b.ring:
        raise DimensionMismatch("mismatched modules")
    ring = a.ring
    stacked = list(a.rows) + list(b.rows)
    if not stacked:
        return canonicalize(ring, [], a.ambient)
    rels = kernel_rows(ring, stacked, a.ambient)
    na = len(a.rows)
    vecs = []
    for rel in rels:
        coeffs = rel[:na]
        if a.rows:
            vecs.append(matvec(ring, coeffs, a.rows))
    return canonicalize(ring, vecs, a.ambient)


def nullspace(mat: Matrix) -> Submodule:
    """Canonical basis of {x : x * A = 0} over a field."""
    if not mat.ring.is_field:
        raise UnsupportedRing("nullspace is defined over fields")
    if mat.nrows == 0:
        return Submodule(mat.ring, 0, ())
    rows = kernel_rows(mat.ring, mat.entries, mat.ncols)
    return canonicalize(mat.ring, rows, mat.nrows)


def rank(mat: Matrix) -> int:
    if mat.nrows == 0:
        return 0
    if mat.ring.is_field:
        reduced, _ = _rref_rows(mat.ring, mat.entries)
        return len(reduced)
    raise UnsupportedRing("rank is defined over fields")


def invert(mat: Matrix):
    """Inverse matrix, or None when the matrix is not invertible."""
    if mat.nrows != mat.ncols:
        raise NotSquare("only square matrices can be inverted")
    ring = mat.ring
    n = mat.nrows
    if n == 0:
        return mat
    zero, one = ring.zero(), ring.one()
    if ring.is_field:
        work = [list(r) + [one if i == j else zero for j in range(n)]
                for i, r in enumerate(mat.entries)]
        for c in range(n):
            piv = next((i for i in range(c, n) if work[i][c] != zero), None)
            if piv is None:
                return None
            work[c], work[piv] = work[piv], work[c]
            inv = ring.inv(work[c][c])
            work[c] = [ring.mul(inv, x) for x in work[c]]
            for k in range(n):
                if k != c and work[k][c] != zero:
                    f = work[k][c]
                    work[k] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(work[k], work[c])]
        return Matrix.from_rows(ring, [tuple(r[n:]) for r in work])
    if isinstance(ring, ModularRing):
        mod = ring.n
        work = [[int(x) % mod for x in r] + [1 if i == j else 0 for j in range(n)]
                for i, r in enumerate(mat.entries)]
        for c in range(n):
            # concentrate the column gcd into row c with unimodular transforms
            pivot = None
            for i in range(c, n):
                if work[i][c] % mod:
                    if pivot is None:
                        pivot = i
                    else:
                        a, b = work[pivot][c], work[i][c]
                        g, s, t = _ext_gcd(a, b)
                        u, v = -(b // g), a // g
                        rp, ri = work[pivot], work[i]
                        work[pivot] = [(s * x + t * y) % mod for x, y in zip(rp, ri)]
                        work[i] = [(u * x + v * y) % mod for x, y in zip(rp, ri)]
            if pivot is None:
                return None
            work[c], work[pivot] = work[pivot], work[c]
            if _gcd(work[c][c], mod) != 1:
                return None
            inv = pow(work[c][c], -1, mod)
            work[c] = [(inv * x) % mod for x in work[c]]
            for k in range(n):
                if k != c and work[k][c]:
                    f = work[k][c]
                    work[k] = [(x - f * y) % mod for x, y in zip(work[k], work[c])]
        return Matrix.from_rows(ring, [tuple(r[n:]) for r in work])
    raise UnsupportedRing(f"inversion over {ring.spec()}")
