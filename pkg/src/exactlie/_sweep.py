"""Integer-packed sweep kernel.

Single-generator ideal closures dominate the runtime of every verification
sweep, so this module precomputes, per algebra, a basis of the associative
envelope E of the right-bracket maps (words in ad, identity included).  The
ideal closure of x is then span{x * E_k}: one pass over at most dim^2
precomputed matrices with early exit once the span is everything, instead of
a bracket fixpoint per element.  The equivalence with the public fixpoint
closure is covered by tests.

Elements of the scalar ring are packed into ints 0..q-1 (enumeration order)
and arithmetic becomes table lookups, which is what makes million-element
sweeps viable in pure Python.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import SizeLimit, UnsupportedRing
from . import liealg, linalg
from .linalg import canonicalize
from .scalars import GaloisField, ModularRing, PrimeField, Ring

_MAX_TABLE = 512  # largest packed ring; sweeps stay far below this


# ---------------------------------------------------------------------------
# packed scalars
# ---------------------------------------------------------------------------


@dataclass
class PackedRing:
    q: int
    add: list
    mul: list
    neg: list
    inv: list  # inverse table, None at non-units
    is_field: bool
    modulus: int | None  # n for Z/n, else None
    values: list  # packed index -> canonical ring value
    index: dict  # canonical ring value -> packed index


def _pack_ring(ring: Ring) -> PackedRing:
    if not isinstance(ring, (PrimeField, GaloisField, ModularRing)):
        raise UnsupportedRing(f"sweeps are packed for F_p, F_q and Z/n, not {ring.spec()}")
    q = ring.cardinality
    if q is None or q > _MAX_TABLE:
        raise SizeLimit(f"packed tables capped at {_MAX_TABLE} elements")
    values = list(ring.elements())
    index = {v: i for i, v in enumerate(values)}
    add = [[index[ring.add(a, b)] for b in values] for a in values]
    mul = [[index[ring.mul(a, b)] for b in values] for a in values]
    neg = [index[ring.neg(a)] for a in values]
    inv = [index[ring.inv(a)] if ring.is_unit(a) else None for a in values]
    modulus = ring.n if isinstance(ring, ModularRing) and not ring.is_field else None
    if isinstance(ring, ModularRing) and ring.is_field:
        modulus = None
    return PackedRing(
        q=q, add=add, mul=mul, neg=neg, inv=inv,
        is_field=ring.is_field, modulus=modulus, values=values, index=index,
    )


# ---------------------------------------------------------------------------
# packed algebras and their envelopes
# ---------------------------------------------------------------------------


@dataclass
class PackedAlgebra:
    algebra: liealg.StructureAlgebra
    ops: PackedRing
    dim: int
    right_mats: list  # A_j as dim x dim int grids: [v, b_j] = v * A_j
    envelope: list = field(default_factory=list)  # basis matrices E_k, identity first

    def encode_vec(self, coords):
        idx = self.ops.index
        return [idx[c] for c in coords]

    def decode_vec(self, packed):
        vals = self.ops.values
        return tuple(vals[i] for i in packed)


_PACKED_CACHE: dict = {}


def packed_for(L: liealg.StructureAlgebra) -> PackedAlgebra:
    key = (L.name, L.ring.spec(), L.dim)
    hit = _PACKED_CACHE.get(key)
    if hit is not None:
        return hit
    ops = _pack_ring(L.ring)
    dim = L.dim
    idx = ops.index
    right = []
    for j in range(dim):
        right.append([[idx[c] for c in L.table[a][j]] for a in range(dim)])
    packed = PackedAlgebra(algebra=L, ops=ops, dim=dim, right_mats=right)
    packed.envelope = _envelope_basis(L)
    _PACKED_CACHE[key] = packed
    return packed


def _envelope_basis(L: liealg.StructureAlgebra):
    """Canonical basis of the unital associative envelope of the ad maps.

    Computed once per algebra over the exact layer (RREF / Howell on
    vectorized matrices), then packed to int grids, identity first.
    """
    R = L.ring
    dim = L.dim
    gens = []
    for j in range(dim):
        gens.append(tuple(L.table[a][j] for a in range(dim)))  # A_j rows
    ident = linalg.Matrix.identity(R, dim).entries
    vec = lambda rows: tuple(x for row in rows for x in row)
    unvec = lambda v: tuple(tuple(v[a * dim: (a + 1) * dim]) for a in range(dim))
    span = canonicalize(R, [vec(ident)] + [vec(g) for g in gens], dim * dim)
    while True:
        new_rows = list(span.rows)
        for row in span.rows:
            M = unvec(row)
            for g in gens:
                prod = tuple(linalg.matvec(R, mr, g) for mr in M)
                new_rows.append(vec(prod))
        nxt = canonicalize(R, new_rows, dim * dim)
        if nxt == span:
            break
        span = nxt
    idx = {v: i for i, v in enumerate(R.elements())} if R.cardinality else None
    mats = []
    # identity first so the first image row is x itself
    ordered = [vec(ident)] + [r for r in span.rows if r != vec(ident)]
    seen = set()
    for row in ordered:
        if row in seen:
            continue
        seen.add(row)
        mats.append([[idx[x] for x in row[a * dim: (a + 1) * dim]] for a in range(dim)])
    return mats


# ---------------------------------------------------------------------------
# per-element closures (packed)
# ---------------------------------------------------------------------------


def _image(x, E, add, mul, dim):
    """x * E for a packed row vector and packed matrix."""
    out = [0] * dim
    for a in range(dim):
        xa = x[a]
        if xa:
            mxa = mul[xa]
            Ea = E[a]
            for t in range(dim):
                e = Ea[t]
                if e:
                    out[t] = add[out[t]][mxa[e]]
    return out


def closure_rank_field(packed: PackedAlgebra, x) -> int:
    """Rank of the closure of x over a field, early exit at full rank."""
    ops = packed.ops
    add, mul, neg, inv = ops.add, ops.mul, ops.neg, ops.inv
    dim = packed.dim
    pivots = []  # (col, normalized row) sorted by col
    for E in packed.envelope:
        vec = _image(x, E, add, mul, dim)
        for col, row in pivots:
            c = vec[col]
            if c:
                mc = mul[neg[c]]
                for t in range(col, dim):
                    rv = row[t]
                    if rv:
                        vec[t] = add[vec[t]][mc[rv]]
        lead = next((t for t in range(dim) if vec[t]), None)
        if lead is None:
            continue
        iv = mul[inv[vec[lead]]]
        row = [iv[v] if v else 0 for v in vec]
        pivots.append((lead, row))
        if len(pivots) == dim:
            return dim
        pivots.sort(key=lambda pr: pr[0])
    return len(pivots)


def closure_rows_field(packed: PackedAlgebra, x):
    """Canonical RREF rows (packed ints) of the closure of x over a field."""
    ops = packed.ops
    add, mul, neg, inv = ops.add, ops.mul, ops.neg, ops.inv
    dim = packed.dim
    pivots = []
    for E in packed.envelope:
        vec = _image(x, E, add, mul, dim)
        for col, row in pivots:
            c = vec[col]
            if c:
                mc = mul[neg[c]]
                for t in range(col, dim):
                    rv = row[t]
                    if rv:
                        vec[t] = add[vec[t]][mc[rv]]
        lead = next((t for t in range(dim) if vec[t]), None)
        if lead is None:
            continue
        iv = mul[inv[vec[lead]]]
        pivots.append((lead, [iv[v] if v else 0 for v in vec]))
        pivots.sort(key=lambda pr: pr[0])
        if len(pivots) == dim:
            break
    # back-substitute to the reduced form
    rows = [row[:] for _, row in pivots]
    for i in range(len(rows) - 1, -1, -1):
        col = pivots[i][0]
        for k in range(i):
            c = rows[k][col]
            if c:
                mc = mul[neg[c]]
                rk = rows[k]
                ri = rows[i]
                for t in range(col, dim):
                    rv = ri[t]
                    if rv:
                        rk[t] = add[rk[t]][mc[rv]]
    return tuple(tuple(r) for r in rows)


def closure_rows_zn(packed: PackedAlgebra, x):
    """Canonical Howell rows (ints mod n) of the closure of x over Z/n."""
    ops = packed.ops
    n = ops.modulus
    assert n is not None
    add, mul = ops.add, ops.mul
    dim = packed.dim
    rows = []
    for E in packed.envelope:
        img = _image(x, E, add, mul, dim)
        if any(img):
            rows.append(img)
    if not rows:
        return ()
    from .linalg import _howell_rows  # shared canonical form

    return tuple(_howell_rows(ModularRing(n), rows))


def full_rows(packed: PackedAlgebra):
    """Packed canonical rows of the full module."""
    dim = packed.dim
    one = packed.ops.index[packed.algebra.ring.one()]
    return tuple(tuple(one if i == j else 0 for j in range(dim)) for i in range(dim))


# ---------------------------------------------------------------------------
# element streams
# ---------------------------------------------------------------------------


def iter_all_vectors(q: int, dim: int):
    """All vectors over 0..q-1 in odometer order, zero first.

    Yields one reused buffer; consume or copy before advancing.
    """
    vec = [0] * dim
    yield vec
    while True:
        i = dim - 1
        while i >= 0 and vec[i] == q - 1:
            vec[i] = 0
            i -= 1
        if i < 0:
            return
        vec[i] += 1
        yield vec


def sample_nonzero_vectors(q: int, dim: int, count: int, seed: int):
    rng = random.Random(seed)
    emitted = 0
    while emitted < count:
        vec = [rng.randrange(q) for _ in range(dim)]
        if any(vec):
            emitted += 1
            yield vec


def normalize_ray(packed: PackedAlgebra, vec):
    """Scale so the leading coordinate is 1 (fields); key for the ray memo."""
    inv, mul = packed.ops.inv, packed.ops.mul
    lead = next((v for v in vec if v), None)
    if lead is None or lead == 1:
        return tuple(vec)
    iv = mul[inv[lead]]
    return tuple(iv[v] if v else 0 for v in vec)
