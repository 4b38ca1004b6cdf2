"""Ideal closures, maximal-ideal classification, and simplicity sweeps.

The public closure is the documented bracket fixpoint; the sweeps delegate to
the packed envelope kernel in _sweep (same answers, checked by tests).  Full
sweeps iterate every element honestly; a ray memo caches the closure per
scalar ray (closure(c*x) = closure(x) for units c), and modular sweeps cache
the classification per residue vector, which is exact because reduction mod a
maximal ideal commutes with the closure images.  A deterministic subsample of
every modular sweep is re-verified directly over Z/n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    NotAnIdeal,
    NotMaximal,
    NotPerfect,
    PreconditionFailed,
    SizeLimit,
    UnsupportedRing,
    WrongCharacteristic,
)
from . import _sweep, liealg, linalg, scalars
from .liealg import StructureAlgebra, bracket
from .linalg import Submodule, canonicalize, member, sum_modules
from .scalars import ModularRing, Ring, RingIdeal

DEFAULT_BUDGET = 5_000_000
DEFAULT_SEED = 2025
DEFAULT_SAMPLES = 1_000_000


# ---------------------------------------------------------------------------
# closures
# ---------------------------------------------------------------------------


def ideal_closure(L: StructureAlgebra, gens) -> Submodule:
    """Least bracket-stable submodule containing gens.

    Fixpoint: canonicalize the generators, bracket every basis row against
    every b_i, adjoin, re-canonicalize, repeat until stable.  Stability
    against the basis implies stability against the whole algebra.
    """
    R = L.ring
    if not (R.is_field or R.kind == "zn"):
        raise UnsupportedRing("closures over fields and Z/n only")
    span = canonicalize(R, list(gens), L.dim)
    basis = [L.basis(i) for i in range(L.dim)]
    while True:
        new_rows = list(span.rows)
        for row in span.rows:
            for b in basis:
                br = bracket(L, row, b)
                if not linalg.is_zero_vector(R, br):
                    new_rows.append(br)
        nxt = canonicalize(R, new_rows, L.dim)
        if nxt == span:
            return span
        span = nxt


def is_bracket_stable(L: StructureAlgebra, I: Submodule) -> bool:
    for row in I.rows:
        for j in range(L.dim):
            if not member(I, bracket(L, row, L.basis(j))):
                return False
    return True


def closure_via_packed(L: StructureAlgebra, coords) -> Submodule:
    """Fast-path closure through the envelope kernel (same value as the fixpoint)."""
    packed = _sweep.packed_for(L)
    x = packed.encode_vec(coords)
    if packed.ops.is_field:
        rows = _sweep.closure_rows_field(packed, x)
    else:
        rows = _sweep.closure_rows_zn(packed, x)
    return Submodule(L.ring, L.dim, tuple(packed.decode_vec(r) for r in rows))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def _modular_prime(ring: ModularRing, m: RingIdeal) -> int:
    """The prime p with m = (p) in Z/n; NotMaximal otherwise."""
    from math import gcd

    g = ring.n
    for x in m.gens:
        g = gcd(g, int(x))
    if not (scalars.is_prime(g) and ring.n % g == 0):
        raise NotMaximal(f"({g}) is not maximal in {ring.spec()}")
    return g


def _rank_mod_p(rows, p: int, dim: int) -> int:
    work = [[int(x) % p for x in r] for r in rows]
    work = [r for r in work if any(r)]
    rank = 0
    for c in range(dim):
        piv = next((i for i in range(rank, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = pow(work[rank][c], -1, p)
        work[rank] = [(inv * x) % p for x in work[rank]]
        for k in range(len(work)):
            if k != rank and work[k][c]:
                f = work[k][c]
                work[k] = [(x - f * y) % p for x, y in zip(work[k], work[rank])]
        rank += 1
        if rank == dim:
            break
    return rank


def classify(L: StructureAlgebra, m: RingIdeal, I: Submodule) -> str:
    """'m-null' (I inside m*L), 'm-total' (I + m*L = L), or 'neither'."""
    R = L.ring
    if R.is_field:
        if not m.is_zero:
            raise NotMaximal("the zero ideal is the only maximal ideal of a field")
        if I.is_zero:
            return "m-null"
        if I.rank == L.dim:
            return "m-total"
        return "neither"
    if isinstance(R, ModularRing):
        p = _modular_prime(R, m)
        if all(int(x) % p == 0 for row in I.rows for x in row):
            return "m-null"
        if _rank_mod_p(I.rows, p, L.dim) == L.dim:
            return "m-total"
        return "neither"
    raise UnsupportedRing("classification over fields and Z/n only")


@dataclass
class IdealReport:
    """A closure plus its per-maximal-ideal classification."""

    algebra: str
    ring: str
    generators: list
    closure: Submodule
    classifications: dict
    flags: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        L_ring = self.closure.ring
        return {
            "algebra": self.algebra,
            "ring": self.ring,
            "generators": self.generators,
            "closure_rank": self.closure.rank,
            "closure_basis": [
                [L_ring.format_element(x) for x in row] for row in self.closure.rows
            ],
            "classifications": dict(self.classifications),
            "flags": dict(self.flags),
        }


def _format_coords(ring: Ring, coords) -> str:
    return "(" + ",".join(ring.format_element(c) for c in coords) + ")"


def _ideal_label(ring: Ring, m: RingIdeal) -> str:
    if not m.gens:
        return "(0)"
    return "(" + ",".join(ring.format_element(g) for g in m.gens) + ")"


# ---------------------------------------------------------------------------
# sweep reports
# ---------------------------------------------------------------------------


@dataclass
class DistinctClosure:
    rank: int
    classification: str
    representative: tuple  # generator coordinates (ring values)
    closure: Submodule | None = None


@dataclass
class SweepReport:
    algebra: str
    ring: str
    mode: str  # "full" | "sampled"
    seed: int | None
    examined: int
    distinct: list
    verdict: bool
    witness: tuple | None = None

    def to_json(self) -> dict:
        ring = scalars.make_ring(self.ring)
        return {
            "algebra": self.algebra,
            "ring": self.ring,
            "mode": self.mode,
            "seed": self.seed,
            "examined": self.examined,
            "distinct_closures": [
                {
                    "dim_or_rank": d.rank,
                    "classification": d.classification,
                    "representative_generator": _format_coords(ring, d.representative),
                }
                for d in self.distinct
            ],
            "verdict": "pass" if self.verdict else "fail",
        }


def _sorted_distinct(distinct: dict) -> list:
    return [distinct[k] for k in sorted(distinct.keys(), key=lambda t: (t[0], t[1]))]


# ---------------------------------------------------------------------------
# simplicity over finite fields
# ---------------------------------------------------------------------------


def simplicity_report(
    L: StructureAlgebra,
    mode: str = "auto",
    budget: int = DEFAULT_BUDGET,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> SweepReport:
    """Single-generator closure sweep deciding simplicity over a finite field.

    A proper nonzero ideal exists iff some nonzero element generates a proper
    nonzero closure, so the element sweep decides simplicity exactly in full
    mode; sampled mode reports the absence of counterexamples.
    """
    R = L.ring
    if not (R.is_field and R.cardinality is not None):
        raise UnsupportedRing("simplicity sweeps need a finite field")
    packed = _sweep.packed_for(L)
    q = packed.ops.q
    dim = packed.dim
    total = q**dim - 1
    if mode == "auto":
        mode = "full" if total <= budget else "sampled"
    if mode == "full" and total > budget:
        raise SizeLimit(
            f"{total} closures exceed the budget {budget}; rerun with mode='sampled'"
        )
    distinct: dict = {}
    witness = None
    examined = 0
    full_fp = _sweep.full_rows(packed)

    def record(fp, rows, vec):
        rank = len(rows)
        cls = "m-total" if rank == dim else ("m-null" if rank == 0 else "neither")
        key = (rank, cls, fp)
        if key not in distinct:
            distinct[key] = DistinctClosure(
                rank=rank,
                classification=cls,
                representative=packed.decode_vec(vec),
                closure=Submodule(R, dim, tuple(packed.decode_vec(r) for r in rows)),
            )

    if mode == "full":
        memo: dict = {}
        for vec in _sweep.iter_all_vectors(q, dim):
            if not any(vec):
                continue
            examined += 1
            key = _sweep.normalize_ray(packed, vec)
            hit = memo.get(key)
            if hit is None:
                rows = _sweep.closure_rows_field(packed, list(key))
                hit = (len(rows), rows)
                memo[key] = hit
                record(rows, rows, list(key))
            if hit[0] != dim and witness is None:
                witness = packed.decode_vec(vec)
    else:
        for vec in _sweep.sample_nonzero_vectors(q, dim, samples, seed):
            examined += 1
            rank = _sweep.closure_rank_field(packed, vec)
            if rank == dim:
                key = (dim, "m-total", full_fp)
                if key not in distinct:
                    distinct[key] = DistinctClosure(
                        rank=dim,
                        classification="m-total",
                        representative=packed.decode_vec(vec),
                        closure=Submodule(R, dim, tuple(packed.decode_vec(r) for r in full_fp)),
                    )
            else:
                rows = _sweep.closure_rows_field(packed, vec)
                record(rows, rows, vec)
                if witness is None:
                    witness = packed.decode_vec(vec)
    simple = witness is None
    return SweepReport(
        algebra=L.name,
        ring=R.spec(),
        mode=mode,
        seed=None if mode == "full" else seed,
        examined=examined,
        distinct=_sorted_distinct(distinct),
        verdict=simple,
        witness=witness,
    )


def is_simple(L: StructureAlgebra, **kwargs) -> bool:
    return simplicity_report(L, **kwargs).verdict


# ---------------------------------------------------------------------------
# m-simplicity over Z/n
# ---------------------------------------------------------------------------


def _mod_p_shadow(L: StructureAlgebra, p: int) -> StructureAlgebra:
    """The same structure constants over F_p (reduction of the Z/n table)."""
    Fp = scalars.fp(p)
    entries: dict = {}
    zero = L.ring.zero()
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            row = {}
            for k, c in enumerate(L.table[i][j]):
                if c != zero and int(c) % p:
                    row[k] = int(c) % p
            if row:
                entries[(i, j)] = row
    return liealg.algebra_from_table(Fp, L.labels, entries, name=L.name + f"@mod{p}")


def m_simplicity_report(
    L: StructureAlgebra,
    m: RingIdeal,
    mode: str = "auto",
    budget: int = DEFAULT_BUDGET,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    verify_every: int = 50_000,
) -> SweepReport:
    """Sweep classifying every single-element closure against the ideal m.

    The classification of closure(x) at (p) equals the classification of the
    mod-p closure of x mod p (reduction commutes with the envelope images);
    the sweep computes the latter per element with a residue memo, and
    re-verifies a deterministic subsample directly over Z/n.
    """
    R = L.ring
    if not isinstance(R, ModularRing):
        raise UnsupportedRing("m-simplicity sweeps run over Z/n")
    p = _modular_prime(R, m)
    n = R.n
    dim = L.dim
    total = n**dim - 1
    if mode == "auto":
        mode = "full" if total <= budget else "sampled"
    if mode == "full" and total > budget:
        raise SizeLimit(
            f"{total} closures exceed the budget {budget}; rerun with mode='sampled'"
        )
    packed_zn = _sweep.packed_for(L)
    shadow = _mod_p_shadow(L, p)
    packed_p = _sweep.packed_for(shadow)
    memo: dict = {}
    distinct: dict = {}
    witness = None
    examined = 0

    def classify_residue(key) -> str:
        if not any(key):
            return "m-null"
        rank = _sweep.closure_rank_field(packed_p, list(key))
        if rank == packed_p.dim:
            return "m-total"
        return "neither"

    def honest_check(vec, expected: str):
        rows = _sweep.closure_rows_zn(packed_zn, list(vec))
        if all(x % p == 0 for row in rows for x in row):
            got = "m-null"
        elif _rank_mod_p(rows, p, dim) == dim:
            got = "m-total"
        else:
            got = "neither"
        assert got == expected, f"residue classification mismatch at {vec}"
        return rows

    def record(cls: str, vec):
        key = (0 if cls == "m-null" else (dim if cls == "m-total" else 1), cls)
        if key not in distinct:
            rows = _sweep.closure_rows_zn(packed_zn, list(vec))
            distinct[key] = DistinctClosure(
                rank=len(rows),
                classification=cls,
                representative=packed_zn.decode_vec(vec),
                closure=Submodule(R, dim, tuple(packed_zn.decode_vec(r) for r in rows)),
            )

    stream = (
        (v for v in _sweep.iter_all_vectors(n, dim) if any(v))
        if mode == "full"
        else _sweep.sample_nonzero_vectors(n, dim, samples, seed)
    )
    for vec in stream:
        examined += 1
        key = tuple(x % p for x in vec)
        cls = memo.get(key)
        if cls is None:
            cls = classify_residue(key)
            memo[key] = cls
            record(cls, vec)
        if cls == "neither" and witness is None:
            witness = packed_zn.decode_vec(vec)
        if examined % verify_every == 0:
            honest_check(vec, cls)
    return SweepReport(
        algebra=L.name,
        ring=R.spec(),
        mode=mode,
        seed=None if mode == "full" else seed,
        examined=examined,
        distinct=_sorted_distinct(distinct),
        verdict=witness is None,
        witness=witness,
    )


def is_m_simple(L: StructureAlgebra, m: RingIdeal, **kwargs) -> bool:
    return m_simplicity_report(L, m, **kwargs).verdict


# ---------------------------------------------------------------------------
# explicit non-simplicity witness
# ---------------------------------------------------------------------------


def first_notsimple_params(ring: Ring, m: RingIdeal):
    """Smallest (x, y) in enumeration order with x^2+y^2 in m, x, y outside m."""
    for x in ring.elements():
        if m.contains(x):
            continue
        x2 = ring.mul(x, x)
        for y in ring.elements():
            if m.contains(y):
                continue
            if m.contains(ring.add(x2, ring.mul(y, y))):
                return x, y
    return None


def notsimple_witness(L: StructureAlgebra, m: RingIdeal, x, y) -> IdealReport:
    """The proper nonzero ideal spanned by x*b1+y*b6, x*b2-y*b5, x*b3+y*b4
    together with m*L; verified bracket-stable and neither m-null nor m-total.
    """
    R = L.ring
    if L.dim != 6:
        raise PreconditionFailed("the witness lives in the rank-6 algebra")
    s = R.add(R.mul(x, x), R.mul(y, y))
    if not m.contains(s):
        raise PreconditionFailed("x^2 + y^2 must lie in m")
    if m.contains(x) or m.contains(y):
        raise PreconditionFailed("x and y must lie outside m")
    zero = R.zero()
    ny = R.neg(y)
    gens = [
        (x, zero, zero, zero, zero, y),
        (zero, x, zero, zero, ny, zero),
        (zero, zero, x, y, zero, zero),
    ]
    m_gens = []
    if isinstance(R, ModularRing):
        p = _modular_prime(R, m)
        for i in range(6):
            row = [zero] * 6
            row[i] = R.from_int(p)
            m_gens.append(tuple(row))
    closure = ideal_closure(L, gens + m_gens)
    direct = canonicalize(R, gens + m_gens, 6)
    assert closure == direct, "the stated generators do not close under brackets"
    cls = classify(L, m, closure)
    assert cls == "neither", f"witness classified as {cls}"
    # image mod m has dimension exactly 3
    if isinstance(R, ModularRing):
        p = _modular_prime(R, m)
        img_rank = _rank_mod_p(closure.rows, p, 6)
    else:
        img_rank = closure.rank
    assert img_rank == 3, f"image rank {img_rank} != 3"
    return IdealReport(
        algebra=L.name,
        ring=R.spec(),
        generators=[_format_coords(R, g) for g in gens + m_gens],
        closure=closure,
        classifications={_ideal_label(R, m): cls},
        flags={"image_rank_mod_m": img_rank, "proper": True, "nonzero": True},
    )


# ---------------------------------------------------------------------------
# characteristic-2 structure
# ---------------------------------------------------------------------------


@dataclass
class Char2IdealReport:
    ideal: Submodule
    abelian: bool
    minimal: bool
    unique: bool
    quotient_verified: bool
    closure_ranks: dict
    report: IdealReport


def char2_ideal(L: StructureAlgebra) -> Char2IdealReport:
    """The 3-dimensional ideal span{b1+b6, b2+b5, b3+b4} in characteristic 2.

    Flags are established by exhaustive computation: abelian on basis pairs,
    minimal by sweeping every nonzero element of the ideal, unique by sweeping
    every nonzero element of the algebra, and the quotient is matched to o(3)
    through an explicit checked isomorphism.
    """
    R = L.ring
    if R.characteristic != 2 or not R.is_field or R.cardinality is None:
        raise WrongCharacteristic("a finite field of characteristic 2 is required")
    if L.dim != 6:
        raise PreconditionFailed("the rank-6 algebra is required")
    one, zero = R.one(), R.zero()
    gens = [
        (one, zero, zero, zero, zero, one),
        (zero, one, zero, zero, one, zero),
        (zero, zero, one, one, zero, zero),
    ]
    I = ideal_closure(L, gens)
    assert I == canonicalize(R, gens, 6), "span{b1+b6, b2+b5, b3+b4} is not an ideal"
    abelian = all(
        linalg.is_zero_vector(R, bracket(L, u, v)) for u in I.rows for v in I.rows
    )
    packed = _sweep.packed_for(L)
    q = packed.ops.q
    enc_rows = [packed.encode_vec(r) for r in I.rows]
    I_fp = tuple(tuple(r) for r in enc_rows)
    # minimality: every nonzero element of I generates I
    minimal = True
    for coeffs in _sweep.iter_all_vectors(q, 3):
        if not any(coeffs):
            continue
        vec = [0] * 6
        add, mul = packed.ops.add, packed.ops.mul
        for c, row in zip(coeffs, enc_rows):
            if c:
                mc = mul[c]
                for t in range(6):
                    if row[t]:
                        vec[t] = add[vec[t]][mc[row[t]]]
        if _sweep.closure_rows_field(packed, vec) != I_fp:
            minimal = False
            break
    # uniqueness: the only nonzero proper single-generator closure is I
    unique = True
    ranks: dict = {}
    memo: dict = {}
    for vec in _sweep.iter_all_vectors(q, 6):
        if not any(vec):
            continue
        key = _sweep.normalize_ray(packed, vec)
        fp = memo.get(key)
        if fp is None:
            fp = _sweep.closure_rows_field(packed, list(key))
            memo[key] = fp
        ranks[len(fp)] = ranks.get(len(fp), 0) + 1
        if len(fp) != 6 and fp != I_fp:
            unique = False
    # quotient: coset coordinates (v1+v6, v2+v5, v3+v4) against the o(3) table
    def project(v):
        return (R.add(v[0], v[5]), R.add(v[1], v[4]), R.add(v[2], v[3]))

    o3 = liealg.make_algebra("o", R, 3)
    entries: dict = {}
    for i in range(3):
        for j in range(i + 1, 3):
            entry = {k: c for k, c in enumerate(project(L.table[i][j])) if c != zero}
            if entry:
                entries[(i, j)] = entry
    quotient = liealg.algebra_from_table(R, ("q1", "q2", "q3"), entries, name="quotient")
    proj_map = liealg.LinearMap.from_rows(
        L, quotient, [project(L.basis(i)) for i in range(6)]
    )
    iso = liealg.LinearMap.identity(quotient)
    iso = liealg.LinearMap(quotient, o3, iso.rows)
    quotient_verified = (
        liealg.is_homomorphism(proj_map)
        and liealg.is_homomorphism(iso)
        and linalg.invert(iso.as_matrix()) is not None
        and canonicalize(R, [proj_map.apply(r) for r in I.rows] or [], 3).is_zero
    )
    report = IdealReport(
        algebra=L.name,
        ring=R.spec(),
        generators=[_format_coords(R, g) for g in gens],
        closure=I,
        classifications={"(0)": classify(L, scalars.zero_ideal(R), I)},
        flags={
            "abelian": abelian,
            "minimal": minimal,
            "unique": unique,
            "quotient_is_o3": quotient_verified,
            "closure_rank_counts": {str(k): v for k, v in sorted(ranks.items())},
        },
    )
    return Char2IdealReport(
        ideal=I,
        abelian=abelian,
        minimal=minimal,
        unique=unique,
        quotient_verified=quotient_verified,
        closure_ranks=ranks,
        report=report,
    )


# ---------------------------------------------------------------------------
# dimension exclusion
# ---------------------------------------------------------------------------


def dimension_exclusion_check(L: StructureAlgebra, budget: int = DEFAULT_BUDGET):
    """No single-generator closure of dimension 4 or 5 (full sweep).

    Returns (ok, rank_counts, offender); raises NotPerfect when [L, L] != L.
    """
    R = L.ring
    if not (R.is_field and R.cardinality is not None):
        raise UnsupportedRing("a finite field is required")
    if liealg.derived_subalgebra(L).rank != L.dim:
        raise NotPerfect("the algebra is not perfect")
    packed = _sweep.packed_for(L)
    q = packed.ops.q
    total = q**L.dim - 1
    if total > budget:
        raise SizeLimit(f"{total} closures exceed the budget {budget}")
    counts: dict = {}
    offender = None
    memo: dict = {}
    for vec in _sweep.iter_all_vectors(q, L.dim):
        if not any(vec):
            continue
        key = _sweep.normalize_ray(packed, vec)
        rank = memo.get(key)
        if rank is None:
            rank = len(_sweep.closure_rows_field(packed, list(key)))
            memo[key] = rank
        counts[rank] = counts.get(rank, 0) + 1
        if rank in (4, 5) and offender is None:
            offender = packed.decode_vec(vec)
    return offender is None, counts, offender


# ---------------------------------------------------------------------------
# sl2 ideal shape over Z/n
# ---------------------------------------------------------------------------


def sl2_ideal_form(L: StructureAlgebra, I: Submodule) -> RingIdeal:
    """The scalar ideal {x : x*h in I}, verified to satisfy I = i*sl2(R)."""
    R = L.ring
    if L.dim != 3:
        raise PreconditionFailed("sl2 has dimension 3")
    if not R.is_unit(R.from_int(2)):
        raise PreconditionFailed("2 must be invertible")
    if not is_bracket_stable(L, I):
        raise NotAnIdeal("the submodule is not bracket-stable")
    if R.cardinality is None:
        raise UnsupportedRing("finite scalars required")
    zero = R.zero()
    members = [x for x in R.elements() if member(I, (x, zero, zero))]
    scal = scalars.ideal(R, tuple(members))
    assert scal.element_set == frozenset(members), "h-coefficients do not form an ideal"
    rows = []
    for x in members:
        for k in range(3):
            row = [zero] * 3
            row[k] = x
            rows.append(tuple(row))
    rebuilt = canonicalize(R, rows, 3)
    if rebuilt != I:
        raise NotAnIdeal("the submodule is not of the form i*sl2(R)")
    return scal


# ---------------------------------------------------------------------------
# splitting over Z/n with several residue primes
# ---------------------------------------------------------------------------


@dataclass
class SplittingReport:
    ring: str
    algebra: str
    mode: str
    seed: int | None
    examined: int
    target_labels: list
    observed: dict  # label -> count
    direct_sum_ok: bool
    verdict: bool


def splitting_report(
    L: StructureAlgebra,
    samples: int = 100_000,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_BUDGET,
) -> SplittingReport:
    """Sampled check that every nonzero single-element closure is one of the
    scalar-ideal strata d*L (d a nontrivial divisor product of the modulus) or
    L itself, and that the prime strata sum directly to L.
    """
    R = L.ring
    if not isinstance(R, ModularRing) or R.is_field:
        raise UnsupportedRing("a composite Z/n is required")
    n = R.n
    primes = scalars._prime_factors(n)
    packed = _sweep.packed_for(L)
    dim = L.dim
    # target closures: dL for every divisor d > 1 of the (squarefree) modulus
    divisors = [1]
    for p in primes:
        divisors += [d * p for d in divisors]
    targets = {}
    for d in sorted(d for d in divisors if 1 < d < n):
        rows = []
        for i in range(dim):
            row = [0] * dim
            row[i] = d % n
            rows.append(row)
        from .linalg import _howell_rows

        targets[f"{d}L"] = tuple(_howell_rows(R, rows))
    targets["L"] = tuple(tuple(int(x) for x in r) for r in _sweep.full_rows(packed))
    observed: dict = {}
    verdict = True
    examined = 0
    # deterministic stratum witnesses: d*b1 must generate exactly d*L
    for label, t_rows in targets.items():
        if label == "L":
            continue
        d = int(label[:-1])
        vec = [d % n] + [0] * (dim - 1)
        if _sweep.closure_rows_zn(packed, vec) != t_rows:
            verdict = False
    total = n**dim - 1
    mode = "full" if total <= min(budget, samples) else "sampled"
    stream = (
        (v for v in _sweep.iter_all_vectors(n, dim) if any(v))
        if mode == "full"
        else _sweep.sample_nonzero_vectors(n, dim, samples, seed)
    )
    for vec in stream:
        examined += 1
        rows = _sweep.closure_rows_zn(packed, list(vec))
        label = next((lab for lab, t in targets.items() if t == rows), None)
        if label is None:
            verdict = False
            label = "unexpected:" + repr(rows)
        observed[label] = observed.get(label, 0) + 1
    # direct sum of the prime strata
    strata = []
    for p in primes:
        rows = []
        for i in range(dim):
            row = [R.zero()] * dim
            row[i] = R.from_int(p)
            rows.append(tuple(row))
        strata.append(canonicalize(R, rows, dim))
    total_mod = strata[0]
    size_prod = strata[0].size()
    for s in strata[1:]:
        total_mod = sum_modules(total_mod, s)
        size_prod *= s.size()
    direct_sum_ok = total_mod.rank == dim and all(
        r == tuple(R.one() if i == j else R.zero() for j in range(dim))
        for i, r in enumerate(total_mod.rows)
    ) and size_prod == R.n**dim
    return SplittingReport(
        ring=R.spec(),
        algebra=L.name,
        mode=mode,
        seed=None if mode == "full" else seed,
        examined=examined,
        target_labels=sorted(targets.keys()),
        observed=dict(sorted(observed.items())),
        direct_sum_ok=direct_sum_ok,
        verdict=verdict and direct_sum_ok,
    )
