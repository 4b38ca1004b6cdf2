"""Exact commutative rings: prime fields, extension fields, Z/n, Q, products,
and the duplication ring R x R with (x,y)(u,v) = (xu - yv, xv + yu).

Elements are plain canonical Python values and the ring object is the
calculator: ints for F_p and Z/n, coefficient tuples for F_q, Fraction for Q,
and pairs for products and duplications.  Canonical values make equality and
hashing free, which the sweep machinery relies on.

Every constructor runs a deterministic axiom check on a small sample; the
full-size axiom sweeps live in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    NonPrimeModulus,
    NotMaximal,
    ReduciblePolynomial,
    SizeLimit,
    TwoNotInvertible,
    Unsupported,
)

# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (little-endian coefficient lists)
# ---------------------------------------------------------------------------


def _poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _poly_trim(out)


def _poly_mod(f, m, p):
    f = list(f)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(f) - 1 >= dm and f:
        c = (f[-1] * inv_lead) % p
        shift = len(f) - 1 - dm
        for i, a in enumerate(m):
            f[shift + i] = (f[shift + i] - c * a) % p
        _poly_trim(f)
    return f


def _poly_gcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _poly_mod(f, g, p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [(a * inv) % p for a in f]
    return f


def _poly_powmod_x(e, m, p):
    """x^e mod m over F_p by square and multiply."""
    result = [1]
    base = _poly_mod([0, 1], m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    """Trial division; moduli stay below 10^9 in this package."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _is_irreducible(f, p):
    """Rabin's test for a monic polynomial f over F_p."""
    n = len(f) - 1
    if n <= 0:
        return False
    xq = _poly_powmod_x(p**n, f, p)
    diff = list(xq) + [0] * max(0, 2 - len(xq))
    diff[1] = (diff[1] - 1) % p
    if _poly_trim(diff):
        return False
    for r in _prime_factors(n):
        xk = _poly_powmod_x(p ** (n // r), f, p)
        diff = list(xk) + [0] * max(0, 2 - len(xk))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(f, _poly_trim(diff), p)
        if len(g) - 1 != 0:
            return False
    return True


def _least_irreducible(p, n):
    """Lexicographically least monic irreducible of degree n over F_p.

    Candidates x^n + c_{n-1} x^{n-1} + ... + c_0 are scanned in lexicographic
    order of (c_{n-1}, ..., c_0).
    """
    for tail in itertools.product(range(p), repeat=n):
        coeffs = list(reversed(tail)) + [1]  # little-endian, monic
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise ReduciblePolynomial(f"no irreducible of degree {n} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# ring handles
# ---------------------------------------------------------------------------


class Ring:
    """An exact commutative unital ring; subclasses fix the element encoding."""

    kind: str
    characteristic: int
    cardinality: int | None  # None when infinite
    is_field: bool

    # -- arithmetic on canonical values --

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        """Canonical image of the integer k (the unique Z -> R map)."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero()

    # -- enumeration and text --

    def elements(self):
        """All elements in the fixed lexicographic order (finite rings only)."""
        raise Unsupported(f"{self.spec()} is not enumerable")

    def sample_elements(self, k: int):
        """Deterministic sample used for axiom spot checks."""
        if self.cardinality is not None:
            return list(itertools.islice(self.elements(), k))
        raise NotImplementedError

    def spec(self) -> str:
        raise NotImplementedError

    def format_element(self, a) -> str:
        raise NotImplementedError

    def parse_element(self, s: str):
        raise NotImplementedError

    def pivot_weight(self, a) -> int:
        """Pivot preference for elimination; smaller is better."""
        return 0

    # -- shared plumbing --

    def __repr__(self):
        return self.spec()

    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec() == other.spec()

    def __hash__(self):
        return hash(self.spec())

    def _verify_axioms(self, sample: int = 5) -> None:
        xs = self.sample_elements(sample)
        one = self.one()
        for x in xs:
            assert self.mul(one, x) == x, "1*x != x"
        for x, y, z in itertools.product(xs, repeat=3):
            assert self.mul(x, y) == self.mul(y, x), "xy != yx"
            assert self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)), "(xy)z != x(yz)"
            assert self.mul(x, self.add(y, z)) == self.add(
                self.mul(x, y), self.mul(x, z)
            ), "x(y+z) != xy+xz"


class PrimeField(Ring):
    """F_p with elements 0..p-1."""

    kind = "fp"
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.cardinality = p
        self._verify_axioms()

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        return pow(a, -1, self.p)

    def elements(self):
        return iter(range(self.p))

    def spec(self):
        return f"fp:{self.p}"

    def format_element(self, a):
        return str(a)

    def parse_element(self, s):
        return int(s) % self.p


class GaloisField(Ring):
    """F_{p^n} as F_p[x]/(m), elements are coefficient tuples (c0, ..., c_{n-1})."""

    kind = "fq"
    is_field = True

    def __init__(self, p: int, n: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        if n < 1:
            raise Unsupported("extension degree must be >= 1")
        self.p = p
        self.n = n
        if modulus is None:
            if p**n > 10**6:
                raise SizeLimit(f"irreducible search for p^n = {p**n} exceeds 10^6")
            modulus = _least_irreducible(p, n)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ReduciblePolynomial("modulus must be monic of degree n")
            if not _is_irreducible(list(modulus), p):
                raise ReduciblePolynomial(f"{list(modulus)} is reducible over F_{p}")
        self.modulus = modulus
        self.characteristic = p
        self.cardinality = p**n
        # reduction table for x^n .. x^(2n-2)
        red = []
        cur = [(-c) % p for c in modulus[:-1]]  # x^n = -(lower part)
        red.append(tuple(cur))
        for _ in range(n - 2):
            cur = [0] + cur
            if len(cur) > n:
                lead = cur.pop()
                cur = [(a + lead * r) % p for a, r in zip(cur, red[0])]
            red.append(tuple(cur))
        self._red = red
        self._verify_axioms()

    def zero(self):
        return (0,) * self.n

    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def from_int(self, k):
        return (k % self.p,) + (0,) * (self.n - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                row = self._red[k - n]
                out = [(o + c * r) % p for o, r in zip(out, row)]
        return tuple(out)

    def is_unit(self, a):
        return any(a)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid over F_p[x]
        p = self.p
        r0, r1 = list(self.modulus), _poly_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            # divide r0 by r1
            q = []
            r = list(r0)
            inv_lead = pow(r1[-1], -1, p)
            while len(r) >= len(r1) and r:
                c = (r[-1] * inv_lead) % p
                d = len(r) - len(r1)
                qpad = [0] * d + [c]
                q = _poly_trim([(x + y) % p for x, y in itertools.zip_longest(q, qpad, fillvalue=0)])
                for i, b in enumerate(r1):
                    r[d + i] = (r[d + i] - c * b) % p
                _poly_trim(r)
            r0, r1 = r1, r
            qs1 = _poly_mul(q, s1, p)
            s0, s1 = s1, _poly_trim(
                [(x - y) % p for x, y in itertools.zip_longest(s0, qs1, fillvalue=0)]
            )
        lead = pow(r0[-1], -1, p)
        s0 = [(c * lead) % p for c in s0]
        s0 = _poly_mod(s0, list(self.modulus), p)
        return tuple(s0 + [0] * (self.n - len(s0)))

    def elements(self):
        for tup in itertools.product(range(self.p), repeat=self.n):
            yield tup

    def spec(self):
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"fq:{self.p}^{self.n}:{coeffs}"

    def format_element(self, a):
        return "[" + ",".join(str(c) for c in a) + "]"

    def parse_element(self, s):
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"bad F_q element {s!r}")
        coeffs = [int(t) % self.p for t in s[1:-1].split(",")]
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients in {s!r}")
        return tuple(coeffs)


class ModularRing(Ring):
    """Z/n with elements 0..n-1; n may be composite."""

    kind = "zn"

    def __init__(self, n: int):
        if n < 2:
            raise Unsupported("modulus must be >= 2")
        self.n = n
        self.characteristic = n
        self.cardinality = n
        self.is_field = is_prime(n)
        self._verify_axioms()

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return k % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def inv(self, a):
        return pow(a, -1, self.n)

    def elements(self):
        return iter(range(self.n))

    def spec(self):
        return f"zn:{self.n}"

    def format_element(self, a):
        return str(a)

    def parse_element(self, s):
        return int(s) % self.n


class RationalField(Ring):
    """Q with Fraction values (always reduced, positive denominator)."""

    kind = "q"
    is_field = True
    characteristic = 0
    cardinality = None

    def __init__(self):
        self._verify_axioms()

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        return 1 / a

    def sample_elements(self, k):
        pool = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-2, 3),
                Fraction(3), Fraction(5, 7), Fraction(-7, 2), Fraction(4, 9),
                Fraction(-5), Fraction(11, 3), Fraction(-1, 6)]
        return pool[:k]

    def spec(self):
        return "q"

    def format_element(self, a):
        return str(a)

    def parse_element(self, s):
        return Fraction(s)

    def pivot_weight(self, a):
        return a.numerator.bit_length() + a.denominator.bit_length()


class _PairRing(Ring):
    """Shared plumbing for rings whose elements are pairs over component rings."""

    def _left(self) -> Ring:
        raise NotImplementedError

    def _right(self) -> Ring:
        raise NotImplementedError

    def zero(self):
        return (self._left().zero(), self._right().zero())

    def add(self, a, b):
        return (self._left().add(a[0], b[0]), self._right().add(a[1], b[1]))

    def neg(self, a):
        return (self._left().neg(a[0]), self._right().neg(a[1]))

    def sub(self, a, b):
        return (self._left().sub(a[0], b[0]), self._right().sub(a[1], b[1]))

    def elements(self):
        for a in self._left().elements():
            for b in self._right().elements():
                yield (a, b)

    def sample_elements(self, k):
        ls = self._left().sample_elements(max(2, k // 2 + 1))
        rs = self._right().sample_elements(max(2, k // 2 + 1))
        out = [(a, b) for a, b in itertools.product(ls, rs)]
        return out[:k]

    def format_element(self, a):
        return f"({self._left().format_element(a[0])},{self._right().format_element(a[1])})"

    def parse_element(self, s):
        s = s.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"bad pair element {s!r}")
        left, right = _split_top_level(s[1:-1])
        return (self._left().parse_element(left), self._right().parse_element(right))

    def pivot_weight(self, a):
        return self._left().pivot_weight(a[0]) + self._right().pivot_weight(a[1])


class ProductRing(_PairRing):
    """R x S with componentwise operations."""

    kind = "prod"
    is_field = False

    def __init__(self, left: Ring, right: Ring):
        self.left = left
        self.right = right
        cl, cr = left.characteristic, right.characteristic
        if cl == 0 or cr == 0:
            self.characteristic = 0
        else:
            self.characteristic = cl * cr // gcd(cl, cr)
        if left.cardinality is not None and right.cardinality is not None:
            self.cardinality = left.cardinality * right.cardinality
        else:
            self.cardinality = None
        self._verify_axioms()

    def _left(self):
        return self.left

    def _right(self):
        return self.right

    def one(self):
        return (self.left.one(), self.right.one())

    def from_int(self, k):
        return (self.left.from_int(k), self.right.from_int(k))

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def is_unit(self, a):
        return self.left.is_unit(a[0]) and self.right.is_unit(a[1])

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def spec(self):
        return f"prod({self.left.spec()},{self.right.spec()})"


class DupRing(_PairRing):
    """The duplication of R: pairs with (x,y)(u,v) = (xu - yv, xv + yu).

    Always contains (0,1), a square root of -1.  It is a field exactly when
    the base is a field with no square root of -1 (the norm x^2 + y^2 then
    vanishes only at zero).
    """

    kind = "dup"

    def __init__(self, base: Ring):
        self.base = base
        self.characteristic = base.characteristic
        self.cardinality = None if base.cardinality is None else base.cardinality**2
        self.is_field = bool(base.is_field) and _ring_sqrt_minus_one(base) is None
        self._verify_axioms()

    def _left(self):
        return self.base

    def _right(self):
        return self.base

    def one(self):
        return (self.base.one(), self.base.zero())

    def from_int(self, k):
        return (self.base.from_int(k), self.base.zero())

    def mul(self, a, b):
        R = self.base
        x, y = a
        u, v = b
        return (R.sub(R.mul(x, u), R.mul(y, v)), R.add(R.mul(x, v), R.mul(y, u)))

    def norm(self, a):
        """x^2 + y^2; multiplicative, and a unit iff the element is a unit."""
        R = self.base
        return R.add(R.mul(a[0], a[0]), R.mul(a[1], a[1]))

    def conj(self, a):
        return (a[0], self.base.neg(a[1]))

    def is_unit(self, a):
        return self.base.is_unit(self.norm(a))

    def inv(self, a):
        R = self.base
        ninv = R.inv(self.norm(a))
        c = self.conj(a)
        return (R.mul(c[0], ninv), R.mul(c[1], ninv))

    def sqrt_minus_one(self):
        return (self.base.zero(), self.base.one())

    def spec(self):
        return f"dup({self.base.spec()})"


# ---------------------------------------------------------------------------
# ring-spec grammar
# ---------------------------------------------------------------------------


def _split_top_level(s: str):
    depth = 0
    for i, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            return s[:i], s[i + 1:]
    raise ValueError(f"expected a top-level comma in {s!r}")


def make_ring(spec: str) -> Ring:
    """Build a ring from the spec grammar.

    fp:<p> | fq:<p>^<n>[:coeffs] | zn:<n> | q | dup(<spec>) | prod(<spec>,<spec>)

    F_q coefficients are the irreducible's coefficients, constant term first.
    """
    spec = spec.strip()
    if spec == "q":
        return RationalField()
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    if spec.startswith("zn:"):
        return ModularRing(int(spec[3:]))
    if spec.startswith("fq:"):
        body = spec[3:]
        parts = body.split(":")
        pn = parts[0]
        p, n = pn.split("^")
        coeffs = None
        if len(parts) > 1:
            coeffs = tuple(int(c) for c in parts[1].split(","))
        return GaloisField(int(p), int(n), coeffs)
    if spec.startswith("dup(") and spec.endswith(")"):
        return DupRing(make_ring(spec[4:-1]))
    if spec.startswith("prod(") and spec.endswith(")"):
        left, right = _split_top_level(spec[5:-1])
        return ProductRing(make_ring(left), make_ring(right))
    raise Unsupported(f"unrecognized ring spec {spec!r}")


def fp(p: int) -> PrimeField:
    return PrimeField(p)


def fq(p: int, n: int, coeffs=None) -> GaloisField:
    return GaloisField(p, n, tuple(coeffs) if coeffs is not None else None)


def zn(n: int) -> ModularRing:
    return ModularRing(n)


def rationals() -> RationalField:
    return RationalField()


def dup(base: Ring) -> DupRing:
    return DupRing(base)


def prod(left: Ring, right: Ring) -> ProductRing:
    return ProductRing(left, right)


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingIdeal:
    """An ideal of a ring, with the full element set when the ring is finite."""

    ring: Ring
    gens: tuple
    element_set: frozenset | None

    def contains(self, a) -> bool:
        if self.element_set is not None:
            return a in self.element_set
        return a == self.ring.zero()

    @property
    def is_zero(self) -> bool:
        if self.element_set is not None:
            return self.element_set == frozenset([self.ring.zero()])
        return all(g == self.ring.zero() for g in self.gens)

    def elements(self):
        if self.element_set is None:
            raise Unsupported("infinite ideal enumeration")
        return sorted_elements(self.ring, self.element_set)

    def __eq__(self, other):
        if not (isinstance(other, RingIdeal) and self.ring == other.ring):
            return False
        if self.element_set is None or other.element_set is None:
            # only zero ideals are representable over infinite rings
            return self.element_set is None and other.element_set is None
        return self.element_set == other.element_set

    def __hash__(self):
        return hash((self.ring, self.element_set))


def sorted_elements(ring: Ring, subset) -> list:
    """Sort a subset of a finite ring by the canonical enumeration order."""
    index = {v: i for i, v in enumerate(ring.elements())}
    return sorted(subset, key=index.__getitem__)


def ideal(ring: Ring, gens) -> RingIdeal:
    """The ideal generated by gens; element set computed for finite rings."""
    gens = tuple(gens)
    if ring.cardinality is None:
        if all(g == ring.zero() for g in gens):
            return RingIdeal(ring, (), None)
        raise Unsupported("only the zero ideal is representable over infinite rings")
    multiples = {ring.mul(r, g) for g in gens for r in ring.elements()}
    multiples.add(ring.zero())
    closed = set(multiples)
    frontier = list(multiples)
    while frontier:
        x = frontier.pop()
        for m in multiples:
            s = ring.add(x, m)
            if s not in closed:
                closed.add(s)
                frontier.append(s)
    return RingIdeal(ring, gens, frozenset(closed))


def zero_ideal(ring: Ring) -> RingIdeal:
    if ring.cardinality is None:
        return RingIdeal(ring, (), None)
    return RingIdeal(ring, (), frozenset([ring.zero()]))


def is_maximal(ring: Ring, m: RingIdeal) -> bool:
    """True iff R/m is a field: every x outside m is invertible modulo m."""
    if ring.cardinality is None:
        if ring.is_field and m.is_zero:
            return True
        raise Unsupported("maximality test over infinite non-field rings")
    if m.element_set is None or len(m.element_set) == ring.cardinality:
        return False
    one = ring.one()
    elements = list(ring.elements())
    for x in elements:
        if m.contains(x):
            continue
        if not any(ring.sub(ring.mul(x, y), one) in m.element_set for y in elements):
            return False
    return True


def maximal_ideals(ring: Ring) -> list[RingIdeal]:
    """Complete maximal spectrum for Z/n, finite fields, and finite products."""
    if ring.is_field:
        return [zero_ideal(ring)]
    if isinstance(ring, ModularRing):
        return [ideal(ring, (p % ring.n,)) for p in _prime_factors(ring.n)]
    if isinstance(ring, ProductRing):
        out = []
        for m in maximal_ideals(ring.left):
            gens = tuple((g, ring.right.zero()) for g in m.gens) + ((ring.left.zero(), ring.right.one()),)
            out.append(ideal(ring, gens))
        for m in maximal_ideals(ring.right):
            gens = tuple((ring.left.zero(), g) for g in m.gens) + ((ring.left.one(), ring.right.zero()),)
            out.append(ideal(ring, gens))
        return out
    raise Unsupported(f"maximal ideals of {ring.spec()}")


# ---------------------------------------------------------------------------
# the operations the structure theory hinges on
# ---------------------------------------------------------------------------


def _ring_sqrt_minus_one(ring: Ring):
    """Internal: exhaustive search on finite rings, None for Q."""
    if isinstance(ring, DupRing):
        return ring.sqrt_minus_one()
    if isinstance(ring, RationalField):
        return None
    if ring.cardinality is None:
        raise Unsupported(f"sqrt(-1) search in {ring.spec()}")
    minus_one = ring.neg(ring.one())
    for a in ring.elements():
        if ring.mul(a, a) == minus_one:
            return a
    return None


def sqrt_minus_one(ring: Ring):
    """Some s with s^2 = -1, or None.

    Finite rings are searched exhaustively in enumeration order; a duplication
    ring returns (0,1); Q has none.  Other infinite rings are unsupported.
    """
    return _ring_sqrt_minus_one(ring)


def is_m_two_formally_real(ring: Ring, m: RingIdeal) -> bool:
    """True iff x^2 + y^2 in m forces x, y in m (full double loop)."""
    if ring.cardinality is None:
        raise Unsupported("finite rings only")
    if not is_maximal(ring, m):
        raise NotMaximal(f"{[ring.format_element(g) for g in m.gens]} is not maximal in {ring.spec()}")
    elements = list(ring.elements())
    inside = m.element_set
    for x in elements:
        x2 = ring.mul(x, x)
        for y in elements:
            if ring.add(x2, ring.mul(y, y)) in inside:
                if x not in inside or y not in inside:
                    return False
    return True


def decompositions(ring: Ring) -> list[tuple[RingIdeal, RingIdeal]]:
    """All splittings R = Re + R(1-e) from idempotents e, unordered, verified."""
    if ring.cardinality is None:
        raise Unsupported("finite rings only")
    seen = set()
    out = []
    one = ring.one()
    for e in ring.elements():
        if ring.mul(e, e) != e:
            continue
        a = ideal(ring, (e,))
        b = ideal(ring, (ring.sub(one, e),))
        key = frozenset((a.element_set, b.element_set))
        if key in seen:
            continue
        seen.add(key)
        inter = a.element_set & b.element_set
        assert inter == {ring.zero()}, "idempotent split with nonzero intersection"
        sums = {ring.add(x, y) for x in a.element_set for y in b.element_set}
        assert len(sums) == ring.cardinality, "idempotent split does not cover the ring"
        out.append((a, b))
    return out


@dataclass(frozen=True)
class DupAutomorphism:
    """An automorphism of Dup(R) determined by (0,1) |-> (0, unit)."""

    unit: object
    rows: tuple  # 2x2 matrix over R acting on row coordinates (x, y)

    def apply(self, dup_ring: DupRing, a):
        R = dup_ring.base
        x, y = a
        r0, r1 = self.rows
        return (
            R.add(R.mul(x, r0[0]), R.mul(y, r1[0])),
            R.add(R.mul(x, r0[1]), R.mul(y, r1[1])),
        )


def dup_automorphisms(ring: Ring) -> list[DupAutomorphism]:
    """All R-algebra automorphisms of Dup(R) for finite R with 2 invertible.

    Candidates are exactly the linear maps fixing R and sending (0,1) to a
    square root of -1; the search below verifies that each surviving candidate
    has the form (x,y) |-> (x, by) with b^2 = 1, so the count is |mu_2(R)|.
    """
    if ring.cardinality is None:
        raise Unsupported("finite rings only")
    if not ring.is_unit(ring.from_int(2)):
        raise TwoNotInvertible(f"2 is not a unit in {ring.spec()}")
    dring = DupRing(ring)
    minus_one = dring.neg(dring.one())
    found = []
    for w in dring.elements():
        if dring.mul(w, w) != minus_one:
            continue
        a, b = w
        # the induced linear map has matrix [[1,0],[a,b]]; bijective iff b is a unit
        if not ring.is_unit(b):
            continue
        assert a == ring.zero() and ring.mul(b, b) == ring.one(), (
            "bijective candidate outside the (0, unit) family"
        )
        rows = ((ring.one(), ring.zero()), (ring.zero(), b))
        found.append(DupAutomorphism(unit=b, rows=rows))
    # spot-check multiplicativity of each map on a deterministic pair sample
    pairs = dring.sample_elements(16)
    for auto in found:
        for u in pairs:
            for v in pairs:
                lhs = auto.apply(dring, dring.mul(u, v))
                rhs = dring.mul(auto.apply(dring, u), auto.apply(dring, v))
                assert lhs == rhs, "candidate is not multiplicative"
    return found


def mu2(ring: Ring) -> list:
    """The units of order dividing two, in enumeration order."""
    one = ring.one()
    return [b for b in ring.elements() if ring.mul(b, b) == one]


def q_form_check(q: int) -> bool:
    """Explicit long division: does x^2 + 1 divide x^q - x over Z?"""
    if q < 2:
        raise Unsupported("q must be >= 2")
    # dense little-endian coefficients of x^q - x
    f = [0] * (q + 1)
    f[q] = 1
    f[1] -= 1
    divisor = [1, 0, 1]
    for k in range(q, 1, -1):
        c = f[k]
        if c:
            f[k] = 0
            f[k - 2] -= c
    return not any(f)


def two_formally_real_field(ring: Ring) -> bool:
    """Field convenience: no nonzero x, y with x^2 + y^2 = 0."""
    if not ring.is_field:
        raise Unsupported("fields only")
    return is_m_two_formally_real(ring, zero_ideal(ring))
