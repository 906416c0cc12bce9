"""Exponent vectors under the coordinatewise order.

A divisor of n maps to the vector of its prime exponents relative to
n's prime basis.  Divisibility becomes the coordinatewise order <=,
gcd/lcm become coordinatewise min/max, and multiplication becomes
vector addition, so the divisor lattice of n and the vectors below n's
exponent signature are the same structure.

A signature is the sorted multiset of prime exponents (ascending, so
the first entry is minimal); the count of unordered factorizations
depends on n only through it.  The recurrence weight of a vector is the
sum of reciprocals of the divisors of its content (the gcd of its
coordinates); for a constant vector (j,) that weight times j is the
divisor sum sigma(j).

Everything here is a pure function on tuples.  Vectors of different
lengths never mix: length mismatch is a hard error, not padding.
"""

import math
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from .arith import NatFactorization, divisors

Sig = tuple[int, ...]
ExpVec = tuple[int, ...]


def canonical_signature(exps: Iterable[int]) -> Sig:
    """Canonical signature: the nonzero exponents, sorted ascending."""
    out = []
    for e in exps:
        if e < 0:
            raise ValueError(f"exponents must be nonnegative, got {e}")
        if e:
            out.append(e)
    out.sort()
    return tuple(out)


def to_signature(nf: NatFactorization) -> Sig:
    """Signature of a factorization; n = 1 gives the empty signature."""
    return tuple(sorted(nf.exps))


def _check_lengths(a: ExpVec, b: ExpVec) -> None:
    if len(a) != len(b):
        raise ValueError(f"vector length mismatch: {len(a)} != {len(b)}")


def leq(g: ExpVec, f: ExpVec) -> bool:
    """True iff g <= f coordinatewise."""
    _check_lengths(g, f)
    return all(x <= y for x, y in zip(g, f))


def meet(a: ExpVec, b: ExpVec) -> ExpVec:
    """Coordinatewise minimum (the gcd of the corresponding divisors)."""
    _check_lengths(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def join(a: ExpVec, b: ExpVec) -> ExpVec:
    """Coordinatewise maximum (the lcm of the corresponding divisors)."""
    _check_lengths(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def divisor_to_expvec(d: int, basis: NatFactorization) -> ExpVec:
    """Exponent vector of a divisor d of basis.n, relative to basis.primes."""
    coords = []
    m = d
    for p, e in zip(basis.primes, basis.exps):
        c = 0
        while m % p == 0:
            m //= p
            c += 1
        if c > e:
            raise ValueError(f"{d} does not divide {basis.n}")
        coords.append(c)
    if m != 1:
        raise ValueError(f"{d} does not divide {basis.n}")
    return tuple(coords)


def expvec_to_divisor(g: ExpVec, basis: NatFactorization) -> int:
    """Divisor of basis.n with exponent vector g (inverse of divisor_to_expvec)."""
    _check_lengths(g, basis.exps)
    d = 1
    for p, c, e in zip(basis.primes, g, basis.exps):
        if not 0 <= c <= e:
            raise ValueError(f"coordinate {c} exceeds basis exponent {e}")
        d *= p**c
    return d


def content(g: ExpVec) -> int:
    """gcd of the coordinates of g (zero coordinates ignored); g must be nonzero."""
    c = 0
    for x in g:
        if x < 0:
            raise ValueError(f"coordinates must be nonnegative, got {x}")
        c = math.gcd(c, x)
    if c == 0:
        raise ValueError("content of the zero vector is undefined")
    return c


def content_weight(g: ExpVec) -> Fraction:
    """Sum of 1/i over the divisors i of content(g), as an exact fraction.

    This is the weight each summand carries in the counting recurrences;
    it equals 1 exactly when g is primitive.
    """
    return sum(Fraction(1, i) for i in divisors(content(g)))


def is_primitive(g: ExpVec) -> bool:
    """True iff the coordinates of g are setwise coprime (content 1)."""
    return content(g) == 1


def enumerate_below(f: ExpVec) -> Iterator[ExpVec]:
    """Yield every nonzero vector g with g <= f, in lexicographic order.

    Yields prod(f_i + 1) - 1 vectors; the empty tuple yields nothing.
    """
    if not f:
        return
    for coords in product(*(range(e + 1) for e in f)):
        if any(coords):
            yield coords
