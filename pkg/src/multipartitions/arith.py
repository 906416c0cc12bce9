"""Integer utilities: factorization, divisors, divisor sums, gcd.

Factorization uses a smallest-prime-factor table below a configurable
bound (default 10**6, override with the MULTIPART_SIEVE_LIMIT
environment variable) and plain trial division above it.  The table is
built lazily on first use and is read-only afterwards, so everything
here is safe to call concurrently.
"""

import math
import os
from array import array
from dataclasses import dataclass
from functools import reduce

DEFAULT_SIEVE_LIMIT = 10**6
SIEVE_LIMIT_ENV = "MULTIPART_SIEVE_LIMIT"


@dataclass(frozen=True)
class NatFactorization:
    """Canonical factorization n = primes[0]**exps[0] * primes[1]**exps[1] * ...

    primes are distinct and strictly increasing, every exponent is >= 1,
    and n = 1 is the empty product (both tuples empty).
    """

    n: int
    primes: tuple[int, ...]
    exps: tuple[int, ...]


def build_spf(limit: int) -> array:
    """Smallest-prime-factor table for 0..limit, with spf[p] == p for primes.

    Marks multiples of each prime <= sqrt(limit) in descending prime
    order, so the last write to every composite slot is its smallest
    prime factor and no per-element minimum test is needed.
    """
    spf = array("q", range(limit + 1))
    root = math.isqrt(limit)
    flags = bytearray([1]) * (root + 1)
    small_primes = []
    for p in range(2, root + 1):
        if flags[p]:
            small_primes.append(p)
            flags[p * p :: p] = bytes(len(range(p * p, root + 1, p)))
    for p in reversed(small_primes):
        n_mult = (limit - p * p) // p + 1
        spf[p * p :: p] = array("q", [p]) * n_mult
    return spf


_spf_table: array | None = None


def _spf() -> array:
    global _spf_table
    if _spf_table is None:
        raw = os.environ.get(SIEVE_LIMIT_ENV)
        if raw is None:
            limit = DEFAULT_SIEVE_LIMIT
        else:
            try:
                limit = int(raw)
            except ValueError:
                raise ValueError(
                    f"{SIEVE_LIMIT_ENV} must be an integer, got {raw!r}"
                ) from None
        _spf_table = build_spf(max(limit, 1))
    return _spf_table


def factorize(n: int) -> NatFactorization:
    """Factor n >= 1 into its canonical prime factorization."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    primes: list[int] = []
    exps: list[int] = []
    m = n
    spf = _spf()
    if m < len(spf):
        while m > 1:
            p = spf[m]
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            primes.append(p)
            exps.append(e)
        return NatFactorization(n, tuple(primes), tuple(exps))

    def strip(m: int, p: int) -> int:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            primes.append(p)
            exps.append(e)
        return m

    m = strip(m, 2)
    m = strip(m, 3)
    f = 5
    while f * f <= m:
        m = strip(m, f)
        m = strip(m, f + 2)
        f += 6
    if m > 1:
        primes.append(m)
        exps.append(1)
    return NatFactorization(n, tuple(primes), tuple(exps))


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1 in increasing order, including 1 and n."""
    nf = factorize(n)
    divs = [1]
    for p, e in zip(nf.primes, nf.exps):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    divs.sort()
    return divs


def sigma(j: int) -> int:
    """Sum of all divisors of j >= 1."""
    return sum(divisors(j))


def gcd_all(values) -> int:
    """Greatest common divisor of a nonempty collection of integers.

    The all-zero collection is rejected: it would be the content of the
    zero polynomial, which is undefined.
    """
    vals = list(values)
    if not vals:
        raise ValueError("gcd_all requires at least one value")
    g = reduce(math.gcd, vals)
    if g == 0:
        raise ValueError("gcd_all of an all-zero collection is undefined")
    return g
