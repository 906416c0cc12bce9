"""Counting engines for unordered factorizations.

Four independent routes to the same number:

* ``brute_force_count`` / ``brute_force_list`` — direct recursive
  enumeration of nondecreasing factor lists.
* ``hs_count`` — the norm-weighted vector recurrence (a corrected form
  of the Harris–Subbarao recursion): the count times the coordinate sum
  of the signature equals the sum, over every nonzero vector below it,
  of weight * coordinate sum * count of the remainder.
* ``reduced_count`` — the same identity projected onto the first
  coordinate, so only vectors with a positive first coordinate are
  summed.  With the smallest exponent first this is the cheapest
  recurrence; its subproblems are resolved through the dispatcher.
* ``gf_count`` — coefficient extraction from a truncated formal product
  over primitive vectors, needing only ordinary partition numbers.

``count`` dispatches: cache, then shortcut identities
(``special_count``), then the reduced recurrence.  All counts are exact
unbounded integers; recurrence weights are accumulated as exact
fractions and the final division is asserted to be integral.

Engines are pure given their cache and partition-table handles.  A
cache maps canonical signatures to counts and must follow a
single-writer-or-synchronized discipline; comparison harnesses must
give each engine its own cache, or the agreement they test is vacuous.
"""

import math
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, NamedTuple

from .arith import factorize
from .errors import IntegralityError
from .lattice import (
    Sig,
    canonical_signature,
    content_weight,
    enumerate_below,
    is_primitive,
    leq,
)
from .partitions import PartitionTable

StarCache = dict[Sig, int]


def new_cache() -> StarCache:
    """Fresh memo table for counts, seeded with the empty signature."""
    return {(): 1}


class BracketTerm(NamedTuple):
    """One outer block of the reduced recurrence, for tracing.

    ``i`` is the first coordinate shared by the block's vectors and
    ``total`` is i times the block's weighted sum — an exact fraction
    whose grand total over all blocks equals count * smallest exponent.
    """

    i: int
    total: Fraction


class TermCounts(NamedTuple):
    hs_terms: int
    reduced_terms: int


# ---------------------------------------------------------------------------
# brute force


def _factorizations(remaining: int, min_factor: int) -> Iterator[tuple[int, ...]]:
    # nondecreasing factor tuples of `remaining` with all factors >= min_factor
    f = min_factor
    while f * f <= remaining:
        if remaining % f == 0:
            for tail in _factorizations(remaining // f, f):
                yield (f, *tail)
        f += 1
    if remaining >= min_factor:
        yield (remaining,)


def brute_force_list(n: int) -> list[tuple[int, ...]]:
    """All unordered factorizations of n into factors >= 2.

    Each factorization is a nondecreasing tuple; the list is in
    lexicographic order.  n = 1 has exactly the empty factorization.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return [()]
    return list(_factorizations(n, 2))


def brute_force_count(n: int) -> int:
    """Number of unordered factorizations of n, without materializing them."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    return sum(1 for _ in _factorizations(n, 2))


# ---------------------------------------------------------------------------
# vector recurrences


def hs_count(f, cache: StarCache | None = None) -> int:
    """Count for signature f via the norm-weighted vector recurrence.

    count(f) * sum(f) = sum over nonzero b <= f of
    weight(b) * sum(b) * count(f - b), recursing on the same identity
    all the way down.
    """
    f = canonical_signature(f)
    if cache is None:
        cache = new_cache()
    return _hs(f, cache)


def _hs(f: Sig, cache: StarCache) -> int:
    if not f:
        return 1
    hit = cache.get(f)
    if hit is not None:
        return hit
    acc = Fraction(0)
    for b in enumerate_below(f):
        rest = canonical_signature(x - y for x, y in zip(f, b))
        acc += content_weight(b) * sum(b) * _hs(rest, cache)
    value = acc / sum(f)
    if value.denominator != 1:
        raise IntegralityError(
            f"norm-weighted sum {acc} for signature {f} is not divisible by {sum(f)}"
        )
    result = int(value)
    cache[f] = result
    return result


def reduced_count(
    f,
    cache: StarCache | None = None,
    ptable: PartitionTable | None = None,
    trace: Callable[[BracketTerm], None] | None = None,
) -> int:
    """Count for signature f via the reduced recurrence.

    Sums only vectors whose first coordinate i is positive, in blocks of
    constant i from 1 to the smallest exponent; the grand total divided
    by that exponent is the count.  Subproblem counts are resolved
    through the dispatcher, so shortcut identities apply to them.

    A ``trace`` hook receives one BracketTerm per block; supplying it
    forces recomputation of the top-level signature even when cached.
    """
    f = canonical_signature(f)
    if cache is None:
        cache = new_cache()
    if ptable is None:
        ptable = PartitionTable()
    return _reduced(f, cache, ptable, trace)


def _reduced(
    f: Sig,
    cache: StarCache,
    ptable: PartitionTable,
    trace: Callable[[BracketTerm], None] | None = None,
) -> int:
    if not f:
        return 1
    if trace is None:
        hit = cache.get(f)
        if hit is not None:
            return hit
    n1, rest = f[0], f[1:]
    acc = Fraction(0)
    for i in range(1, n1 + 1):
        block = Fraction(0)
        for r in product(*(range(e + 1) for e in rest)):
            g = (i, *r)
            sub = canonical_signature(x - y for x, y in zip(f, g))
            block += content_weight(g) * _count_sig(sub, cache, ptable)
        contribution = i * block
        if trace is not None:
            trace(BracketTerm(i, contribution))
        acc += contribution
    value = acc / n1
    if value.denominator != 1:
        raise IntegralityError(
            f"reduced sum {acc} for signature {f} is not divisible by {n1}"
        )
    result = int(value)
    cache[f] = result
    return result


def special_count(
    f,
    ptable: PartitionTable | None = None,
    cache: StarCache | None = None,
) -> int | None:
    """Shortcut identities; None when no shortcut applies.

    * one prime, exponent n: the count is p(n);
    * smallest exponent 1, one other prime: sum of p(0)..p(other exponent);
    * smallest exponent 1 in general: the extracted prime does not divide
      the cofactor, so the count is the sum of counts over all divisors
      of the cofactor.
    """
    f = canonical_signature(f)
    if ptable is None:
        ptable = PartitionTable()
    if cache is None:
        cache = new_cache()
    if not f:
        return 1
    if len(f) == 1:
        return ptable.p(f[0])
    if f[0] == 1:
        if len(f) == 2:
            return sum(ptable.p(i) for i in range(f[1] + 1))
        rest = f[1:]
        total = 0
        for v in product(*(range(e + 1) for e in rest)):
            total += _count_sig(canonical_signature(v), cache, ptable)
        return total
    return None


def _count_sig(f: Sig, cache: StarCache, ptable: PartitionTable) -> int:
    hit = cache.get(f)
    if hit is not None:
        return hit
    value = special_count(f, ptable, cache)
    if value is None:
        value = _reduced(f, cache, ptable)
    cache[f] = value
    return value


def count(
    n: int,
    cache: StarCache | None = None,
    ptable: PartitionTable | None = None,
) -> int:
    """Number of unordered factorizations of n (dispatching engine).

    Canonicalizes to the exponent signature, consults the cache, tries
    the shortcut identities, and falls back to the reduced recurrence.
    """
    nf = factorize(n)
    if cache is None:
        cache = new_cache()
    if ptable is None:
        ptable = PartitionTable()
    return _count_sig(canonical_signature(nf.exps), cache, ptable)


# ---------------------------------------------------------------------------
# generating function


def gf_series(f, ptable: PartitionTable | None = None) -> dict[tuple[int, ...], int]:
    """Truncated formal product whose coefficient at g counts g, for all g <= f.

    Starts from {zero vector: 1} and multiplies in, for each primitive
    g <= f in lexicographic order, the factor
    1 + sum over m >= 1 with m*g <= f of p(m) * e^(m*g),
    discarding keys that exceed f after every step.
    """
    f = canonical_signature(f)
    if ptable is None:
        ptable = PartitionTable()
    series = {(0,) * len(f): 1}
    for g in enumerate_below(f):
        if not is_primitive(g):
            continue
        m_max = min(fe // ge for fe, ge in zip(f, g) if ge)
        terms = [
            (tuple(m * ge for ge in g), ptable.p(m)) for m in range(1, m_max + 1)
        ]
        new = dict(series)
        for h, coeff in series.items():
            for mg, pm in terms:
                key = tuple(he + me for he, me in zip(h, mg))
                if leq(key, f):
                    new[key] = new.get(key, 0) + coeff * pm
        series = new
    return series


def gf_count(f, ptable: PartitionTable | None = None) -> int:
    """Count for signature f read off the truncated formal product."""
    f = canonical_signature(f)
    return gf_series(f, ptable)[f]


# ---------------------------------------------------------------------------
# profiling


def term_count(f) -> TermCounts:
    """Summand counts of the two recurrences for signature f, by enumeration."""
    f = canonical_signature(f)
    if not f:
        raise ValueError("term_count requires a nonempty signature")
    hs_terms = 0
    reduced_terms = 0
    for g in enumerate_below(f):
        hs_terms += 1
        if g[0] > 0:
            reduced_terms += 1
    return TermCounts(hs_terms, reduced_terms)


def claimed_saving(f) -> int:
    """The term-count saving usually quoted for the reduced recurrence.

    This is the divisor count of the cofactor (the product over the
    non-minimal exponents of exponent + 1).  The measured saving,
    hs_terms - reduced_terms, is always exactly one less.
    """
    f = canonical_signature(f)
    if not f:
        raise ValueError("claimed_saving requires a nonempty signature")
    return math.prod(e + 1 for e in f[1:])
