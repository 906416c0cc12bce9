"""Counting and enumeration of unordered factorizations.

The number of ways to write n as a product of integers >= 2, order
irrelevant (OEIS A001055), computed by four independent methods: direct
enumeration, two exact recurrences on the vector of prime exponents,
and coefficient extraction from a truncated formal product.  Includes
the ordinary partition function, the exponent-vector lattice the
recurrences live on, and a CLI.
"""

from .arith import NatFactorization, divisors, factorize, gcd_all, sigma
from .engines import (
    BracketTerm,
    TermCounts,
    brute_force_count,
    brute_force_list,
    claimed_saving,
    count,
    gf_count,
    gf_series,
    hs_count,
    new_cache,
    reduced_count,
    special_count,
    term_count,
)
from .errors import IntegralityError
from .lattice import (
    canonical_signature,
    content,
    content_weight,
    divisor_to_expvec,
    enumerate_below,
    expvec_to_divisor,
    is_primitive,
    join,
    leq,
    meet,
    to_signature,
)
from .partitions import PartitionTable, partition_p

__version__ = "0.1.0"

__all__ = [
    "BracketTerm",
    "IntegralityError",
    "NatFactorization",
    "PartitionTable",
    "TermCounts",
    "brute_force_count",
    "brute_force_list",
    "canonical_signature",
    "claimed_saving",
    "content",
    "content_weight",
    "count",
    "divisor_to_expvec",
    "divisors",
    "enumerate_below",
    "expvec_to_divisor",
    "factorize",
    "gcd_all",
    "gf_count",
    "gf_series",
    "hs_count",
    "is_primitive",
    "join",
    "leq",
    "meet",
    "new_cache",
    "partition_p",
    "reduced_count",
    "sigma",
    "special_count",
    "term_count",
    "to_signature",
]
