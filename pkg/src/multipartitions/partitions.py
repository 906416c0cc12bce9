"""The ordinary partition function p(n), memoized.

Grown with the divisor-sum recurrence

    n * p(n) = sum_{j=1..n} sigma(j) * p(n - j),    p(0) = 1,

in exact integer arithmetic; the division by n is asserted to be exact.
"""

from .arith import sigma
from .errors import IntegralityError


class PartitionTable:
    """Growable table of p(0), p(1), ... with sigma values cached alongside.

    Single writer: extension must be externally serialized; already
    computed prefixes may be read concurrently.
    """

    def __init__(self):
        self._p = [1]
        self._sigma = [0]  # slot 0 unused; _sigma[j] == sigma(j)

    def __len__(self) -> int:
        return len(self._p)

    def p(self, n: int) -> int:
        """Return p(n), extending the table as needed."""
        if n < 0:
            raise ValueError(f"partition function requires n >= 0, got {n}")
        while len(self._p) <= n:
            m = len(self._p)
            self._sigma.append(sigma(m))
            total = sum(self._sigma[j] * self._p[m - j] for j in range(1, m + 1))
            value, rem = divmod(total, m)
            if rem:
                raise IntegralityError(
                    f"divisor-sum recurrence gave {total} at n={m}, "
                    f"not divisible by {m}"
                )
            self._p.append(value)
        return self._p[n]


def partition_p(n: int, table: PartitionTable | None = None) -> int:
    """p(n) as an exact integer; pass a shared table to reuse prior work."""
    if table is None:
        table = PartitionTable()
    return table.p(n)
