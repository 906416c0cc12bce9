"""Exceptions shared across the package."""


class IntegralityError(ArithmeticError):
    """An exact-arithmetic identity failed to reduce to a whole number.

    The counting recurrences accumulate rational weights whose total is
    provably divisible by a norm; a nonzero remainder therefore signals
    an internal bug, never bad input.  The CLI maps this to exit code 3.
    """
