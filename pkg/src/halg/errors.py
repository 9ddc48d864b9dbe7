"""Exceptions shared across modules."""


class DegreeCapExceeded(ArithmeticError):
    """A product left the degree-capped carrier with a nonzero overflow.

    Raised instead of silently dropping terms: identities evaluated on a
    truncated ring are only trusted when every intermediate stays within
    the cap.
    """
