"""Typed errors shared across the package."""

from __future__ import annotations


class QStrataError(Exception):
    """Base class for all package errors."""


class InvalidCartanTypeError(QStrataError):
    """Family/rank combination outside the finite-type tables."""


class BadEllError(QStrataError):
    """The root-of-unity order fails the goodness conditions."""


class NonReducedWordError(QStrataError):
    """A word was required to be reduced and is not."""


class BlockHypothesisError(QStrataError):
    """gcd(ell, ord(w)) > 1, so block-level results are not licensed."""

    def __init__(self, ell: int, order: int, offending_gcd: int):
        self.ell = ell
        self.order = order
        self.offending_gcd = offending_gcd
        super().__init__(
            f"ell={ell} shares the factor {offending_gcd} with ord(w)={order}; "
            "block structure is only determined for coprime orders"
        )


class NotFullyAzumayaError(QStrataError):
    """Structure theorem requested off the fully Azumaya locus."""


class CapExceededError(QStrataError):
    """An enumeration exceeded its configured size cap."""


class ContainmentError(QStrataError):
    """Expected subgroup/sublattice containment fails."""


class OracleError(QStrataError):
    """The finite-dimensional-algebra oracle hit an inconsistent state
    (non-associative input, failed split, non-local coefficient ring, ...)."""
