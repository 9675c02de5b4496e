"""Exception types shared across the package."""

from __future__ import annotations


class F2UnitsError(Exception):
    """Base class for all library errors."""


class GroupMismatchError(F2UnitsError):
    """Operands belong to different groups."""


class NotUnitaryError(F2UnitsError):
    """An element required to be unitary (or at least a unit) is not."""


class NotAUnitError(F2UnitsError):
    """Element is not invertible in F2[G]."""


class NoSolutionError(F2UnitsError):
    """Linear system w*z = target has no solution.

    Carries the rank certificate: rank of the multiplication matrix and
    rank of the augmented system.
    """

    def __init__(self, message: str, rank: int, augmented_rank: int):
        super().__init__(message)
        self.rank = rank
        self.augmented_rank = augmented_rank


class BadIndexError(F2UnitsError):
    """Coset split needs an index-2 subgroup and an element outside it."""


class BadCosetsError(F2UnitsError):
    """The four cosets C, Ca, Cb, Cab do not partition the group."""


class NotAbelianError(F2UnitsError):
    """Operation requires an abelian carrier."""


class BadSquareElementError(F2UnitsError):
    """Designated square element is the identity or not an involution."""


class NotASubgroupError(F2UnitsError):
    """Member set is not closed under multiplication and inverses."""


class NoComplementError(F2UnitsError):
    """The factor is not a direct factor of the ambient abelian group."""


class TooLargeError(F2UnitsError):
    """Exhaustive enumeration bound exceeded without an override."""


class NotSubsetError(F2UnitsError):
    """Claimed factor is not contained in the ambient unit set."""


class HypothesisViolationError(F2UnitsError):
    """A structural hypothesis needed by a decomposition does not hold."""


class NotAbelianSubgroupError(HypothesisViolationError):
    """The designated subgroup A is not abelian."""


class WrongIndexError(HypothesisViolationError):
    """The designated subgroup does not have index two."""


class BadOrderError(HypothesisViolationError):
    """The designated element does not have the required order."""


class NotInvertingError(HypothesisViolationError):
    """Conjugation by b does not invert every element of A."""


class CenterQuotientNotKleinError(HypothesisViolationError):
    """G modulo its center is not the Klein four-group."""


class CommutatorNotOrderTwoError(HypothesisViolationError):
    """The commutator subgroup does not have order two."""


class ParseError(F2UnitsError):
    """Malformed group spec or element text."""


class GroupAxiomViolationError(F2UnitsError):
    """Explicit table fails a group axiom; carries the offending data."""

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness
