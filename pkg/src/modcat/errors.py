"""Exception types shared across the package."""


class ModcatError(Exception):
    """Base class for all errors raised by this package."""


class BadDimensions(ModcatError):
    """Structural defect in tabular input (wrong lengths, out-of-range entries)."""


class NotAGroup(ModcatError):
    """Multiplication table fails a group axiom.

    ``witness`` holds the offending data: a triple (i, j, k) for an
    associativity failure, or an element index for a missing inverse.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAnAction(ModcatError):
    """Claimed action map is not an action by automorphisms."""


class NotASubgroup(ModcatError):
    """Member set is not closed, or belongs to a different parent group."""


class DegreeMismatch(ModcatError):
    """Cochain degrees incompatible with the requested operation."""


class GroupMismatch(ModcatError):
    """Cochains live on different groups."""


class NotCompatible(ModcatError):
    """A pair (H, psi) fails d(psi) = omega restricted to H.

    ``witness`` holds a failing triple of H-local element indices.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CategoryMismatch(ModcatError):
    """Algebra pairs belong to different pointed categories."""


class ParseError(ModcatError):
    """Malformed JSON input, non-exact value, or nonzero identity slot."""


class SizeLimitExceeded(ModcatError):
    """Group order exceeds the configured computation limit."""


class InternalInvariantBroken(ModcatError):
    """A self-check that should be unreachable failed; indicates a bug."""
