"""Exception types shared across the package."""


class SkewalgError(Exception):
    """Base class for all package-specific errors."""


class SignatureMismatchError(SkewalgError):
    """Two structures handed to an isomorphism search have different signatures."""


class BoundExceededError(SkewalgError):
    """An enumeration was requested beyond its configured order bound."""


class UndefinedCompositionError(SkewalgError):
    """Composition was requested for a non-composable morphism pair.

    This is a signal callers may catch, not a crash.
    """


class MalformedSystemError(SkewalgError):
    """A table required by a total operation is missing or incomplete."""


class AxiomViolationError(SkewalgError):
    """A construction was attempted on a structure that fails its axiom checks."""

    def __init__(self, check_name, witness=None):
        self.check_name = check_name
        self.witness = witness
        detail = f"axiom check failed: {check_name}"
        if witness is not None:
            detail += f" at {witness}"
        super().__init__(detail)


class SkeletonNotClosedError(SkewalgError):
    """The idempotents of an algebra are not closed under its operations."""


class ActionInvalidError(SkewalgError):
    """A group action table fails the action axioms."""


class CompositionAmbiguityError(SkewalgError):
    """The two products disagree on a composable pair during reconstruction."""
