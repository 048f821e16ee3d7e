"""Exception hierarchy shared by all modules."""


class ComputationError(ArithmeticError):
    """A numerical routine failed to produce a trustworthy answer."""


class NotPositiveDefiniteError(ValueError):
    """A matrix expected to be strictly positive definite is not."""


class DimensionMismatchError(ValueError):
    pass


class HypothesisViolation(ValueError):
    """The spectral hypotheses of an inequality are not met by an instance."""


class PreconditionError(ValueError):
    """A checker was called on an instance it is not defined for (e.g. a non-unital map)."""


class SideConditionError(RuntimeError):
    """An auxiliary bound that must follow from valid hypotheses failed.

    This signals a bug upstream (usually in instance generation), not a
    counterexample to the inequality under test.
    """
