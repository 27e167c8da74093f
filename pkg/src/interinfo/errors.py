"""Exception hierarchy shared by all interinfo modules."""


class InterinfoError(Exception):
    """Base class for every error raised by this package."""


class TableError(InterinfoError, ValueError):
    """A joint probability table violates its construction invariants."""


class AxisNotFoundError(InterinfoError, LookupError):
    """A subset names an axis that does not exist on the table."""


class SubsetError(InterinfoError, ValueError):
    """A variable subset is empty, or two subsets overlap where they must not."""


class ArityError(InterinfoError, ValueError):
    """An operation received the wrong number of variables or factors."""


class MarginCoverageError(InterinfoError, ValueError):
    """A margin set leaves some axes of the target table unconstrained."""


class DomainError(InterinfoError, ValueError):
    """A numeric argument lies outside the operation's domain."""


class ComplexRootError(InterinfoError, ValueError):
    """The anticipatory step has no real root for the given state."""

    def __init__(self, a: float, x: float, discriminant: float):
        self.a = a
        self.x = x
        self.discriminant = discriminant
        super().__init__(
            f"no real root: a={a!r}, x={x!r} gives discriminant "
            f"1 - (4/a)*x = {discriminant!r} < 0"
        )


class ZeroVarianceError(InterinfoError, ValueError):
    """A variable has zero variance and cannot be correlated."""

    def __init__(self, variable: str):
        self.variable = variable
        super().__init__(f"variable {variable!r} has zero variance; drop constant columns first")


class EigenConvergenceError(InterinfoError, ArithmeticError):
    """The eigensolver failed to reach its off-diagonal tolerance."""


class MalformedRecordError(InterinfoError, ValueError):
    """A tagged bibliographic file violates the record grammar."""

    def __init__(self, message: str, line_number: int):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class EmptyFeatureError(InterinfoError, ValueError):
    """Feature extraction produced no surviving columns."""


class CaseAlignmentError(InterinfoError, ValueError):
    """Matrices to be juxtaposed disagree on their case labels."""
