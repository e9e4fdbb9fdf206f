"""Exception types shared across the package."""


class ZetadivError(Exception):
    """Base class for all package-specific errors."""


class NotPrimeError(ZetadivError):
    """The requested field characteristic is not prime."""


class ExtensionDegreeError(ZetadivError):
    """The requested extension degree is less than one."""


class FieldMismatchError(ZetadivError):
    """Operands belong to different fields; coercion is never implicit."""


class NoEmbeddingError(ZetadivError):
    """No field embedding exists (degree divisibility or characteristic fails)."""


class ArityMismatchError(ZetadivError):
    """A point has the wrong number of coordinates for a polynomial."""


class ZeroPolynomialError(ZetadivError):
    """The zero polynomial is not allowed here (degrees must be at least 1)."""


class NotHomogeneousError(ZetadivError):
    """A projective operation was applied to a non-homogeneous polynomial."""


class BudgetExceededError(ZetadivError):
    """An enumeration would exceed the configured evaluation budget."""

    def __init__(self, required, allowed):
        super().__init__(f"enumeration needs {required} evaluations, budget allows {allowed}")
        self.required = required
        self.allowed = allowed


class TableSizeError(ZetadivError):
    """The field is too large for table-driven counting kernels."""


class RequiresSingleEquationError(ZetadivError):
    """The operation is defined only for systems with a single equation column."""


class ConstantEquationError(ZetadivError):
    """The operation requires every equation to be nonconstant (no all-zero exponent column)."""


class MissingTermError(ZetadivError):
    """A count table has a gap in its run of extension degrees."""


class BadConstantTermError(ZetadivError):
    """A polynomial that must have constant term 1 does not."""


class NonIntegralCoefficientsError(ZetadivError):
    """Zeta reconstruction produced a non-integral result; the counts do not
    come from an integer-multiplicity eigenvalue structure (or more terms are
    needed)."""


class SpecParseError(ZetadivError):
    """An experiment spec failed strict parsing."""


class DimensionMismatchError(SpecParseError):
    """Spec dimensions are inconsistent (matrix shape, vector lengths, signs)."""


class InvalidDegreeError(SpecParseError):
    """A spec polynomial is zero or constant; every degree must be at least 1."""
